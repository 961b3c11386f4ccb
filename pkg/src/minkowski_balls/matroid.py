"""Finite matroids given by independent sets, with circuit and flat views,
uniform and linear matroids, and metrized matroids built from lattice shells.

Everything here is exhaustive; ground sets are capped at 10 elements.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .ball import sigma
from .errors import DomainError
from .lattice import critical_lattice_0, shell

MAX_GROUND = 10
RANK_TOL = 1e-10


def _subsets(items: Sequence) -> Iterable[frozenset]:
    for r in range(len(items) + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


def independence_violations(ground: Sequence, family: Iterable[Iterable]) -> list[str]:
    """Exhaustive check of the independent-set axioms IM-1, IM-2, IM-3."""
    fam = {frozenset(s) for s in family}
    gset = set(ground)
    out = []
    if not fam or frozenset() not in fam:
        out.append("IM-1: the empty set is not independent")
    for s in fam:
        if not s <= gset:
            out.append(f"family member {set(s)} is not a subset of the ground set")
        for r in range(len(s)):
            for sub in itertools.combinations(s, r):
                if frozenset(sub) not in fam:
                    out.append(f"IM-2: {set(sub)} is a subset of {set(s)} but not independent")
    for big in fam:
        for small in fam:
            if len(big) > len(small) and not any(small | {i} in fam for i in big - small):
                out.append(f"IM-3: no element of {set(big - small)} extends {set(small)}")
    return out


def circuit_violations(ground: Sequence, circuits: Iterable[Iterable]) -> list[str]:
    """Check circuits are non-empty, pairwise incomparable and satisfy elimination."""
    circ = [frozenset(c) for c in circuits]
    gset = set(ground)
    out = []
    for c in circ:
        if not c:
            out.append("a circuit is empty")
        if not c <= gset:
            out.append(f"circuit {set(c)} is not a subset of the ground set")
    for c1, c2 in itertools.permutations(circ, 2):
        if c1 < c2:
            out.append(f"circuits {set(c1)} and {set(c2)} are comparable")
        if c1 != c2:
            for e in c1 & c2:
                rest = (c1 | c2) - {e}
                if not any(c <= rest for c in circ):
                    out.append(f"CM: ({set(c1)} | {set(c2)}) - {e} contains no circuit")
    return out


def flat_violations(ground: Sequence, flats: Iterable[Iterable]) -> list[str]:
    """Check the flat axioms FM-1, FM-2, FM-3."""
    fl = {frozenset(f) for f in flats}
    gset = frozenset(ground)
    out = []
    for f1, f2 in itertools.combinations(fl, 2):
        if f1 & f2 not in fl:
            out.append(f"FM-1: {set(f1)} & {set(f2)} is not a flat")
    for f in fl:
        above = [g for g in fl if f < g]
        covers = [g for g in above if not any(f < h < g for h in above)]
        for e in gset - f:
            n = sum(1 for g in covers if e in g)
            if n != 1:
                out.append(f"FM-2: {e} lies in {n} covers of {set(f)}")
    if gset not in fl:
        out.append("FM-3: the ground set is not a flat")
    return out


@dataclass(frozen=True)
class FiniteMatroid:
    ground: tuple
    independents: frozenset
    _rank_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.ground) > MAX_GROUND:
            raise DomainError(f"ground sets are limited to {MAX_GROUND} elements")
        if len(set(self.ground)) != len(self.ground):
            raise DomainError("ground set labels must be distinct")
        object.__setattr__(self, "independents", frozenset(frozenset(s) for s in self.independents))
        bad = independence_violations(self.ground, self.independents)
        if bad:
            raise DomainError("not a matroid: " + "; ".join(bad[:3]))

    @classmethod
    def from_bases(cls, ground: Sequence, bases: Iterable[Iterable]) -> FiniteMatroid:
        bases = [frozenset(b) for b in bases]
        indep = {frozenset(s) for b in bases for s in _subsets(sorted(b, key=str))}
        return cls(tuple(ground), frozenset(indep))

    def is_independent(self, s: Iterable) -> bool:
        return frozenset(s) in self.independents

    def rank(self, s: Iterable | None = None) -> int:
        s = frozenset(self.ground if s is None else s)
        r = self._rank_cache.get(s)
        if r is None:
            r = max(len(i) for i in self.independents if i <= s)
            self._rank_cache[s] = r
        return r

    def bases(self) -> frozenset:
        r = self.rank()
        return frozenset(i for i in self.independents if len(i) == r)

    def closure(self, s: Iterable) -> frozenset:
        s = frozenset(s)
        r = self.rank(s)
        return s | {e for e in self.ground if self.rank(s | {e}) == r}

    def subsets(self) -> Iterable[frozenset]:
        return _subsets(self.ground)


def uniform(k: int, n: int) -> FiniteMatroid:
    """U_{k,n} on the ground set 0..n-1."""
    if not 0 <= k <= n:
        raise DomainError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    if n > MAX_GROUND:
        raise DomainError(f"n is limited to {MAX_GROUND}")
    ground = tuple(range(n))
    return FiniteMatroid(ground, frozenset(s for s in _subsets(ground) if len(s) <= k))


def vector_rank(vectors: Sequence[Sequence[float]], tol: float = RANK_TOL) -> int:
    if not vectors:
        return 0
    return int(np.linalg.matrix_rank(np.asarray(vectors, dtype=float), tol=tol))


def from_vectors(vectors: Mapping[Hashable, Sequence[float]], tol: float = RANK_TOL) -> FiniteMatroid:
    """Linear matroid: a set is independent iff its vectors are linearly independent."""
    if len(vectors) > MAX_GROUND:
        raise DomainError(f"at most {MAX_GROUND} vectors")
    if any(len(v) > 4 for v in vectors.values()):
        raise DomainError("vectors of dimension at most 4 are supported")
    ground = tuple(vectors)
    indep = frozenset(s for s in _subsets(ground)
                      if vector_rank([vectors[e] for e in s], tol) == len(s))
    return FiniteMatroid(ground, indep)


def circuits(M: FiniteMatroid) -> frozenset:
    """Minimal dependent sets."""
    return frozenset(s for s in M.subsets()
                     if not M.is_independent(s) and all(M.is_independent(s - {e}) for e in s))


def flats(M: FiniteMatroid) -> frozenset:
    """Closed sets: adding any outside element raises the rank."""
    return frozenset(s for s in M.subsets()
                     if all(M.rank(s | {e}) > M.rank(s) for e in M.ground if e not in s))


def is_isomorphic(M: FiniteMatroid, N: FiniteMatroid) -> bool:
    if len(M.ground) != len(N.ground) or len(M.independents) != len(N.independents):
        return False
    if len(M.ground) > 8:
        raise DomainError("isomorphism test is limited to 8 elements")
    if M.rank() != N.rank():
        return False
    for perm in itertools.permutations(N.ground):
        relabel = dict(zip(M.ground, perm))
        if all(frozenset(relabel[e] for e in s) in N.independents for s in M.independents):
            return True
    return False


def cell_volume(vectors: Sequence[Sequence[float]]) -> float:
    """k-dimensional volume of the parallelotope spanned by k vectors (sqrt of Gram det)."""
    a = np.asarray(vectors, dtype=float)
    g = a @ a.T
    return math.sqrt(max(float(np.linalg.det(g)), 0.0))


@dataclass(frozen=True)
class MetrizedMatroid:
    matroid: FiniteMatroid
    vectors: Mapping[Hashable, tuple[float, ...]]
    metric: Mapping[frozenset, float]
    reading: str = ""

    def consistent(self, tol: float = RANK_TOL) -> bool:
        """Independence agrees with linear independence and basis metrics are positive."""
        for s in self.matroid.subsets():
            lin = vector_rank([self.vectors[e] for e in s], tol) == len(s)
            if lin != self.matroid.is_independent(s):
                return False
        return all(self.metric[b] > 0 for b in self.matroid.bases())


def metrize(vectors: Mapping[Hashable, Sequence[float]], reading: str = "") -> MetrizedMatroid:
    vecs = {k: tuple(float(t) for t in v) for k, v in vectors.items()}
    M = from_vectors(vecs)
    metric = {b: cell_volume([vecs[e] for e in sorted(b, key=M.ground.index)]) for b in M.bases()}
    return MetrizedMatroid(M, vecs, metric, reading)


SHELL_READINGS = ("basis", "pairs", "points")


def shell_matroid(p: float, dimension: int = 2, reading: str = "basis") -> MetrizedMatroid:
    """Metrized matroid from the shell of the lattice through (1, 0) and (1/2, sigma_p/2).

    Readings:
      basis  -- the two basis vectors a, b (plus c = e3 in dimension 3)
      pairs  -- one representative per antipodal shell pair: a, b, b-a (plus c)
      points -- every shell point; antipodes are parallel elements
    """
    if dimension not in (2, 3):
        raise DomainError(f"dimension must be 2 or 3, got {dimension}")
    if reading not in SHELL_READINGS:
        raise DomainError(f"reading must be one of {SHELL_READINGS}, got {reading!r}")
    s = sigma(p)
    a, b = (1.0, 0.0), (0.5, 0.5 * s)
    if reading == "basis":
        vecs = {"a": a, "b": b}
    elif reading == "pairs":
        vecs = {"a": a, "b": b, "b-a": (b[0] - a[0], b[1] - a[1])}
    else:
        vecs = {}
        names = {(1.0, 0.0): "a", (0.5, 0.5 * s): "b", (-0.5, 0.5 * s): "b-a"}
        for q in shell(p, critical_lattice_0(p)):
            for (x, y), name in names.items():
                if abs(q.x - x) < 1e-9 and abs(q.y - y) < 1e-9:
                    vecs["+" + name] = (q.x, q.y)
                elif abs(q.x + x) < 1e-9 and abs(q.y + y) < 1e-9:
                    vecs["-" + name] = (q.x, q.y)
    if dimension == 3:
        vecs = {k: (v[0], v[1], 0.0) for k, v in vecs.items()}
        if reading == "points":
            vecs["+c"], vecs["-c"] = (0.0, 0.0, 1.0), (0.0, 0.0, -1.0)
        else:
            vecs["c"] = (0.0, 0.0, 1.0)
    return metrize(vecs, reading)
