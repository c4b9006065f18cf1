"""Picard lattice ``Z^{1,r}`` of the plane blown up at ``r`` points.

Basis ``e0, e1, ..., er``: ``e0`` is the pull-back of a line and ``ei`` the
exceptional class over the i-th point.  The intersection form is
``diag(1, -1, ..., -1)`` and the canonical class is ``K = -3 e0 + sum ei``.
"""
import math
from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from . import intlinalg

DEFAULT_CAP = 10000


@dataclass(frozen=True, order=True)
class DivisorClass:
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other):
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coords))

    def __rmul__(self, k: int):
        return DivisorClass(tuple(k * a for a in self.coords))

    @property
    def degree(self) -> int:
        return self.coords[0]

    def __repr__(self):
        return f"DivisorClass({list(self.coords)})"


@dataclass(frozen=True)
class PicardLattice:
    r: int
    gram: Tuple[Tuple[int, ...], ...] = field(repr=False)
    canonical: DivisorClass
    simple_roots: Tuple[DivisorClass, ...]

    @property
    def rank(self) -> int:
        return self.r + 1

    def basis(self, i: int) -> DivisorClass:
        return DivisorClass(tuple(int(j == i) for j in range(self.rank)))

    def divisor(self, d: int, *mults: int) -> DivisorClass:
        """The class ``d e0 - m1 e1 - ... - mr er``; missing ``m`` are zero."""
        if len(mults) > self.r:
            raise ValueError("too many multiplicities")
        ms = list(mults) + [0] * (self.r - len(mults))
        return DivisorClass((d, *(-m for m in ms)))


@dataclass(frozen=True)
class SublatticeInvariants:
    rank: int
    gram_det: int
    is_even: bool
    signature: Tuple[int, int]


@dataclass(frozen=True)
class ClassList:
    """Sorted enumeration result; ``truncated`` is set when ``cap`` stopped it."""
    classes: Tuple[DivisorClass, ...]
    truncated: bool
    cap: int

    def __len__(self):
        return len(self.classes)

    def __iter__(self) -> Iterator[DivisorClass]:
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]


def make_lattice(r: int) -> PicardLattice:
    if r < 0:
        raise ValueError("r must be non-negative")
    n = r + 1
    gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n))
    canonical = DivisorClass((-3,) + (1,) * r)
    roots = []
    if r >= 3:
        roots.append(DivisorClass((1, -1, -1, -1) + (0,) * (r - 3)))
    for i in range(1, r):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(DivisorClass(v))
    return PicardLattice(r=r, gram=gram, canonical=canonical, simple_roots=tuple(roots))


def _check(L: PicardLattice, x: DivisorClass):
    if len(x) != L.rank:
        raise ValueError(f"class has {len(x)} coordinates, lattice rank is {L.rank}")


def pair(L: PicardLattice, x: DivisorClass, y: DivisorClass) -> int:
    """Intersection number ``x . y``."""
    _check(L, x)
    _check(L, y)
    # gram is diag(1, -1, ..., -1)
    return x[0] * y[0] - sum(a * b for a, b in zip(x.coords[1:], y.coords[1:]))


def gram_matrix(L: PicardLattice, vectors: Sequence[DivisorClass]) -> List[List[int]]:
    return [[pair(L, u, v) for v in vectors] for u in vectors]


def kperp_invariants(L: PicardLattice) -> SublatticeInvariants:
    """Invariants of ``K^perp`` computed on the simple-root basis."""
    if L.r < 3:
        raise ValueError("K^perp root basis needs r >= 3")
    G = gram_matrix(L, L.simple_roots)
    pos, neg, _ = intlinalg.inertia(G)
    return SublatticeInvariants(
        rank=len(G),
        gram_det=intlinalg.bareiss_det(G),
        is_even=all(G[i][i] % 2 == 0 for i in range(len(G))),
        signature=(pos, neg),
    )


def degree_bound(r: int, square: int, kdeg: int):
    """Largest ``|d|`` for a class with ``x.x = square`` and ``x.K = kdeg``.

    Writing ``x = d e0 - sum mi ei`` one has ``sum mi = 3d + kdeg`` and
    ``sum mi^2 = d^2 - square``; Cauchy-Schwarz gives
    ``(9 - r) d^2 + 6 kdeg d + kdeg^2 + r square <= 0``.  Returns None when
    ``r >= 9`` (no bound).
    """
    if r >= 9:
        return None
    if r == 0:
        # x = d e0 only: d^2 = square and -3d = kdeg
        return abs(kdeg) // 3
    a, b, c = 9 - r, 6 * kdeg, kdeg * kdeg + r * square
    disc = b * b - 4 * a * c
    if disc < 0:
        return 0
    s = math.isqrt(disc) + 1
    return max(abs((-b - s) // (2 * a)), abs((-b + s) // (2 * a)) + 1)


def _mult_vectors(k: int, total: int, sq: int):
    """All integer vectors of length ``k`` with given sum and sum of squares."""
    if k == 0:
        if total == 0 and sq == 0:
            yield ()
        return
    if sq < 0 or total * total > k * sq or (total - sq) % 2:
        return
    lim = math.isqrt(sq)
    for m in range(-lim, lim + 1):
        for rest in _mult_vectors(k - 1, total - m, sq - m * m):
            yield (m,) + rest


def _classes_at_degree(r: int, d: int, square: int, kdeg: int):
    for ms in _mult_vectors(r, 3 * d + kdeg, d * d - square):
        yield DivisorClass((d,) + tuple(-m for m in ms))


def _enumerate(L: PicardLattice, square: int, kdeg: int, cap: int) -> ClassList:
    if cap <= 0:
        raise ValueError("cap must be positive")
    bound = degree_bound(L.r, square, kdeg)
    found: List[DivisorClass] = []
    if bound is not None:
        # over-generous margin on top of the derived bound
        for d in range(-2 * bound - 3, 2 * bound + 4):
            found.extend(_classes_at_degree(L.r, d, square, kdeg))
            if len(found) > cap:
                raise RuntimeError(
                    f"cap {cap} exceeded for r={L.r} (finite set); degree bound is wrong")
        for x in found:
            if abs(x.degree) > bound:
                raise RuntimeError(f"class {x} violates degree bound {bound}")
        return ClassList(tuple(sorted(found)), False, cap)
    d = 0
    while True:
        level = []
        for dd in ((0,) if d == 0 else (d, -d)):
            level.extend(_classes_at_degree(L.r, dd, square, kdeg))
        level.sort()
        if len(found) + len(level) >= cap:
            found.extend(level[: cap - len(found)])
            return ClassList(tuple(sorted(found)), True, cap)
        found.extend(level)
        d += 1


def enumerate_roots(L: PicardLattice, cap: int = DEFAULT_CAP) -> ClassList:
    """All ``(-2)``-classes orthogonal to ``K``.

    Exhaustive for ``r <= 8``.  For ``r >= 9`` the set is infinite and the
    search runs by increasing ``|d|`` until ``cap`` classes are collected.
    """
    if L.r < 3:
        raise ValueError("roots are enumerated for r >= 3")
    return _enumerate(L, -2, 0, cap)


def enumerate_exceptional(L: PicardLattice, cap: int = DEFAULT_CAP) -> ClassList:
    """All classes ``E`` with ``E.E = -1`` and ``E.K = -1``."""
    if L.r < 1:
        raise ValueError("exceptional classes need r >= 1")
    return _enumerate(L, -1, -1, cap)
