"""Non-abelian ``H^1(Z/2, A)`` for finite groups ``A`` given by tables.

The generator of ``G = Z/2`` acts through an involutive automorphism
``theta``.  A cocycle is then a single element ``a`` with
``a * theta(a) = e``; cocycles ``a`` and ``b`` are equivalent when
``b = alpha^-1 * a * theta(alpha)`` for some ``alpha``.

Elements are integer indices.  Class representatives are the smallest
index in each class and classes are listed in increasing representative
order.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import zcohom

MAX_LOAD_ORDER = 512
MAX_SEQUENCE_ORDER = 128


class GroupValidationError(ValueError):
    """Base class for rejected group specifications."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GroupAxiomError(GroupValidationError):
    pass


class NotAutomorphismError(GroupValidationError):
    pass


class NotInvolutionError(GroupValidationError):
    pass


class SubgroupError(GroupValidationError):
    pass


class CocycleError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    n: int
    identity: int
    mul: Tuple[Tuple[int, ...], ...] = field(repr=False)
    inv: Tuple[int, ...] = field(repr=False)

    def __eq__(self, other):
        return (type(self) is type(other) and self.identity == other.identity
                and self.mul == other.mul)

    def __hash__(self):
        return hash((self.n, self.identity, self.mul))

    def m(self, *xs: int) -> int:
        out = self.identity
        for x in xs:
            out = self.mul[out][x]
        return out

    def is_abelian(self) -> bool:
        return all(self.mul[x][y] == self.mul[y][x] for x in range(self.n) for y in range(x))

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k


@dataclass(frozen=True, eq=False)
class FiniteGGroup(FiniteGroup):
    theta: Tuple[int, ...] = field(default=(), repr=False)

    def __eq__(self, other):
        return FiniteGroup.__eq__(self, other) and self.theta == other.theta

    def __hash__(self):
        return hash((self.n, self.identity, self.mul, self.theta))

    def to_record(self, normal: Optional[Sequence[int]] = None) -> dict:
        rec = {"n": self.n, "identity": self.identity,
               "mul": [list(r) for r in self.mul], "action": list(self.theta)}
        if normal is not None:
            rec["normal"] = sorted(normal)
        return rec


@dataclass(frozen=True)
class Cocycle:
    a_sigma: int


@dataclass(frozen=True)
class PointedSet:
    elements: Tuple
    base: int

    def __len__(self):
        return len(self.elements)

    @property
    def base_element(self):
        return self.elements[self.base]


@dataclass(frozen=True)
class H1Set(PointedSet):
    """``H^1`` as a pointed set; ``elements`` are class representatives."""
    classes: Tuple[Tuple[int, ...], ...] = ()
    class_index: Tuple[int, ...] = ()   # per element, -1 if not a cocycle

    def class_of(self, a: int) -> int:
        c = self.class_index[a]
        if c < 0:
            raise CocycleError(f"{a} is not a cocycle")
        return c


# -- validation -------------------------------------------------------------

def _check_table(n, identity, mul):
    M = np.asarray(mul, dtype=np.int64)
    if M.shape != (n, n):
        raise GroupAxiomError(f"multiplication table must be {n}x{n}")
    if M.min() < 0 or M.max() >= n:
        raise GroupAxiomError("table entries out of range")
    if not 0 <= identity < n:
        raise GroupAxiomError("identity out of range")
    ar = np.arange(n)
    if not (np.array_equal(M[identity], ar) and np.array_equal(M[:, identity], ar)):
        x = int(np.nonzero((M[identity] != ar) | (M[:, identity] != ar))[0][0])
        raise GroupAxiomError(f"{identity} is not a two-sided identity (fails at {x})", (identity, x))
    # chunked associativity check: (ab)c == a(bc)
    chunk = max(1, 2_000_000 // (n * n))
    for start in range(0, n, chunk):
        a = slice(start, min(n, start + chunk))
        left = M[M[a]]          # left[i, b, c] = (a_i b) c
        right = M[a][:, M]      # right[i, b, c] = a_i (b c)
        bad = np.argwhere(left != right)
        if len(bad):
            i, b, c = (int(v) for v in bad[0])
            raise GroupAxiomError(f"not associative at ({start + i}, {b}, {c})", (start + i, b, c))
    inv = []
    for x in range(n):
        ys = np.nonzero(M[x] == identity)[0]
        if len(ys) == 0 or M[ys[0], x] != identity:
            raise GroupAxiomError(f"element {x} has no inverse", (x,))
        inv.append(int(ys[0]))
    return inv


def _check_action(n, mul, theta):
    if sorted(theta) != list(range(n)):
        raise NotAutomorphismError("action is not a permutation of the elements")
    M = np.asarray(mul, dtype=np.int64)
    T = np.asarray(theta, dtype=np.int64)
    bad = np.nonzero(T[T] != np.arange(n))[0]
    if len(bad):
        raise NotInvolutionError(f"action is not an involution at {int(bad[0])}", (int(bad[0]),))
    # theta(xy) == theta(x) theta(y)
    bad = np.argwhere(T[M] != M[np.ix_(T, T)])
    if len(bad):
        x, y = (int(v) for v in bad[0])
        raise NotAutomorphismError(f"action is not a homomorphism at ({x}, {y})", (x, y))


def make_group(mul: Sequence[Sequence[int]], identity: int = 0) -> FiniteGroup:
    n = len(mul)
    inv = _check_table(n, identity, mul)
    return FiniteGroup(n, identity, tuple(tuple(int(x) for x in r) for r in mul), tuple(inv))


def make_ggroup(mul: Sequence[Sequence[int]], theta: Sequence[int], identity: int = 0) -> FiniteGGroup:
    n = len(mul)
    if n > MAX_LOAD_ORDER:
        raise GroupValidationError(f"order {n} exceeds the validation cap {MAX_LOAD_ORDER}")
    inv = _check_table(n, identity, mul)
    theta = tuple(int(x) for x in theta)
    if len(theta) != n:
        raise NotAutomorphismError(f"action has length {len(theta)}, expected {n}")
    _check_action(n, mul, theta)
    return FiniteGGroup(n, identity, tuple(tuple(int(x) for x in r) for r in mul), tuple(inv), theta)


def load_ggroup(record: dict) -> FiniteGGroup:
    """Validate a group specification record ``{n, identity, mul, action}``."""
    try:
        n = int(record["n"])
        identity = int(record.get("identity", 0))
        mul = record["mul"]
        action = record["action"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupValidationError(f"malformed group record: {exc}") from exc
    if len(mul) != n:
        raise GroupAxiomError(f"table has {len(mul)} rows, expected {n}")
    return make_ggroup(mul, action, identity)


def with_action(A: FiniteGroup, theta: Sequence[int]) -> FiniteGGroup:
    theta = tuple(int(x) for x in theta)
    _check_action(A.n, A.mul, theta)
    return FiniteGGroup(A.n, A.identity, A.mul, A.inv, theta)


# -- cocycles and H^1 -------------------------------------------------------

def is_cocycle(A: FiniteGGroup, a: int) -> bool:
    return A.mul[a][A.theta[a]] == A.identity


def cocycles(A: FiniteGGroup) -> List[Cocycle]:
    return [Cocycle(a) for a in range(A.n) if is_cocycle(A, a)]


def act_on_cocycle(A: FiniteGGroup, alpha: int, a: int) -> int:
    """``alpha^-1 * a * theta(alpha)``."""
    return A.mul[A.mul[A.inv[alpha]][a]][A.theta[alpha]]


def h1(A: FiniteGGroup) -> H1Set:
    index = [-1] * A.n
    classes = []
    for a in range(A.n):
        if index[a] >= 0 or not is_cocycle(A, a):
            continue
        members = sorted({act_on_cocycle(A, alpha, a) for alpha in range(A.n)})
        for b in members:
            index[b] = len(classes)
        classes.append(tuple(members))
    reps = tuple(c[0] for c in classes)
    return H1Set(elements=reps, base=index[A.identity], classes=tuple(classes),
                 class_index=tuple(index))


def fixed_points(A: FiniteGGroup) -> PointedSet:
    fixed = tuple(x for x in range(A.n) if A.theta[x] == x)
    return PointedSet(fixed, fixed.index(A.identity))


def twist(A: FiniteGGroup, b: Cocycle) -> FiniteGGroup:
    """Same group with action ``x -> b theta(x) b^-1``."""
    bb = b.a_sigma
    if not is_cocycle(A, bb):
        raise CocycleError(f"{bb} is not a cocycle")
    theta = [A.mul[A.mul[bb][A.theta[x]]][A.inv[bb]] for x in range(A.n)]
    return with_action(A, theta)


def semidirect(A: FiniteGGroup) -> FiniteGroup:
    """``A x| Z/2`` on pairs ``(a, g)``; pair ``(a, g)`` has index ``a + n g``.

    Law: ``(a, s)(a', s') = (a s.a', s s')``.
    """
    n = A.n
    powers = (tuple(range(n)), A.theta)
    mul = [[0] * (2 * n) for _ in range(2 * n)]
    for g in (0, 1):
        act = powers[g]
        for a in range(n):
            row = mul[a + n * g]
            for h in (0, 1):
                for a2 in range(n):
                    row[a2 + n * h] = A.mul[a][act[a2]] + n * ((g + h) % 2)
    if 2 * n <= 2 * 48:
        return make_group(mul, A.identity)
    inv = [0] * (2 * n)
    for x in range(2 * n):
        inv[x] = next(y for y in range(2 * n) if mul[x][y] == A.identity)
    return FiniteGroup(2 * n, A.identity, tuple(tuple(r) for r in mul), tuple(inv))


def splitting_conjugacy_equiv(A: FiniteGGroup, a: Cocycle, b: Cocycle,
                              S: Optional[FiniteGroup] = None) -> bool:
    """Whether ``(alpha^-1, 1)(a, s)(alpha, 1) = (b, s)`` for some alpha."""
    for c in (a, b):
        if not is_cocycle(A, c.a_sigma):
            raise CocycleError(f"{c.a_sigma} is not a cocycle")
    if S is None:
        S = semidirect(A)
    n = A.n
    target = b.a_sigma + n
    x = a.a_sigma + n
    for alpha in range(n):
        if S.m(S.inv[alpha], x, alpha) == target:
            return True
    return False


def twist_bijection_check(A: FiniteGGroup, b: Cocycle) -> bool:
    """``x -> x b`` maps ``Z^1(A_b)`` onto ``Z^1(A)`` and descends to ``H^1``."""
    Ab = twist(A, b)
    bb = b.a_sigma
    z_twisted = [c.a_sigma for c in cocycles(Ab)]
    z = [c.a_sigma for c in cocycles(A)]
    images = [A.mul[x][bb] for x in z_twisted]
    if sorted(images) != z:
        return False
    H, Hb = h1(A), h1(Ab)
    # classes map to classes, injectively and onto
    image_class = {}
    for x in z_twisted:
        cb, c = Hb.class_of(x), H.class_of(A.mul[x][bb])
        if image_class.setdefault(cb, c) != c:
            return False
    if sorted(image_class.values()) != list(range(len(H))):
        return False
    return image_class[Hb.base] == H.class_of(bb)


# -- subgroups, quotients and the exact sequence ---------------------------

def check_normal_stable(B: FiniteGGroup, A_indices: Sequence[int]) -> List[int]:
    sub = sorted(set(int(x) for x in A_indices))
    S = set(sub)
    if not sub or any(not 0 <= x < B.n for x in sub):
        raise SubgroupError("subgroup indices out of range or empty")
    if B.identity not in S:
        raise SubgroupError("subgroup does not contain the identity")
    for x in sub:
        if B.inv[x] not in S:
            raise SubgroupError(f"not closed under inverses at {x}", (x,))
        for y in sub:
            if B.mul[x][y] not in S:
                raise SubgroupError(f"not closed under products at ({x}, {y})", (x, y))
    for g in range(B.n):
        for x in sub:
            if B.m(g, x, B.inv[g]) not in S:
                raise SubgroupError(f"not normal: {g} conjugates {x} outside", (g, x))
    for x in sub:
        if B.theta[x] not in S:
            raise SubgroupError(f"not stable under the action at {x}", (x,))
    return sub


def restrict(B: FiniteGGroup, sub: Sequence[int]) -> Tuple[FiniteGGroup, List[int]]:
    """Subgroup as a G-group on indices ``0..|sub|-1`` (increasing order)."""
    pos = {x: i for i, x in enumerate(sub)}
    mul = [[pos[B.mul[x][y]] for y in sub] for x in sub]
    theta = [pos[B.theta[x]] for x in sub]
    return make_ggroup(mul, theta, pos[B.identity]), list(sub)


def quotient(B: FiniteGGroup, sub: Sequence[int]) -> Tuple[FiniteGGroup, List[int]]:
    """``B / A`` with induced action; returns the group and the projection.

    Cosets are numbered by increasing smallest member.
    """
    key = {}
    for b in range(B.n):
        rep = min(B.mul[b][a] for a in sub)
        key[b] = rep
    reps = sorted(set(key.values()))
    cidx = {r: i for i, r in enumerate(reps)}
    proj = [cidx[key[b]] for b in range(B.n)]
    mul = [[proj[B.mul[x][y]] for y in reps] for x in reps]
    theta = [proj[B.theta[x]] for x in reps]
    return make_ggroup(mul, theta, proj[B.identity]), proj


@dataclass(frozen=True)
class ExactSequenceReport:
    """The six terms, the five maps between them and one verdict per node.

    Terms: ``A^G, B^G, C^G, H1(A), H1(B), H1(C)``.  Maps are tuples of
    positions into the target term.  ``A`` and ``C`` are the subgroup and
    quotient as G-groups, with ``embedding`` and ``projection`` to/from B.
    """
    terms: Dict[str, PointedSet]
    maps: Dict[str, Tuple[int, ...]]
    exact: Dict[str, bool]
    A: FiniteGGroup
    C: FiniteGGroup
    embedding: Tuple[int, ...]
    projection: Tuple[int, ...]

    @property
    def all_exact(self) -> bool:
        return all(self.exact.values())


TERMS = ("A^G", "B^G", "C^G", "H1(A)", "H1(B)", "H1(C)")


def _kernel(mapping, target: PointedSet):
    return {i for i, j in enumerate(mapping) if j == target.base}


def _image(mapping):
    return set(mapping)


def _twisted_fiber(B, A, emb, HB, b):
    """``[x b]`` for ``[x]`` in the image of ``H1(A_b) -> H1(B_b)``."""
    Bb = twist(B, Cocycle(b))
    # A_b: action x -> b theta(x) b^-1 restricted to A
    Ab, _ = restrict(Bb, emb)
    return {HB.class_of(B.mul[emb[x.a_sigma]][b]) for x in cocycles(Ab)}, Ab


def exact_sequence(B: FiniteGGroup, A_indices: Sequence[int]) -> ExactSequenceReport:
    """Six-term exact sequence of pointed sets for ``1 -> A -> B -> C -> 1``.

    The last node checks the twisted description of the fibres of
    ``H1(B) -> H1(C)``: the fibre through ``[b]`` is the image of
    ``H1(A_b)`` transported by ``x -> x b``.
    """
    if B.n > MAX_SEQUENCE_ORDER:
        raise GroupValidationError(f"order {B.n} exceeds the exhaustive cap {MAX_SEQUENCE_ORDER}")
    sub = check_normal_stable(B, A_indices)
    A, emb = restrict(B, sub)
    C, proj = quotient(B, sub)

    AG, BG, CG = fixed_points(A), fixed_points(B), fixed_points(C)
    HA, HB, HC = h1(A), h1(B), h1(C)

    bpos = {x: i for i, x in enumerate(BG.elements)}
    cpos = {x: i for i, x in enumerate(CG.elements)}
    m_ab = tuple(bpos[emb[x]] for x in AG.elements)
    m_bc = tuple(cpos[proj[x]] for x in BG.elements)

    # connecting map: c -> [b^-1 theta(b)] for a lift b of c
    apos = {x: i for i, x in enumerate(emb)}
    delta = []
    for c in CG.elements:
        lifts = [b for b in range(B.n) if proj[b] == c]
        vals = {HA.class_of(apos[B.mul[B.inv[b]][B.theta[b]]]) for b in lifts}
        if len(vals) != 1:
            raise RuntimeError(f"connecting map is not well defined at {c}")
        delta.append(vals.pop())
    delta = tuple(delta)
    f_star = tuple(HB.class_of(emb[a]) for a in HA.elements)
    g_star = tuple(HC.class_of(proj[b]) for b in HB.elements)

    exact = {
        "A^G": _kernel(m_ab, BG) == {AG.base},
        "B^G": _image(m_ab) == _kernel(m_bc, CG),
        "C^G": _image(m_bc) == _kernel(delta, HA),
        "H1(A)": _image(delta) == _kernel(f_star, HB),
        "H1(B)": _image(f_star) == _kernel(g_star, HC),
    }
    fibres_ok = True
    for i, b in enumerate(HB.elements):
        fibre = {j for j, c in enumerate(g_star) if c == g_star[i]}
        twisted, _ = _twisted_fiber(B, A, emb, HB, b)
        fibres_ok &= twisted == fibre
    exact["H1(C)"] = fibres_ok

    return ExactSequenceReport(
        terms=dict(zip(TERMS, (AG, BG, CG, HA, HB, HC))),
        maps={"A^G->B^G": m_ab, "B^G->C^G": m_bc, "C^G->H1(A)": delta,
              "H1(A)->H1(B)": f_star, "H1(B)->H1(C)": g_star},
        exact=exact, A=A, C=C, embedding=tuple(emb), projection=tuple(proj),
    )


@dataclass(frozen=True)
class FiberEntry:
    representative: int          # cocycle of B
    fiber: Tuple[int, ...]       # H1(B) class indices with the same image in H1(C)
    twisted_h1_size: int         # |H1(G, A_b)|

    @property
    def bounded(self) -> bool:
        return len(self.fiber) <= self.twisted_h1_size


@dataclass(frozen=True)
class FiberReport:
    entries: Tuple[FiberEntry, ...]
    h1_size: int

    @property
    def partition_ok(self) -> bool:
        fibres = {e.fiber for e in self.entries}
        flat = sorted(i for f in fibres for i in f)
        return flat == list(range(self.h1_size))

    @property
    def bounded(self) -> bool:
        return all(e.bounded for e in self.entries)

    @property
    def covered(self) -> bool:
        return sum(e.twisted_h1_size for e in self.entries) >= self.h1_size

    @property
    def ok(self) -> bool:
        return self.partition_ok and self.bounded and self.covered


def fiber_decomposition(B: FiniteGGroup, A_indices: Sequence[int]) -> FiberReport:
    if B.n > MAX_SEQUENCE_ORDER:
        raise GroupValidationError(f"order {B.n} exceeds the exhaustive cap {MAX_SEQUENCE_ORDER}")
    sub = check_normal_stable(B, A_indices)
    A, emb = restrict(B, sub)
    C, proj = quotient(B, sub)
    HB, HC = h1(B), h1(C)
    g_star = [HC.class_of(proj[b]) for b in HB.elements]
    entries = []
    for i, b in enumerate(HB.elements):
        fibre = tuple(j for j, c in enumerate(g_star) if c == g_star[i])
        _, Ab = _twisted_fiber(B, A, emb, HB, b)
        entries.append(FiberEntry(b, fibre, len(h1(Ab))))
    return FiberReport(tuple(entries), len(HB))


# -- pushouts of pointed sets ----------------------------------------------

def amalgamated_sum(sets: Sequence[PointedSet]) -> PointedSet:
    """Pushout of pointed sets: tuples with at most one non-base coordinate."""
    if not sets:
        raise ValueError("need at least one pointed set")
    bases = tuple(s.base_element for s in sets)
    elements = [bases]
    for i, s in enumerate(sets):
        for j, x in enumerate(s.elements):
            if j != s.base:
                elements.append(bases[:i] + (x,) + bases[i + 1:])
    return PointedSet(tuple(elements), 0)


def h1_integers(sign: int, h1_factor: Callable = None) -> PointedSet:
    """``H^1(Z/2, Z)`` for the action ``n -> sign * n``, as a pointed set."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    h1_factor = h1_factor or zcohom.h1_abelian
    H = h1_factor(zcohom.InvolutionModule(1, ((sign,),)))
    elements = tuple(H.elements())
    return PointedSet(elements, elements.index(tuple(0 for _ in H.invariant_factors)))


def h1_free_product_pushout(signs: Sequence[int], h1_factor: Callable = None) -> PointedSet:
    """``H^1(Z/2, Z^{*k})`` as the pushout of the factors' ``H^1(Z/2, Z)``.

    ``signs[i]`` is the action on the i-th free factor.  ``h1_factor``
    computes the abelian ``H^1`` of each factor (default: zcohom).
    """
    if len(signs) < 2:
        raise ValueError("need k >= 2 free factors")
    return amalgamated_sum([h1_integers(s, h1_factor) for s in signs])


def h1_free_product_Zk(signs: Sequence[int], h1_factor: Callable = None) -> int:
    return len(h1_free_product_pushout(signs, h1_factor))
