"""Cohomology of ``Z/2`` acting on ``Z^k`` through an integer involution."""
import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import intlinalg


class NotAnInvolutionError(ValueError):
    pass


class BoxTooSmallError(RuntimeError):
    pass


@dataclass(frozen=True)
class InvolutionModule:
    k: int
    M: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.M)
        object.__setattr__(self, "M", M)
        if len(M) != self.k or any(len(row) != self.k for row in M):
            raise ValueError(f"expected a {self.k}x{self.k} matrix")
        if intlinalg.matmul(M, M) != intlinalg.identity(self.k):
            raise NotAnInvolutionError("M @ M is not the identity")

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence[int]]) -> "InvolutionModule":
        return cls(len(M), M)


@dataclass(frozen=True)
class AbelianH1:
    invariant_factors: Tuple[int, ...]
    order: int

    def elements(self) -> List[Tuple[int, ...]]:
        """All classes as residue tuples, zero first."""
        return list(itertools.product(*(range(d) for d in self.invariant_factors)))


def _shifted(M, s):
    k = len(M)
    return [[M[i][j] + s * (i == j) for j in range(k)] for i in range(k)]


def h1_abelian(mod: InvolutionModule) -> AbelianH1:
    """``ker(I + M) / im(M - I)`` via Smith normal form."""
    k, M = mod.k, mod.M
    Z = intlinalg.kernel_basis(_shifted(M, 1), k)     # k x s, columns
    s = len(Z[0]) if Z else 0
    if s == 0:
        return AbelianH1((), 1)
    Bmat = _shifted(M, -1)
    # coboundary generators: columns of (M - I), written in the cocycle basis
    coords = [intlinalg.solve_in_lattice(Z, [Bmat[i][j] for i in range(k)]) for j in range(k)]
    rel = intlinalg.transpose(coords)                  # s x k
    D, _, _ = intlinalg.smith_normal_form(rel)
    diag = [D[i][i] if i < len(D[0]) else 0 for i in range(s)]
    if any(d == 0 for d in diag):
        raise RuntimeError("coboundaries have lower rank than cocycles; H^1 would be infinite")
    factors = tuple(d for d in diag if d > 1)
    if any(d != 2 for d in factors):
        raise RuntimeError(f"invariant factors {factors} are not all 2")
    order = 1
    for d in factors:
        order *= d
    return AbelianH1(factors, order)


def h0_abelian(mod: InvolutionModule) -> int:
    """Rank of the fixed lattice ``ker(M - I)``."""
    return mod.k - intlinalg.rank(_shifted(mod.M, -1))


def _grid(k, box):
    axis = np.arange(-box, box + 1, dtype=np.int64)
    return np.array(np.meshgrid(*([axis] * k), indexing="ij")).reshape(k, -1).T


def _count_classes(M, box, step_box):
    k = M.shape[0]
    I = np.eye(k, dtype=np.int64)
    pts = _grid(k, box)
    cocycles = pts[~np.any(pts @ (I + M).T, axis=1)]
    n = len(cocycles)
    # points of the box as mixed-radix integer codes
    radix = 2 * box + 1
    weights = radix ** np.arange(k, dtype=np.int64)
    codes = (cocycles + box) @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]
    moves = np.unique(_grid(k, step_box) @ (M - I).T, axis=0)
    moves = moves[np.any(moves != 0, axis=1) & np.all(np.abs(moves) <= 2 * box, axis=1)]
    rows, cols = [], []
    for c in moves:
        shifted = cocycles + c
        inside = np.all(np.abs(shifted) <= box, axis=1)
        src = np.nonzero(inside)[0]
        tgt_codes = (shifted[inside] + box) @ weights
        pos = np.minimum(np.searchsorted(sorted_codes, tgt_codes), n - 1)
        hit = sorted_codes[pos] == tgt_codes
        rows.append(src[hit])
        cols.append(order[pos[hit]])
    rows = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
    cols = np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    ncomp, _ = connected_components(graph, directed=False)
    return int(ncomp)


def h1_abelian_bruteforce(mod: InvolutionModule, box: int, step_box: int = 2) -> AbelianH1:
    """Class count of cocycles in ``[-box, box]^k`` modulo enumerated coboundaries.

    Cocycles in the box are joined when they differ by a coboundary
    ``(M - I) y`` with ``y`` in ``[-step_box, step_box]^k``; the number of
    connected components is the answer.  Only trustworthy once the box is large
    compared with the cocycle lattice's reduced basis, so the count is
    recomputed at ``box + 1`` and a mismatch raises BoxTooSmallError.
    """
    if mod.k > 6:
        raise ValueError("brute force limited to k <= 6")
    if box <= 0:
        raise ValueError("box must be positive")
    M = np.array(mod.M, dtype=np.int64)
    n1 = _count_classes(M, box, step_box)
    n2 = _count_classes(M, box + 1, step_box)
    if n1 != n2:
        raise BoxTooSmallError(f"class count changed from {n1} to {n2} when growing the box")
    # the oracle counts classes only; a power of two is reported as (Z/2)^e
    e = n1.bit_length() - 1
    factors = (2,) * e if 1 << e == n1 else (n1,)
    return AbelianH1(factors, n1)
