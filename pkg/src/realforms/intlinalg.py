"""Exact integer and rational linear algebra.

Matrices are plain nested lists (or tuples) of Python ints; every routine
returns fresh lists and never mutates its input.  Arbitrary-precision ints
are used throughout since intermediate entries grow quickly.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def as_matrix(A) -> Matrix:
    return [[int(x) for x in row] for row in A]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def bareiss_det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Gaussian elimination."""
    M = as_matrix(A)
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def smith_normal_form(A: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``D = U @ A @ V`` with unimodular ``U`` and ``V``.

    Returns ``(D, U, V)``.  The diagonal of ``D`` is non-negative and each
    nonzero entry divides the next.  Pivoting always brings the smallest
    nonzero entry of the active block to the corner.
    """
    D = as_matrix(A)
    m = len(D)
    n = len(D[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] -= q * row[src]
        D[dst] = [x - q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] != 0 and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish_snf(D, U, V)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(i, t, q)
                if D[i][t] != 0:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(j, t, q)
                if D[t][j] != 0:
                    done = False
            if not done:
                continue
            # divisibility: p must divide the whole remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p != 0), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return _finish_snf(D, U, V)


def _finish_snf(D, U, V):
    for t in range(min(len(D), len(D[0]) if D else 0)):
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def invariant_factors(A: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal of the Smith normal form."""
    D, _, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i] != 0]


def rank(A: Sequence[Sequence[int]]) -> int:
    if not A or not A[0]:
        return 0
    return len(invariant_factors(A))


def kernel_basis(A: Sequence[Sequence[int]], ncols: int = None) -> Matrix:
    """Basis of the integer kernel ``{x in Z^n : A x = 0}``, as columns.

    The returned vectors span the full saturated lattice, not just a
    finite-index sublattice.
    """
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    if not A:
        return identity(n)
    D, _, V = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i] != 0)
    return [row[r:] for row in V]


def solve_in_lattice(basis_cols: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    """Integer coordinates of ``v`` in the lattice spanned by ``basis_cols``.

    ``basis_cols`` is an ``n x s`` matrix with linearly independent columns.
    Raises ValueError if ``v`` is not in the lattice.
    """
    B = as_matrix(basis_cols)
    n = len(B)
    s = len(B[0]) if n else 0
    if s == 0:
        if any(v):
            raise ValueError("vector not in lattice")
        return []
    D, U, V = smith_normal_form(B)
    w = matvec(U, v)
    y = []
    for i in range(s):
        d = D[i][i]
        if d == 0 or w[i] % d != 0:
            raise ValueError("vector not in lattice")
        y.append(w[i] // d)
    if any(w[s:]):
        raise ValueError("vector not in lattice")
    return matvec(V, y)


def inertia(S: Sequence[Sequence[int]]) -> Tuple[int, int, int]:
    """Inertia ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix.

    Exact congruence diagonalisation over the rationals (symmetric pivoting).
    """
    A = [[Fraction(x) for x in row] for row in S]
    n = len(A)
    if any(A[i][j] != A[j][i] for i in range(n) for j in range(n)):
        raise ValueError("matrix is not symmetric")
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # x_i <- x_i + x_j creates a nonzero diagonal entry 2*a_ij
            for c in range(n):
                A[i][c] += A[j][c]
            for r_ in range(n):
                A[r_][i] += A[r_][j]
            piv = i
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            for row in A:
                row[k], row[piv] = row[piv], row[k]
        p = A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                for c in range(k, n):
                    A[i][c] -= f * A[k][c]
                for r_ in range(k, n):
                    A[r_][i] -= f * A[r_][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos, neg, n - pos - neg
