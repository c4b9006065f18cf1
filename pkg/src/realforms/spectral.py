"""Characteristic polynomials, certified spectral radius and entropy.

Every decision (radius equal to one or not, finite order or not) is taken
with integer and rational arithmetic.  Floats only appear in the displayed
logarithms and in the defensive Graeffe modulus check.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import List, Optional, Sequence, Tuple

from .piclattice import PicardLattice
from .weyl import Isometry

DEFAULT_EPS = Fraction(1, 10**6)


class SpectralError(RuntimeError):
    """The largest-modulus root is not where the lattice structure puts it."""


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, constant term first, no trailing zeros."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        c = list(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_pmul(self.coeffs, other.coeffs))

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


@dataclass(frozen=True)
class EntropyReport:
    char_poly: IntPolynomial
    spectral_radius_interval: Tuple[Fraction, Fraction]
    entropy_lower: float
    entropy_upper: float
    positive_entropy: bool


@dataclass(frozen=True)
class FiniteOrderResult:
    finite: bool
    order: Optional[int]
    inconclusive: bool = False

    def __bool__(self):
        return self.finite


# -- polynomial helpers on coefficient lists (constant term first) ---------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _pderiv(p):
    return [i * p[i] for i in range(1, len(p))]


def _pdivmod(p, q):
    """Division over the rationals."""
    p = [Fraction(x) for x in p]
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    out = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    lead = Fraction(q[-1])
    while len(_trim(p)) >= len(q):
        p = _trim(p)
        k = len(p) - len(q)
        c = p[-1] / lead
        out[k] = c
        for i, b in enumerate(q):
            p[i + k] -= c * b
    return _trim(out), _trim(p)


def _divmod_monic(p, q):
    """Integer division by a monic integer polynomial."""
    p = list(p)
    k = len(q) - 1
    out = [0] * (len(p) - k)
    for i in range(len(p) - 1, k - 1, -1):
        c = p[i]
        if c:
            out[i - k] = c
            for j in range(k + 1):
                p[i - k + j] -= c * q[j]
    return out, _trim(p[:k])


def _primitive(p):
    """Scale a rational polynomial to a primitive integer one, positive lead."""
    p = _trim(p)
    if not p:
        return []
    den = reduce(math.lcm, (Fraction(x).denominator for x in p), 1)
    ints = [int(Fraction(x) * den) for x in p]
    g = reduce(math.gcd, ints)
    if ints[-1] < 0:
        g = -g
    return [x // g for x in ints]


def _pgcd(p, q):
    a, b = _primitive(p), _primitive(q)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


def squarefree_part(p: Sequence[int]) -> List[int]:
    p = _primitive(p)
    if len(p) <= 1:
        return p
    g = _pgcd(p, _pderiv(p))
    q, r = _pdivmod(p, g)
    assert not r
    return _primitive(q)


def _eval(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


# -- characteristic polynomial -------------------------------------------

def char_poly_matrix(A: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(x I - A)`` by Berkowitz's division-free algorithm."""
    n = len(A)
    A = [[int(x) for x in row] for row in A]
    if n == 0:
        return IntPolynomial((1,))
    # coefficient vectors are kept highest degree first during the recursion
    vect = [1, -A[0][0]]
    for k in range(1, n):
        R = A[k][:k]          # row k, columns < k
        C = [A[i][k] for i in range(k)]  # column k, rows < k
        Ak = [row[:k] for row in A[:k]]
        a = A[k][k]
        # Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
        col = [1, -a]
        v = C
        for _ in range(k):
            col.append(-sum(r * x for r, x in zip(R, v)))
            v = [sum(Ak[i][j] * v[j] for j in range(k)) for i in range(k)]
        # multiply the (k+2) x (k+1) lower-triangular Toeplitz matrix by vect
        vect = [sum(col[i - j] * vect[j] for j in range(min(i, k) + 1) if i - j < len(col))
                for i in range(k + 2)]
    return IntPolynomial(tuple(reversed(vect)))


def char_poly(M: Isometry) -> IntPolynomial:
    return char_poly_matrix(M.matrix)


# -- cyclotomic factors ----------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial."""
    p = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, r = _pdivmod(p, cyclotomic(d))
            assert not r
    return tuple(int(x) for x in p)


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_orders(max_degree: int) -> Tuple[int, ...]:
    """All n with ``phi(n) <= max_degree``."""
    # phi(n) >= sqrt(n/2), so n <= 2 * max_degree^2 suffices
    return tuple(n for n in range(1, 2 * max_degree * max_degree + 3) if _totient(n) <= max_degree)


def cyclotomic_factorization(p: IntPolynomial) -> Optional[dict]:
    """Multiplicities ``{n: e}`` if ``p`` is +-product of cyclotomics, else None."""
    rest = list(p.coeffs)
    if not rest or abs(rest[-1]) != 1:
        return None
    out = {}
    for n in cyclotomic_orders(max(p.degree, 1)):
        phi = cyclotomic(n)
        while len(rest) >= len(phi):
            q, r = _divmod_monic(rest, phi)
            if r:
                break
            rest = q
            out[n] = out.get(n, 0) + 1
    if len(rest) == 1 and abs(rest[0]) == 1:
        return out
    return None


# -- real root isolation ---------------------------------------------------

def sturm_sequence(p: Sequence[int]) -> List[List[Fraction]]:
    seq = [[Fraction(x) for x in p], [Fraction(x) for x in _pderiv(p)]]
    while len(_trim(seq[-1])) > 1:
        _, r = _pdivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return [_trim(s) for s in seq if _trim(s)]


def _sign_changes(seq, x) -> int:
    signs = [v for v in (_eval(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(seq, lo, hi) -> int:
    """Number of distinct real roots in ``(lo, hi]`` (``seq`` squarefree)."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def cauchy_bound(p: Sequence[int]) -> int:
    """Integer ``B`` with every complex root of ``p`` of modulus < ``B``."""
    p = _trim(p)
    lead = abs(p[-1])
    return 1 + max((-(-abs(a) // lead) for a in p[:-1]), default=0)


def largest_real_root(p: Sequence[int], lo, eps: Fraction):
    """Isolate the largest real root of ``p`` in ``(lo, B]``.

    Returns an interval ``(a, b)`` with ``a < root <= b`` (or ``a == b``
    when the root is hit exactly), ``b - a <= eps`` and ``a > lo``; None if
    there is no such root.  When possible the interval is a cell
    ``(k eps, (k + 1) eps]`` of the eps-grid, so decimal eps gives decimal
    endpoints.
    """
    sf = squarefree_part(p)
    if len(sf) <= 1:
        return None
    seq = sturm_sequence(sf)
    a, b = Fraction(lo), Fraction(cauchy_bound(sf))
    if count_roots(seq, a, b) == 0:
        return None
    while b - a > eps or a == lo:
        m = (a + b) / 2
        if _eval(sf, m) == 0 and count_roots(seq, m, b) == 0:
            return m, m
        if count_roots(seq, m, b) > 0:
            a = m
        else:
            b = m
    return _snap_to_grid(seq, a, b, Fraction(lo), eps)


def _snap_to_grid(seq, a, b, lo, eps):
    k = math.floor(a / eps)
    g0, g1 = k * eps, (k + 1) * eps
    if b > g1:
        # the cell boundary g1 splits (a, b]; the Sturm count picks the side
        if count_roots(seq, g1, b) > 0:
            g0, g1 = g1, g1 + eps
    if g0 <= lo:
        return a, b
    return g0, g1


def _graeffe(p):
    """Polynomial whose roots are the squares of the roots of ``p``."""
    even = p[0::2]
    odd = p[1::2]
    e2 = _pmul(even, even)
    o2 = _pmul(odd, odd)
    out = [0] * max(len(e2), len(o2) + 1)
    for i, c in enumerate(e2):
        out[i] += c
    for i, c in enumerate(o2):
        out[i + 1] -= c
    n = len(p) - 1
    return [c if n % 2 == 0 else -c for c in _trim(out)]


def modulus_upper_bound(p: Sequence[int], steps: int = 10) -> float:
    """Upper bound on the largest root modulus via Graeffe root squaring.

    Uses Fujiwara's bound on the ``2^steps``-th Graeffe iterate; the result
    over-estimates the true radius by a factor at most ``(2n)^(2^-steps)``.
    """
    q = _trim(p)
    for _ in range(steps):
        q = _graeffe(q)
    n = len(q) - 1
    if n <= 0:
        return 0.0
    lead = math.log(abs(q[-1]))
    terms = []
    for i in range(1, n + 1):
        a = q[n - i]
        if a:
            scale = 2 if i == n else 1
            terms.append((math.log(abs(a)) - lead - math.log(scale)) / i)
    if not terms:
        return 0.0
    return math.exp((math.log(2) + max(terms)) / 2 ** steps)


def spectral_radius(p: IntPolynomial, eps: Fraction = DEFAULT_EPS) -> Tuple[Fraction, Fraction]:
    """Certified interval ``(lo, hi)`` for the largest root modulus of ``p``.

    Meant for characteristic polynomials of isometries of a form of
    signature ``(1, n)``: there the largest-modulus root is real and
    ``>= 1``.  Radius exactly 1 is certified when ``p`` is a product of
    cyclotomic polynomials; otherwise the largest real root in absolute
    value is isolated by Sturm bisection, and a Graeffe modulus bound
    checks that no complex root is larger.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not p.coeffs:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return Fraction(0), Fraction(0)
    if cyclotomic_factorization(p) is not None:
        return Fraction(1), Fraction(1)
    # largest |real root| = largest positive root of p(x) p(-x); searching
    # (1, B] first keeps lo > 1 whenever the radius exceeds 1
    pm = [c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)]
    even = _pmul(list(p.coeffs), pm)
    interval = largest_real_root(even, Fraction(1), eps)
    if interval is None:
        if _eval(even, 1) == 0:
            interval = (Fraction(1), Fraction(1))
        else:
            interval = largest_real_root(even, Fraction(0), eps)
    if interval is None and even[0] == 0:
        interval = (Fraction(0), Fraction(0))
    if interval is None:
        raise SpectralError("no real root; largest-modulus root is not real")
    bound = modulus_upper_bound(list(p.coeffs))
    slack = (2 * p.degree) ** (2.0 ** -10) * (1 + 1e-9)
    if bound > float(interval[1]) * slack + 1e-12:
        raise SpectralError(
            f"a complex root has modulus up to {bound}, beyond real radius {float(interval[1])}")
    return interval


def entropy(L: PicardLattice, M: Isometry, eps: Fraction = DEFAULT_EPS) -> EntropyReport:
    if M.gram != L.gram:
        raise ValueError("isometry belongs to a different lattice")
    p = char_poly(M)
    lo, hi = spectral_radius(p, eps)
    if lo < 1:
        # det = +-1 forces the product of the root moduli to be 1
        raise SpectralError(f"radius interval {lo}..{hi} lies below 1")
    return EntropyReport(
        char_poly=p,
        spectral_radius_interval=(lo, hi),
        entropy_lower=math.log(lo),
        entropy_upper=math.log(hi),
        positive_entropy=lo > 1,
    )


def default_order_cap(n: int) -> int:
    """lcm of all n with ``phi(n) <= size``: any finite-order element divides it."""
    return reduce(math.lcm, cyclotomic_orders(n), 1)


def _prime_factors(n: int) -> List[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_finite_order(M: Isometry, cap: Optional[int] = None) -> FiniteOrderResult:
    """Decide whether ``M^k = I`` for some ``k``, and find the order.

    With the default cap the answer is conclusive.  A smaller user cap only
    tries ``k <= cap`` and marks a negative answer inconclusive.
    """
    default = default_order_cap(M.size)
    if cap is not None and cap < default:
        P = M
        for k in range(1, cap + 1):
            if P.is_identity():
                return FiniteOrderResult(True, k)
            P = P @ M
        return FiniteOrderResult(False, None, inconclusive=True)
    if cyclotomic_factorization(char_poly(M)) is None:
        return FiniteOrderResult(False, None)
    if not M.power(default).is_identity():
        return FiniteOrderResult(False, None)
    order = default
    for q in _prime_factors(default):
        while order % q == 0 and M.power(order // q).is_identity():
            order //= q
    return FiniteOrderResult(True, order)
