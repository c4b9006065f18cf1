import itertools

import pytest

from realforms import gcohom, intlinalg
from realforms.fixtures import iter_records

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per criterion for the terminal summary."""
    def record(number, title, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        request.config.stash[_ACCEPTANCE].append(line + (f"  ({detail})" if detail else ""))
        print(line)
    return record


# -- small groups built from permutations -----------------------------------

def perm_group_table(elems):
    """Multiplication table (apply left factor first) with identity at 0."""
    idx = {p: i for i, p in enumerate(elems)}
    return [[idx[tuple(q[i] for i in p)] for q in elems] for p in elems]


def symmetric(n):
    e = tuple(range(n))
    rest = sorted(p for p in itertools.permutations(range(n)) if p != e)
    return [e] + rest


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def cyclic(n, u=1):
    """Z/n with action x -> u x."""
    return gcohom.make_ggroup(cyclic_table(n), [(u * x) % n for x in range(n)])


def klein(action=None):
    # (a, b) in (Z/2)^2 encoded as a + 2b
    mul = [[x ^ y for y in range(4)] for x in range(4)]
    return gcohom.make_ggroup(mul, action or list(range(4)))


def s3(action=None):
    elems = symmetric(3)
    mul = perm_group_table(elems)
    return gcohom.make_ggroup(mul, action or list(range(6))), elems


def conj_action(G, g):
    return [G.m(G.inv[g], x, g) for x in range(G.n)]


@pytest.fixture(scope="session")
def corpus():
    return [(name, rec, gcohom.load_ggroup(rec)) for name, rec in iter_records()]


# -- random unimodular matrices and involutions -----------------------------

def random_unimodular(k, rng, bound=3, steps=None):
    """Product of elementary matrices with entries bounded by ``bound``.

    Returns ``(P, P^-1)``.
    """
    P, Pi = intlinalg.identity(k), intlinalg.identity(k)
    if k < 2:
        return P, Pi
    for _ in range(steps if steps is not None else rng.randint(1, 3 * k)):
        i, j = rng.sample(range(k), 2)
        c = rng.choice([-1, 1])
        E = intlinalg.identity(k)
        E[i][j] = c
        Ei = intlinalg.identity(k)
        Ei[i][j] = -c
        P2 = intlinalg.matmul(E, P)
        if max(abs(x) for row in P2 for x in row) > bound:
            continue
        P, Pi = P2, intlinalg.matmul(Pi, Ei)
    return P, Pi


def random_involution(k, rng, bound=3):
    P, Pi = random_unimodular(k, rng, bound)
    D = [[rng.choice([1, -1]) if i == j else 0 for j in range(k)] for i in range(k)]
    return intlinalg.matmul(intlinalg.matmul(P, D), Pi)
