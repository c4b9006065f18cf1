"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line shown in the pytest terminal summary.
"""
import itertools
import math
import random
import time
from collections import Counter
from fractions import Fraction

from conftest import random_involution
from realforms import gcohom, permgroup, spectral, weyl, zcohom
from realforms.gcohom import PointedSet
from realforms.piclattice import (enumerate_exceptional, enumerate_roots,
                                  kperp_invariants, make_lattice)
from realforms.zcohom import AbelianH1

WORDS_PER_RANK = 1000
WORD_LENGTH = 30


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def count_roots_by_halves(r, bound):
    """Count classes with square -2 and K-degree 0 by meet-in-the-middle.

    Independent of the library: with ``x = d e0 - sum mi ei`` the conditions
    are ``sum mi = 3d`` and ``sum mi^2 = d^2 + 2``; each half of the
    multiplicities is enumerated in ``[-bound, bound]``.
    """
    h = r // 2
    halves = []
    for size in (h, r - h):
        c = Counter()
        for m in itertools.product(range(-bound, bound + 1), repeat=size):
            c[(sum(m), sum(v * v for v in m))] += 1
        halves.append(c)
    left, right = halves
    total = 0
    for d in range(-bound, bound + 1):
        for (s, q), n in left.items():
            total += n * right.get((3 * d - s, d * d + 2 - q), 0)
    return total


def test_criterion_1_weyl_orders(acceptance):
    expected = {3: 12, 4: 120, 5: 1920, 6: 51840}
    frozen = {7: 2903040, 8: 696729600}

    def run():
        ok = True
        for r, n in expected.items():
            L = make_lattice(r)
            ok &= weyl.weyl_order(L) == weyl.bfs_group_order(L) == n
        for r, n in frozen.items():
            L = make_lattice(r)
            chain = weyl.weyl_chain(L)
            order = chain.order()
            ok &= order == n and math.prod(chain.basic_orbit_sizes()) == order
            perms = weyl.root_permutations(L, enumerate_roots(L).classes)
            orbits = {tuple(sorted(permgroup.orbit(i, perms))) for i in range(len(perms[0]))}
            ok &= all(order % len(o) == 0 for o in orbits)
            # orbit-stabilizer on exceptional classes: |W_r| = |exc_r| |W_{r-1}|
            prev = frozen.get(r - 1, expected.get(r - 1))
            ok &= order == len(enumerate_exceptional(L)) * prev
        return ok

    ok, secs = timed(run)
    passed = ok and secs < 60
    acceptance(1, "Weyl orders", passed, f"{secs:.1f}s")
    assert ok and secs < 60


def test_criterion_2_root_and_exceptional_counts(acceptance):
    def run():
        ok = True
        for r in range(3, 9):
            roots = set(enumerate_roots(make_lattice(r)))
            ok &= {-x for x in roots} == roots
        roots8 = enumerate_roots(make_lattice(8))
        # |d| <= 4 from (9 - r) d^2 <= 2 r, and then |mi| <= sqrt(d^2 + 2) < 5
        ok &= len(roots8) == 240 == count_roots_by_halves(8, 4)
        ok &= len(enumerate_exceptional(make_lattice(6))) == 27
        ok &= len(enumerate_exceptional(make_lattice(1))) == 1
        L10 = make_lattice(10)
        ok &= enumerate_roots(L10, cap=1000).truncated
        ok &= enumerate_exceptional(L10, cap=500).truncated
        return ok

    ok, secs = timed(run)
    acceptance(2, "root and exceptional counts", ok and secs < 30, f"{secs:.1f}s")
    assert ok and secs < 30


def test_criterion_3_entropy_trichotomy(acceptance):
    def run():
        rng = random.Random(20240601)
        bad = 0
        for r in range(3, 9):
            L = make_lattice(r)
            for _ in range(WORDS_PER_RANK):
                M = weyl.word_to_isometry(L, weyl.random_word(L, WORD_LENGTH, rng))
                rep = spectral.entropy(L, M)
                bad += rep.spectral_radius_interval != (1, 1) or rep.positive_entropy
        L9 = make_lattice(9)
        rep9 = spectral.entropy(L9, weyl.word_to_isometry(L9, weyl.coxeter_word(L9)))
        L10 = make_lattice(10)
        eps = Fraction(1, 10**5)
        rep10 = spectral.entropy(L10, weyl.word_to_isometry(L10, weyl.coxeter_word(L10)), eps)
        lo, hi = rep10.spectral_radius_interval
        return (bad == 0
                and rep9.spectral_radius_interval == (1, 1) and not rep9.positive_entropy
                and Fraction(117628, 10**5) <= lo <= hi <= Fraction(117629, 10**5)
                and hi - lo <= eps and rep10.positive_entropy)

    ok, secs = timed(run)
    acceptance(3, "entropy trichotomy", ok and secs < 120, f"{secs:.1f}s")
    assert ok and secs < 120


def test_criterion_4_exact_sequences(acceptance, corpus):
    failures = [name for name, rec, B in corpus
                if not gcohom.exact_sequence(B, rec["normal"]).all_exact]
    sized = len(corpus) >= 25 and max(B.n for _, _, B in corpus) <= 48
    ok = sized and not failures
    acceptance(4, "six-term exactness on the corpus", ok,
               f"{len(corpus)} configurations, {len(failures)} failures")
    assert ok, failures


def test_criterion_5_semidirect_correspondence(acceptance, corpus):
    mismatches, pairs = [], 0
    for name, _, A in corpus:
        H = gcohom.h1(A)
        S = gcohom.semidirect(A)
        Z = gcohom.cocycles(A)
        for a, b in itertools.product(Z, repeat=2):
            pairs += 1
            same = H.class_of(a.a_sigma) == H.class_of(b.a_sigma)
            if gcohom.splitting_conjugacy_equiv(A, a, b, S) != same:
                mismatches.append((name, a.a_sigma, b.a_sigma))
    ok = not mismatches
    acceptance(5, "splitting conjugacy equals H1 equivalence", ok,
               f"{pairs} cocycle pairs, {len(mismatches)} mismatches")
    assert ok, mismatches[:5]


def test_criterion_6_abelian_oracle(acceptance):
    def run():
        rng = random.Random(6)
        bad = []
        for i in range(200):
            k = rng.randint(1, 4)
            mod = zcohom.InvolutionModule.from_matrix(random_involution(k, rng, bound=3))
            H = zcohom.h1_abelian(mod)
            O = zcohom.h1_abelian_bruteforce(mod, box=4)
            if H.order != O.order or H.order & (H.order - 1):
                bad.append(mod.M)
        return bad

    bad, secs = timed(run)
    ok = not bad and secs < 60
    acceptance(6, "abelian H1 against brute force", ok, f"{secs:.1f}s, {len(bad)} mismatches")
    assert ok, bad[:3]


def test_criterion_7_lattice_facts(acceptance):
    inv = kperp_invariants(make_lattice(10))
    autos = weyl.diagram_automorphisms(weyl.dynkin_diagram(make_lattice(9)))
    ok = (inv.is_even and abs(inv.gram_det) == 1 and inv.signature == (1, 9)
          and autos == [tuple(range(9))])
    acceptance(7, "K-perp at r=10 and the r=9 diagram", ok)
    assert ok


def test_criterion_8_pushout_arithmetic(acceptance):
    rng = random.Random(8)
    ok = True
    for _ in range(300):
        sizes = [rng.randint(1, 7) for _ in range(rng.randint(1, 7))]
        sets = [PointedSet(tuple(range(s)), rng.randrange(s)) for s in sizes]
        ok &= len(gcohom.amalgamated_sum(sets)) == sum(s - 1 for s in sizes) + 1

    calls = []

    def recording(mod):
        calls.append(mod.M[0][0])
        return zcohom.h1_abelian(mod)

    def doubled(mod):
        # a stand-in with the factor sizes of the real one plus one
        H = zcohom.h1_abelian(mod)
        return AbelianH1(H.invariant_factors + (2,), 2 * H.order)

    for _ in range(50):
        signs = [rng.choice([1, -1]) for _ in range(rng.randint(2, 8))]
        calls.clear()
        n = gcohom.h1_free_product_Zk(signs, h1_factor=recording)
        ok &= calls == signs
        ok &= n == sum(1 for s in signs if s == -1) + 1
        # the count follows whatever the injected factor reports
        sizes = [2 * (2 if s == -1 else 1) for s in signs]
        ok &= gcohom.h1_free_product_Zk(signs, h1_factor=doubled) == sum(x - 1 for x in sizes) + 1
    acceptance(8, "pushout arithmetic with injected factors", ok)
    assert ok
