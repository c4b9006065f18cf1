import itertools
import random

import pytest

from conftest import conj_action, cyclic, cyclic_table, klein, s3
from realforms import gcohom
from realforms.gcohom import Cocycle, PointedSet
from realforms.zcohom import AbelianH1


def isomorphic(G, H):
    """Brute-force isomorphism test for small groups."""
    if G.n != H.n:
        return False
    n = G.n
    others = [x for x in range(n) if x != G.identity]
    targets = [x for x in range(n) if x != H.identity]
    for perm in itertools.permutations(targets):
        f = {G.identity: H.identity, **dict(zip(others, perm))}
        if all(f[G.mul[x][y]] == H.mul[f[x]][f[y]] for x in range(n) for y in range(n)):
            return True
    return False


def involution_classes(G):
    """Conjugacy classes of elements with ``x^2 = e``."""
    seen, count = set(), 0
    for x in range(G.n):
        if G.mul[x][x] != G.identity or x in seen:
            continue
        count += 1
        seen |= {G.m(G.inv[g], x, g) for g in range(G.n)}
    return count


# -- loading and validation --------------------------------------------------

def test_load_valid_examples():
    gcohom.load_ggroup({"n": 2, "identity": 0, "mul": [[0, 1], [1, 0]], "action": [0, 1]})
    gcohom.load_ggroup({"n": 3, "mul": cyclic_table(3), "action": [0, 2, 1]})


def test_load_rejects_three_cycle_action():
    with pytest.raises(gcohom.NotInvolutionError):
        gcohom.load_ggroup({"n": 3, "mul": cyclic_table(3), "action": [1, 2, 0]})


def test_load_rejects_non_automorphism():
    # swapping 1 and 2 in Z/4 fixes 0 and squares to the identity, but 1+1=2 maps to 1
    with pytest.raises(gcohom.NotAutomorphismError) as err:
        gcohom.load_ggroup({"n": 4, "mul": cyclic_table(4), "action": [0, 2, 1, 3]})
    assert err.value.witness is not None


def test_load_rejects_non_associative():
    # a Latin square with identity 0 that is not a group table
    mul = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(gcohom.GroupAxiomError) as err:
        gcohom.load_ggroup({"n": 5, "mul": mul, "action": list(range(5))})
    a, b, c = err.value.witness
    assert mul[mul[a][b]][c] != mul[a][mul[b][c]]


def test_load_rejects_malformed():
    with pytest.raises(gcohom.GroupValidationError):
        gcohom.load_ggroup({"n": 2, "mul": [[0, 1], [1, 0]]})
    with pytest.raises(gcohom.GroupAxiomError):
        gcohom.load_ggroup({"n": 3, "mul": [[0, 1], [1, 0]], "action": [0, 1, 2]})
    with pytest.raises(gcohom.GroupAxiomError):
        gcohom.load_ggroup({"n": 2, "mul": [[0, 1], [1, 1]], "action": [0, 1]})
    with pytest.raises(gcohom.NotAutomorphismError):
        gcohom.load_ggroup({"n": 2, "mul": [[0, 1], [1, 0]], "action": [0, 0]})


def test_error_classes_are_distinct():
    classes = {gcohom.GroupAxiomError, gcohom.NotAutomorphismError,
               gcohom.NotInvolutionError, gcohom.SubgroupError}
    for c in classes:
        assert issubclass(c, gcohom.GroupValidationError)
        assert not any(issubclass(c, d) for d in classes - {c})


# -- cocycles and H^1 ---------------------------------------------------------

def test_cocycle_examples():
    assert [c.a_sigma for c in gcohom.cocycles(cyclic(2))] == [0, 1]
    assert [c.a_sigma for c in gcohom.cocycles(cyclic(3))] == [0]
    S3, _ = s3()
    assert len(gcohom.cocycles(S3)) == 4


def test_h1_examples():
    assert len(gcohom.h1(cyclic(2))) == 2
    H = gcohom.h1(cyclic(3, u=2))
    assert len(H) == 1 and H.classes == ((0, 1, 2),)
    S3, elems = s3()
    H = gcohom.h1(S3)
    assert len(H) == 2
    assert H.base_element == 0
    transpositions = {i for i, p in enumerate(elems) if sum(p[j] != j for j in range(3)) == 2}
    assert set(H.classes[1]) == transpositions
    with pytest.raises(gcohom.CocycleError):
        H.class_of(next(i for i in range(6) if i and i not in transpositions))


def test_h1_trivial_action_counts_involution_classes(corpus):
    for name, _, B in corpus:
        G = gcohom.with_action(B, range(B.n))
        assert len(gcohom.h1(G)) == involution_classes(G), name


def test_h1_cyclic_inversion():
    # H^1(Z/2, Z/n) with inversion is Z/n / 2Z/n
    for n in range(2, 13):
        assert len(gcohom.h1(cyclic(n, u=n - 1))) == (2 if n % 2 == 0 else 1)


def test_h1_classes_are_canonical(corpus):
    for name, _, B in corpus:
        H = gcohom.h1(B)
        assert H.elements == tuple(min(c) for c in H.classes)
        assert list(H.elements) == sorted(H.elements)
        assert H.base_element == B.identity


# -- twisting -----------------------------------------------------------------

def test_twist_examples():
    S3, _ = s3()
    assert gcohom.twist(S3, Cocycle(0)).theta == S3.theta
    for t in (1, 2, 3, 4, 5):
        if S3.mul[t][t] == 0:
            T = gcohom.twist(S3, Cocycle(t))
            assert list(T.theta) == conj_action(S3, t)
    with pytest.raises(gcohom.CocycleError):
        gcohom.twist(cyclic(3), Cocycle(1))


def test_twist_properties(corpus):
    for name, _, B in corpus:
        if B.n > 12:
            continue
        assert gcohom.twist(B, Cocycle(B.identity)) == B
        for b in gcohom.cocycles(B):
            T = gcohom.twist(B, b)
            assert (T.n, T.mul, T.inv) == (B.n, B.mul, B.inv)
            assert gcohom.twist_bijection_check(B, b), (name, b)
            # the inverse cocycle of A_b is b^-1 and twisting back recovers A
            back = Cocycle(B.inv[b.a_sigma])
            assert gcohom.is_cocycle(T, back.a_sigma)
            assert gcohom.twist(T, back) == B


def test_twist_bijection_examples():
    S3, _ = s3()
    for b in gcohom.cocycles(S3):
        assert gcohom.twist_bijection_check(S3, b)
    Z3 = cyclic(3, u=2)
    assert len(gcohom.cocycles(Z3)) == 3
    assert all(gcohom.twist_bijection_check(Z3, b) for b in gcohom.cocycles(Z3))


# -- semidirect products ------------------------------------------------------

def test_semidirect_examples():
    S = gcohom.semidirect(cyclic(3, u=2))
    S3, _ = s3()
    assert S.n == 6 and not S.is_abelian()
    assert isomorphic(S, S3)
    V = gcohom.semidirect(cyclic(2))
    assert isomorphic(V, klein())
    Z6 = gcohom.semidirect(cyclic(3))
    assert isomorphic(Z6, gcohom.make_group(cyclic_table(6)))


def test_semidirect_law(corpus):
    for name, _, A in corpus:
        if A.n > 24:
            continue
        S = gcohom.semidirect(A)
        n = A.n
        for (a, g), (b, h) in itertools.product(itertools.product(range(n), (0, 1)), repeat=2):
            act = A.theta[b] if g else b
            assert S.mul[a + n * g][b + n * h] == A.mul[a][act] + n * ((g + h) % 2)


def test_splitting_examples():
    S3, elems = s3()
    e, t = Cocycle(0), [Cocycle(i) for i in range(1, 6) if S3.mul[i][i] == 0]
    assert gcohom.splitting_conjugacy_equiv(S3, e, e)
    assert not gcohom.splitting_conjugacy_equiv(S3, e, t[0])
    assert gcohom.splitting_conjugacy_equiv(S3, t[0], t[1])
    with pytest.raises(gcohom.CocycleError):
        gcohom.splitting_conjugacy_equiv(S3, e, Cocycle(next(i for i in range(1, 6) if S3.mul[i][i])))


def test_splitting_matches_h1_small(corpus):
    for name, _, A in corpus:
        if A.n > 16:
            continue
        H = gcohom.h1(A)
        S = gcohom.semidirect(A)
        Z = gcohom.cocycles(A)
        for a, b in itertools.product(Z, repeat=2):
            same = H.class_of(a.a_sigma) == H.class_of(b.a_sigma)
            assert gcohom.splitting_conjugacy_equiv(A, a, b, S) == same, (name, a, b)


# -- exact sequence -----------------------------------------------------------

def sizes(rep):
    return [len(rep.terms[t]) for t in gcohom.TERMS]


def test_exact_sequence_s3_a3():
    S3, elems = s3()
    A3 = [i for i, p in enumerate(elems) if sum(p[j] != j for j in range(3)) != 2]
    rep = gcohom.exact_sequence(S3, A3)
    assert rep.all_exact
    # A^G = Z/3, B^G = S3, C^G = Z/2, H1(A) = point, H1(B) and H1(C) of size 2
    assert sizes(rep) == [3, 6, 2, 1, 2, 2]
    assert rep.maps["H1(B)->H1(C)"] == (0, 1)
    fib = gcohom.fiber_decomposition(S3, A3)
    assert fib.ok
    assert [len(e.fiber) for e in fib.entries] == [1, 1]
    assert all(e.twisted_h1_size >= 1 for e in fib.entries)


def test_exact_sequence_z4_trivial_action():
    rep = gcohom.exact_sequence(cyclic(4), [0, 2])
    assert rep.all_exact
    # trivial action: every element of C lifts to a fixed element, so delta is trivial
    assert set(rep.maps["C^G->H1(A)"]) == {rep.terms["H1(A)"].base}


def test_exact_sequence_z4_inversion():
    rep = gcohom.exact_sequence(cyclic(4, u=3), [0, 2])
    assert rep.all_exact
    # the generator of C^G only lifts to 1 and 3, neither fixed; delta hits [2]
    assert rep.maps["C^G->H1(A)"] == (0, 1)
    assert rep.terms["H1(A)"].elements == (0, 1)


def test_exact_sequence_whole_group():
    S3, _ = s3()
    rep = gcohom.exact_sequence(S3, range(6))
    assert rep.all_exact
    assert len(rep.terms["H1(C)"]) == 1 and rep.C.n == 1
    fib = gcohom.fiber_decomposition(S3, range(6))
    assert fib.ok and len({e.fiber for e in fib.entries}) == 1
    assert fib.entries[0].fiber == tuple(range(len(gcohom.h1(S3))))


def test_fibers_klein_first_factor():
    V = klein()
    rep = gcohom.exact_sequence(V, [0, 1])
    assert rep.all_exact
    fib = gcohom.fiber_decomposition(V, [0, 1])
    assert fib.h1_size == 4 and len(rep.terms["H1(C)"]) == 2
    assert sorted({e.fiber for e in fib.entries}) == [(0, 1), (2, 3)]
    assert fib.ok


def test_exact_sequence_rejects_bad_subgroups():
    S3, elems = s3()
    t = next(i for i, p in enumerate(elems) if sum(p[j] != j for j in range(3)) == 2)
    with pytest.raises(gcohom.SubgroupError):
        gcohom.exact_sequence(S3, [0, t])          # not normal
    with pytest.raises(gcohom.SubgroupError):
        gcohom.exact_sequence(S3, [1, 2])          # no identity
    V = klein([0, 2, 1, 3])
    with pytest.raises(gcohom.SubgroupError):
        gcohom.exact_sequence(V, [0, 1])           # not stable under the swap


def test_exact_sequence_order_cap():
    n = gcohom.MAX_SEQUENCE_ORDER + 2
    big = cyclic(n)
    with pytest.raises(gcohom.GroupValidationError):
        gcohom.exact_sequence(big, [0])


def test_corpus_exact_and_fibers(corpus):
    assert len(corpus) >= 25
    for name, rec, B in corpus:
        rep = gcohom.exact_sequence(B, rec["normal"])
        assert rep.all_exact, (name, rep.exact)
        assert gcohom.fiber_decomposition(B, rec["normal"]).ok, name


def test_quotient_is_canonical():
    S3, elems = s3()
    C, proj = gcohom.quotient(S3, [0, 3, 4])
    assert proj[0] == 0 and C.n == 2
    assert sorted(set(proj)) == [0, 1]


# -- pushouts -----------------------------------------------------------------

def points(k, base=0):
    return PointedSet(tuple(range(k)), base)


def test_amalgamated_sum_examples():
    assert len(gcohom.amalgamated_sum([points(2), points(2)])) == 3
    X = points(4, 2)
    assert gcohom.amalgamated_sum([X]).elements == tuple((x,) for x in (2, 0, 1, 3))
    assert len(gcohom.amalgamated_sum([points(1)] * 5)) == 1
    with pytest.raises(ValueError):
        gcohom.amalgamated_sum([])


@pytest.mark.parametrize("seed", range(25))
def test_amalgamated_sum_size(seed):
    rng = random.Random(seed)
    sets = [points(rng.randint(1, 6), 0) for _ in range(rng.randint(1, 6))]
    for i, s in enumerate(sets):
        sets[i] = PointedSet(s.elements, rng.randrange(len(s)))
    P = gcohom.amalgamated_sum(sets)
    assert len(P) == sum(len(s) - 1 for s in sets) + 1
    assert len(set(P.elements)) == len(P)
    assert P.base_element == tuple(s.base_element for s in sets)


def test_free_product_examples():
    assert gcohom.h1_free_product_Zk([-1, -1]) == 3
    assert gcohom.h1_free_product_Zk([1, 1]) == 1
    assert gcohom.h1_free_product_Zk([-1, 1, -1]) == 3
    assert gcohom.h1_free_product_Zk([-1, 1]) == 2
    with pytest.raises(ValueError):
        gcohom.h1_free_product_Zk([-1])
    with pytest.raises(ValueError):
        gcohom.h1_free_product_Zk([2, 1])


def test_free_product_uses_injected_factor():
    calls = []

    def fake(mod):
        calls.append(mod.M)
        return AbelianH1((3,), 3)

    assert gcohom.h1_free_product_Zk([1, -1, 1], h1_factor=fake) == 7
    assert calls == [((1,),), ((-1,),), ((1,),)]
