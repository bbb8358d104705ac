import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aaco.code import ghw_via_matroid
from aaco.constructions import (
    GeneratorMatrix,
    block_generator,
    fold,
    folded_rs,
    interleave,
    linear_code,
    linear_code_matroids,
    multilinear_basis,
    multilinear_dual,
    punctured_reed_solomon,
    reed_solomon,
    running_example_cprime,
    simplex_generator,
    unfold,
)
from aaco.errors import DivisibilityViolated, FieldError, NotAGenerator, NotMultilinear, RankDeficient
from aaco.field import FiniteField, is_irreducible, is_prime
from aaco.matroid import free, uniform

from corpus import corpus, linear_corpus, random_generator

F2, F3, F5 = FiniteField(2), FiniteField(3), FiniteField(5)


# -- finite fields -------------------------------------------------------------


@pytest.mark.parametrize(
    "q, modulus",
    [(2, None), (3, None), (5, None), (7, None), (4, (1, 1, 1)), (8, (1, 1, 0, 1)), (9, (1, 0, 1))],
)
def test_field_axioms(q, modulus):
    F = FiniteField.of(q, modulus)
    assert F.q == q
    F.check_axioms()
    g = F.primitive_element()
    assert F.order(g) == q - 1


def test_field_errors():
    with pytest.raises(FieldError):
        FiniteField.of(6)
    with pytest.raises(FieldError):
        FiniteField.of(4)
    with pytest.raises(FieldError):
        FiniteField.of(4, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over GF(2)


def test_irreducibility_by_brute_force_roots():
    # degree 2 and 3 polynomials are irreducible exactly when they have no root
    for p in (2, 3, 5):
        for deg in (2, 3):
            for low in product(range(p), repeat=deg):
                f = tuple(low) + (1,)
                has_root = any(sum(c * x**i for i, c in enumerate(f)) % p == 0 for x in range(p))
                assert is_irreducible(f, p) == (not has_root)


def test_rref_nullspace_are_orthogonal():
    F = FiniteField.of(9, (1, 0, 1))
    rows = [[1, 2, 3, 4, 5], [0, 1, 7, 8, 1]]
    H = F.nullspace(rows, 5)
    assert len(H) == 3
    for h in H:
        for r in rows:
            acc = 0
            for a, b in zip(h, r):
                acc = F.add(acc, F.mul(a, b))
            assert acc == 0


# -- running example and linear codes ------------------------------------------


def test_cprime_builder():
    C = running_example_cprime()
    assert len(C) == 16 and C.q == 4 and C.n == 3
    assert (1, 2, 3) in C and (3, 3, 2) in C
    assert C.matroid == uniform(2, 3)


def test_linear_code_examples():
    assert linear_code(GeneratorMatrix(F2, ((1, 1, 1),))).words == ((0, 0, 0), (1, 1, 1))
    simplex = linear_code(simplex_generator(3))
    assert len(simplex) == 8 and simplex.n == 7
    with pytest.raises(RankDeficient):
        GeneratorMatrix(F2, ((1, 1, 0), (1, 1, 0)))


def test_linear_code_matroids_examples():
    M_C, M_H = linear_code_matroids(GeneratorMatrix(F2, ((1, 1, 1),)))
    assert M_C == uniform(1, 3) and M_H == uniform(2, 3)
    ident = GeneratorMatrix(F3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert linear_code_matroids(ident)[0] == free(3)
    M_C, M_H = linear_code_matroids(simplex_generator(3))
    assert M_C == M_H.dual()


def test_linear_code_matroids_corpus():
    for G, C in linear_corpus():
        M_C, M_H = linear_code_matroids(G)
        assert M_C == C.matroid == M_H.dual()
        assert (0,) * G.n in C


def test_every_constructor_output_is_almost_affine():
    for C in corpus():
        assert C.is_almost_affine()
        C.matroid.validate()


# -- folding and interleaving --------------------------------------------------


def test_fold_unfold_roundtrip():
    words = [(0, 1, 1, 0), (1, 1, 0, 1)]
    C = fold(words, 2, 2)
    assert C.words == ((2, 1), (3, 2))
    assert sorted(unfold(C, 2, 2)) == sorted(words)
    with pytest.raises(DivisibilityViolated):
        fold([(0, 1, 1)], 2, 2)


def test_block_generator_shape():
    G = GeneratorMatrix(F3, ((1, 2),))
    B = block_generator(G, 2)
    assert B.rows == ((1, 0, 2, 0), (0, 1, 0, 2))


def test_interleave_repetition():
    C = interleave(GeneratorMatrix(F2, ((1, 1, 1),)), 2)
    assert (C.q, C.n, len(C), C.dimension) == (4, 3, 4, 1)
    assert C.matroid == uniform(1, 3)


def test_interleave_depth_one_is_linear_code():
    for G, C in linear_corpus()[:10]:
        assert interleave(G, 1) == C


def test_interleave_preserves_matroid():
    for G, C in linear_corpus():
        if G.field.q ** (G.k * 2) > 5000:
            continue
        I = interleave(G, 2)
        assert I.matroid == C.matroid
        multilinear_basis(I, G.field, 2)


def test_multilinear_basis_rejects_nonmultilinear():
    with pytest.raises(NotMultilinear):
        multilinear_basis(running_example_cprime(), F2, 2)
    # F_2-linear in F_2^4 but a single coordinate carries one bit
    C = fold([(0, 0, 0, 0), (1, 0, 1, 0)], 2, 2)
    with pytest.raises(NotMultilinear):
        multilinear_basis(C, F2, 2)


def test_multilinear_dual_repetition():
    C = interleave(GeneratorMatrix(F2, ((1, 1, 1),)), 2)
    D = multilinear_dual(C, F2, 2)
    assert D.dimension == 2 and D.matroid == uniform(2, 3)
    assert multilinear_dual(D, F2, 2) == C


def test_multilinear_dual_on_interleaved_corpus():
    count = 0
    for G, _ in linear_corpus():
        if G.field.q ** (G.n * 2) > 5000:
            continue
        C = interleave(G, 2)
        D = multilinear_dual(C, G.field, 2)
        assert D.matroid == C.matroid.dual()
        assert multilinear_dual(D, G.field, 2) == C
        d, dd = ghw_via_matroid(C), ghw_via_matroid(D)
        n = C.n
        assert sorted(set(d) | {n + 1 - x for x in dd}) == list(range(1, n + 1))
        assert not set(d) & {n + 1 - x for x in dd}
        count += 1
    assert count >= 10


# -- Reed-Solomon and folded Reed-Solomon --------------------------------------


def test_reed_solomon_examples():
    assert reed_solomon(5, 2, 2).rows == ((1, 1, 1, 1), (2, 4, 3, 1))
    assert reed_solomon(5, 2, 1).rows == ((1, 1, 1, 1),)
    with pytest.raises(NotAGenerator):
        reed_solomon(5, 4, 2)


def test_folded_rs_examples():
    C = folded_rs(5, 2, 2, 2)
    assert (C.n, C.q, C.dimension) == (2, 25, 1)
    assert C.matroid == uniform(1, 2)
    assert ghw_via_matroid(C) == [2]
    C = folded_rs(7, 3, 2, 2)
    assert (C.n, C.q) == (3, 49)
    assert C.matroid == uniform(1, 3)
    assert ghw_via_matroid(C) == [3]
    with pytest.raises(DivisibilityViolated):
        folded_rs(7, 3, 4, 4)
    with pytest.raises(DivisibilityViolated):
        folded_rs(7, 3, 2, 3)


def test_folded_rs_r1_is_rs():
    assert folded_rs(5, 2, 1, 2) == linear_code(reed_solomon(5, 2, 2))


def valid_frs_params(limit_q=17):
    for q in range(3, limit_q + 1):
        if not is_prime(q):
            continue
        F = FiniteField(q)
        for gamma in range(1, q):
            if F.order(gamma) != q - 1:
                continue
            for r in range(1, q):
                if (q - 1) % r:
                    continue
                for k in range(r, q, r):
                    yield q, gamma, r, k


def frs_weight_formulas(q, r, k):
    n, kk = (q - 1) // r, k // r
    return [(q - 1 - k) // r + i for i in range(1, kk + 1)], [kk + i for i in range(1, n - kk + 1)]


def test_folded_rs_uniform_by_enumeration():
    seen = 0
    for q, gamma, r, k in valid_frs_params():
        n = (q - 1) // r
        if q**k > 2500 or n > 8:
            continue
        C = folded_rs(q, gamma, r, k)
        assert C.matroid == uniform(k // r, n)
        d, dstar = frs_weight_formulas(q, r, k)
        assert ghw_via_matroid(C, check_forms=False) == d
        assert C.matroid.hamming_weights() == dstar
        seen += 1
    assert seen >= 20


def test_folded_rs_uniform_by_block_ranks():
    # rank of a set of folded positions is the rank of its r-column blocks over F_q, divided by r
    rng = random.Random(3)
    for q, gamma, r, k in valid_frs_params():
        F = FiniteField(q)
        G = reed_solomon(F, gamma, k)
        n = (q - 1) // r
        masks = range(1 << n) if n <= 6 else [rng.getrandbits(n) for _ in range(60)]
        for X in masks:
            cols = [x * r + j for x in range(n) if X >> x & 1 for j in range(r)]
            rank = F.column_rank(G.rows, cols)
            assert rank % r == 0
            assert rank // r == min(X.bit_count(), k // r)


def test_folded_rs_matches_punctured_rs():
    F25 = FiniteField.of(25, (2, 0, 1))
    F49 = FiniteField.of(49, (1, 0, 1))
    for F, frs in ((F25, folded_rs(5, 2, 2, 2)), (F49, folded_rs(7, 3, 2, 2))):
        P = punctured_reed_solomon(F, F.primitive_element(), frs.dimension, frs.n)
        assert (P.q, P.n, P.dimension) == (frs.q, frs.n, frs.dimension)
        assert P.matroid == frs.matroid
        assert ghw_via_matroid(P) == ghw_via_matroid(frs)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_random_generator_duality(seed):
    rng = random.Random(seed)
    q = rng.choice([2, 3, 5])
    n = rng.randint(2, 6 if q < 5 else 4)
    k = rng.randint(1, min(n, 3))
    G = random_generator(rng, q, k, n, nondegenerate=False)
    M_C, M_H = linear_code_matroids(G)
    assert M_C == M_H.dual()
