"""Core algebra: canonicalization, product, projectors, adjunction, contraction."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dkpfields import algebra as al
from dkpfields.algebra import (
    AlgebraElement,
    BasisElement,
    DimensionMismatchError,
    GradeError,
    IndexRangeError,
    Metric,
)
from dkpfields.suites import rand_element, rand_metric, rand_vector


def E(n, upper, lower, c=1):
    return al.single(n, tuple(upper), tuple(lower), c)


def basis_vec(i, n):
    return tuple(Fraction(int(k == i)) for k in range(1, n + 1))


# -- canonicalize / gen_delta ------------------------------------------------


def test_canonicalize_transposition():
    assert al.canonicalize((2, 1), 2) == (-1, (1, 2))


def test_canonicalize_repeat_kills():
    assert al.canonicalize((1, 1), 2) == (0, ())


def test_canonicalize_even_permutation():
    assert al.canonicalize((3, 1, 2), 3) == (1, (1, 2, 3))


def test_canonicalize_empty_and_range():
    assert al.canonicalize((), 1) == (1, ())
    with pytest.raises(IndexRangeError):
        al.canonicalize((0,), 3)
    with pytest.raises(IndexRangeError):
        al.canonicalize((4,), 3)


@given(st.lists(st.integers(1, 5), max_size=5))
def test_canonicalize_sign_is_sort_parity(seq):
    sign, ix = al.canonicalize(seq, 5)
    if len(set(seq)) != len(seq):
        assert sign == 0
    else:
        assert ix == tuple(sorted(seq))
        # parity by brute inversion count
        inv = sum(
            1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
        )
        assert sign == (-1) ** inv


def test_gen_delta_anchors():
    assert al.gen_delta((1, 2), (1, 2)) == 1
    assert al.gen_delta((2, 1), (1, 2)) == -1
    assert al.gen_delta((1, 3), (1, 2)) == 0
    assert al.gen_delta((1,), (1, 2)) == 0
    assert al.gen_delta((1, 1), (1, 1)) == 0
    assert al.gen_delta((), ()) == 1


# -- product -----------------------------------------------------------------


def test_matrix_unit_product():
    n = 3
    assert E(n, [1], [2]) * E(n, [2], [3]) == E(n, [1], [3])
    assert (E(n, [1], [2]) * E(n, [3], [3])).is_zero


def test_vacuum_idempotent():
    for n in (1, 2, 3, 4):
        P = al.projector_p(n)
        assert P * P == P


def test_pairing_collapse():
    n = 2
    assert E(n, [], [1]) * E(n, [1], []) == E(n, [], [])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        E(2, [], []) * E(3, [], [])


def test_unit_is_identity():
    rng = random.Random(5)
    for n in (1, 2, 3):
        u = al.unit(n)
        for _ in range(20):
            x = rand_element(n, rng)
            assert u * x == x
            assert x * u == x


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.data())
def test_associativity(n, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    x, y, z = (rand_element(n, rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)


def test_basis_count():
    for n in (1, 2, 3, 4):
        assert len(al.basis_elements(n)) == 2 ** (2 * n)


# -- embeddings ---------------------------------------------------------------


def test_embed_vector_n1():
    assert al.embed_vector((1,), 1) == E(1, [], [1])


def test_embed_covector_n1():
    assert al.embed_covector((1,), 1) == E(1, [1], [])


def test_embed_vector_n2_golden():
    # frozen against the fermionic oracle: both coefficients are +1
    want = E(2, [], [1]) + E(2, [2], [1, 2])
    assert al.embed_vector((1, 0), 2) == want
    want = E(2, [], [2]) - E(2, [1], [1, 2])
    assert al.embed_vector((0, 1), 2) == want


def test_embed_covector_n2_golden():
    want = E(2, [1], []) + E(2, [1, 2], [2])
    assert al.embed_covector((1, 0), 2) == want


def test_clifford_relations_all_basis_pairs():
    for n in (1, 2, 3, 4):
        u = al.unit(n)
        vs = [al.embed_vector(basis_vec(i, n), n) for i in range(1, n + 1)]
        cs = [al.embed_covector(basis_vec(i, n), n) for i in range(1, n + 1)]
        for i in range(n):
            for j in range(n):
                assert (vs[i] * vs[j] + vs[j] * vs[i]).is_zero
                assert (cs[i] * cs[j] + cs[j] * cs[i]).is_zero
                want = u if i == j else al.zero(n)
                assert vs[i] * cs[j] + cs[j] * vs[i] == want


def test_zero_divisor_relations():
    rng = random.Random(9)
    for n in (1, 2, 3, 4):
        P = al.projector_p(n)
        for _ in range(20):
            assert (al.embed_vector(rand_vector(n, rng), n) * P).is_zero
            assert (P * al.embed_covector(rand_vector(n, rng), n)).is_zero


def test_embeddings_are_linear():
    rng = random.Random(21)
    n = 3
    v = rand_vector(n, rng)
    w = rand_vector(n, rng)
    s = Fraction(3, 2)
    vw = tuple(a + s * b for a, b in zip(v, w))
    assert al.embed_vector(vw, n) == al.embed_vector(v, n) + s * al.embed_vector(w, n)
    assert al.embed_covector(vw, n) == al.embed_covector(v, n) + s * al.embed_covector(w, n)


# -- projectors ----------------------------------------------------------------


def test_grade_projectors():
    assert al.projector_pi(1, 2) == E(2, [1], [1]) + E(2, [2], [2])
    with pytest.raises(IndexRangeError):
        al.projector_pi(3, 2)
    with pytest.raises(IndexRangeError):
        al.projector_pi(-1, 2)


def test_projector_resolution_of_unit():
    for n in (1, 2, 3, 4):
        total = al.zero(n)
        for p in range(n + 1):
            total = total + al.projector_pi(p, n)
        assert total == al.unit(n)


def test_projector_orthogonality():
    for n in (1, 2, 3, 4):
        for p in range(n + 1):
            for q in range(n + 1):
                prod = al.projector_pi(p, n) * al.projector_pi(q, n)
                want = al.projector_pi(p, n) if p == q else al.zero(n)
                assert prod == want


def test_sliding_rule():
    rng = random.Random(33)
    for n in (1, 2, 3, 4):
        def pi(p):
            return al.projector_pi(p, n) if 0 <= p <= n else al.zero(n)

        for _ in range(8):
            a = al.embed_covector(rand_vector(n, rng), n)
            v = al.embed_vector(rand_vector(n, rng), n)
            for p in range(-1, n + 2):
                assert a * pi(p) == pi(p + 1) * a
                assert pi(p) * v == v * pi(p + 1)


def test_minimal_left_ideal():
    for n in (1, 2, 3):
        P = al.projector_p(n)
        imgs = set()
        for be in al.basis_elements(n):
            t = al.single(n, be.upper, be.lower) * P
            if not t.is_zero:
                imgs.add(t)
        assert len(imgs) == 2**n
        assert all(next(iter(t.support())).lower == () for t in imgs)


def test_unit_n1_golden():
    assert al.unit(1) == E(1, [], []) + E(1, [1], [1])


# -- adjunction -----------------------------------------------------------------


def test_adjoint_euclidean_anchor():
    n = 2
    d = Metric.euclidean(n)
    assert al.adjoint(E(n, [], [1]), d) == E(n, [1], [])
    assert al.adjoint(E(n, [1, 2], [2]), d) == E(n, [2], [1, 2])


def test_adjoint_involution_and_antihom():
    rng = random.Random(41)
    for n in (1, 2, 3):
        g = rand_metric(n, rng)
        for _ in range(15):
            x, y = rand_element(n, rng), rand_element(n, rng)
            assert al.adjoint(al.adjoint(x, g), g) == x
            assert al.adjoint(x * y, g) == al.adjoint(y, g) * al.adjoint(x, g)


def test_adjoint_on_generators():
    rng = random.Random(43)
    n = 3
    g = rand_metric(n, rng)
    for i in range(1, n + 1):
        ei = al.embed_vector(basis_vec(i, n), n)
        want = al.embed_covector(g.flat(basis_vec(i, n)), n)
        assert al.adjoint(ei, g) == want
        ci = al.embed_covector(basis_vec(i, n), n)
        want = al.embed_vector(g.sharp(basis_vec(i, n)), n)
        assert al.adjoint(ci, g) == want


# -- contraction -----------------------------------------------------------------


def test_contract_anchors():
    n = 2
    assert al.contract(E(n, [1], [2]), 1).is_zero
    assert al.contract(E(n, [1], [1]), 1) == al.projector_p(n)


def test_contract_grade_error():
    with pytest.raises(GradeError):
        al.contract(E(2, [1], [1, 2]), 1)
    with pytest.raises(GradeError):
        al.contract(E(2, [1], [1]), 2)


def test_contract_word_delta_combination():
    """Grade-2 contraction of a raw word gives the two-delta combination."""
    n = 3
    for k in range(1, n + 1):
        for t in range(1, n + 1):
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    w = al.basis_word(n, (k, t), (a, b))
                    got = al.contract(w, 2) if not w.is_zero else al.zero(n)
                    want_c = int(k == b and t == a) - int(t == b and k == a)
                    assert got == want_c * al.projector_p(n)
                    assert got == al.gen_delta((k, t), (b, a)) * al.projector_p(n)


def test_basis_word_antisymmetry():
    n = 3
    assert al.basis_word(n, (), (1, 2)) == -1 * al.basis_word(n, (), (2, 1))
    assert al.basis_word(n, (2, 1), ()) == -1 * al.basis_word(n, (1, 2), ())
    assert al.basis_word(n, (1, 1), ()).is_zero
    assert al.basis_word(n, (), (2, 2)).is_zero


# -- container behavior ------------------------------------------------------------


def test_no_zero_terms_stored():
    x = AlgebraElement(2, {BasisElement((), ()): Fraction(0)})
    assert x.is_zero and len(x) == 0
    y = E(2, [], []) - E(2, [], [])
    assert y.is_zero


def test_float_rejected():
    with pytest.raises(TypeError):
        AlgebraElement(2, {BasisElement((), ()): 0.5})
    with pytest.raises(TypeError):
        0.5 * al.unit(2)


def test_invalid_multi_index_rejected():
    with pytest.raises(ValueError):
        al.single(2, (2, 1), ())
    with pytest.raises(IndexRangeError):
        al.single(2, (3,), ())


def test_text_form():
    x = al.single(3, (1, 3), (2,), Fraction(3, 2))
    assert str(x) == "3/2 * E[1,3|2]"
    assert str(al.zero(2)) == "0"
    assert str(al.projector_p(1)) == "1 * E[|]"
    # deterministic order: by (|J|, |K|, J, K)
    y = E(3, [1], [1]) + E(3, [], [2]) + E(3, [], [1])
    assert str(y) == "1 * E[|1] + 1 * E[|2] + 1 * E[1|1]"


def test_metric_validation():
    with pytest.raises(ValueError):
        Metric([[1, 2], [3, 4]])  # not symmetric
    with pytest.raises(al.SingularMatrixError):
        Metric([[1, 1], [1, 1]])  # singular
    g = Metric([[2, 1], [1, 1]])
    eye = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    got = [
        [sum(g.g[i][k] * g.g_inv[k][j] for k in range(2)) for j in range(2)]
        for i in range(2)
    ]
    assert got == eye


def test_metric_flat_sharp_inverse():
    rng = random.Random(55)
    g = rand_metric(3, rng)
    v = rand_vector(3, rng)
    assert g.sharp(g.flat(v)) == v
    assert g.flat(g.sharp(v)) == v
