import pytest
from hypothesis import given, settings

from skeinsolve import (
    AL,
    G,
    Generator,
    OperatorExpression,
    Partition,
    Q,
    RationalFunction,
    SkeinVector,
    UNKNOT_VALUE,
    Z_BRACKET,
    apply_generator,
    apply_p01,
    apply_p10,
    apply_p11,
    apply_unknot,
    enumerate_partitions,
    monomial,
    p10_eigenvalue,
)
from skeinsolve.partitions import BOX, EMPTY
from skeinsolve.skein import IDENTITY_OP, P01_OP, P10_OP, P11_OP, UNKNOT_OP

from strategies import rational_functions

W = SkeinVector.basis


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


def test_vector_drops_zeros_and_validates_degree():
    v = SkeinVector({EMPTY: RationalFunction(0), BOX: RationalFunction(1)}, 1)
    assert v.partitions() == [BOX]
    with pytest.raises(ValueError):
        SkeinVector({Partition((2,)): RationalFunction(1)}, 1)


def test_vector_item_order():
    v = SkeinVector({p: RationalFunction(1) for p in enumerate_partitions(4)}, 4)
    assert [p.parts for p, _ in v.items()] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_vector_arithmetic():
    v = W(EMPTY, 1) + W(BOX, 1).scale(G)
    assert v.coefficient(BOX) == RationalFunction(G)
    assert (v - v).is_zero
    with pytest.raises(ValueError):
        W(EMPTY, 1) + W(EMPTY, 2)


# ---------------------------------------------------------------------------
# generator actions
# ---------------------------------------------------------------------------


def test_unknot_scales():
    assert apply_unknot(W(EMPTY)) == W(EMPTY).scale(UNKNOT_VALUE)
    assert apply_unknot(SkeinVector.zero(3)).is_zero
    v = W(EMPTY, 1) + W(BOX, 1)
    assert apply_unknot(v) == v.scale(UNKNOT_VALUE)


def test_p10_on_empty_is_unknot_value():
    assert apply_p10(W(EMPTY)) == W(EMPTY).scale(UNKNOT_VALUE)


def test_p10_on_box():
    expected = UNKNOT_VALUE + RationalFunction(AL * Z_BRACKET)
    assert apply_p10(W(BOX)) == W(BOX).scale(expected)
    assert p10_eigenvalue(BOX) == expected


def test_p10_minus_unknot_on_row_two():
    # (P10 - unknot) W_(2) = aL z (1+q) W_(2)
    p2 = Partition((2,))
    diff = (P10_OP - UNKNOT_OP).apply(W(p2))
    assert diff == W(p2).scale(AL * Z_BRACKET * (1 + Q))


def test_p01_branches():
    assert apply_p01(W(EMPTY, 1)) == W(BOX, 1)
    got = apply_p01(W(BOX, 2))
    assert got == SkeinVector(
        {Partition((2,)): RationalFunction(1),
         Partition((1, 1)): RationalFunction(1)}, 2)
    got = apply_p01(W(Partition((2, 1)), 4))
    assert got.partitions() == [
        Partition((3, 1)), Partition((2, 2)), Partition((2, 1, 1))]
    assert all(v == RationalFunction(1) for _, v in got.items())


def test_p01_truncates_at_max_degree():
    assert apply_p01(W(BOX, 1)).is_zero


def test_p11_per_box_weights():
    assert apply_p11(W(EMPTY, 1)) == W(BOX, 1).scale(AL)
    got = apply_p11(W(BOX, 2))
    expected = SkeinVector(
        {Partition((2,)): RationalFunction(AL * Q),
         Partition((1, 1)): RationalFunction(AL * Q ** -1)}, 2)
    assert got == expected


def test_p11_matches_commutator_at_two_one():
    p = Partition((2, 1))
    basis = W(p, p.size + 1)
    bracket = OperatorExpression.commutator(P10_OP, P01_OP).apply(basis)
    assert P11_OP.scale(Z_BRACKET).apply(basis) == bracket


@pytest.mark.parametrize("n", range(7))
def test_commutator_identity(n):
    bracket_op = OperatorExpression.commutator(P10_OP, P01_OP)
    scaled = P11_OP.scale(Z_BRACKET)
    for p in enumerate_partitions(n):
        basis = W(p, n + 1)
        assert scaled.apply(basis) == bracket_op.apply(basis)


# ---------------------------------------------------------------------------
# operator expressions
# ---------------------------------------------------------------------------


def test_identity_operator():
    v = W(Partition((2, 1)), 4) + W(BOX, 4).scale(G)
    assert IDENTITY_OP.apply(v) == v


def test_unknot_minus_p10_kills_empty():
    assert (UNKNOT_OP - P10_OP).apply(W(EMPTY)).is_zero


def test_degree_one_annihilation():
    # (unknot - P10 + aL g P01) kills 1 + (g/z) W_box through degree 1
    op = UNKNOT_OP - P10_OP + P01_OP.scale(AL * G)
    psi = SkeinVector(
        {EMPTY: RationalFunction(1), BOX: RationalFunction(G, Z_BRACKET)}, 1)
    assert op.apply(psi).is_zero


def test_operator_collects_terms():
    op = P10_OP + P10_OP.scale(2) - P10_OP.scale(3)
    assert op == OperatorExpression()
    assert (P10_OP - P10_OP).apply(W(BOX)).is_zero


def test_operator_composition_order():
    # P01 after P10 scales by the eigenvalue of the source partition
    v = W(BOX, 2)
    composed = (P01_OP @ P10_OP).apply(v)
    assert composed == apply_p01(apply_p10(v))
    other = (P10_OP @ P01_OP).apply(v)
    assert other == apply_p10(apply_p01(v))
    assert composed != other


@pytest.mark.parametrize("n", range(9))
def test_unknot_is_central(n):
    for p in enumerate_partitions(n):
        basis = W(p, n + 1)
        for gen_op in (P10_OP, P01_OP, P11_OP):
            left = (UNKNOT_OP @ gen_op).apply(basis)
            right = (gen_op @ UNKNOT_OP).apply(basis)
            assert left == right


def test_degree_discipline():
    for p in enumerate_partitions(3):
        basis = W(p, 5)
        for op, shift in ((UNKNOT_OP, 0), (P10_OP, 0), (P01_OP, 1), (P11_OP, 1)):
            image = op.apply(basis)
            assert all(mu.size == p.size + shift for mu in image.partitions())


@given(rational_functions(), rational_functions())
@settings(max_examples=25, deadline=None)
def test_generator_linearity(x, y):
    v = W(EMPTY, 2).scale(x) + W(BOX, 2).scale(y)
    for gen in Generator:
        image = apply_generator(gen, v)
        split = (apply_generator(gen, W(EMPTY, 2)).scale(x)
                 + apply_generator(gen, W(BOX, 2)).scale(y))
        assert image == split


def test_custom_unknot_value():
    other = RationalFunction(monomial(7))
    assert apply_unknot(W(EMPTY), other) == W(EMPTY).scale(other)
    # the difference P10 - unknot does not depend on the scalar at all
    diff = P10_OP - UNKNOT_OP
    assert diff.apply(W(BOX), other) == diff.apply(W(BOX))


def test_operator_rendering_deterministic():
    op = UNKNOT_OP - P10_OP + P01_OP.scale(AL * G)
    assert str(op) == str(UNKNOT_OP - P10_OP + P01_OP.scale(AL * G))
    assert "P10" in str(op) and "O" in str(op)
