import pytest
from hypothesis import given, settings, strategies as st

from gasimon.blade import BitString
from gasimon.cartan import coefficient_from_matrix, multivector_to_matrix
from gasimon.errors import WidthError
from gasimon.multivector import Multivector, add, coefficient, geometric_product, norm_sq, reverse, scale
from gasimon.pipeline import build_En, build_Fn, run_pipeline

from conftest import bs, mv

EQ46 = mv(*[(1, f"{v:04b}") for v in range(8)],
          (-1, "1000"), (-1, "1001"), (1, "1010"), (1, "1011"),
          (1, "1100"), (1, "1101"), (-1, "1110"), (-1, "1111"))


@st.composite
def multivectors(draw, width=None, max_width=6, max_terms=8):
    w = width if width is not None else draw(st.integers(1, max_width))
    keys = draw(st.lists(st.integers(0, (1 << w) - 1), max_size=max_terms))
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(keys), max_size=len(keys)))
    return Multivector(w, [(BitString(w, k), c) for k, c in zip(keys, coeffs)])


@st.composite
def mv_triples(draw, max_width=6):
    w = draw(st.integers(1, max_width))
    return tuple(draw(multivectors(width=w)) for _ in range(3))


def test_add_examples():
    assert add(mv((1, "00")), mv((1, "01"))) == mv((1, "00"), (1, "01"))
    assert add(mv((1, "00")), mv((-1, "00"))) == Multivector.zero(2)
    assert len(add(mv((1, "00")), mv((-1, "00")))) == 0
    assert add(mv((2, "10")), mv((3, "10"))) == mv((5, "10"))


def test_add_width_mismatch():
    with pytest.raises(WidthError):
        add(mv((1, "00")), mv((1, "000")))


def test_scale_examples():
    assert scale(mv((1, "01"), (1, "10")), 2) == mv((2, "01"), (2, "10"))
    assert scale(mv((1, "01"), (4, "10")), 0) == Multivector.zero(2)
    assert scale(mv((1, "11")), -1) == mv((-1, "11"))


def test_no_stored_zeros():
    m = Multivector(2, [(bs("01"), 3), (bs("01"), -3), (bs("10"), 0)])
    assert len(m) == 0 and m.terms == {}


def test_geometric_product_small():
    # (e00 + e10)(e00 + e01) = e00 + e01 + e10 + e10 e01, and e10 e01 = +e11.
    got = mv((1, "00"), (1, "10")) * mv((1, "00"), (1, "01"))
    assert got == mv((1, "00"), (1, "01"), (1, "10"), (1, "11"))
    a, b = mv((1, "00"), (1, "10")), mv((1, "00"), (1, "01"))
    assert multivector_to_matrix(a) @ multivector_to_matrix(b) == multivector_to_matrix(got)


@given(multivectors())
def test_scalar_blade_is_identity(m):
    assert Multivector.scalar(m.width) * m == m
    assert m * Multivector.scalar(m.width) == m


def test_Fn_times_UfEn_table1(table1):
    after_uf = run_pipeline(table1).after_Uf
    assert after_uf == mv((1, "0010"), (1, "0100"), (1, "1011"), (1, "1101"))
    assert geometric_product(build_Fn(2, 2), after_uf) == EQ46


def test_reverse_examples():
    assert reverse(mv((1, "0000"))) == mv((1, "0000"))
    assert reverse(mv((1, "11"))) == mv((-1, "11"))
    assert reverse(build_En(2, 2)) == build_Fn(2, 2)
    assert reverse(build_En(2, 2)) == mv((1, "0000"), (1, "0100"), (1, "1000"), (-1, "1100"))


def test_coefficient_examples(table2):
    assert coefficient(EQ46, bs("1000")) == -1
    assert coefficient(mv((1, "0001")), bs("0110")) == 0
    assert coefficient(run_pipeline(table2).final, bs("01011")) == 2
    with pytest.raises(WidthError):
        coefficient(EQ46, bs("100"))


def test_norm_sq_examples(table2):
    assert norm_sq(Multivector.zero(3)) == 0
    assert norm_sq(EQ46) == 16
    assert norm_sq(run_pipeline(table2).final) == 64


@settings(max_examples=150)
@given(mv_triples())
def test_product_associative(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)


@settings(max_examples=150)
@given(mv_triples())
def test_product_distributes(abc):
    a, b, c = abc
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(multivectors(max_width=12))
def test_reverse_involution(m):
    assert reverse(reverse(m)) == m


@settings(max_examples=60, deadline=None)
@given(multivectors(max_width=8))
def test_sparse_dense_agreement(m):
    dense = multivector_to_matrix(m)
    for v in range(1 << m.width):
        x = BitString(m.width, v)
        assert coefficient(m, x) == coefficient_from_matrix(dense, x)


@given(multivectors(max_width=12))
def test_text_round_trip(m):
    assert Multivector.from_text(m.to_text(), m.width) == m


@given(multivectors(max_width=12))
def test_json_round_trip(m):
    assert Multivector.from_json(m.to_json(), m.width) == m


def test_canonical_text_form():
    m = mv((2, "0101"), (-1, "1000"), (1, "0000"))
    assert m.to_text() == "+1*e[0000] +2*e[0101] -1*e[1000]"
    assert m.to_json_obj()[0] == {"blade": "0000", "coeff": "1"}


def test_big_coefficients_stay_exact():
    big = 10 ** 40
    m = mv((big, "01"), (1, "10"))
    assert (m * m).coefficient("00") == big * big + 1


def test_operators():
    a = mv((1, "01"))
    assert a - a == Multivector.zero(2)
    assert -a == mv((-1, "01"))
    assert 3 * a == a * 3 == mv((3, "01"))
