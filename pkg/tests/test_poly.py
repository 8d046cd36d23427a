from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from delpezzo.poly import (
    Poly,
    certify_no_common_affine_zero_3,
    divexact,
    gcd_list,
    has_common_affine_zero,
    poly_gcd,
    real_root_count,
    resultant,
    squarefree_part,
)

X, Y = Poly.gens(("x", "y"))


def test_arithmetic_basics():
    f = (X + Y) * (X - Y)
    assert f == X**2 - Y**2
    assert (X + 1) ** 3 == X**3 + 3 * X**2 + 3 * X + 1
    assert f.subs("x", 3) == 9 - Y**2
    assert f.degree() == 2 and f.degree("x") == 2 and f.degree("y") == 2


def test_ring_constraints():
    with pytest.raises(ValueError):
        Poly.gens(("a", "b", "c", "d"))
    a, = Poly.gens(("a",))
    with pytest.raises(ValueError):
        a + X


def test_divexact():
    f = (X**2 + Y) * (X - 3 * Y + 1)
    assert divexact(f, X**2 + Y) == X - 3 * Y + 1
    with pytest.raises(ValueError):
        divexact(X**2 + 1, X + 1)


def test_resultant_spec_values():
    assert resultant(X**2 - 1, X - 1, "x").is_zero
    assert resultant(X**2 + Y**2, X - Y, "x") == 2 * Y**2
    assert resultant(X, Y, "x") == Y


def test_resultant_preconditions():
    with pytest.raises(ValueError):
        resultant(Poly.zero(("x", "y")), X, "x")
    with pytest.raises(ValueError):
        resultant(Y, Y + 1, "x")  # x occurs in neither
    with pytest.raises(ValueError):
        resultant(X, Y, "t")


def test_gcd_examples():
    assert poly_gcd(X**2 - 1, X - 1) == X - 1
    g = poly_gcd((X - Y) * (X + Y), (X - Y) * X)
    assert g == X - Y
    assert poly_gcd(X, Y).is_constant


@st.composite
def univariate(draw, max_degree=4):
    coeffs = draw(
        st.lists(
            st.integers(min_value=-4, max_value=4), min_size=1, max_size=max_degree + 1
        )
    )
    f = Poly.zero(("x", "y"))
    for k, c in enumerate(coeffs):
        f = f + c * X**k
    return f


@settings(max_examples=60, deadline=None)
@given(univariate(), univariate())
def test_resultant_vanishes_iff_common_factor(f, g):
    if f.is_zero or g.is_zero or (f.degree("x") <= 0 and g.degree("x") <= 0):
        return
    res = resultant(f, g, "x")
    shares = not poly_gcd(f, g).is_constant
    # for univariate inputs a common factor always involves x
    assert res.is_zero == shares


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.integers(min_value=-6, max_value=6), min_size=1, max_size=4, unique=True
    ),
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=1, max_value=16),
)
def test_sturm_matches_factored_roots(roots, lo, width):
    hi = lo + width
    f = Poly.const(("x", "y"), 1)
    for r in roots:
        f = f * (X - r)
    expected = sum(1 for r in roots if lo < r <= hi)
    assert real_root_count(f, (lo, hi)) == expected


def test_sturm_spec_examples():
    assert real_root_count(X**2 - 2, (0, 2)) == 1
    assert real_root_count(X**2 + 1, (-10, 10)) == 0
    assert real_root_count(X**3 - X, (-2, 2)) == 3


def test_sturm_half_open_boundaries():
    f = (X - 1) * (X - 5)
    assert real_root_count(f, (1, 5)) == 1  # root at lo excluded, at hi included
    assert real_root_count(f, (0, 1)) == 1
    assert real_root_count(f, (5, 9)) == 0


def test_sturm_repeated_roots_counted_once():
    assert real_root_count((X - 2) ** 3, (0, 4)) == 1


def test_sturm_rejects_multivariate():
    with pytest.raises(ValueError):
        real_root_count(X + Y, (0, 1))


def test_squarefree_part():
    assert squarefree_part((X - 1) ** 2 * (X + 2)) == (X - 1) * (X + 2)


def test_common_zero_shared_curve():
    assert has_common_affine_zero([(X - Y) * (X + 1), (X - Y) * (Y - 3)])


def test_common_zero_transversal_point():
    assert has_common_affine_zero([X - 1, Y - 2, X + Y - 3])
    assert not has_common_affine_zero([X, Y - 1, X + Y])


def test_common_zero_complex_only():
    # x^2 + 1 and y share the zeros (±i, 0): no real points at all
    assert has_common_affine_zero([X**2 + 1, Y])
    assert not has_common_affine_zero([X**2 + 1, Y, X + Y - 5])


def test_common_zero_degenerate_y_degrees():
    # the cuspidal-cubic chart: 3x^2, -2y, -y^2 vanish together at the origin
    assert has_common_affine_zero([3 * X**2, -2 * Y, -(Y**2)])
    # 3x^2 + 1 still vanishes at x = ±i/sqrt(3), so adding it keeps the zero
    assert has_common_affine_zero([3 * X**2 + 1, -2 * Y, -(Y**2)])
    # but no y can satisfy y = 0 and y^2 = 1
    assert not has_common_affine_zero([3 * X**2 + 1, -2 * Y, Y**2 - 1])


def test_common_zero_irrational_candidate_locus():
    # common zeros at x^2 = 2: never rational, still detected
    assert has_common_affine_zero([X**2 - 2, (X**2 - 2) * Y + X**4 - 4])
    assert has_common_affine_zero([X**2 - 2, Y - X])
    assert not has_common_affine_zero([X**2 - 2, Y - X, Y + X])


def test_common_zero_constants():
    assert not has_common_affine_zero([Poly.const(("x", "y"), 5)])
    assert has_common_affine_zero([])


def test_trivariate_certificate():
    u, v, w = Poly.gens(("u", "v", "w"))
    assert certify_no_common_affine_zero_3([u, v, w, u + v + w - 1])
    # a genuine common zero cannot be certified empty
    assert not certify_no_common_affine_zero_3([u - 1, v - 1, w - 1])


def test_gcd_list_normalization():
    g = gcd_list([2 * X - 2 * Y, 4 * X - 4 * Y])
    assert g == X - Y
