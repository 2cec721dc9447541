"""Tests for Laurent polynomials, the expression reader and free complexes."""

from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algebra import (DimensionMismatchError, FreeComplex, LaurentPoly, LaurentSyntaxError,
                     MissingDegreeError, UnknownVariableError, ZeroDenominatorError,
                     compose_differentials, hypersurface, is_cochain_complex, koszul, multiply,
                     parse_laurent, point_koszul, rescale_summand, subset_label)

XYZ = ["x", "y", "z"]


def random_poly(rng, n, max_terms):
    terms = {}
    for _ in range(rng.randint(0, max_terms + 1)):
        exponent = tuple(int(e) for e in rng.randint(-3, 4, size=n))
        terms[exponent] = Fraction(int(rng.randint(-9, 10)), int(rng.randint(1, 5)))
    return LaurentPoly(n, terms)


@st.composite
def laurent_polys(draw, n=2, max_terms=5):
    """Random sparse Laurent polynomials with small rational coefficients."""
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    return random_poly(np.random.RandomState(seed), n, max_terms)


@st.composite
def koszul_inputs(draw, max_length=4):
    """Between one and max_length polynomials in one to three variables."""
    seed = draw(st.integers(min_value=0, max_value=2**31 - 1))
    rng = np.random.RandomState(seed)
    n = int(rng.randint(1, 4))
    return [random_poly(rng, n, 3) for _ in range(rng.randint(1, max_length + 1))]


class TestLaurentPoly:

    def test_zero_coefficients_are_dropped(self):
        p = LaurentPoly(2, {(1, 0): 1, (0, 1): 0})
        assert p.support() == frozenset({(1, 0)})
        assert (p - p).is_zero()

    def test_origami_product(self):
        f = parse_laurent("1+x+y", XYZ)
        g = parse_laurent("1+z+x*y", XYZ)
        product = multiply(f, g)
        assert len(product) == 9
        assert all(c == 1 for _, c in product.items())
        assert product.coefficient((2, 1, 0)) == 1

    def test_cancellation(self):
        x = LaurentPoly.monomial((1, 0))
        assert (x * LaurentPoly.monomial((-1, 0)) - LaurentPoly.one(2)).is_zero()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            LaurentPoly.one(2) + LaurentPoly.one(3)

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            LaurentPoly(1, {(0,): 0.5})

    def test_shift(self):
        p = parse_laurent("1+x", ["x", "y"]).shift((0, -1))
        assert p == parse_laurent("y^-1+x*y^-1", ["x", "y"])

    @given(laurent_polys(), laurent_polys(), laurent_polys())
    @settings(max_examples=30, deadline=None)
    def test_property_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p

    @given(laurent_polys(), laurent_polys(), laurent_polys())
    @settings(max_examples=30, deadline=None)
    def test_property_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)
        assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))

    @given(laurent_polys())
    @settings(max_examples=30, deadline=None)
    def test_property_printed_form_reads_back(self, p):
        assert parse_laurent(p.to_string(["x", "y"]), ["x", "y"]) == p


class TestParser:

    def test_negative_exponents_and_fractions(self):
        p = parse_laurent("2*x*y^-1 - 1/3", ["x", "y"])
        assert p.terms == {(1, -1): Fraction(2), (0, 0): Fraction(-1, 3)}

    def test_parentheses(self):
        p = parse_laurent("(1+x)*(1-x)", ["x"])
        assert p == parse_laurent("1-x^2", ["x"])

    def test_leading_minus(self):
        p = parse_laurent("-1-z-x*y", XYZ)
        assert p == -parse_laurent("1+z+x*y", XYZ)

    def test_missing_term(self):
        with pytest.raises(LaurentSyntaxError) as error:
            parse_laurent("1+", XYZ)
        assert error.value.position == 2

    def test_empty(self):
        with pytest.raises(LaurentSyntaxError):
            parse_laurent("   ", XYZ)

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError) as error:
            parse_laurent("1+w", XYZ)
        assert error.value.position == 2

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominatorError):
            parse_laurent("1/0*x", XYZ)

    def test_bad_character(self):
        with pytest.raises(LaurentSyntaxError):
            parse_laurent("1+x$", XYZ)


class TestFreeComplex:

    def test_top_degree_must_be_zero(self):
        with pytest.raises(ValueError):
            FreeComplex(1, {"a": -1, "b": -2})

    def test_entries_raise_degree_by_one(self):
        with pytest.raises(ValueError):
            FreeComplex(1, {"a": -2, "b": 0}, {("b", "a"): LaurentPoly.one(1)})

    def test_entry_dimension(self):
        with pytest.raises(DimensionMismatchError):
            FreeComplex(1, {"a": -1, "b": 0}, {("b", "a"): LaurentPoly.one(2)})

    def test_from_matrices_shape(self):
        with pytest.raises(ValueError):
            FreeComplex.from_matrices(1, {"a": -1, "b": 0}, {-1: [[LaurentPoly.one(1), LaurentPoly.one(1)]]})

    def test_missing_composite(self):
        F = hypersurface(parse_laurent("1+x", ["x"]))
        with pytest.raises(MissingDegreeError):
            compose_differentials(F, -1)
        assert is_cochain_complex(F)


class TestResolutions:

    def test_subset_labels(self):
        assert subset_label([1], 2) == "10"
        assert subset_label([], 3) == "000"

    def test_koszul_matches_origami_document(self, origami):
        F, _ = origami
        f = parse_laurent("1+x+y", XYZ)
        g = parse_laurent("1+z+x*y", XYZ)
        K = koszul([f, g])
        assert K == F
        assert K.labels == ("11", "10", "01", "00")
        assert K.matrix(-2) == [[-g], [f]]
        assert K.matrix(-1) == [[f, g]]

    def test_koszul_squares_to_zero(self, origami):
        F, _ = origami
        assert is_cochain_complex(F)
        assert compose_differentials(F, -2) == [[LaurentPoly.zero(3)]]

    def test_koszul_ranks(self):
        polys = [parse_laurent(text, XYZ) for text in ("x-2", "y-3", "z-5")]
        K = koszul(polys)
        assert [len(K.basis(k)) for k in (-3, -2, -1, 0)] == [1, 3, 3, 1]
        assert is_cochain_complex(K)

    def test_point_koszul_matches_document(self, point):
        F, _ = point
        assert point_koszul((2, 3)) == F

    def test_point_koszul_rejects_zero(self):
        with pytest.raises(ValueError):
            point_koszul((0, 1))

    def test_perturbed_coefficient_breaks_d2(self, origami):
        F, _ = origami
        entries = dict(F.entries)
        entries[("01", "11")] = parse_laurent("1+x+2*y", XYZ)
        assert not is_cochain_complex(FreeComplex(3, F.degrees, entries))

    def test_rescale_summand_keeps_d2(self, point):
        F, _ = point
        G = rescale_summand(F, "10", (1, 0))
        assert G != F
        assert is_cochain_complex(G)
        assert G.entry("10", "11") == F.entry("10", "11").shift((1, 0))
        assert G.entry("00", "10") == F.entry("00", "10").shift((-1, 0))

    @given(koszul_inputs())
    @settings(max_examples=30, deadline=None)
    def test_property_koszul_is_a_complex(self, polys):
        K = koszul(polys)
        r = len(polys)
        assert [len(K.basis(-k)) for k in range(r + 1)] == [comb(r, k) for k in range(r + 1)]
        assert is_cochain_complex(K)
        for k in range(-r, -1):
            zero = LaurentPoly.zero(K.n)
            assert all(entry == zero for row in compose_differentials(K, k) for entry in row)
