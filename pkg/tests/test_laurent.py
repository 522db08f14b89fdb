from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgreedy.laurent import (LaurentPoly, NotDivisible, divide_exact, exact_quotient,
                             tpoly_mul)

from conftest import laurent_polys

v = LaurentPoly.v()
vi = LaurentPoly.monomial(-1)
one = LaurentPoly.one()
zero = LaurentPoly.zero()


def P(terms):
    return LaurentPoly(terms)


class TestExamples:
    def test_add_cancels(self):
        assert (v + 1) + (-v + vi) == 1 + vi

    def test_add_identity_and_doubling(self):
        p = P({3: 2, -1: -1})
        assert p + zero == p
        assert v**2 + v**2 == P({2: 2})

    def test_mul(self):
        assert (v + vi) * (v - vi) == v**2 - vi**2
        assert P({2: 1, 0: 1, -2: 1}) * (v + vi) == P({3: 1, 1: 2, -1: 2, -3: 1})
        p = P({5: -3, 0: 7})
        assert p * one == p

    def test_bar(self):
        assert (v**3 + vi).bar() == vi**3 + v
        sym = P({2: 1, 0: 1, -2: 1})
        assert sym.bar() == sym and sym.is_bar_invariant()

    def test_eval_at_one(self):
        assert (v**2 + vi**2).eval_at_one() == 2
        assert zero.eval_at_one() == 0
        assert (v**3 - 2 + vi).eval_at_one() == 0

    def test_divide_exact_factored(self):
        num = [one, v + vi, one]
        assert divide_exact(num, [one, v]) == [one, vi]

    def test_divide_exact_identity(self):
        num = [P({1: 2}), zero, P({-3: 1})]
        assert divide_exact(num, [one]) == num

    def test_divide_exact_degree(self):
        with pytest.raises(NotDivisible):
            divide_exact([one, one], [one, one, one])

    def test_divide_exact_needs_unit_constant(self):
        with pytest.raises(ValueError):
            divide_exact([one], [P({0: 2})])


class TestText:
    def test_canonical_text(self):
        assert P({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1}).to_text() == "v^-4 + v^-2 + 2 + v^2 + v^4"
        assert P({1: -1, 0: 3}).to_text() == "3 - v"
        assert zero.to_text() == "0"

    def test_tex(self):
        assert P({2: 1, 0: -2, -1: 3}).to_tex() == "v^{2}-2+3v^{-1}"

    def test_json_round_trip_with_rationals(self):
        p = P({-2: Fraction(1, 2), 3: -7})
        assert p.to_json() == [[-2, "1/2"], [3, "-7"]]
        assert LaurentPoly.from_json(p.to_json()) == p

    def test_from_json_rejects_duplicates(self):
        with pytest.raises(ValueError):
            LaurentPoly.from_json([[1, "1"], [1, "2"]])


class TestConstruction:
    def test_zero_coefficients_dropped(self):
        assert P({1: 0, 2: 3}).terms == {2: 3}

    @pytest.mark.parametrize("bad", [{1.5: 1}, {True: 1}, {1: 0.5}, {1: True}])
    def test_rejects_inexact(self, bad):
        with pytest.raises(TypeError):
            P(bad)

    def test_integrality(self):
        half = P({0: Fraction(1, 2)})
        assert half.is_rational and not half.is_integral
        assert (half * 2).is_integral
        assert (half * 2).to_integral() == one
        with pytest.raises(ValueError):
            half.to_integral()

    def test_negative_power_only_for_unit_monomials(self):
        assert (-v) ** -3 == P({-3: -1})
        with pytest.raises(ValueError):
            (v + 1) ** -1
        with pytest.raises(ValueError):
            P({1: 2}) ** -1


class TestExactQuotient:
    def test_round_trip(self):
        a, b = P({-3: 2, 0: 1, 5: -7}), P({-1: 1, 2: 3})
        assert exact_quotient(a * b, b) == a

    def test_remainder_detected(self):
        with pytest.raises(NotDivisible):
            exact_quotient(P({0: 1, 1: 1, 2: 1}), P({0: 1, 1: 1}))

    def test_integer_content_detected(self):
        with pytest.raises(NotDivisible):
            exact_quotient(P({0: 3}), P({0: 2}))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_quotient(one, zero)


# ring axioms and homomorphism properties

@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == zero
    assert a + (-a) == zero


@given(laurent_polys(), laurent_polys())
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(laurent_polys(), laurent_polys())
def test_eval_at_one_is_ring_map(a, b):
    assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()
    assert (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one()


@given(laurent_polys(), laurent_polys().filter(bool))
def test_exact_quotient_inverts_multiplication(a, b):
    assert exact_quotient(a * b, b) == a


@given(laurent_polys(), st.integers(-5, 5), st.integers(1, 4))
def test_shift_and_rescale(a, k, d):
    assert a.shift(k) == a * LaurentPoly.monomial(k)
    assert a.scale_exponents(d).eval_at_one() == a.eval_at_one()


@given(st.lists(laurent_polys(max_terms=3), max_size=4),
       st.lists(laurent_polys(max_terms=3), max_size=3),
       st.integers(-3, 3), st.sampled_from([1, -1]))
def test_divide_exact_round_trip(q, tail, shift, sign):
    den = [LaurentPoly.monomial(shift, sign)] + tail
    num = tpoly_mul(q, den)
    assert divide_exact(num, den) == tpoly_mul(q, [one])


@given(laurent_polys())
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json()) == a
