import pytest
from hypothesis import given, strategies as st

from qgreedy.laurent import LaurentPoly
from qgreedy.pointed import to_pointed
from qgreedy.qbinom import qbinom
from qgreedy.torus import (AlgebraParams, Limits, ResourceLimitError, TorusElement,
                           cluster_monomial, cluster_variable, denominator_vector, mono_mul)

from conftest import algebra_params, torus_elements

P22 = AlgebraParams(2, 2)
v = LaurentPoly.v()


def X(params, *terms):
    """Sum of normalized monomials given as (e1, e2) or (e1, e2, coeff)."""
    out = TorusElement.zero(params)
    for t in terms:
        coeff = t[2] if len(t) > 2 else 1
        out = out + TorusElement.monomial(params, t[0], t[1], coeff)
    return out


def ordered_product(params, A, B):
    """Oracle: multiply via ordered monomials X1^a X2^b and X2 X1 = v^2 X1 X2."""
    def to_ordered(E):
        # X^(a,b) = v^(ab) X1^a X2^b
        return {k: p * LaurentPoly.monomial(k[0] * k[1]) for k, p in E._coeffs.items()}

    out = {}
    for (a, b), f in to_ordered(A).items():
        for (c, d), g in to_ordered(B).items():
            key = (a + c, b + d)
            out[key] = out.get(key, LaurentPoly.zero()) + f * g * LaurentPoly.monomial(2 * b * c)
    normalized = {k: p * LaurentPoly.monomial(-k[0] * k[1]) for k, p in out.items()}
    return TorusElement(params, normalized)


class TestParams:
    @pytest.mark.parametrize("b,c", [(0, 1), (1, -2), (True, 1), (1.0, 2)])
    def test_invalid(self, b, c):
        with pytest.raises(ValueError):
            AlgebraParams(b, c)

    @pytest.mark.parametrize("bc,kind", [((1, 1), "finite"), ((1, 3), "finite"),
                                         ((2, 2), "affine"), ((1, 4), "affine"),
                                         ((2, 3), "wild")])
    def test_kind(self, bc, kind):
        assert AlgebraParams(*bc).kind == kind


class TestMonomials:
    def test_mono_mul(self):
        assert mono_mul((1, 0), (0, 1)) == (LaurentPoly.monomial(-1), (1, 1))
        assert mono_mul((4, -3), (0, 0)) == (LaurentPoly.one(), (4, -3))
        assert mono_mul((-1, 1), (1, -1)) == (LaurentPoly.one(), (0, 0))

    def test_quasi_commutation(self):
        x1, x2 = X(P22, (1, 0)), X(P22, (0, 1))
        assert x2 * x1 == X(P22, (1, 1, v))
        assert x2 * x1 == (x1 * x2).scale(LaurentPoly.monomial(2))

    def test_nine_term_square(self):
        A = X(P22, (-1, -1), (1, -1), (-1, 1))
        s = v ** 2 + v ** -2
        expected = X(P22, (-2, -2), (0, -2, s), (-2, 0, s), (2, -2), (-2, 2), (0, 0, 2))
        assert A * A == expected
        assert ordered_product(P22, A, A) == expected


@given(st.data())
def test_product_matches_ordered_oracle(data):
    params = data.draw(algebra_params())
    A = data.draw(torus_elements(params))
    B = data.draw(torus_elements(params))
    assert A * B == ordered_product(params, A, B)


@given(st.data())
def test_associative_and_bar_antiautomorphism(data):
    params = data.draw(algebra_params())
    A, B, C = (data.draw(torus_elements(params, max_terms=3)) for _ in range(3))
    assert (A * B) * C == A * (B * C)
    assert (A * B).bar() == B.bar() * A.bar()
    assert A.bar().bar() == A


@given(st.data())
def test_json_round_trip(data):
    A = data.draw(torus_elements())
    assert TorusElement.from_json(A.to_json()) == A


class TestArithmetic:
    def test_identity_and_scalars(self):
        A = X(P22, (1, 2, v), (-3, 0))
        assert A * 1 == A and 1 * A == A
        assert A * TorusElement.one(P22) == A
        assert A - A == TorusElement.zero(P22)
        assert A + 0 == A

    def test_bar_examples(self):
        assert X(P22, (1, 1, v)).bar() == X(P22, (1, 1, v ** -1))
        assert X(P22, (3, -2)).bar() == X(P22, (3, -2))

    def test_inverse_of_monomial(self):
        m = X(P22, (2, -1))
        assert m * m ** -1 == TorusElement.one(P22)
        with pytest.raises(ValueError):
            (m + 1) ** -1

    def test_parameter_mismatch(self):
        with pytest.raises(ValueError):
            X(P22, (1, 0)) + X(AlgebraParams(1, 2), (1, 0))

    def test_eval_at_one(self):
        assert X(P22, (1, 0, v - 1), (0, 1, 3 * v)).eval_at_one() == {(0, 1): 3}


class TestClusterVariables:
    def test_initial(self):
        assert cluster_variable(1, P22) == X(P22, (1, 0))
        assert cluster_variable(2, P22) == X(P22, (0, 1))

    def test_examples(self):
        assert cluster_variable(3, P22) == X(P22, (-1, 0), (-1, 2))
        assert cluster_variable(0, P22) == X(P22, (0, -1), (2, -1))

    def test_cluster_monomials(self):
        assert cluster_monomial(1, 2, 3, P22) == X(P22, (2, 3))
        for bc in [(1, 1), (2, 3)]:
            params = AlgebraParams(*bc)
            assert cluster_monomial(2, 0, 1, params) == cluster_variable(3, params)
        assert cluster_monomial(0, 1, 1, P22) == X(P22, (1, -1), (3, -1))
        with pytest.raises(ValueError):
            cluster_monomial(0, -1, 0, P22)

    def test_index_limit(self):
        with pytest.raises(ResourceLimitError):
            cluster_variable(9, P22)
        with pytest.raises(ResourceLimitError):
            cluster_variable(3, AlgebraParams(2, 3), Limits(max_terms=1))

    @pytest.mark.parametrize("bc", [(1, 1), (1, 2), (2, 2), (2, 3), (1, 5)])
    @pytest.mark.parametrize("m", range(-1, 4))
    def test_exchange_relations(self, bc, m):
        params = AlgebraParams(*bc)
        Xm = cluster_variable(m, params)
        e = params.b if m % 2 else params.c
        lhs = cluster_variable(m + 1, params) * cluster_variable(m - 1, params)
        assert lhs == (Xm ** e).scale(LaurentPoly.monomial(e)) + 1
        nxt = cluster_variable(m + 1, params)
        assert nxt * Xm == (Xm * nxt).scale(LaurentPoly.monomial(2))

    @pytest.mark.parametrize("bc", [(1, 1), (1, 3), (2, 2), (3, 2)])
    def test_bar_invariant_positive_pointed(self, bc):
        params = AlgebraParams(*bc)
        for m in range(-3, 7):
            Xm = cluster_variable(m, params)
            assert Xm.is_bar_invariant()
            assert all(c > 0 for _, p in Xm.items() for c in p.terms.values())
            # the base of the pointed expansion is the denominator vector
            assert to_pointed(Xm).base == denominator_vector(m, params)

    def test_finite_type_periodicity(self):
        # (b, c) = (1, 1) has period 5
        params = AlgebraParams(1, 1)
        assert cluster_variable(6, params) == cluster_variable(1, params)
        assert cluster_variable(-3, params) == cluster_variable(2, params)


def test_denominator_vectors():
    assert denominator_vector(1, P22) == (-1, 0)
    assert denominator_vector(2, P22) == (0, -1)
    assert denominator_vector(3, P22) == (1, 0)
    assert denominator_vector(0, P22) == (0, 1)
    assert denominator_vector(4, P22) == (2, 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_quantum_binomial_theorem(n):
    params = AlgebraParams(1, 1)
    x, y = X(params, (1, 0)), X(params, (0, 1))
    rhs = TorusElement.zero(params)
    for k in range(n + 1):
        rhs = rhs + (x ** k * y ** (n - k)).scale(qbinom(n, k) * LaurentPoly.monomial(k * (n - k)))
    assert (x + y) ** n == rhs
