import pytest
from hypothesis import given, strategies as st

from qgreedy.expand import expand_in_greedy, minimal_points
from qgreedy.greedy import classical_greedy, greedy_element
from qgreedy.laurent import LaurentPoly
from qgreedy.torus import (AlgebraParams, TorusElement, cluster_monomial, cluster_variable,
                           denominator_vector)

P22, P12 = AlgebraParams(2, 2), AlgebraParams(1, 2)
one = LaurentPoly.one()


def classical_expand(values, params):
    """Oracle at v = 1: minimal-corner elimination on integer Laurent data."""
    rest = {k: n for k, n in values.items() if n}
    out = {}
    while rest:
        for corner in minimal_points(set(rest)):
            n = rest.get(corner, 0)
            if not n:
                continue
            base = (-corner[0], -corner[1])
            out[base] = out.get(base, 0) + n
            for (p, q), e in classical_greedy(base, params).grid.items():
                key = (-base[0] + params.b * p, -base[1] + params.c * q)
                rest[key] = rest.get(key, 0) - n * e
                if not rest[key]:
                    del rest[key]
    return {k: n for k, n in out.items() if n}


class TestExamples:
    def test_basis_element(self):
        for params in (P22, P12, AlgebraParams(2, 3)):
            exp = expand_in_greedy(greedy_element((3, 2), params))
            assert exp.terms == [((3, 2), one)] and exp.succeeded

    def test_square_of_x11(self):
        x11 = greedy_element((1, 1), P22)
        exp = expand_in_greedy(x11 * x11)
        assert exp.terms == [((0, 0), 2 * one), ((2, 2), one)]
        assert exp.residual.is_zero() and exp.succeeded

    def test_unit(self):
        exp = expand_in_greedy(TorusElement.one(P22))
        assert exp.terms == [((0, 0), one)]

    def test_outside_algebra_hits_cap(self):
        # X1^-1 + X2 is not in the algebra, so elimination never closes
        A = TorusElement.monomial(P22, 0, -1) + TorusElement.monomial(P22, 2, 0)
        exp = expand_in_greedy(A, max_iterations=5)
        assert not exp.succeeded
        assert exp.reconstruct() == A

    def test_rational_coefficients_flagged(self):
        from fractions import Fraction
        A = greedy_element((1, 1), P22).scale(LaurentPoly.const(Fraction(1, 2)))
        exp = expand_in_greedy(A)
        assert exp.non_integral == [(1, 1)] and not exp.succeeded

    def test_json(self):
        data = expand_in_greedy(greedy_element((1, 1), P22)).to_json()
        assert data["terms"] == [{"a1": 1, "a2": 1, "poly": [[0, "1"]]}]
        assert data["residual"] == [] and data["converged"]


def test_minimal_points():
    assert minimal_points({(0, 3), (1, 1), (2, 0), (2, 2), (3, 0)}) == [(0, 3), (1, 1), (2, 0)]
    assert minimal_points(set()) == []


points = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@given(st.sampled_from([P22, P12]), points, points)
def test_products_expand_integrally(params, x, y):
    A = greedy_element(x, params) * greedy_element(y, params)
    exp = expand_in_greedy(A)
    assert exp.succeeded
    assert exp.reconstruct() == A
    # v = 1 compatibility with the commutative expansion
    classical = classical_expand(A.eval_at_one(), params)
    assert {k: f.eval_at_one() for k, f in exp.terms if f.eval_at_one()} == classical


@pytest.mark.parametrize("bc", [(1, 1), (1, 2), (2, 2), (1, 3)])
def test_cluster_monomials_are_single_terms(bc):
    params = AlgebraParams(*bc)
    for k in range(-1, 4):
        Pk, Pk1 = denominator_vector(k, params), denominator_vector(k + 1, params)
        for m in range(3):
            for n in range(3):
                base = (m * Pk[0] + n * Pk1[0], m * Pk[1] + n * Pk1[1])
                exp = expand_in_greedy(cluster_monomial(k, m, n, params))
                assert exp.terms == [(base, one)]


def test_cluster_variables_expand_to_themselves():
    for m in range(-2, 5):
        exp = expand_in_greedy(cluster_variable(m, P22))
        assert len(exp.terms) == 1 and exp.terms[0][1] == one
