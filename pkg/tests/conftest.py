import pytest
from hypothesis import HealthCheck, settings, strategies as st

from qgreedy import kernels
from qgreedy.laurent import LaurentPoly
from qgreedy.torus import AlgebraParams, TorusElement

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def laurent_polys(draw, max_terms=6, exps=(-8, 8), coeffs=(-5, 5)):
    terms = draw(st.dictionaries(st.integers(*exps), st.integers(*coeffs), max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def torus_elements(draw, params=None, max_terms=4):
    if params is None:
        params = draw(algebra_params())
    coeffs = draw(st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                                  laurent_polys(max_terms=3), max_size=max_terms))
    return TorusElement(params, coeffs)


def algebra_params(max_value=4):
    return st.builds(AlgebraParams, st.integers(1, max_value), st.integers(1, max_value))


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    original = kernels.BACKEND
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(original)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
