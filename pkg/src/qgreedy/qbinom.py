"""Bar-invariant quantum integers and quantum binomial coefficients.

Everything is computed at ``w = v`` and then rescaled by ``v -> v**d``;
the memo is keyed on ``(n, k)`` only since the rescaling is a relabeling
of exponents.
"""
from functools import lru_cache

from qgreedy.laurent import LaurentPoly, exact_quotient


def qnumber(n, d=1):
    """[n]_w = sgn(n)(w^(|n|-1) + w^(|n|-3) + ... + w^(1-|n|)) with w = v^d."""
    return _qnumber(n).scale_exponents(d) if d != 1 else _qnumber(n)


@lru_cache(maxsize=None)
def _qnumber(n):
    if n == 0:
        return LaurentPoly.zero()
    sign = 1 if n > 0 else -1
    m = abs(n)
    return LaurentPoly({e: sign for e in range(1 - m, m, 2)})


@lru_cache(maxsize=None)
def _qbinom(n, k):
    # definitional quotient; the division must be exact
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for i in range(k):
        num = num * _qnumber(n - i)
        den = den * _qnumber(i + 1)
    return exact_quotient(num, den)


def qbinom(n, k, d=1):
    """The quantum binomial coefficient [n choose k]_w at w = v^d.

    ``n`` may be any integer; ``k`` must be nonnegative.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if 0 <= n < k:
        return LaurentPoly.zero()
    b = _qbinom(n, k)
    return b.scale_exponents(d) if d != 1 else b


@lru_cache(maxsize=None)
def binomial_series(n, d, length):
    """Coefficients [n choose k]_{v^d} for k < length, as a tuple."""
    return tuple(qbinom(n, k, d) for k in range(length))


def binomial_tpoly(m, d):
    """The polynomial sum_k [m choose k]_{v^d} t^k for m >= 0."""
    if m < 0:
        raise ValueError("the binomial t-polynomial is finite only for m >= 0")
    return list(binomial_series(m, d, m + 1))


def cache_clear():
    _qnumber.cache_clear()
    _qbinom.cache_clear()
    binomial_series.cache_clear()
