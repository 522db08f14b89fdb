"""The automorphisms sigma_l with sigma_l(X_m) = X_(2l-m) and v -> v^-1.

sigma_1 fixes X1 and sends X2 to X0; sigma_2 fixes X2 and sends X1 to X3.
On normalized monomials they act by

    sigma_1: X^(e1, m) -> sum_j [m choose j]_(v^b) X^(e1 + b j, -m)
    sigma_2: X^(n, e2) -> sum_k [n choose k]_(v^c) X^(-n, e2 + c k)

with coefficients barred.  For m < 0 (resp. n < 0) the binomial series is
infinite; its inverse is the finite series for -m (resp. -n), so the image
is Laurent exactly when the corresponding row (resp. column) polynomial is
divisible by that finite series.
"""
from collections import defaultdict

from qgreedy.laurent import LaurentPoly, NotDivisible, divide_exact, tpoly_mul, tpoly_trim
from qgreedy.qbinom import binomial_series, binomial_tpoly
from qgreedy.torus import ResourceLimitError, TorusElement

MAX_WORD_LENGTH = 25


class NotLaurent(ArithmeticError):
    """The image under sigma is not a Laurent polynomial in X1, X2."""

    def __init__(self, generator, line, message):
        super().__init__(message)
        self.generator = generator
        self.line = line


def _reflect(A, generator, barred=True):
    params = A.params
    if generator == 1:
        step = params.b
        # rows: fixed e2; t runs along e1 in steps of b
        split = lambda key: ((key[1], key[0] % step), key[0])  # noqa: E731
        join = lambda line, pos: (pos, -line[0])  # noqa: E731
    else:
        step = params.c
        split = lambda key: ((key[0], key[1] % step), key[1])  # noqa: E731
        join = lambda line, pos: (-line[0], pos)  # noqa: E731

    lines = defaultdict(dict)
    for key, poly in A._coeffs.items():
        line, pos = split(key)
        lines[line][pos] = poly.bar() if barred else poly

    out = {}
    for line, entries in lines.items():
        n, residue = line
        lo = min(entries)
        start = (lo - residue) // step
        hi = max(entries)
        col = [LaurentPoly.zero()] * ((hi - lo) // step + 1)
        for pos, poly in entries.items():
            col[(pos - lo) // step] = poly
        if n >= 0:
            image = tpoly_mul(binomial_tpoly(n, step), col)
        else:
            try:
                image = divide_exact(col, binomial_tpoly(-n, step))
            except NotDivisible:
                raise NotLaurent(
                    generator, line,
                    f"sigma_{generator}: line {line} is not divisible by the "
                    f"binomial series for {-n}") from None
        for i, poly in enumerate(image):
            if poly:
                out[join(line, residue + step * (start + i))] = poly
    return TorusElement._wrap(params, out)


def sigma1(A):
    return _reflect(A, 1)


def sigma2(A):
    return _reflect(A, 2)


def sigma_word(ell, max_length=MAX_WORD_LENGTH):
    """The palindromic word in sigma_1, sigma_2 equal to sigma_ell."""
    if ell >= 2:
        length = 2 * (ell - 2) + 1
        first = 2
    else:
        length = 2 * (1 - ell) + 1
        first = 1
    if length > max_length:
        raise ResourceLimitError(f"sigma_{ell} needs a word of length {length} > {max_length}")
    other = 3 - first
    return [first if i % 2 == 0 else other for i in range(length)]


def apply_word(word, A):
    for g in word:
        A = _reflect(A, g)
    return A


def sigma_apply(ell, A, max_length=MAX_WORD_LENGTH):
    """Apply sigma_ell to a torus element; raises NotLaurent on failure."""
    return apply_word(sigma_word(ell, max_length), A)


def sigma_on_greedy_params(ell, base, params):
    """Predicted base of sigma_ell applied to the greedy element at ``base``."""
    a1, a2 = base
    if ell == 1:
        return (a1, params.c * max(a1, 0) - a2)
    if ell == 2:
        return (params.b * max(a2, 0) - a1, a2)
    raise ValueError(f"only sigma_1 and sigma_2 have a base formula, got ell={ell}")


def cluster_word(m, max_length=MAX_WORD_LENGTH):
    """Word (in application order) moving the cluster {X_m, X_m+1} onto {X1, X2}."""
    if m % 2 == 0:
        return sigma_word((m + 2) // 2, max_length)
    shifts = abs(m - 1) // 2
    pair = [2, 1] if m > 1 else [1, 2]
    word = pair * shifts
    if len(word) > max_length:
        raise ResourceLimitError(f"cluster {m} needs a word of length {len(word)} > {max_length}")
    return word


def expand_in_cluster(A, m, max_length=MAX_WORD_LENGTH):
    """Coefficients of ``A`` in the cluster {X_m, X_m+1}.

    The result is written in the normalized monomials of the initial
    cluster; for odd-length words the coefficients are barred and the two
    cluster variables swap roles, neither of which affects positivity or
    Laurentness.  Every intermediate image must itself be Laurent, which
    holds for elements of the cluster algebra.
    """
    return apply_word(cluster_word(m, max_length), A)


def d_prime_transform(P, generator=2):
    """Cross-check path: the power-series transform on pointed coordinates.

    Each column ``p`` (for ``generator=2``) of the pointed grid is
    multiplied by the truncated series sum_l [-a1 + b p choose l]_(v^c) t^l
    without barring coefficients; for a negative top argument the product is
    accepted only if its tail vanishes over a guard band at least as long as
    the finite inverse series.  The image is re-pointed.
    """
    from qgreedy.pointed import to_pointed

    params = P.params
    a1, a2 = P.base
    b, c = params.b, params.c
    lines = defaultdict(dict)
    for (p, q), poly in P.grid.items():
        if generator == 2:
            lines[p][q] = poly
        else:
            lines[q][p] = poly

    out = {}
    for idx, entries in lines.items():
        if generator == 2:
            n, step = -a1 + b * idx, c
        else:
            n, step = -a2 + c * idx, b
        deg = max(entries)
        col = [entries.get(i, LaurentPoly.zero()) for i in range(deg + 1)]
        if n >= 0:
            image = tpoly_mul(list(binomial_series(n, step, n + 1)), col)
        else:
            m = -n
            series = list(binomial_series(n, step, deg + m + 1))
            full = tpoly_mul(series, col)
            full = full + [LaurentPoly.zero()] * (deg + m + 1 - len(full))
            tail = full[max(deg - m + 1, 0):deg + m + 1]
            if any(not x.is_zero() for x in tail):
                raise NotLaurent(generator, idx, f"d' series for line {idx} does not terminate")
            image = tpoly_trim(full[:max(deg - m + 1, 0)])
        for i, poly in enumerate(image):
            if poly.is_zero():
                continue
            if generator == 2:
                out[(-n, -a2 + c * i)] = poly
            else:
                out[(-a1 + b * i, -n)] = poly
    return to_pointed(TorusElement._wrap(params, out))
