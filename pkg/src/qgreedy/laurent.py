"""Exact sparse Laurent polynomials in one variable ``v``.

Coefficients are Python integers, or :class:`fractions.Fraction` for the
rational intermediates of the mean quasi-greedy path.  Polynomials in an
auxiliary variable ``t`` over this ring are plain lists of
:class:`LaurentPoly`, index = degree in ``t``.
"""
from fractions import Fraction
from numbers import Rational

from qgreedy import kernels


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _coerce_coeff(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an int or Fraction, got {type(c).__name__}")
    if isinstance(c, int):
        return c
    return Fraction(c)


class LaurentPoly:
    """An immutable element of Z[v, v^-1] (or Q[v, v^-1]).

    >>> v = LaurentPoly.v()
    >>> str((v + 1) * (v - 1))
    '-1 + v^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        else:
            clean = {}
            for e, c in dict(terms).items():
                if isinstance(e, bool) or not isinstance(e, int):
                    raise TypeError(f"exponent must be an int, got {e!r}")
                c = _coerce_coeff(c)
                if c:
                    clean[e] = c
            self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def v(cls):
        return cls._wrap({1: 1})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls._wrap({0: 1})

    @property
    def terms(self):
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    @property
    def is_rational(self):
        return any(isinstance(c, Fraction) for c in self._terms.values())

    @property
    def is_integral(self):
        return all(isinstance(c, int) or c.denominator == 1 for c in self._terms.values())

    def to_integral(self):
        """Return the same polynomial with int coefficients; raise if impossible."""
        if not self.is_integral:
            raise ValueError(f"polynomial {self} has non-integral coefficients")
        return LaurentPoly._wrap({e: int(c) for e, c in self._terms.items()})

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def min_exp(self):
        return min(self._terms)

    def max_exp(self):
        return max(self._terms)

    def coeff(self, exp):
        return self._terms.get(exp, 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @staticmethod
    def _as_poly(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._wrap(kernels.poly_add(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._wrap(kernels.poly_sub(self._terms, other._terms))

    def __rsub__(self, other):
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly._wrap(kernels.poly_scale(self._terms, other, 0))
        other = self._as_poly(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._wrap(kernels.poly_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have negative powers in Z[v, v^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly._wrap({e * n: c ** (-n)})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k):
        """Multiply by ``v**k``."""
        if k == 0:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def scale_exponents(self, d):
        """Substitute ``v -> v**d``."""
        return LaurentPoly._wrap({e * d: c for e, c in self._terms.items()})

    def bar(self):
        """The involution f(v) -> f(v^-1)."""
        return LaurentPoly._wrap({-e: c for e, c in self._terms.items()})

    def is_bar_invariant(self):
        t = self._terms
        return all(t.get(-e) == c for e, c in t.items())

    def eval_at_one(self):
        return sum(self._terms.values(), 0)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_text(self):
        """Canonical text: ascending exponents, signed decimal coefficients."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "v" if e == 1 else f"v^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def to_tex(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "v" if e == 1 else f"v^{{{e}}}"
                body = mono if a == 1 else f"{a}{mono}"
            sign = "-" if neg else ("+" if parts else "")
            parts.append(f"{sign}{body}")
        return "".join(parts)

    def to_json(self):
        return [[e, str(c)] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data):
        terms = {}
        for e, c in data:
            c = Fraction(c) if "/" in str(c) else int(c)
            if int(e) in terms:
                raise ValueError(f"duplicate exponent {e} in polynomial")
            terms[int(e)] = c
        return cls(terms)


def exact_quotient(num, den):
    """Return ``num / den`` in the Laurent ring, raising NotDivisible on remainder."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()
    d = den._terms
    dmax, dmin = max(d), min(d)
    lead = d[dmax]
    span = dmax - dmin
    rem = dict(num._terms)
    low = min(rem)
    quot = {}
    # leading terms are cancelled top-down; the top exponent only decreases
    for top in range(max(rem), low + span - 1, -1):
        c = rem.pop(top, 0)
        if not c:
            continue
        if isinstance(c, int) and isinstance(lead, int):
            qc, r = divmod(c, lead)
            if r:
                raise NotDivisible(f"{num} is not divisible by {den} over the integers")
        else:
            qc = Fraction(c) / lead
        shift = top - dmax
        quot[shift] = qc
        for e, x in d.items():
            if e == dmax:
                continue
            key = e + shift
            v = rem.get(key, 0) - qc * x
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    if rem:
        raise NotDivisible(f"{num} is not divisible by {den}")
    return LaurentPoly._wrap(quot)


def tpoly_trim(a):
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    return a


def tpoly_mul(a, b):
    if not a or not b:
        return []
    out = [LaurentPoly.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return tpoly_trim(out)


def _unit_inverse(u):
    if not u.is_monomial():
        raise ValueError(f"constant term {u} of the divisor is not a unit")
    (e, c), = u._terms.items()
    if c not in (1, -1):
        raise ValueError(f"constant term {u} of the divisor is not a unit")
    return LaurentPoly._wrap({-e: c})


def divide_exact(num, den):
    """Exact quotient of t-polynomials with Laurent coefficients.

    ``den`` must have a unit constant term (``+-v^k``).  Returns the trimmed
    quotient list, or raises :class:`NotDivisible` if ``den`` does not
    divide ``num``.
    """
    num = tpoly_trim(num)
    den = tpoly_trim(den)
    if not den:
        raise ZeroDivisionError("division by the zero t-polynomial")
    inv0 = _unit_inverse(den[0])
    if not num:
        return []
    n, m = len(num) - 1, len(den) - 1
    if n < m:
        raise NotDivisible("dividend has lower t-degree than divisor")

    def residual(j, quot):
        acc = num[j]
        for i in range(1, min(j, m) + 1):
            if j - i < len(quot):
                acc = acc - den[i] * quot[j - i]
        return acc

    quot = []
    for j in range(n - m + 1):
        quot.append(residual(j, quot) * inv0)
    for j in range(n - m + 1, n + 1):
        if not residual(j, quot).is_zero():
            raise NotDivisible(f"nonzero remainder at t^{j}")
    return tpoly_trim(quot)
