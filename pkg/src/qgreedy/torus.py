"""The quantum torus Z[v^+-1]<X1^+-1, X2^+-1 : X2 X1 = v^2 X1 X2>.

Elements are stored in the basis of normalized monomials
``X^(e1,e2) = v^(e1 e2) X1^e1 X2^e2``, which are bar-invariant.  The only
multiplication rule needed is ``X^(a,b) X^(c,d) = v^(bc-ad) X^(a+c,b+d)``.
"""
from dataclasses import dataclass
from functools import lru_cache
from numbers import Rational

from qgreedy import kernels
from qgreedy.laurent import LaurentPoly


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured size limits."""


@dataclass(frozen=True)
class AlgebraParams:
    b: int
    c: int

    def __post_init__(self):
        for name in ("b", "c"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, int) or val < 1:
                raise ValueError(f"{name} must be a positive integer, got {val!r}")

    @property
    def kind(self):
        bc = self.b * self.c
        if bc <= 3:
            return "finite"
        return "affine" if bc == 4 else "wild"


@dataclass(frozen=True)
class Limits:
    max_index_distance: int = 6
    max_terms: int = 10**6


DEFAULT_LIMITS = Limits()


def mono_mul(m1, m2):
    """Multiply normalized monomials: returns ``(scalar, exponent)``."""
    (a, b), (c, d) = m1, m2
    return LaurentPoly.monomial(b * c - a * d), (a + c, b + d)


def _as_scalar(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Rational) and not isinstance(x, bool):
        return LaurentPoly.const(x)
    return None


class TorusElement:
    """A finite sum of normalized monomials with Laurent coefficients."""

    __slots__ = ("params", "_coeffs")

    def __init__(self, params, coeffs=None):
        self.params = params
        clean = {}
        for key, poly in (coeffs or {}).items():
            e1, e2 = key
            poly = _as_scalar(poly)
            if poly is None:
                raise TypeError("torus coefficients must be LaurentPoly or rational")
            if poly:
                clean[(int(e1), int(e2))] = poly
        self._coeffs = clean

    @classmethod
    def _wrap(cls, params, coeffs):
        obj = cls.__new__(cls)
        obj.params = params
        obj._coeffs = coeffs
        return obj

    @classmethod
    def _from_raw(cls, params, raw):
        return cls._wrap(params, {k: LaurentPoly._wrap(t) for k, t in raw.items()})

    def _raw(self):
        return {k: p._terms for k, p in self._coeffs.items()}

    @classmethod
    def monomial(cls, params, e1, e2, coeff=1):
        return cls(params, {(e1, e2): coeff})

    @classmethod
    def zero(cls, params):
        return cls._wrap(params, {})

    @classmethod
    def one(cls, params):
        return cls._wrap(params, {(0, 0): LaurentPoly.one()})

    def coeff(self, e1, e2):
        return self._coeffs.get((e1, e2), LaurentPoly.zero())

    def items(self):
        return sorted(self._coeffs.items())

    def support(self):
        return set(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def term_count(self):
        return sum(len(p) for p in self._coeffs.values())

    def _check(self, other):
        if not isinstance(other, TorusElement):
            return False
        if other.params != self.params:
            raise ValueError(f"parameter mismatch: {self.params} vs {other.params}")
        return True

    def __add__(self, other):
        if not self._check(other):
            s = _as_scalar(other)
            if s is None:
                return NotImplemented
            other = TorusElement._wrap(self.params, {(0, 0): s} if s else {})
        out = dict(self._coeffs)
        for k, p in other._coeffs.items():
            q = out[k] + p if k in out else p
            if q:
                out[k] = q
            else:
                out.pop(k, None)
        return TorusElement._wrap(self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement._wrap(self.params, {k: -p for k, p in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, TorusElement) or _as_scalar(other) is not None:
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, f):
        """Multiply by a central scalar ``f``."""
        f = _as_scalar(f)
        if not f:
            return TorusElement.zero(self.params)
        out = {}
        for k, p in self._coeffs.items():
            q = p * f
            if q:
                out[k] = q
        return TorusElement._wrap(self.params, out)

    def __mul__(self, other):
        if self._check(other):
            raw = kernels.torus_mul(self._raw(), other._raw())
            return TorusElement._from_raw(self.params, raw)
        if _as_scalar(other) is not None:
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        if _as_scalar(other) is not None:
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._coeffs) != 1:
                raise ValueError("only monomials are invertible in the torus")
            ((e1, e2), p), = self._coeffs.items()
            # collinear monomials multiply without a v-correction
            return TorusElement._wrap(self.params, {(e1 * n, e2 * n): p ** n})
        result = TorusElement.one(self.params)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def bar(self):
        """Bar-involution: normalized monomials are fixed, coefficients barred."""
        return TorusElement._wrap(self.params, {k: p.bar() for k, p in self._coeffs.items()})

    def is_bar_invariant(self):
        return all(p.is_bar_invariant() for p in self._coeffs.values())

    def eval_at_one(self):
        """Specialize v = 1: map each exponent to an exact number."""
        out = {}
        for k, p in self._coeffs.items():
            val = p.eval_at_one()
            if val:
                out[k] = val
        return out

    def __eq__(self, other):
        if isinstance(other, TorusElement):
            return self.params == other.params and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.params, frozenset(self._coeffs.items())))

    def __repr__(self):
        body = " + ".join(f"({p})*X^{k}" for k, p in self.items()) or "0"
        return f"TorusElement(b={self.params.b}, c={self.params.c}: {body})"

    def to_json(self):
        return {
            "b": self.params.b,
            "c": self.params.c,
            "coeffs": [{"e1": e1, "e2": e2, "poly": p.to_json()}
                       for (e1, e2), p in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        params = AlgebraParams(int(data["b"]), int(data["c"]))
        coeffs = {}
        for entry in data["coeffs"]:
            key = (int(entry["e1"]), int(entry["e2"]))
            if key in coeffs:
                raise ValueError(f"duplicate monomial {key}")
            coeffs[key] = LaurentPoly.from_json(entry["poly"])
        return cls(params, coeffs)


def _check_limits(m, elem, limits):
    if elem.term_count() > limits.max_terms:
        raise ResourceLimitError(
            f"cluster variable X_{m} exceeds {limits.max_terms} terms")


def cluster_variable(m, params, limits=DEFAULT_LIMITS):
    """The Laurent expansion of X_m in the initial cluster {X1, X2}."""
    if abs(m - 1) > limits.max_index_distance:
        raise ResourceLimitError(
            f"|m - 1| = {abs(m - 1)} exceeds the limit {limits.max_index_distance}")
    elem = _cluster_variable(m, params)
    _check_limits(m, elem, limits)
    return elem


@lru_cache(maxsize=256)
def _cluster_variable(m, params):
    from qgreedy.symmetry import sigma1, sigma2

    if m == 1:
        return TorusElement.monomial(params, 1, 0)
    if m == 2:
        return TorusElement.monomial(params, 0, 1)
    # sigma2 sigma1 shifts indices by +2, sigma1 sigma2 by -2
    if m > 2:
        return sigma2(sigma1(_cluster_variable(m - 2, params)))
    return sigma1(sigma2(_cluster_variable(m + 2, params)))


def cluster_monomial(m, n1, n2, params, limits=DEFAULT_LIMITS):
    """The normalized monomial v^(n1 n2) X_m^n1 X_(m+1)^n2 in the initial cluster."""
    if n1 < 0 or n2 < 0:
        raise ValueError("cluster monomial exponents must be nonnegative")
    if m == 1:
        return TorusElement.monomial(params, n1, n2)
    left = cluster_variable(m, params, limits) ** n1
    right = cluster_variable(m + 1, params, limits) ** n2
    result = (left * right).scale(LaurentPoly.monomial(n1 * n2))
    if result.term_count() > limits.max_terms:
        raise ResourceLimitError(f"cluster monomial exceeds {limits.max_terms} terms")
    return result


def denominator_vector(m, params):
    """Denominator vector of x_m by the tropical exchange recurrence."""
    b, c = params.b, params.c
    vecs = {1: (-1, 0), 2: (0, -1)}

    def step(prev, cur, k):
        # x_(k+1) x_(k-1) = x_k^b + 1 for odd k, x_k^c + 1 for even k
        e = b if k % 2 else c
        return tuple(max(e * x, 0) - y for x, y in zip(cur, prev))

    k = 2
    while m > k:
        vecs[k + 1] = step(vecs[k - 1], vecs[k], k)
        k += 1
    k = 1
    while m < k:
        vecs[k - 1] = step(vecs[k + 1], vecs[k], k)
        k -= 1
    return vecs[m]
