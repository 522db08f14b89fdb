"""Pointed elements, support regions, root classification and divisibility.

An element pointed at (a1, a2) is

    sum_{p,q >= 0} e(p,q) X^(-a1 + b p, -a2 + c q),   e(0,0) = 1,

and ``phi(p, q) = (-a1 + b p, -a2 + c q)`` maps its grid into the torus.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from qgreedy.laurent import LaurentPoly, NotDivisible, divide_exact
from qgreedy.qbinom import binomial_tpoly
from qgreedy.torus import AlgebraParams, TorusElement

VARIANTS = ("greedy", "upper", "lower", "mean")


class NotPointed(ValueError):
    """A torus element is not pointed.

    ``reason`` is ``"empty"``, ``"lattice"`` (support off the lattice
    ``(-a1 + b p, -a2 + c q)``) or ``"corner"`` (corner coefficient not 1).
    """

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


class PointedElement:
    __slots__ = ("params", "base", "grid")

    def __init__(self, params, base, grid):
        self.params = params
        self.base = (int(base[0]), int(base[1]))
        clean = {}
        for (p, q), poly in grid.items():
            if p < 0 or q < 0:
                raise ValueError(f"grid index ({p}, {q}) is negative")
            if not isinstance(poly, LaurentPoly):
                poly = LaurentPoly.const(poly)
            if poly:
                clean[(p, q)] = poly
        if clean.get((0, 0)) != LaurentPoly.one():
            raise ValueError("a pointed element needs e(0,0) = 1")
        self.grid = clean

    def phi(self, p, q):
        a1, a2 = self.base
        return (-a1 + self.params.b * p, -a2 + self.params.c * q)

    def get(self, p, q):
        return self.grid.get((p, q), LaurentPoly.zero())

    def support(self):
        return set(self.grid)

    def items(self):
        return sorted(self.grid.items())

    def to_torus(self):
        return TorusElement._wrap(self.params, {self.phi(p, q): poly
                                                for (p, q), poly in self.grid.items()})

    def eval_at_one(self):
        return {k: poly.eval_at_one() for k, poly in self.grid.items()
                if poly.eval_at_one()}

    def is_bar_invariant(self):
        return all(poly.is_bar_invariant() for poly in self.grid.values())

    def __eq__(self, other):
        if not isinstance(other, PointedElement):
            return NotImplemented
        return (self.params, self.base, self.grid) == (other.params, other.base, other.grid)

    def __repr__(self):
        return (f"PointedElement(b={self.params.b}, c={self.params.c}, "
                f"base={self.base}, {len(self.grid)} entries)")

    def to_json(self):
        return {
            "b": self.params.b,
            "c": self.params.c,
            "a1": self.base[0],
            "a2": self.base[1],
            "grid": [{"p": p, "q": q, "poly": poly.to_json()} for (p, q), poly in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        params = AlgebraParams(int(data["b"]), int(data["c"]))
        grid = {}
        for entry in data["grid"]:
            key = (int(entry["p"]), int(entry["q"]))
            if key in grid:
                raise ValueError(f"duplicate grid entry {key}")
            grid[key] = LaurentPoly.from_json(entry["poly"])
        return cls(params, (int(data["a1"]), int(data["a2"])), grid)


def to_pointed(A):
    """Read a torus element as a pointed element, or raise NotPointed."""
    if A.is_zero():
        raise NotPointed("empty", "the zero element is not pointed")
    b, c = A.params.b, A.params.c
    a1 = -min(e1 for e1, _ in A.support())
    a2 = -min(e2 for _, e2 in A.support())
    grid = {}
    for (e1, e2), poly in A._coeffs.items():
        p, rp = divmod(e1 + a1, b)
        q, rq = divmod(e2 + a2, c)
        if rp or rq:
            raise NotPointed("lattice", f"monomial {(e1, e2)} is off the lattice of base {(a1, a2)}")
        grid[(p, q)] = poly
    if grid.get((0, 0)) != LaurentPoly.one():
        raise NotPointed("corner", f"corner coefficient at {(-a1, -a2)} is "
                                   f"{grid.get((0, 0), LaurentPoly.zero())}, not 1")
    return PointedElement(A.params, (a1, a2), grid)


def classify_root(base, params):
    a1, a2 = base
    b, c = params.b, params.c
    if a1 > 0 and a2 > 0 and c * a1 * a1 - b * c * a1 * a2 + b * a2 * a2 <= 0:
        return "imaginary"
    return "real"


def region_case(base, params):
    """The case number 1..6 of the pointed support region."""
    a1, a2 = base
    b, c = params.b, params.c
    if a1 <= 0 and a2 <= 0:
        return 1
    if a1 <= 0 < a2:
        return 2
    if a2 <= 0 < a1:
        return 3
    if b * a2 <= a1:
        return 4
    if c * a1 <= a2:
        return 5
    return 6


@dataclass(frozen=True)
class SupportRegion:
    params: AlgebraParams
    base: tuple
    variant: str = "greedy"
    case: int = field(init=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "base", (int(self.base[0]), int(self.base[1])))
        object.__setattr__(self, "case", region_case(self.base, self.params))

    @property
    def vertices(self):
        a1, a2 = self.base
        b, c = self.params.b, self.params.c
        F = Fraction
        return {
            "O": (F(0), F(0)),
            "A": (F(a2), F(0)),
            "B": (F(a1, b), F(a2, c)),
            "C": (F(0), F(a1)),
            "D1": (F(a2), F(a1 - b * a2)),
            "D2": (F(a2 - c * a1), F(a1)),
        }

    def contains(self, p, q):
        p, q = Fraction(p), Fraction(q)
        if p < 0 or q < 0:
            return False
        a1, a2 = self.base
        b, c = self.params.b, self.params.c
        case = self.case
        if case == 1:
            return p == 0 and q == 0
        if case == 2:
            return q == 0 and p <= a2
        if case == 3:
            return p == 0 and q <= a1
        if case == 4:
            return p <= a2 and q <= a1 - b * p
        if case == 5:
            return q <= a1 and p <= a2 - c * q
        if (p, q) in ((0, a1), (a2, 0)):
            return True
        # lines BC and AB: q + slope_bc p = a1 and p + slope_ab q = a2
        bc_value = q + (b - Fraction(b * a2, c * a1)) * p
        ab_value = p + (c - Fraction(c * a1, b * a2)) * q
        near_c = p < Fraction(a1, b)
        near_a = q < Fraction(a2, c)
        if near_c and bc_value < a1:
            return True
        if near_a and ab_value < a2:
            return True
        if self.variant in ("upper", "mean") and near_c and bc_value == a1:
            return True
        if self.variant in ("lower", "mean") and near_a and ab_value == a2:
            return True
        return False

    def bounding_box(self):
        a1, a2 = self.base
        return max(a2, 0), max(a1, 0)

    def lattice_points(self):
        pmax, qmax = self.bounding_box()
        return [(p, q) for p in range(pmax + 1) for q in range(qmax + 1) if self.contains(p, q)]


def region(base, params, variant="greedy"):
    return SupportRegion(params, tuple(base), variant)


def in_region(pt, R):
    return R.contains(*pt)


@dataclass
class DivisibilityReport:
    rows: dict
    cols: dict
    literal_row_disagreements: list = field(default_factory=list)

    @property
    def rows_passed(self):
        return all(self.rows.values())

    @property
    def cols_passed(self):
        return all(self.cols.values())

    @property
    def passed(self):
        return self.rows_passed and self.cols_passed


def _divides(den, num):
    try:
        divide_exact(num, den)
    except NotDivisible:
        return False
    return True


def check_divisibility(P):
    """Row/column divisibility test characterizing membership in the algebra.

    Row ``q`` (0 <= q < a2/c) needs sum_k [a2 - cq choose k]_(v^b) t^k to
    divide sum_p e(p,q) t^p; column ``p`` (0 <= p < a1/b) needs
    sum_l [a1 - bp choose l]_(v^c) t^l to divide sum_q e(p,q) t^q.  When
    b != c the report also lists rows whose verdict would flip if the row
    divisor were taken at v^c instead.
    """
    a1, a2 = P.base
    b, c = P.params.b, P.params.c
    rows, cols, flips = {}, {}, []
    q = 0
    while c * q < a2:
        line = _line(P, q, axis="row")
        rows[q] = _divides(binomial_tpoly(a2 - c * q, b), line)
        if b != c and _divides(binomial_tpoly(a2 - c * q, c), line) != rows[q]:
            flips.append(q)
        q += 1
    p = 0
    while b * p < a1:
        cols[p] = _divides(binomial_tpoly(a1 - b * p, c), _line(P, p, axis="col"))
        p += 1
    return DivisibilityReport(rows, cols, flips)


def _line(P, idx, axis):
    if axis == "row":
        entries = {p: poly for (p, q), poly in P.grid.items() if q == idx}
    else:
        entries = {q: poly for (p, q), poly in P.grid.items() if p == idx}
    if not entries:
        return []
    return [entries.get(i, LaurentPoly.zero()) for i in range(max(entries) + 1)]
