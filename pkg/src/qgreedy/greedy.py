"""Quantum greedy and quasi-greedy elements, and the classical v = 1 oracle.

The coefficient grid is filled in lexicographic (p, q) order from

    branch 1:  e(p,q) = sum_{k=1}^{p} (-1)^(k-1) e(p-k,q) [[a2-cq]_+ + k-1 choose k]_(v^b)
    branch 2:  e(p,q) = sum_{l=1}^{q} (-1)^(l-1) e(p,q-l) [[a1-bp]_+ + l-1 choose l]_(v^c)

with branch 1 used when c a1 q <= b a2 p and branch 2 when c a1 q >= b a2 p
(greedy), the second inequality made strict (upper) or the first (lower).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from qgreedy.laurent import LaurentPoly
from qgreedy.pointed import PointedElement, region, region_case
from qgreedy.qbinom import qbinom

HALF = Fraction(1, 2)


class ConsistencyError(RuntimeError):
    """An internal invariant guaranteed by the theory failed (a bug)."""


def pos(a):
    """[a]_+ = max(a, 0)."""
    return a if a > 0 else 0


def _branches(variant, lhs, rhs):
    if variant == "greedy":
        return lhs <= rhs, lhs >= rhs
    if variant == "upper":
        return lhs <= rhs, lhs > rhs
    if variant == "lower":
        return lhs < rhs, lhs >= rhs
    raise ValueError(f"unknown recurrence variant {variant!r}")


def _fill(base, params, variant, binom, zero, one):
    """Run the recurrence on the guarded box; ``binom(n, k, d)`` supplies coefficients."""
    a1, a2 = base
    b, c = params.b, params.c
    pmax, qmax = pos(a2) + 1, pos(a1) + 1
    e = {(0, 0): one}

    def branch1(p, q):
        top = pos(a2 - c * q) - 1
        acc = zero
        for k in range(1, p + 1):
            prev = e.get((p - k, q))
            if prev is None or top + k < k:
                continue
            term = prev * binom(top + k, k, b)
            acc = acc + term if k % 2 else acc - term
        return acc

    def branch2(p, q):
        top = pos(a1 - b * p) - 1
        acc = zero
        for l in range(1, q + 1):
            prev = e.get((p, q - l))
            if prev is None or top + l < l:
                continue
            term = prev * binom(top + l, l, c)
            acc = acc + term if l % 2 else acc - term
        return acc

    for p in range(pmax + 1):
        for q in range(qmax + 1):
            if p == 0 and q == 0:
                continue
            lhs, rhs = c * a1 * q, b * a2 * p
            use1, use2 = _branches(variant, lhs, rhs)
            if use1:
                val = branch1(p, q)
                if use2:
                    other = branch2(p, q)
                    if other != val:
                        raise ConsistencyError(
                            f"tie-line branches disagree at {(p, q)} for base {base}, {params}")
            else:
                val = branch2(p, q)
            if val:
                if p == pmax or q == qmax:
                    raise ConsistencyError(
                        f"guard band entry {(p, q)} is nonzero for base {base}, {params}")
                e[(p, q)] = val
    return e


@lru_cache(maxsize=None)
def compute(base, params, variant="greedy"):
    """The (quasi-)greedy element pointed at ``base`` as a PointedElement."""
    base = (int(base[0]), int(base[1]))
    if variant == "mean":
        return _mean(base, params)
    grid = _fill(base, params, variant, qbinom, LaurentPoly.zero(), LaurentPoly.one())
    R = region(base, params, variant)
    for (p, q) in grid:
        if not R.contains(p, q):
            raise ConsistencyError(
                f"{variant} element at {base} has support {(p, q)} outside its region")
    return PointedElement(params, base, grid)


def _mean(base, params):
    upper = compute(base, params, "upper")
    lower = compute(base, params, "lower")
    keys = set(upper.grid) | set(lower.grid)
    grid = {k: (upper.get(*k) + lower.get(*k)) * LaurentPoly.const(HALF) for k in keys}
    R = region(base, params, "mean")
    for k, poly in grid.items():
        if poly and not R.contains(*k):
            raise ConsistencyError(f"mean element at {base} has support {k} outside its region")
        if not poly.is_integral:
            raise ConsistencyError(f"mean element at {base} is not integral at {k}")
    if upper != lower:
        raise ConsistencyError(f"upper and lower quasi-greedy elements differ at {base}")
    return PointedElement(params, base, {k: poly.to_integral() for k, poly in grid.items()})


@dataclass(frozen=True)
class ClassicalPointed:
    base: tuple
    grid: dict

    def get(self, p, q):
        return self.grid.get((p, q), 0)


def _classical_binom(n, k, d):
    return comb(n, k)


@lru_cache(maxsize=None)
def classical_greedy(base, params):
    """The commutative greedy element: same recurrence with ordinary binomials."""
    base = (int(base[0]), int(base[1]))
    grid = _fill(base, params, "greedy", _classical_binom, 0, 1)
    return ClassicalPointed(base, grid)


def baseline(base, params):
    """Boundary sequences e(p, 0) and e(0, q)."""
    a1, a2 = base
    row = [qbinom(pos(a2), p, params.b) for p in range(pos(a2) + 1)]
    col = [qbinom(pos(a1), q, params.c) for q in range(pos(a1) + 1)]
    return row, col


@dataclass(frozen=True)
class ClosedForm:
    element: PointedElement
    cluster: tuple  # (k, n1, n2): the element is X_k^(n1, n2)


def cluster_monomial_index(base, params):
    """(k, n1, n2) with X[a1,a2] = X_k^(n1,n2), for region cases 1-5."""
    a1, a2 = base
    b, c = params.b, params.c
    case = region_case(base, params)
    if case == 1:
        return (1, -a1, -a2)
    if case == 2:
        return (0, a2, -a1)
    if case == 3:
        return (2, -a2, a1)
    if case == 4:
        return (3, a1 - b * a2, a2)
    if case == 5:
        return (-1, a1, a2 - c * a1)
    return None


def closed_form(base, params):
    """Product-of-binomials grid for cases 1-5; None in case 6."""
    a1, a2 = base
    b, c = params.b, params.c
    case = region_case(base, params)
    grid = {}
    if case == 1:
        grid[(0, 0)] = LaurentPoly.one()
    elif case == 2:
        for p in range(a2 + 1):
            grid[(p, 0)] = qbinom(a2, p, b)
    elif case == 3:
        for q in range(a1 + 1):
            grid[(0, q)] = qbinom(a1, q, c)
    elif case == 4:
        for p in range(a2 + 1):
            for q in range(a1 - b * p + 1):
                grid[(p, q)] = qbinom(a2, p, b) * qbinom(a1 - b * p, q, c)
    elif case == 5:
        for q in range(a1 + 1):
            for p in range(a2 - c * q + 1):
                grid[(p, q)] = qbinom(a2 - c * q, p, b) * qbinom(a1, q, c)
    else:
        return None
    element = PointedElement(params, (a1, a2), grid)
    return ClosedForm(element, cluster_monomial_index(base, params))


def greedy_element(base, params):
    """X[a1, a2] as a torus element."""
    return compute(tuple(base), params, "greedy").to_torus()
