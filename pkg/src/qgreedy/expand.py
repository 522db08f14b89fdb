"""Expansion of cluster algebra elements in the quantum greedy basis.

Greedy elements are pointed, so the componentwise-minimal monomials of an
element determine the leading greedy terms.  Subtracting them only creates
monomials strictly above the eliminated corners.
"""
from dataclasses import dataclass, field

from qgreedy.greedy import greedy_element
from qgreedy.laurent import LaurentPoly

DEFAULT_MAX_ITERATIONS = 10**4


@dataclass
class GreedyExpansion:
    params: object
    terms: list
    residual: object
    iterations: int = 0
    converged: bool = True
    non_integral: list = field(default_factory=list)

    @property
    def succeeded(self):
        return self.converged and self.residual.is_zero() and not self.non_integral

    def reconstruct(self):
        total = self.residual
        for base, coeff in self.terms:
            total = total + greedy_element(base, self.params).scale(coeff)
        return total

    def to_json(self):
        return {
            "b": self.params.b,
            "c": self.params.c,
            "terms": [{"a1": a1, "a2": a2, "poly": coeff.to_json()}
                      for (a1, a2), coeff in self.terms],
            "residual": self.residual.to_json()["coeffs"],
            "converged": self.converged,
            "iterations": self.iterations,
        }


def minimal_points(support):
    """Componentwise-minimal points of a finite set, in lexicographic order."""
    out = []
    best = None
    for e1, e2 in sorted(support):
        if best is None or e2 < best:
            out.append((e1, e2))
            best = e2
    return out


def expand_in_greedy(A, max_iterations=DEFAULT_MAX_ITERATIONS):
    params = A.params
    coeffs = {}
    residual = A
    iterations = 0
    while not residual.is_zero():
        if iterations >= max_iterations:
            break
        iterations += 1
        for corner in minimal_points(residual.support()):
            f = residual.coeff(*corner)
            if f.is_zero():
                continue
            base = (-corner[0], -corner[1])
            residual = residual - greedy_element(base, params).scale(f)
            total = coeffs.get(base, LaurentPoly.zero()) + f
            if total:
                coeffs[base] = total
            else:
                coeffs.pop(base, None)
    terms = sorted(coeffs.items())
    return GreedyExpansion(
        params=params,
        terms=terms,
        residual=residual,
        iterations=iterations,
        converged=residual.is_zero(),
        non_integral=[base for base, f in terms if not f.is_integral],
    )
