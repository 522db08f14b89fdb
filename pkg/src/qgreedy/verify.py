"""Verification sweep: the acceptance checks, shared by the CLI and tests.

Each check returns a list of report rows ``{check_id, params, base, status,
detail}``: one summary row per parameter pair (``base`` is None) followed by
one row per failing base.  ``status`` is ``pass``, ``fail`` or, for the
non-gating positivity exploration, ``report``.
"""
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from qgreedy.expand import expand_in_greedy
from qgreedy.greedy import (ConsistencyError, classical_greedy, closed_form, compute,
                            greedy_element)
from qgreedy.laurent import LaurentPoly
from qgreedy.pointed import check_divisibility, classify_root, region, region_case
from qgreedy.qbinom import qbinom
from qgreedy.symmetry import NotLaurent, expand_in_cluster, sigma_apply, sigma_on_greedy_params
from qgreedy.torus import (AlgebraParams, Limits, ResourceLimitError, TorusElement,
                           cluster_monomial, cluster_variable, denominator_vector)


@dataclass
class SweepConfig:
    params: list = field(default_factory=lambda: [(1, 1), (1, 2), (2, 2), (2, 3), (3, 1)])
    N: int = 6
    variants: list = field(default_factory=lambda: ["greedy", "upper", "lower", "mean"])
    checks: list = None
    expand_params: list = field(default_factory=lambda: [(2, 2), (1, 2)])
    expand_N: int = 3
    cluster_k: tuple = (-2, 4)
    cluster_max_exponent: int = 3
    cluster_max_bc: int = 6
    exchange_m: tuple = (-1, 3)
    positivity_params: list = field(default_factory=lambda: [(1, 1), (1, 2), (2, 2), (2, 4)])
    positivity_N: int = 4
    max_index_distance: int = 6
    max_terms: int = 10**6

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        self.params = [tuple(p) for p in self.params]
        self.expand_params = [tuple(p) for p in self.expand_params]
        self.positivity_params = [tuple(p) for p in self.positivity_params]
        self.cluster_k = tuple(self.cluster_k)
        self.exchange_m = tuple(self.exchange_m)
        for b, c in self.params + self.expand_params + self.positivity_params:
            AlgebraParams(b, c)
        if self.checks is not None:
            unknown = set(self.checks) - set(CHECKS)
            if unknown:
                raise ValueError(f"unknown checks: {sorted(unknown)}")

    @property
    def limits(self):
        return Limits(self.max_index_distance, self.max_terms)

    def bases(self, N=None):
        N = self.N if N is None else N
        return [(a1, a2) for a1 in range(-N, N + 1) for a2 in range(-N, N + 1)]

    @classmethod
    def from_json(cls, data):
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def to_json(self):
        return asdict(self)


def _row(check_id, params, base, status, detail=None):
    return {
        "check_id": check_id,
        "params": list(params) if params is not None else None,
        "base": list(base) if base is not None else None,
        "status": status,
        "detail": detail or {},
    }


def _sweep(check_id, params_list, bases, test):
    """Run ``test(P, base) -> (ok, detail)`` over a grid of cases."""
    rows = []
    for bc in params_list:
        P = AlgebraParams(*bc)
        failures, count = [], 0
        for base in bases(P):
            count += 1
            try:
                ok, detail = test(P, base)
            except (ConsistencyError, NotLaurent, ValueError) as exc:
                ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
            if not ok:
                failures.append(_row(check_id, bc, base, "fail", detail))
        rows.append(_row(check_id, bc, None, "fail" if failures else "pass",
                         {"cases": count, "failures": len(failures)}))
        rows.extend(failures)
    return rows


def check_closed_form(cfg):
    def bases(P):
        return [x for x in cfg.bases() if region_case(x, P) <= 5]

    def test(P, base):
        cf = closed_form(base, P)
        return compute(base, P, "greedy") == cf.element, {"case": region_case(base, P)}

    return _sweep("closed_form", cfg.params, bases, test)


def check_quasi_greedy_equality(cfg):
    def test(P, base):
        g = compute(base, P, "greedy")
        up = compute(base, P, "upper")
        lo = compute(base, P, "lower")
        mean = compute(base, P, "mean")  # raises unless integral and upper == lower
        ok = g == up == lo == mean
        return ok, {"root": classify_root(base, P)}

    return _sweep("quasi_greedy_equality", cfg.params, lambda P: cfg.bases(), test)


def check_support_divisibility(cfg):
    def test(P, base):
        detail = {}
        ok = True
        for variant in cfg.variants:
            elem = compute(base, P, variant)
            R = region(base, P, variant)
            outside = [k for k in elem.grid if not R.contains(*k)]
            report = check_divisibility(elem)
            if outside or not report.passed:
                ok = False
                detail[variant] = {"outside": outside, "rows": report.rows, "cols": report.cols}
            if report.literal_row_disagreements:
                detail.setdefault("literal_row_flips", {})[variant] = report.literal_row_disagreements
        return ok, detail

    return _sweep("support_divisibility", cfg.params, lambda P: cfg.bases(), test)


def check_specialization(cfg):
    def test(P, base):
        classical = classical_greedy(base, P).grid
        bad = [v for v in ("greedy", "upper", "lower")
               if compute(base, P, v).eval_at_one() != classical]
        return not bad, {"mismatched_variants": bad}

    return _sweep("specialization", cfg.params, lambda P: cfg.bases(), test)


def check_sigma_equivariance(cfg):
    def test(P, base):
        X = greedy_element(base, P)
        bad = []
        for ell in (1, 2):
            target = sigma_on_greedy_params(ell, base, P)
            if sigma_apply(ell, X) != greedy_element(target, P):
                bad.append(ell)
        return not bad, {"failed_ell": bad}

    return _sweep("sigma_equivariance", cfg.params, lambda P: cfg.bases(), test)


def check_laurent_phenomenon(cfg):
    def test(P, base):
        X = greedy_element(base, P)
        for m in (0, 1, 2, 3):
            expand_in_cluster(X, m)
        return True, {}

    return _sweep("laurent_phenomenon", cfg.params, lambda P: cfg.bases(), test)


def binomial_theorem_holds(n, params):
    X = TorusElement.monomial(params, 1, 0)
    Y = TorusElement.monomial(params, 0, 1)
    lhs = (X + Y) ** n
    rhs = TorusElement.zero(params)
    for k in range(n + 1):
        coeff = qbinom(n, k) * LaurentPoly.monomial(k * (n - k))
        rhs = rhs + ((X ** k) * (Y ** (n - k))).scale(coeff)
    return lhs == rhs


def convolution_holds(m, n, k, d=1):
    lhs = qbinom(m + n, k, d)
    rhs = LaurentPoly.zero()
    for r in range(k + 1):
        s = k - r
        rhs = rhs + LaurentPoly.monomial(d * (n * r - m * s)) * qbinom(m, r, d) * qbinom(n, s, d)
    return lhs == rhs


def check_binomial_identities(cfg):
    rows = []
    P = AlgebraParams(1, 1)
    bad = [n for n in range(7) if not binomial_theorem_holds(n, P)]
    rows.append(_row("binomial_identities", None, None, "fail" if bad else "pass",
                     {"identity": "binomial_theorem", "cases": 7, "failures": bad}))
    bad = [(m, n, k) for m in range(-5, 6) for n in range(-5, 6) for k in range(7)
           if not convolution_holds(m, n, k)]
    rows.append(_row("binomial_identities", None, None, "fail" if bad else "pass",
                     {"identity": "convolution", "cases": 11 * 11 * 7, "failures": bad}))
    return rows


def check_basis_expansion(cfg):
    rows = []
    P = AlgebraParams(2, 2)
    x11 = greedy_element((1, 1), P)
    product = x11 * x11
    exp = expand_in_greedy(product)
    one = LaurentPoly.one()
    ok = exp.succeeded and exp.terms == [((0, 0), 2 * one), ((2, 2), one)]
    rows.append(_row("basis_expansion", (2, 2), (1, 1), "pass" if ok else "fail",
                     {"example": "X[1,1]^2", "terms": [[list(k), str(f)] for k, f in exp.terms]}))

    def bases(P):
        pts = cfg.bases(cfg.expand_N)
        return [(x, y) for x in pts for y in pts]

    def test(P, pair):
        x, y = pair
        A = greedy_element(x, P) * greedy_element(y, P)
        exp = expand_in_greedy(A)
        ok = exp.succeeded and exp.reconstruct() == A
        return ok, {"residual_terms": len(exp.residual), "non_integral": exp.non_integral}

    rows.extend(_sweep("basis_expansion", cfg.expand_params, bases, test))
    return rows


def _small_params(max_bc):
    return [(b, c) for b in range(1, max_bc + 1) for c in range(1, max_bc + 1) if b * c <= max_bc]


def check_cluster_monomials(cfg):
    kmin, kmax = cfg.cluster_k
    limits = cfg.limits
    rows = []
    for bc in _small_params(cfg.cluster_max_bc):
        P = AlgebraParams(*bc)
        failures, count, skipped = [], 0, 0
        for k in range(kmin, kmax + 1):
            Pk, Pk1 = denominator_vector(k, P), denominator_vector(k + 1, P)
            for m in range(cfg.cluster_max_exponent + 1):
                for n in range(cfg.cluster_max_exponent + 1):
                    base = (m * Pk[0] + n * Pk1[0], m * Pk[1] + n * Pk1[1])
                    try:
                        expected = cluster_monomial(k, m, n, P, limits)
                    except ResourceLimitError:
                        skipped += 1
                        continue
                    count += 1
                    if greedy_element(base, P) != expected:
                        failures.append(_row("cluster_monomials", bc, base, "fail",
                                             {"k": k, "m": m, "n": n}))
        rows.append(_row("cluster_monomials", bc, None, "fail" if failures else "pass",
                         {"cases": count, "skipped": skipped, "failures": len(failures)}))
        rows.extend(failures)
    return rows


def check_exchange_relations(cfg):
    mmin, mmax = cfg.exchange_m

    def bases(P):
        return list(range(mmin, mmax + 1))

    def test(P, m):
        Xm = cluster_variable(m, P)
        Xprev, Xnext = cluster_variable(m - 1, P), cluster_variable(m + 1, P)
        e = P.b if m % 2 else P.c
        exchange = Xnext * Xprev == (Xm ** e).scale(LaurentPoly.monomial(e)) + 1
        quasi = Xnext * Xm == (Xm * Xnext).scale(LaurentPoly.monomial(2))
        return exchange and quasi, {"exchange": exchange, "quasi_commutation": quasi}

    rows = _sweep("exchange_relations", cfg.params, bases, test)
    for row in rows:
        if row["base"] is not None:
            row["base"] = [row["base"]]
    return rows


def positivity_rows(params_list, N):
    """Cluster-by-cluster coefficient minima of greedy elements (exploratory)."""
    rows = []
    for bc in params_list:
        P = AlgebraParams(*bc)
        negatives = 0
        for a1 in range(-N, N + 1):
            for a2 in range(-N, N + 1):
                X = greedy_element((a1, a2), P)
                minima = {}
                for m in (0, 1, 2, 3):
                    coeffs = [c for _, poly in expand_in_cluster(X, m).items()
                              for _, c in poly.items()]
                    minima[str(m)] = min(coeffs)
                positive = all(v >= 0 for v in minima.values())
                negatives += not positive
                rows.append(_row("positivity", bc, (a1, a2), "report",
                                 {"cluster_minima": minima, "positive": positive}))
        rows.append(_row("positivity", bc, None, "report",
                         {"bases": (2 * N + 1) ** 2, "non_positive": negatives}))
    return rows


def check_positivity(cfg):
    return positivity_rows(cfg.positivity_params, cfg.positivity_N)


CHECKS = {
    "closed_form": check_closed_form,
    "quasi_greedy_equality": check_quasi_greedy_equality,
    "support_divisibility": check_support_divisibility,
    "specialization": check_specialization,
    "sigma_equivariance": check_sigma_equivariance,
    "laurent_phenomenon": check_laurent_phenomenon,
    "binomial_identities": check_binomial_identities,
    "basis_expansion": check_basis_expansion,
    "cluster_monomials": check_cluster_monomials,
    "exchange_relations": check_exchange_relations,
    "positivity": check_positivity,
}

NON_GATING = {"positivity"}


def run_check(name, cfg):
    return CHECKS[name](cfg)


def run(cfg=None):
    """Run the configured checks; returns ``(passed, rows)``."""
    cfg = cfg or SweepConfig()
    names = cfg.checks if cfg.checks is not None else list(CHECKS)
    rows = []
    for name in names:
        rows.extend(run_check(name, cfg))
    passed = all(r["status"] != "fail" for r in rows)
    rows.sort(key=lambda r: (r["check_id"], json.dumps(r["params"]),
                             r["base"] is not None, json.dumps(r["base"]),
                             json.dumps(r["detail"], sort_keys=True, default=str)))
    return passed, rows


def summarize(rows):
    """Per-check verdicts for the gating checks present in ``rows``."""
    out = {}
    for r in rows:
        if r["check_id"] in NON_GATING:
            continue
        failed = out.get(r["check_id"]) == "fail" or r["status"] == "fail"
        out[r["check_id"]] = "fail" if failed else "pass"
    return out


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_json_default) + "\n"


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, LaurentPoly):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")
