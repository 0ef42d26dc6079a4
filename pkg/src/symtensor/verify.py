"""End-to-end verification suite: cross-route identities, oracles, and bounds.

Each check returns a CheckResult; the CLI prints one line per check and tests
assert on the same objects.  Groebner bases are computed once per run and
shared, with their cost attributed to the first check that needs them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import catalog
from .errors import IntegrityError, LimitExceeded
from .groebner import GroebnerLimits, normal_form, s_polynomial
from .hilbert import (MonomialIdeal, count_standard_monomials, series_eq,
                      series_from_monomial_ideal, series_product)
from .invariants import build_group, invariant_dimension

PASS = "pass"
FAIL = "fail"
SKIP = "skip"          # intentionally not run (stretch item); counts as pass
LIMIT = "limit"        # work cut short by a budget

STRETCH_NAME = "grassmannian-2-4-bigness"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str
    elapsed: float


@dataclass
class VerifyConfig:
    max_degree: int = 8
    gb_timeout: float | None = 300.0
    gb_max_degree: int | None = 12
    stretch: bool = False
    stretch_timeout: float | None = 1800.0


class VerifyContext:
    """Caches Groebner routes and records artifacts for the integrity sweep."""

    def __init__(self, config: VerifyConfig):
        self.config = config
        self._routes: dict[str, tuple] = {}
        self.recorded_series: list = []
        self.recorded_groups: list = []

    def route(self, spec_text: str, timeout: float | None = None):
        """(presentation, basis, series) for a Groebner-backed spec, cached."""
        if spec_text not in self._routes:
            spec = catalog.parse_spec(spec_text)
            presentation = catalog.ideal_presentation_for(spec)
            limits = GroebnerLimits(
                max_degree=self.config.gb_max_degree,
                timeout=self.config.gb_timeout if timeout is None else timeout)
            basis, _, series = catalog.groebner_route(presentation, limits)
            self._routes[spec_text] = (presentation, basis, series)
            self.recorded_series.append((spec_text, series))
        return self._routes[spec_text]

    def cached_routes(self):
        return dict(self._routes)

    def record_series(self, label, series):
        self.recorded_series.append((label, series))


_CHECKS: list = []


def _check(name):
    def decorate(fn):
        def wrapper(ctx: VerifyContext) -> CheckResult:
            start = time.monotonic()
            try:
                status, detail = fn(ctx)
            except LimitExceeded as exc:
                return CheckResult(name, LIMIT,
                                   f"limit: {exc} (pairs={exc.pairs_processed}, "
                                   f"degree={exc.max_degree_reached})",
                                   time.monotonic() - start)
            except (AssertionError, IntegrityError) as exc:
                return CheckResult(name, FAIL, f"{type(exc).__name__}: {exc}",
                                   time.monotonic() - start)
            return CheckResult(name, status, detail, time.monotonic() - start)
        wrapper.__name__ = fn.__name__
        wrapper.check_name = name
        _CHECKS.append(wrapper)
        return wrapper
    return decorate


@_check("projective-space-two-route")
def _check_projective_two_route(ctx):
    """Rank-one nilpotent-cone route equals the closed binomial formula."""
    windows = {2: 8, 3: 6}
    details = []
    for n, stated in windows.items():
        depth = min(stated, ctx.config.max_degree)
        _, _, series = ctx.route(f"Gr(1,{n})")
        got = series.expand(depth)
        want = catalog.projective_space_dims(n - 1, depth)
        assert got == want, f"Gr(1,{n}) dims {got} != projective closed form {want}"
        details.append(f"Gr(1,{n})=Pn({n - 1}) through degree {depth}")
    return PASS, "; ".join(details)


@_check("quadric-coincidences")
def _check_quadric_coincidences(ctx):
    depth = min(8, ctx.config.max_degree)
    _, _, q1 = ctx.route("Q(1)")
    got1 = q1.expand(depth)
    want1 = tuple(2 * d + 1 for d in range(depth + 1))
    assert got1 == want1, f"Q(1) dims {got1} != {want1}"
    _, _, q2 = ctx.route("Q(2)")
    got2 = q2.expand(depth)
    line = catalog.projective_space_series(1)
    kunneth = series_product(line, line)
    want2 = kunneth.expand(depth)
    ctx.record_series("Pn(1)*Pn(1)", kunneth)
    assert got2 == want2, f"Q(2) dims {got2} != convolution {want2}"
    return PASS, (f"Q(1) dims start {want1[:4]}; Q(2) equals the product-of-lines "
                  f"convolution starting {want2[:4]} through degree {depth}")


@_check("homogeneous-bigness-quadrics")
def _check_homogeneous_bigness(ctx):
    details = []
    for n in (1, 2, 3):
        _, _, series = ctx.route(f"Q({n})")
        krull = series.krull_dim()
        assert krull == 2 * n, f"Q({n}) krull {krull} != {2 * n}"
        details.append(f"Q({n}):{krull}")
    return PASS, "krull = 2*dim for " + ", ".join(details)


@_check(STRETCH_NAME)
def _check_grassmannian_stretch(ctx):
    # Stretch item: a limit here is tolerated by exit_code; --stretch widens
    # the budget to the full allowance.
    timeout = ctx.config.stretch_timeout if ctx.config.stretch else ctx.config.gb_timeout
    _, _, series = ctx.route("Gr(2,4)", timeout=timeout)
    krull = series.krull_dim()
    assert krull == 8, f"Gr(2,4) krull {krull} != 8"
    return PASS, f"Gr(2,4) krull dimension {krull} == 8"


@_check("hitchin-bridge")
def _check_hitchin_bridge(ctx):
    left = catalog.hitchin_series(2, 2, 1, fixed_det=True)
    right = catalog.two_quadrics_series(3)
    ctx.record_series("Hitchin(2,2,1,fixed)", left)
    assert series_eq(left, right), f"{left.render()} != {right.render()}"
    return PASS, f"genus-2 rank-2 fixed-determinant series equals {right.render()}"


@_check("klein-molien")
def _check_klein_molien(ctx):
    details = []
    for n in (2, 3):
        report = catalog.ruled_klein("BD", n, window=40)
        ctx.recorded_groups.append(report.group)
        assert report.row_consistent, f"D_{n} row unexpectedly inconsistent"
        assert report.match is True, f"BD_{n} does not match its stated row"
        table = report.table_series
        assert report.molien.dims[:41] == table.expand(40), "window mismatch"
        ctx.record_series(f"Klein(BD,{n})", report.molien.series)
        assert all(report.molien.dims[p] == 0 for p in range(1, 41, 2))
        details.append(f"BD_{n} matches its D_{n} row through degree 40")
    report_2i = catalog.ruled_klein("2I", window=124)
    ctx.recorded_groups.append(report_2i.group)
    assert report_2i.row_consistent and report_2i.match is True, \
        "icosahedral computation must match the A5 row"
    assert report_2i.molien.matched == (12, 20, 30, 60), report_2i.molien.matched
    assert report_2i.molien.dims == report_2i.table_series.expand(124)
    assert all(report_2i.molien.dims[p] == 0 for p in range(1, 125, 2))
    ctx.record_series("Klein(2I)", report_2i.molien.series)
    details.append("2I matches the A5 row through degree 124")
    for label in ("2T", "2O"):
        report = catalog.ruled_klein(label)
        ctx.recorded_groups.append(report.group)
        assert report.molien.matched is not None, \
            f"{label}: no hypersurface form recovered"
        assert all(d == 0 for d in report.molien.dims[1::2])
        ctx.record_series(f"Klein({label})", report.molien.series)
        if report.row_consistent:
            stated_result = ("matches stated row" if report.match
                             else "differs from stated row")
        else:
            stated_result = f"stated {report.row.name} row is not weighted-homogeneous"
        matches = "+".join(report.matching_rows) if report.matching_rows else "none"
        details.append(
            f"{label}: recovered (d1,d2,d3,e)={report.molien.matched}; {stated_result}; "
            f"table rows matched: {matches}")
    return PASS, "; ".join(details)


@_check("monomial-ideal-oracle")
def _check_monomial_oracle(ctx):
    depth = min(8, ctx.config.max_degree)
    rng = random.Random(20260809)
    checked = 0
    for _ in range(20):
        nvars = rng.randint(1, 5)
        ngens = rng.randint(1, 6)
        gens = []
        for _ in range(ngens):
            total = rng.randint(1, 4)
            exps = [0] * nvars
            for _ in range(total):
                exps[rng.randrange(nvars)] += 1
            gens.append(tuple(exps))
        ideal = MonomialIdeal.from_generators(nvars, gens)
        series = series_from_monomial_ideal(ideal)
        ctx.record_series(f"random-monomial-{checked}", series)
        got = series.expand(depth)
        want = tuple(count_standard_monomials(ideal, d) for d in range(depth + 1))
        assert got == want, f"ideal {ideal.gens} in {nvars} vars: {got} != {want}"
        checked += 1
    return PASS, (f"{checked} seeded random ideals agree with brute-force counts "
                  f"through degree {depth}")


@_check("groebner-contract")
def _check_groebner_contract(ctx):
    routes = ctx.cached_routes()
    if not routes:
        return LIMIT, "no groebner bases available (earlier checks hit their limits)"
    total_pairs = 0
    for spec_text, (presentation, basis, _) in sorted(routes.items()):
        elements = basis.elements
        for g in presentation.generators:
            nf = normal_form(g, elements, basis.order)
            assert nf.is_zero, f"{spec_text}: input generator {g.render()} has nonzero NF"
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                spair = s_polynomial(elements[i], elements[j], basis.order)
                nf = normal_form(spair, elements, basis.order)
                assert nf.is_zero, f"{spec_text}: S-pair ({i},{j}) does not reduce to zero"
                total_pairs += 1
    return PASS, (f"{total_pairs} S-pairs and all input generators reduce to zero "
                  f"across {len(routes)} bases")


@_check("dimension-bounds")
def _check_dimension_bounds(ctx):
    reports = []
    for n in (1, 2, 3):
        spec = catalog.parse_spec(f"Ab({n})")
        series = catalog.abelian_series(n)
        ctx.record_series(f"Ab({n})", series)
        report = catalog.check_dimension_bounds(spec, series)
        assert report.liu_equality is True, f"Ab({n}) should meet the kappa bound exactly"
        reports.append(f"Ab({n}):{report.krull}<=({report.dim_x}-0)")
    for n in (1, 2, 3):
        spec = catalog.parse_spec(f"Pn({n})")
        series = catalog.projective_space_series(n)
        ctx.record_series(f"Pn({n})", series)
        report = catalog.check_dimension_bounds(spec, series)
        assert report.homogeneous_equality is True
        reports.append(f"Pn({n}):{report.krull}=2*{report.dim_x}")
    for n in (1, 2, 3):
        spec = catalog.parse_spec(f"2Q({n})")
        series = catalog.two_quadrics_series(n)
        ctx.record_series(f"2Q({n})", series)
        catalog.check_dimension_bounds(spec, series)
    spec = catalog.parse_spec("Hitchin(g=2,r=2,d=1,fixed)")
    catalog.check_dimension_bounds(spec, catalog.hitchin_series(2, 2, 1, True))
    for spec_text, (_, _, series) in sorted(ctx.cached_routes().items()):
        spec = catalog.parse_spec(spec_text)
        report = catalog.check_dimension_bounds(spec, series)
        reports.append(f"{spec_text}:{report.krull}<={report.upper}")
    for label, n in (("BD", 2), ("BD", 3), ("2T", None), ("2O", None), ("2I", None)):
        spec = catalog.VarietySpec(kind="Klein", group=label, n=n)
        report = catalog.ruled_klein(label, n)
        if report.molien.series is not None:
            catalog.check_dimension_bounds(spec, report.molien.series)
            reports.append(f"Klein({label}{',' + str(n) if n else ''}):"
                           f"{report.molien.series.krull_dim()}<=4")
    return PASS, "; ".join(reports)


@_check("integrity")
def _check_integrity(ctx):
    depth = ctx.config.max_degree
    for _, series in ctx.recorded_series:
        series.expand(depth)  # raises IntegrityError on any negative coefficient
    groups = ctx.recorded_groups or [build_group("BD", 2)]
    averages = 0
    for group in groups:
        for p in range(0, 25):
            value = invariant_dimension(group, p)
            assert value >= 0
            averages += 1
    return PASS, (f"{len(ctx.recorded_series)} series re-expanded with no negative "
                  f"coefficients; {averages} invariant averages are non-negative integers")


def run_verification(config: VerifyConfig | None = None):
    """Run every check in order; returns (results, context)."""
    config = config or VerifyConfig()
    ctx = VerifyContext(config)
    results = [check(ctx) for check in _CHECKS]
    return results, ctx


def exit_code(results) -> int:
    """0 all good, 1 on any failure, 3 when mandatory work hit a budget.

    The stretch item is allowed to be skipped or cut short without failing.
    """
    if any(r.status == FAIL for r in results):
        return 1
    if any(r.status == LIMIT and r.name != STRETCH_NAME for r in results):
        return 3
    return 0
