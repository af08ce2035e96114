"""Reproducible verification suites.

Each suite evaluates a family of checks against the closed-form constants
and inequalities, on seeded sample sets, and returns a VerificationReport.
Identical configurations (including the seed) produce byte-identical
reports.

Two suites are expected to fail by design: the phi witness suite compares
against the documented constants -1/12 and -1/3, which are inconsistent
with direct evaluation of the pinned closed forms (the true values are -1/6
and -2/3; the annulus constant -1/3 - pi^2/(6 log(1/r)^2), which the
annulus-sharpness suite reproduces, is consistent only with -1/6). The
failing checks carry notes saying so.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curvature import curvature_at
from .distances import (comparability_constants, covering_decay_ratio,
                        dist_disk, dist_punctured_disk)
from .errors import NonpositiveDensity, UnknownSuite
from .extrapolation import extrapolate
from .inequalities import (HarnackBoundSpec, ahlfors_check, beardon_minda_bound,
                           boundary_max_ratio, harnack_bound, harnack_conical_bound,
                           hopf_conical_functional, hopf_functional,
                           radial_solution_space_check)
from .maps import example1_map, mobius_map, phi_map, square_map
from .metrics import (MetricDensity, annulus_metric, conical_metric,
                      conical_scaled_metric, disk_metric, eval_many, pullback,
                      punctured_disk_metric, punctured_disk_metric_r)
from .reports import Check, VerificationReport
from .sampling import cartesian_grid, polar_grid, sample_annular, sample_log_annular
from .witnesses import (annulus_sharpness_limit, disk_sharpness_functional,
                        example1_limit, phi_expansion_check)

MOBIUS_A = complex(0.3, 0.2)


@dataclass
class SuiteConfig:
    suite: str
    seed: int = 42
    tolerances: dict = field(default_factory=dict)
    grid_n: int = 50
    n_points: int = 100
    output: str = "csv"

    def tol(self, name: str, default: float) -> float:
        return float(self.tolerances.get(name, default))


def _pull_disk(map_) -> MetricDensity:
    return pullback(disk_metric(), map_, disk_metric().domain)


def _pull_example1() -> MetricDensity:
    pd = punctured_disk_metric()
    return pullback(pd, example1_map(), pd.domain)


# --- curvature --------------------------------------------------------------

def _curvature_cases(seed: int):
    """(metric, seeded sample points) pairs for the curvature suite.

    Sample regions keep the h^2 discretization coefficient of the 5-point
    operator small enough for the 1e-4 gate at h = 1e-3 (the coefficient
    grows like 1/|z|^4 / lambda^2 toward a puncture).
    """
    return [
        (disk_metric(), sample_annular(seed + 1, 100, 0.10, 0.75)),
        (punctured_disk_metric(), sample_annular(seed + 2, 100, 0.30, 0.75)),
        (annulus_metric(0.5), sample_annular(seed + 3, 100, 0.66, 0.86)),
        (conical_metric(0.5), sample_annular(seed + 4, 100, 0.30, 0.75)),
        (punctured_disk_metric_r(math.e), sample_annular(seed + 5, 100, 0.45, 0.85)),
        (_pull_disk(phi_map()), sample_annular(seed + 6, 100, 0.10, 0.50)),
        (_pull_disk(square_map()), sample_annular(seed + 7, 100, 0.40, 0.75)),
        (_pull_disk(mobius_map(MOBIUS_A)), sample_annular(seed + 8, 100, 0.10, 0.60)),
    ]


def suite_curvature(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("curvature", seed=cfg.seed)
    tol = cfg.tol("curvature", 1e-4)
    for metric, pts in _curvature_cases(cfg.seed):
        err_fine = max(abs(curvature_at(metric, z, 1e-3) + 4.0) for z in pts)
        err_coarse = max(abs(curvature_at(metric, z, 1e-2) + 4.0) for z in pts)
        report.add(Check.at_most(f"kappa+4[{metric.label}]", err_fine, tol, "paper"))
        ratio = err_coarse / err_fine if err_fine > 0 else float("inf")
        report.add(Check(name=f"h2-convergence[{metric.label}]", value=ratio,
                         expected=100.0, tol=0.0, passed=50.0 <= ratio <= 200.0,
                         provenance="derived",
                         note="max-error ratio for h=1e-2 vs h=1e-3"))
    return report


# --- ahlfors ----------------------------------------------------------------

def _ahlfors_cases():
    disk = disk_metric()
    pd = punctured_disk_metric()
    disk_grid = cartesian_grid(50, 0.98)
    disk_grid = disk_grid[np.abs(disk_grid) < 0.98]
    polar = polar_grid(50, 1e-3, 0.95)
    return [
        (_pull_disk(phi_map()), disk, disk_grid, False),
        (_pull_disk(square_map()), disk, disk_grid, False),
        (_pull_disk(mobius_map(MOBIUS_A)), disk, disk_grid, True),
        (_pull_example1(), pd, polar, False),
    ]


def suite_ahlfors(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("ahlfors", seed=cfg.seed)
    identity_pair = ahlfors_check(disk_metric(), disk_metric(),
                                  cartesian_grid(20, 0.9), kind="closed")
    report.extend(identity_pair.checks)
    for metric, reference, grid, isometry in _ahlfors_cases():
        sub = ahlfors_check(metric, reference, grid, kind="pullback")
        report.extend(sub.checks)
        if not isometry:
            center = grid[int(np.argmin(np.abs(grid - grid.mean())))]
            ratio = float(eval_many(metric, np.array([center]))[0]
                          / eval_many(reference, np.array([center]))[0])
            report.add(Check.at_most(f"strict-ratio-center[{metric.label}]",
                                     ratio, 1.0 - 1e-6, "paper",
                                     note="strict inequality for non-isometries"))
    return report


# --- beardon-minda ----------------------------------------------------------

def suite_beardon_minda(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("beardon-minda", seed=cfg.seed)
    report.add(Check.close("bound(0.5,0)", beardon_minda_bound(0.5, 0.0), 0.5,
                           0.0, "trivial"))
    report.add(Check.close("bound(0,d)=tanh2d", beardon_minda_bound(0.0, 0.7),
                           math.tanh(1.4), 1e-15, "trivial"))
    report.add(Check.close("bound(0.5,inf)=1", beardon_minda_bound(0.5, 40.0), 1.0,
                           1e-12, "trivial"))

    slack_tol = cfg.tol("beardon-minda", 1e-10)

    disk = disk_metric()
    pulled_phi = _pull_disk(phi_map())
    zs = sample_annular(cfg.seed + 11, cfg.n_points, 0.02, 0.9)
    qs = sample_annular(cfg.seed + 12, cfg.n_points, 0.02, 0.9)
    slack = []
    for z, q in zip(zs, qs):
        dz = float(np.real(pulled_phi.eval(z)) / np.real(disk.eval(z)))
        dq = float(np.real(pulled_phi.eval(q)) / np.real(disk.eval(q)))
        slack.append(beardon_minda_bound(dq, dist_disk(z, q).value) - dz)
    report.add(Check(name="min-slack[phi on disk]", value=float(min(slack)),
                     expected=0.0, tol=slack_tol,
                     passed=min(slack) >= -slack_tol, provenance="paper"))

    pd = punctured_disk_metric()
    pulled_ex = _pull_example1()
    zs = sample_log_annular(cfg.seed + 13, cfg.n_points, 1e-3, 0.8)
    qs = sample_log_annular(cfg.seed + 14, cfg.n_points, 0.05, 0.8)
    slack = []
    for z, q in zip(zs, qs):
        dz = float(np.real(pulled_ex.eval(z)) / np.real(pd.eval(z)))
        dq = float(np.real(pulled_ex.eval(q)) / np.real(pd.eval(q)))
        d = dist_punctured_disk(z, q).value
        slack.append(beardon_minda_bound(dq, d) - dz)
    report.add(Check(name="min-slack[example1 on pdisk]", value=float(min(slack)),
                     expected=0.0, tol=slack_tol,
                     passed=min(slack) >= -slack_tol, provenance="paper"))
    return report


# --- harnack ----------------------------------------------------------------

def suite_harnack(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("harnack", seed=cfg.seed)
    pd = punctured_disk_metric()
    metric = _pull_example1()
    r, R = 0.1, 1.0
    M = boundary_max_ratio(metric, pd, r)
    spec = HarnackBoundSpec(r=r, R=R, boundary_max_ratio=M)
    report.add(Check.close("exponent-at-r", spec.exponent(r * 1j), 1.0, 1e-12, "trivial"))
    report.add(Check.close("exponent-half", HarnackBoundSpec(0.1, 1.0, 0.5).exponent(0.01),
                           0.5, 1e-12, "trivial"))

    pts = polar_grid(25, 1e-6, r * 0.999)[:500]
    lam = eval_many(metric, pts)
    bounds = np.array([harnack_bound(spec, pd, z) for z in pts])
    rel_slack = float(((bounds - lam) / bounds).min())
    tol = cfg.tol("harnack", 1e-9)
    report.add(Check(name="min-rel-slack[example1, r=0.1]", value=rel_slack,
                     expected=0.0, tol=tol, passed=rel_slack >= -tol,
                     provenance="paper",
                     note=f"boundary max ratio {M:.6f} at 500 polar points"))
    return report


def suite_harnack_conical(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("harnack-conical", seed=cfg.seed)
    alpha, c, r = 0.5, 0.9, 0.5
    lam_a = conical_metric(alpha)
    metric = conical_scaled_metric(alpha, c)
    M = boundary_max_ratio(metric, lam_a, r)
    pts = polar_grid(15, 1e-4, r * 0.999)[:300]
    lam = eval_many(metric, pts)
    bounds = np.array([harnack_conical_bound(alpha, r, M, z) for z in pts])
    rel_slack = float(((bounds - lam) / bounds).min())
    tol = cfg.tol("harnack-conical", 1e-9)
    report.add(Check(name=f"min-rel-slack[scaled(alpha={alpha},c={c}), r={r}]",
                     value=rel_slack, expected=0.0, tol=tol,
                     passed=rel_slack >= -tol, provenance="paper",
                     note=f"boundary max ratio {M:.6f} at 300 polar points"))
    report.add(Check.close("exponent-at-r",
                           harnack_conical_bound(alpha, r, M, r * 0.9999999 * 1j)
                           / float(np.real(lam_a.eval(r * 0.9999999 * 1j))),
                           M, 1e-5, "trivial",
                           note="exponent tends to 1 at |z| = r"))
    return report


# --- hopf -------------------------------------------------------------------

def _hopf_sequence(metric: MetricDensity, reference: MetricDensity, ks):
    values, xs = [], []
    for k in ks:
        z = complex(10.0 ** (-k), 0.0)
        try:
            v = hopf_functional(metric, reference, z)
        except NonpositiveDensity:
            v = float("-inf")  # underflow sentinel; excluded from the trend
        values.append(v)
        xs.append(1.0 / math.log(1.0 / abs(z)))
    return values, xs


def suite_hopf(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("hopf", seed=cfg.seed)
    pd = punctured_disk_metric()
    report.add(Check.close("identity-functional", hopf_functional(pd, pd, 0.037), 0.0,
                           1e-14, "trivial"))
    tol = cfg.tol("hopf", 2e-2)

    fam = punctured_disk_metric_r(math.e)
    values, xs = _hopf_sequence(fam, pd, range(2, 9))
    est = extrapolate(values, xs=xs)
    report.add(Check.close("limit[pdiskR:e]", est.value, -1.0, tol, "derived",
                           note=f"raw value at |z|=1e-8: {values[-1]:.6f}; "
                                f"extrapolated ({est.method})"))

    inf_bound = min(hopf_functional(fam, pd, complex(r, 0.0))
                    for r in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
    report.add(Check.at_most("limsup<=circle-inf[pdiskR:e]", est.value,
                             inf_bound + 5e-2, "paper",
                             note="limsup bounded by inf over circles of "
                                  "(max log ratio) * log(1/r)"))

    metric = _pull_example1()
    values, xs = _hopf_sequence(metric, pd, range(2, 9))
    est = extrapolate(values, xs=xs)
    report.add(Check.close("limit[pull:example1:pdisk]", est.value, -1.0, tol,
                           "paper",
                           note=f"raw value at |z|=1e-8: {values[-1]:.6f}; "
                                f"extrapolated ({est.method})"))
    return report


def suite_hopf_conical(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("hopf-conical", seed=cfg.seed)
    alpha = 0.5
    lam_a = conical_metric(alpha)
    report.add(Check.close("identity-functional",
                           hopf_conical_functional(lam_a, alpha, 0.2), 0.0,
                           1e-12, "trivial"))
    for metric, label in [(conical_scaled_metric(alpha, 0.9), "scaled(0.5,0.9)"),
                          (conical_metric(0.3), "conical:0.3 vs alpha=0.5")]:
        values = [hopf_conical_functional(metric, alpha, complex(10.0 ** (-k), 0.0))
                  for k in range(1, 7)]
        report.add(Check(name=f"limsup-negative[{label}]", value=float(max(values)),
                         expected=0.0, tol=0.0, passed=max(values) < -0.05,
                         provenance="paper",
                         note="NonconvergentFunctional: values diverge to -inf, "
                              "limsup < 0 verified on samples"))
    return report


def suite_aux_solutions(cfg: SuiteConfig) -> VerificationReport:
    report = radial_solution_space_check(h=cfg.tol("aux-h", 1e-4))
    report.seed = cfg.seed
    return report


# --- witnesses ----------------------------------------------------------------

def suite_phi(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("phi", seed=cfg.seed)
    phi = phi_map()
    report.add(Check.close("phi(1)=1", abs(complex(phi.value(1.0)) - 1.0), 0.0,
                           1e-15, "trivial"))
    report.add(Check.close("phi(0)=1/12", complex(phi.value(0.0)).real, 1.0 / 12.0,
                           1e-15, "derived"))
    report.add(Check.close("phi'(1)=1", abs(complex(phi.derivative(1.0)) - 1.0), 0.0,
                           1e-15, "trivial"))
    thetas = np.linspace(1e-4, 2.0 * math.pi - 1e-4, 999)
    boundary = 0.999999 * np.exp(1j * thetas)
    report.add(Check.at_most("selfmap-max|phi|", float(np.abs(phi.value(boundary)).max()),
                             1.0, "paper", note="injective self-map spot check"))

    exp_check = phi_expansion_check()
    report.add(Check.close("expansion-limit", exp_check.extrapolated_limit,
                           exp_check.expected, cfg.tol("phi-expansion", 1e-4),
                           "paper", note=exp_check.note))
    report.add_series("phi-expansion", exp_check.sample_points,
                      exp_check.functional_values)
    disk_check = disk_sharpness_functional()
    report.add(Check.close("disk-functional-limit", disk_check.extrapolated_limit,
                           disk_check.expected, cfg.tol("disk-functional", 1e-3),
                           "paper", note=disk_check.note))
    report.add_series("disk-functional", disk_check.sample_points,
                      disk_check.functional_values)
    return report


def suite_example1(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("example1", seed=cfg.seed)
    f = example1_map()
    report.add(Check.close("|f(0.5)|=0.5e^-3", abs(complex(f.value(0.5))),
                           0.5 * math.exp(-3.0), 1e-15, "derived"))
    pts = sample_log_annular(cfg.seed + 21, 200, 1e-4, 0.999)
    images = np.abs(np.asarray(f.value(pts)))
    report.add(Check(name="maps-pdisk-to-pdisk", value=float(images.max()),
                     expected=1.0, tol=0.0,
                     passed=bool(np.all((images > 0.0) & (images < 1.0))),
                     provenance="paper", note="spot check on a polar grid"))
    wl = example1_limit()
    report.add(Check.close("limit", wl.extrapolated_limit, wl.expected,
                           cfg.tol("example1", 2e-2), "paper",
                           note=f"raw at |z|=1e-8: {wl.functional_values[-1]:.6f}"))
    report.add(Check(name="trend", value=1.0 if wl.trend_ok else 0.0, expected=1.0,
                     tol=0.0, passed=wl.trend_ok, provenance="tool",
                     note="consecutive differences shrink"))
    report.add_series("example1-functional", [abs(z) for z in wl.sample_points],
                      wl.functional_values)
    return report


def suite_annulus_sharpness(cfg: SuiteConfig, r: float) -> VerificationReport:
    report = VerificationReport(f"annulus-sharpness:{r}", seed=cfg.seed)
    wl = annulus_sharpness_limit(r)
    report.add(Check.close("limit", wl.extrapolated_limit, wl.expected,
                           cfg.tol("annulus", 1e-2), "paper", note=wl.note))
    report.add(Check(name="trend", value=1.0 if wl.trend_ok else 0.0, expected=1.0,
                     tol=0.0, passed=wl.trend_ok, provenance="tool"))
    report.add_series("annulus-functional", wl.sample_points, wl.functional_values)
    return report


# --- comparability / decay ratio ---------------------------------------------------

def suite_comparability(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("lemma44", seed=cfg.seed)
    q = 0.1
    c1, c2, gamma = comparability_constants(q)
    report.add(Check.close("c2=log10+pi", c2, math.log(10.0) + math.pi, 1e-14, "paper"))
    antipodal = dist_punctured_disk(-q, q).value
    report.add(Check.close("gamma=antipodal-distance", gamma, antipodal, 1e-9,
                           "derived", note="circle sweep maximum at the antipode"))
    radii = np.geomspace(1e-8, q, 50)
    vals = []
    for arg in (0.0, math.pi / 3.0, math.pi):
        for rho in radii:
            z = rho * complex(math.cos(arg), math.sin(arg))
            vals.append(math.log(1.0 / rho)
                        * math.exp(-2.0 * dist_punctured_disk(z, q).value))
    report.add(Check(name="sandwich-lower", value=float(min(vals)), expected=c1,
                     tol=0.0, passed=min(vals) >= c1 - 1e-12, provenance="paper",
                     note=f"c1={c1!r}"))
    report.add(Check(name="sandwich-upper", value=float(max(vals)), expected=c2,
                     tol=0.0, passed=max(vals) <= c2 + 1e-12, provenance="paper",
                     note=f"c2={c2!r}"))
    return report


def suite_decay_ratio(cfg: SuiteConfig) -> VerificationReport:
    report = VerificationReport("decay-ratio", seed=cfg.seed)
    report.add(Check.close("ratio(0)=1", covering_decay_ratio(0.0), 1.0, 1e-15,
                           "trivial"))
    report.add(Check.close("ratio(0.9)=1/1.9", covering_decay_ratio(0.9), 1.0 / 1.9,
                           1e-12, "derived"))
    report.add(Check.close("ratio(0.999)=1/1.999", covering_decay_ratio(0.999),
                           1.0 / 1.999, cfg.tol("decay-ratio", 1e-12), "derived"))
    seq = [covering_decay_ratio(1.0 - 10.0 ** (-k)) for k in (1, 2, 3)]
    monotone = all(b < a for a, b in zip(seq, seq[1:]))
    report.add(Check(name="monotone-to-half", value=seq[-1], expected=0.5, tol=5e-4,
                     passed=monotone and abs(seq[-1] - 0.5) <= 5e-4,
                     provenance="paper"))
    return report


_SUITES = {
    "curvature": suite_curvature,
    "ahlfors": suite_ahlfors,
    "beardon-minda": suite_beardon_minda,
    "harnack": suite_harnack,
    "harnack-conical": suite_harnack_conical,
    "hopf": suite_hopf,
    "hopf-conical": suite_hopf_conical,
    "aux-solutions": suite_aux_solutions,
    "phi": suite_phi,
    "example1": suite_example1,
    "lemma44": suite_comparability,
    "decay-ratio": suite_decay_ratio,
}


def suite_names() -> list[str]:
    return sorted(_SUITES) + ["annulus-sharpness:<r>"]


def run_suite(config: SuiteConfig) -> VerificationReport:
    """Run one named suite; raises UnknownSuite for unrecognized names."""
    name = config.suite
    if name.startswith("annulus-sharpness:"):
        try:
            r = float(name.split(":", 1)[1])
        except ValueError:
            raise UnknownSuite(f"bad annulus-sharpness parameter in {name!r}")
        return suite_annulus_sharpness(config, r)
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; available: {', '.join(suite_names())}")
    return _SUITES[name](config)
