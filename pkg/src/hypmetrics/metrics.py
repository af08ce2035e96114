"""Conformal metric densities on the model domains.

A MetricDensity wraps a nonnegative density lambda(z) together with its
domain and an exact log-density evaluator. The builtins (curvature -4
normalization throughout):

    lambda_D(z)      = 1 / (1 - |z|^2)                       unit disk
    lambda_D'(z)     = 1 / (2 |z| log(1/|z|))                punctured disk
    lambda^(R)(z)    = 1 / (2 |z| log(R/|z|))                punctured disk of
                       radius R >= 1, restricted to the unit punctured disk
    lambda_A_r(z)    = pi / (2 |z| s sin(pi log(1/|z|)/s)),  s = log(1/r)
    lambda_alpha(z)  = (1-alpha) |z|^(-alpha) / (1 - |z|^(2(1-alpha)))
    lambda_{alpha,c} = (1-alpha) c |z|^(-alpha) / (1 - c^2 |z|^(2(1-alpha)))
    half-plane       1 / (2 Im z)
    strip of height h: pi / (2 h sin(pi Im z / h))

The scaled conical family lambda_{alpha,c} (0 < c <= 1) is the general
radially symmetric constant-curvature -4 metric with a conical singularity
of order alpha; c = 1 recovers lambda_alpha.

Densities near singularities span many orders of magnitude, so every builtin
carries an exact closed-form log-density used by the curvature operator.
User-supplied densities are closures; no grids are stored here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .domains import DomainModel
from .errors import BadParameter, OutsideDomain, SingularPoint
from .maps import HolomorphicMap


@dataclass(frozen=True)
class MetricDensity:
    domain: DomainModel
    eval: Callable
    label: str
    log_eval: Optional[Callable] = None

    def log_density(self, z):
        """log lambda(z), from the exact closed form when available."""
        if self.log_eval is not None:
            return self.log_eval(z)
        return np.log(self.eval(z))

    def __call__(self, z):
        return density_at(self, z)


def density_at(metric: MetricDensity, z) -> float:
    """Evaluate lambda(z) with domain checking.

    Raises SingularPoint at declared singularities and OutsideDomain
    elsewhere outside the domain.
    """
    if metric.domain.is_singular(z):
        raise SingularPoint(f"{metric.label} is singular at z={z}")
    if not metric.domain.contains(z):
        raise OutsideDomain(f"z={z} is not in the domain of {metric.label}")
    return float(np.real(metric.eval(complex(z))))


def log_density_at(metric: MetricDensity, z) -> float:
    """Evaluate log lambda(z) with domain checking."""
    if metric.domain.is_singular(z):
        raise SingularPoint(f"{metric.label} is singular at z={z}")
    if not metric.domain.contains(z):
        raise OutsideDomain(f"z={z} is not in the domain of {metric.label}")
    return float(np.real(metric.log_density(complex(z))))


# --- builtin densities ----------------------------------------------------

def disk_metric() -> MetricDensity:
    def ev(z):
        return 1.0 / (1.0 - np.abs(z) ** 2)

    def logev(z):
        return -np.log1p(-np.abs(z) ** 2)

    return MetricDensity(DomainModel.disk(), ev, "disk", logev)


def punctured_disk_metric() -> MetricDensity:
    def ev(z):
        az = np.abs(z)
        return 1.0 / (2.0 * az * np.log(1.0 / az))

    def logev(z):
        az = np.abs(z)
        return -np.log(2.0) - np.log(az) - np.log(-np.log(az))

    return MetricDensity(DomainModel.punctured_disk(), ev, "pdisk", logev)


def punctured_disk_metric_r(R: float) -> MetricDensity:
    """Hyperbolic density of {0 < |z| < R}, restricted to the unit punctured disk."""
    if R < 1.0:
        raise BadParameter(f"punctured disk radius requires R >= 1, got {R}")
    logR = np.log(R)

    def ev(z):
        az = np.abs(z)
        return 1.0 / (2.0 * az * (logR - np.log(az)))

    def logev(z):
        az = np.abs(z)
        return -np.log(2.0) - np.log(az) - np.log(logR - np.log(az))

    return MetricDensity(DomainModel.punctured_disk(), ev, f"pdiskR:{R}", logev)


def annulus_metric(r: float) -> MetricDensity:
    dom = DomainModel.annulus(r)
    s = np.log(1.0 / r)

    def ev(z):
        az = np.abs(z)
        return np.pi / (2.0 * az * s * np.sin(np.pi * np.log(1.0 / az) / s))

    def logev(z):
        az = np.abs(z)
        return (np.log(np.pi) - np.log(2.0) - np.log(az) - np.log(s)
                - np.log(np.sin(-np.pi * np.log(az) / s)))

    return MetricDensity(dom, ev, f"annulus:{r}", logev)


def conical_metric(alpha: float) -> MetricDensity:
    """The order-alpha conical model density lambda_alpha, alpha < 1."""
    return conical_scaled_metric(alpha, 1.0, _label=f"conical:{alpha}")


def conical_scaled_metric(alpha: float, c: float, _label: str | None = None) -> MetricDensity:
    """The scaled conical family lambda_{alpha,c}; c = 1 recovers lambda_alpha."""
    if not alpha < 1.0:
        raise BadParameter(f"conical order requires alpha < 1, got {alpha}")
    if not 0.0 < c <= 1.0:
        raise BadParameter(f"conical scale requires 0 < c <= 1, got {c}")
    s = 1.0 - alpha

    def ev(z):
        az = np.abs(z)
        return s * c * az ** (-alpha) / (1.0 - c * c * az ** (2.0 * s))

    def logev(z):
        la = np.log(np.abs(z))
        # 1 - c^2 |z|^(2s) = -expm1(2 s log|z| + 2 log c), exact near |z| -> 1
        return (np.log(s) + np.log(c) - alpha * la
                - np.log(-np.expm1(2.0 * s * la + 2.0 * np.log(c))))

    label = _label if _label is not None else f"conical-scaled:{alpha},{c}"
    return MetricDensity(DomainModel.punctured_disk(), ev, label, logev)


def half_plane_metric() -> MetricDensity:
    def ev(z):
        return 1.0 / (2.0 * np.imag(z))

    def logev(z):
        return -np.log(2.0 * np.imag(z))

    return MetricDensity(DomainModel.half_plane(), ev, "halfplane", logev)


def strip_metric(h: float) -> MetricDensity:
    dom = DomainModel.strip(h)

    def ev(z):
        return np.pi / (2.0 * h * np.sin(np.pi * np.imag(z) / h))

    def logev(z):
        return np.log(np.pi) - np.log(2.0 * h) - np.log(np.sin(np.pi * np.imag(z) / h))

    return MetricDensity(dom, ev, f"strip:{h}", logev)


# --- pullback -------------------------------------------------------------

def pullback(metric: MetricDensity, map_: HolomorphicMap,
             source_domain: DomainModel) -> MetricDensity:
    """The pullback density z -> lambda(f(z)) |f'(z)| on source_domain.

    The caller asserts that the map sends source_domain into the metric's
    domain; evaluations that land outside raise OutsideDomain, which signals
    a wrong caller assertion. Points with f'(z) = 0 evaluate to density 0.
    """

    def _target(z):
        w = map_.value(z)
        ok = metric.domain.contains(w)
        if not np.all(ok):
            raise OutsideDomain(
                f"{map_.label} maps z={z} outside the domain of {metric.label}")
        return w

    def ev(z):
        w = _target(z)
        return metric.eval(w) * np.abs(map_.derivative(z))

    def logev(z):
        w = _target(z)
        with np.errstate(divide="ignore"):
            return metric.log_density(w) + np.log(np.abs(map_.derivative(z)))

    return MetricDensity(source_domain, ev, f"pull:{map_.label}:{metric.label}", logev)


def eval_many(metric: MetricDensity, zs: np.ndarray) -> np.ndarray:
    """Vectorized density evaluation with a scalar fallback for user closures."""
    zs = np.asarray(zs, dtype=complex)
    try:
        out = np.asarray(metric.eval(zs), dtype=float)
        if out.shape == zs.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([float(np.real(metric.eval(z))) for z in zs.ravel()],
                    dtype=float).reshape(zs.shape)
