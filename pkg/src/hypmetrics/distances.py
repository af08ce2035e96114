"""Hyperbolic distances for the model domains (curvature -4 normalization).

With the curvature -4 convention every distance is half the classical
curvature -1 value; the factor is centralized in HALF below.

Closed forms:

    disk        d(z1,z2) = (1/2) log((1+rho)/(1-rho)),
                rho = |(z1-z2)/(1 - conj(z1) z2)|
    half-plane  d(w1,w2) = (1/2) arccosh(1 + |w1-w2|^2/(2 Im w1 Im w2))

The punctured disk and annulus are handled by lifting through the covering
zeta -> e^(i zeta): the punctured disk lifts to the upper half-plane
(zeta = arg z + i log(1/|z|)), the annulus A_r to the strip
{0 < Im zeta < log(1/r)}. Distances are minimized over the deck
translations zeta -> zeta + 2 pi k, and the minimizing k is recorded.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import OutsideDomain, WindingBoundTooSmall

HALF = 0.5  # curvature -4 normalization: half of the curvature -1 distance

DEFAULT_WINDING = 8
MAX_WINDING = 1024


class DistanceMethod(Enum):
    CLOSED_FORM = "closed_form"
    LIFT_MINIMIZATION = "lift_minimization"
    GRID_ORACLE = "grid_oracle"


@dataclass(frozen=True)
class DistanceResult:
    value: float
    method: DistanceMethod
    deck_index: Optional[int] = None


def dist_disk(z1, z2) -> DistanceResult:
    """Hyperbolic distance in the unit disk."""
    z1, z2 = complex(z1), complex(z2)
    if abs(z1) >= 1.0 or abs(z2) >= 1.0:
        raise OutsideDomain(f"disk distance needs |z| < 1, got {z1}, {z2}")
    rho = abs((z1 - z2) / (1.0 - z1.conjugate() * z2))
    return DistanceResult(HALF * 2.0 * math.atanh(rho), DistanceMethod.CLOSED_FORM)


def _halfplane_value(w1: complex, w2: complex) -> float:
    q = abs(w1 - w2) ** 2 / (2.0 * w1.imag * w2.imag)
    return HALF * math.acosh(1.0 + q)


def dist_halfplane(w1, w2) -> DistanceResult:
    """Hyperbolic distance in the upper half-plane (density 1/(2 Im w))."""
    w1, w2 = complex(w1), complex(w2)
    if w1.imag <= 0.0 or w2.imag <= 0.0:
        raise OutsideDomain(f"half-plane distance needs Im w > 0, got {w1}, {w2}")
    return DistanceResult(_halfplane_value(w1, w2), DistanceMethod.CLOSED_FORM)


def _strip_value(z1: complex, z2: complex, h: float) -> float:
    """Distance in the strip {0 < Im z < h} via the exponential map to H.

    Written in terms of differences so that widely separated lifts do not
    overflow: with a = pi Re z / h, b = pi Im z / h,

        cosh(2d) = 1 + (cosh(a1-a2) - cos(b1-b2)) / (sin b1 sin b2).
    """
    da = math.pi * (z1.real - z2.real) / h
    b1 = math.pi * z1.imag / h
    b2 = math.pi * z2.imag / h
    sb = math.sin(b1) * math.sin(b2)
    if abs(da) > 300.0:
        # cosh(da) ~ e^|da|/2; arccosh(1+x) ~ log(2x) for huge x
        return HALF * (abs(da) - math.log(sb))
    q = (math.cosh(da) - math.cos(b1 - b2)) / sb
    return HALF * math.acosh(1.0 + q)


def dist_strip(z1, z2, h: float) -> DistanceResult:
    """Hyperbolic distance in the strip {0 < Im z < h}."""
    z1, z2 = complex(z1), complex(z2)
    if not (0.0 < z1.imag < h and 0.0 < z2.imag < h):
        raise OutsideDomain(f"strip distance needs 0 < Im z < {h}, got {z1}, {z2}")
    return DistanceResult(_strip_value(z1, z2, h), DistanceMethod.CLOSED_FORM)


def _lift(z: complex) -> complex:
    """Lift of z through zeta -> e^(i zeta): zeta = arg z + i log(1/|z|)."""
    return complex(math.atan2(z.imag, z.real), -math.log(abs(z)))


def _deck_minimize(value_at_k, winding_bound: Optional[int]):
    """Minimize a lifted distance over deck translations by 2 pi k.

    With an explicit winding bound, raises WindingBoundTooSmall when the
    minimum sits at |k| = bound. With winding_bound=None the bound starts at
    DEFAULT_WINDING and doubles adaptively up to MAX_WINDING.
    """
    adaptive = winding_bound is None
    bound = DEFAULT_WINDING if adaptive else int(winding_bound)
    if bound < 1:
        raise WindingBoundTooSmall(f"winding bound must be >= 1, got {bound}")
    while True:
        ks = range(-bound, bound + 1)
        vals = [value_at_k(k) for k in ks]
        i = int(np.argmin(vals))
        k_min = i - bound
        if abs(k_min) < bound:
            return vals[i], k_min
        if not adaptive or bound >= MAX_WINDING:
            raise WindingBoundTooSmall(
                f"deck minimum attained at |k| = {bound}; increase winding bound")
        bound *= 2


def dist_punctured_disk(z1, z2, winding_bound: Optional[int] = None) -> DistanceResult:
    """Distance in the punctured unit disk via the half-plane lift."""
    z1, z2 = complex(z1), complex(z2)
    if not (0.0 < abs(z1) < 1.0 and 0.0 < abs(z2) < 1.0):
        raise OutsideDomain(f"punctured-disk distance needs 0 < |z| < 1, got {z1}, {z2}")
    w1, w2 = _lift(z1), _lift(z2)
    value, k = _deck_minimize(lambda k: _halfplane_value(w1, w2 + 2.0 * math.pi * k),
                              winding_bound)
    return DistanceResult(value, DistanceMethod.LIFT_MINIMIZATION, k)


def dist_annulus(z1, z2, r: float, winding_bound: Optional[int] = None) -> DistanceResult:
    """Distance in the annulus {r < |z| < 1} via the strip lift."""
    z1, z2 = complex(z1), complex(z2)
    if not (r < abs(z1) < 1.0 and r < abs(z2) < 1.0):
        raise OutsideDomain(f"annulus distance needs {r} < |z| < 1, got {z1}, {z2}")
    s = math.log(1.0 / r)
    w1, w2 = _lift(z1), _lift(z2)
    value, k = _deck_minimize(lambda k: _strip_value(w1, w2 + 2.0 * math.pi * k, s),
                              winding_bound)
    return DistanceResult(value, DistanceMethod.LIFT_MINIMIZATION, k)


def covering_decay_ratio(z) -> float:
    """The ratio e^(-2 d_D(z,0)) / (1 - |z|), which equals 1/(1+|z|).

    Along any sequence |z| -> 1 the ratio tends to 1/2; this is the
    covering-decay normalization relating the hyperbolic error scale
    e^(-2d) to the Euclidean boundary gap.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise OutsideDomain(f"covering decay ratio needs |z| < 1, got {z}")
    d = dist_disk(z, 0.0).value
    return math.exp(-2.0 * d) / (1.0 - abs(z))


def _golden_max(f, a: float, b: float, tol: float = 1e-8) -> tuple[float, float]:
    """Golden-section search for the maximum of f on [a, b]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = f(x1)
    x = 0.5 * (a + b)
    return x, f(x)


def comparability_constants(q, R: float = 1.0, n_sweep: int = 720) -> tuple[float, float, float]:
    """Comparability constants (c1, c2, gamma) for the punctured disk.

    gamma is the maximum over |w| = |q| of the punctured-disk distance from w
    to q, found by a dense circle sweep refined with golden-section search;
    then c1 = |log|q|| e^(-2 gamma) and c2 = |log|q|| + pi. These sandwich
    log(1/|z|) e^(-2 d(z,q)) between c1 and c2 for all 0 < |z| <= R.
    """
    q = complex(q)
    if not 0.0 < abs(q) < R <= 1.0:
        raise OutsideDomain(f"comparability constants need 0 < |q| < R <= 1, got q={q}, R={R}")
    aq = abs(q)
    base = math.atan2(q.imag, q.real)

    def d_at(theta: float) -> float:
        w = aq * complex(math.cos(base + theta), math.sin(base + theta))
        return dist_punctured_disk(w, q).value

    thetas = np.linspace(0.0, 2.0 * math.pi, n_sweep, endpoint=False)
    vals = [d_at(t) for t in thetas]
    i = int(np.argmax(vals))
    width = 2.0 * math.pi / n_sweep
    _, gamma = _golden_max(d_at, thetas[i] - width, thetas[i] + width)
    gamma = max(gamma, vals[i])
    logq = abs(math.log(aq))
    return logq * math.exp(-2.0 * gamma), logq + math.pi, gamma
