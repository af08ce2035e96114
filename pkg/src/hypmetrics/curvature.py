"""Finite-difference Gauss curvature of a conformal density.

The Gauss curvature of lambda(z)|dz| is

    kappa(z) = -Laplacian(log lambda)(z) / lambda(z)^2,

discretized with the standard 5-point Laplacian at stencil size h. The
discretization error is O(h^2) for C^4 densities. Near the domain edge the
stencil is shrunk to half the distance to the edge, and the h actually used
is reported.
"""
from __future__ import annotations

import numpy as np

from .errors import NonpositiveDensity, StencilOutsideDomain
from .metrics import MetricDensity

DEFAULT_STENCIL = 1e-3


def curvature_at(metric: MetricDensity, z, h: float = DEFAULT_STENCIL,
                 full_output: bool = False):
    """Discrete Gauss curvature of the metric at z.

    Returns kappa, or (kappa, h_used) when full_output is set. Refuses with
    NonpositiveDensity when lambda <= 0 anywhere on the stencil (curvature is
    defined only where the density is positive), and with
    StencilOutsideDomain when no admissible stencil fits.
    """
    if h <= 0.0:
        raise StencilOutsideDomain(f"stencil size must be positive, got h={h}")
    z = complex(z)
    dom = metric.domain
    edge = dom.boundary_distance(z)
    h_used = float(h)
    if np.isfinite(edge):
        if edge <= 0.0:
            raise StencilOutsideDomain(f"z={z} is not interior to {dom.label()}")
        h_used = min(h_used, 0.5 * edge)
    stencil = [z, z + h_used, z - h_used, z + 1j * h_used, z - 1j * h_used]
    if not all(dom.contains(p) and not dom.is_singular(p) for p in stencil):
        raise StencilOutsideDomain(f"stencil at z={z}, h={h_used} leaves {dom.label()}")

    lam0 = float(np.real(metric.eval(z)))
    if not lam0 > 0.0 or not all(float(np.real(metric.eval(p))) > 0.0 for p in stencil[1:]):
        raise NonpositiveDensity(f"{metric.label} is not positive on the stencil at z={z}")

    logs = [float(np.real(metric.log_density(p))) for p in stencil]
    lap = (logs[1] + logs[2] + logs[3] + logs[4] - 4.0 * logs[0]) / h_used ** 2
    kappa = -lap / lam0 ** 2
    if full_output:
        return kappa, h_used
    return kappa
