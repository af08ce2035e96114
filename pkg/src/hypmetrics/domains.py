"""Model hyperbolic domains in the plane.

A DomainModel is a tagged description of one of the model domains:

    disk            |z| < 1
    pdisk           0 < |z| < 1          (punctured unit disk)
    pdiskR          0 < |z| < R, R >= 1  (punctured disk of radius R)
    annulus         r < |z| < 1, 0 < r < 1
    halfplane       Im z > 0
    strip           0 < Im z < h

Membership is exact, and each domain knows its declared singular points and
the Euclidean distance to its edge (used to shrink finite-difference
stencils near the boundary).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameter

DISK = "disk"
PUNCTURED_DISK = "pdisk"
PUNCTURED_DISK_R = "pdiskR"
ANNULUS = "annulus"
HALF_PLANE = "halfplane"
STRIP = "strip"


@dataclass(frozen=True)
class DomainModel:
    kind: str
    param: float = 0.0

    def __post_init__(self):
        if self.kind == ANNULUS and not 0.0 < self.param < 1.0:
            raise BadParameter(f"annulus requires 0 < r < 1, got r={self.param}")
        if self.kind == PUNCTURED_DISK_R and not self.param >= 1.0:
            raise BadParameter(f"punctured disk radius requires R >= 1, got R={self.param}")
        if self.kind == STRIP and not self.param > 0.0:
            raise BadParameter(f"strip requires height h > 0, got h={self.param}")
        if self.kind not in (DISK, PUNCTURED_DISK, PUNCTURED_DISK_R, ANNULUS, HALF_PLANE, STRIP):
            raise BadParameter(f"unknown domain kind {self.kind!r}")

    # --- constructors -----------------------------------------------------

    @staticmethod
    def disk() -> "DomainModel":
        return DomainModel(DISK)

    @staticmethod
    def punctured_disk() -> "DomainModel":
        return DomainModel(PUNCTURED_DISK)

    @staticmethod
    def punctured_disk_r(R: float) -> "DomainModel":
        return DomainModel(PUNCTURED_DISK_R, float(R))

    @staticmethod
    def annulus(r: float) -> "DomainModel":
        return DomainModel(ANNULUS, float(r))

    @staticmethod
    def half_plane() -> "DomainModel":
        return DomainModel(HALF_PLANE)

    @staticmethod
    def strip(h: float) -> "DomainModel":
        return DomainModel(STRIP, float(h))

    # --- geometry ---------------------------------------------------------

    def contains(self, z):
        """Exact membership predicate. Works on scalars and numpy arrays."""
        z = np.asarray(z, dtype=complex)
        az = np.abs(z)
        if self.kind == DISK:
            out = az < 1.0
        elif self.kind == PUNCTURED_DISK:
            out = (az > 0.0) & (az < 1.0)
        elif self.kind == PUNCTURED_DISK_R:
            out = (az > 0.0) & (az < self.param)
        elif self.kind == ANNULUS:
            out = (az > self.param) & (az < 1.0)
        elif self.kind == HALF_PLANE:
            out = z.imag > 0.0
        else:  # STRIP
            out = (z.imag > 0.0) & (z.imag < self.param)
        return bool(out) if out.ndim == 0 else out

    def is_singular(self, z) -> bool:
        """True when z is a declared singular point of the domain (the puncture)."""
        if self.kind in (PUNCTURED_DISK, PUNCTURED_DISK_R, ANNULUS):
            return complex(z) == 0.0
        return False

    def boundary_distance(self, z) -> float:
        """Euclidean distance from z to the domain edge (inf for none)."""
        z = complex(z)
        az = abs(z)
        if self.kind == DISK:
            return 1.0 - az
        if self.kind == PUNCTURED_DISK:
            return min(az, 1.0 - az)
        if self.kind == PUNCTURED_DISK_R:
            return min(az, self.param - az)
        if self.kind == ANNULUS:
            return min(az - self.param, 1.0 - az)
        if self.kind == HALF_PLANE:
            return z.imag
        return min(z.imag, self.param - z.imag)

    def label(self) -> str:
        if self.kind == ANNULUS:
            return f"annulus:{self.param}"
        if self.kind == PUNCTURED_DISK_R:
            return f"pdiskR:{self.param}"
        if self.kind == STRIP:
            return f"strip:{self.param}"
        return self.kind
