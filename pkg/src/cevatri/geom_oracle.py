"""Brute-force planar geometry used to cross-check the closed formulas.

Nothing here touches the group machinery: cevians are built from point
coordinates and measured with ``numpy.linalg.norm``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .triangle import Triangle, mu_nu

__all__ = [
    "PlanarTriangle",
    "embed",
    "cevian_points",
    "cevian_vectors",
    "cevian_lengths",
    "parallelogram_triangle",
    "bases_perpendicular",
]


def _pt(v) -> np.ndarray:
    a = np.array(v, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PlanarTriangle:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        for name in "ABC":
            object.__setattr__(self, name, _pt(getattr(self, name)))

    @property
    def signed_area(self) -> float:
        u = self.B - self.A
        w = self.C - self.A
        return 0.5 * float(u[0] * w[1] - u[1] * w[0])

    @property
    def sides(self) -> tuple[float, float, float]:
        """(|BC|, |CA|, |AB|)."""
        return (
            float(np.linalg.norm(self.C - self.B)),
            float(np.linalg.norm(self.A - self.C)),
            float(np.linalg.norm(self.B - self.A)),
        )

    def translated(self, offset) -> "PlanarTriangle":
        o = np.asarray(offset, dtype=float)
        return PlanarTriangle(self.A + o, self.B + o, self.C + o)

    @property
    def centroid(self) -> np.ndarray:
        return (self.A + self.B + self.C) / 3.0


def embed(T: Triangle) -> PlanarTriangle:
    """B at the origin, C on the positive x-axis, A above it."""
    a, b, c = T.sides
    ax = (a * a + c * c - b * b) / (2.0 * a)
    ay = math.sqrt(max(c * c - ax * ax, 0.0))
    return PlanarTriangle((ax, ay), (0.0, 0.0), (a, 0.0))


def cevian_points(P: PlanarTriangle, rho: float):
    """(A_rho, B_rho, C_rho) with AC_rho = rho AB, CB_rho = rho CA, BA_rho = rho BC."""
    A, B, C = P.A, P.B, P.C
    A_r = B + rho * (C - B)
    B_r = C + rho * (A - C)
    C_r = A + rho * (B - A)
    return A_r, B_r, C_r


def cevian_vectors(P: PlanarTriangle, rho: float):
    """The cevians CC_rho, BB_rho, AA_rho as planar vectors, in that order."""
    A_r, B_r, C_r = cevian_points(P, rho)
    return C_r - P.C, B_r - P.B, A_r - P.A


def cevian_lengths(P: PlanarTriangle, rho: float) -> tuple[float, float, float]:
    return tuple(float(np.linalg.norm(v)) for v in cevian_vectors(P, rho))


def parallelogram_triangle(P: PlanarTriangle, rho: float) -> PlanarTriangle:
    """Triangle A A_rho A'_rho, where ABCD is a parallelogram and A'_rho = C + rho CD."""
    D = P.A + P.C - P.B
    A_r = P.B + rho * (P.C - P.B)
    A_prime = P.C + rho * (D - P.C)
    return PlanarTriangle(P.A, A_r, A_prime)


def _base_cevian(P: PlanarTriangle, rho: float) -> np.ndarray:
    """The cevian that is the odd side out of the isosceles Ceva triangle."""
    vecs = cevian_vectors(P, rho)
    lens = [float(np.linalg.norm(v)) for v in vecs]
    # the base is the side whose partner pair has the smallest length gap
    gaps = [abs(lens[(i + 1) % 3] - lens[(i + 2) % 3]) for i in range(3)]
    return vecs[int(np.argmin(gaps))]


def bases_perpendicular(T: Triangle) -> float:
    """Normalized dot product of the bases of the two isosceles Ceva triangles."""
    mu, nu = mu_nu(T)
    P = embed(T)
    u = _base_cevian(P, mu)
    w = _base_cevian(P, nu)
    return float(u @ w) / float(np.linalg.norm(u) * np.linalg.norm(w))
