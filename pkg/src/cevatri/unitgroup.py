"""The group (I, diamond) on the unit interval I = [0, 1).

``project`` picks the unique representative of the coset S [] rho lying in
I; it is a homomorphism from (R u {inf}, box) onto (I, diamond).
"""

from __future__ import annotations

import math

from .extgroup import INF, box, box_sqrt, ext, phi_inv

__all__ = [
    "ONE_MINUS",
    "project",
    "diamond",
    "diamond_inv",
    "diamond_sqrt_pair",
    "f_translation",
    "g_involution",
    "unit_close",
    "check_unit",
]

ONE_MINUS = math.nextafter(1.0, 0.0)


def _clamp(v: float) -> float:
    # keep the half-open invariant under rounding
    return ONE_MINUS if v >= 1.0 else v + 0.0


def check_unit(x, name: str = "value") -> float:
    x = float(x)
    if not (0.0 <= x < 1.0):
        raise ValueError(f"{name}={x!r} is not in the unit interval [0, 1)")
    return x


def project(rho) -> float:
    """p(rho): the element of S [] rho that lies in [0, 1)."""
    rho = ext(rho)
    if rho is INF or rho < 0:
        v = box(1.0, rho)
    elif rho < 1.0:
        v = rho
    else:
        v = box(INF, rho)
    return _clamp(v)


def diamond(rho: float, tau: float) -> float:
    rho = check_unit(rho, "rho")
    tau = check_unit(tau, "tau")
    s = rho + tau
    prod = rho * tau
    if s < 1.0:
        return _clamp((s - prod) / (1.0 - prod))
    return _clamp((s - 1.0) / (s - prod))


def diamond_inv(rho: float) -> float:
    rho = check_unit(rho, "rho")
    return 0.0 if rho == 0.0 else _clamp(1.0 - rho)


def diamond_sqrt_pair(kappa: float) -> tuple[float, float]:
    """Both solutions of s <> s = kappa in I, ordered s1 < 1/2 <= s2."""
    kappa = check_unit(kappa, "kappa")
    s1 = box_sqrt(kappa)
    return s1, diamond(0.5, s1)


def f_translation(kappa: float, xi: float) -> float:
    """F_kappa(xi) = kappa <> xi, a bijection of I with inverse F_{1-kappa}."""
    return diamond(kappa, xi)


def g_involution(kappa: float, xi: float) -> float:
    """G_kappa(xi) = kappa <> xi^<>; an involution fixing diamond_sqrt_pair(kappa)."""
    return diamond(kappa, diamond_inv(xi))


def unit_close(x: float, y: float, tol: float = 1e-9) -> bool:
    """Compare elements of I as points of the circle (0 and 1- are neighbours)."""
    step = math.pi / 3
    d = math.fmod(abs(phi_inv(x) - phi_inv(y)), step)
    return min(d, step - d) <= tol
