"""The commutative group (R u {inf}, box) and its angular model.

Elements of the extended real line are plain Python floats for finite
values and the singleton :data:`INF` for the point at infinity.  The group
law is conjugate, via :func:`phi`, to addition modulo pi on the half-open
interval [-pi/3, 2pi/3).
"""

from __future__ import annotations

import math
from numbers import Real
from typing import Union

__all__ = [
    "INF",
    "ExtReal",
    "ext",
    "is_inf",
    "norm",
    "phi",
    "phi_inv",
    "angle_normalize",
    "angle_add",
    "box",
    "box_inv",
    "box_sqrt",
    "box_chain",
    "ext_equal",
    "ext_close",
    "angular_distance",
    "in_coset",
    "coset",
    "S_GROUP",
    "T_GROUP",
]

ANGLE_LO = -math.pi / 3
ANGLE_HI = 2 * math.pi / 3
_SQRT3 = math.sqrt(3.0)


class _Infinity:
    """The unsigned point at infinity.  Use the module constant :data:`INF`."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __float__(self):
        return math.inf

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("cevatri.INF")


INF = _Infinity()

ExtReal = Union[float, _Infinity]


def is_inf(x) -> bool:
    return x is INF


def ext(x) -> ExtReal:
    """Coerce ``x`` into an extended real.

    Accepts reals, :data:`INF`, ``math.inf`` of either sign and the string
    ``"inf"`` (any case).  NaN is rejected.
    """
    if x is INF:
        return INF
    if isinstance(x, str):
        if x.strip().lower() == "inf":
            return INF
        raise ValueError(f"not an extended real: {x!r}")
    if not isinstance(x, Real):
        raise TypeError(f"not an extended real: {x!r}")
    v = float(x)
    if math.isnan(v):
        raise ValueError("NaN is not an extended real")
    if math.isinf(v):
        return INF
    return v + 0.0  # -0.0 -> 0.0


def _finite(v: float) -> float:
    if not math.isfinite(v):
        raise OverflowError("result left the floating point range")
    return v + 0.0


def norm(rho) -> float:
    """<rho> = sqrt(1 - rho + rho^2), with <inf> = 1."""
    rho = ext(rho)
    if rho is INF:
        return 1.0
    return math.sqrt(1.0 - rho + rho * rho)


def angle_normalize(theta: float) -> float:
    """Reduce an angle modulo pi into [-pi/3, 2pi/3)."""
    t = math.fmod(theta - ANGLE_LO, math.pi)
    if t < 0:
        t += math.pi
    t += ANGLE_LO
    if t >= ANGLE_HI:
        t -= math.pi
    return t


def angle_add(theta: float, phi_: float) -> float:
    return angle_normalize(theta + phi_)


def phi(theta: float) -> ExtReal:
    """Increasing bijection [-pi/3, 2pi/3) -> R u {inf}."""
    if not (ANGLE_LO <= theta < ANGLE_HI):
        raise ValueError(f"angle {theta!r} outside [-pi/3, 2pi/3)")
    if theta == ANGLE_LO:
        return INF
    return _finite(math.sin(theta) / math.cos(theta - math.pi / 6))


def phi_inv(rho) -> float:
    rho = ext(rho)
    if rho is INF:
        return ANGLE_LO
    return angle_normalize(math.atan((2.0 / _SQRT3) * (rho - 0.5)) + math.pi / 6)


def box(rho, tau) -> ExtReal:
    """The group operation rho [] tau."""
    rho = ext(rho)
    tau = ext(tau)
    if rho is INF and tau is INF:
        return 1.0
    if tau is INF:
        return INF if rho == 0 else _finite(1.0 - 1.0 / rho)
    if rho is INF:
        return INF if tau == 0 else _finite(1.0 - 1.0 / tau)
    prod = rho * tau
    if prod == 1.0:
        return INF
    return _finite((rho + tau - prod) / (1.0 - prod))


def box_inv(rho) -> ExtReal:
    rho = ext(rho)
    if rho is INF:
        return 1.0
    if rho == 1.0:
        return INF
    return _finite(rho / (rho - 1.0))


def box_sqrt(kappa) -> ExtReal:
    """The unique solution in [-1, 1) of xi [] xi = kappa.

    The other solution is ``box(box_sqrt(kappa), 2)``.
    """
    kappa = ext(kappa)
    if kappa is INF:
        return -1.0
    return kappa / (1.0 + norm(kappa))


def box_chain(*values) -> ExtReal:
    """Left fold of :func:`box` over ``values``; the empty chain is 0."""
    acc: ExtReal = 0.0
    for v in values:
        acc = box(acc, v)
    return acc


def ext_equal(x, y) -> bool:
    """Symbolic equality: INF only equals INF, finite values compare exactly."""
    x = ext(x)
    y = ext(y)
    if x is INF or y is INF:
        return x is y
    return x == y


def angular_distance(x, y) -> float:
    """Distance of phi_inv(x) and phi_inv(y) on the circle R / pi Z."""
    d = math.fmod(abs(phi_inv(x) - phi_inv(y)), math.pi)
    return min(d, math.pi - d)


def ext_close(x, y, tol: float = 1e-9) -> bool:
    """Tolerant equality measured in angle space, robust near the pole."""
    return angular_distance(x, y) <= tol


S_GROUP = (0.0, 1.0, INF)
T_GROUP = (0.0, 0.5, 1.0, 2.0, INF, -1.0)

# angular step generating each subgroup
_STEP = {"S": math.pi / 3, "T": math.pi / 6}


def coset(base, subgroup: str = "S") -> tuple:
    """``base [] G`` for G the order-3 subgroup S or the order-6 subgroup T."""
    members = S_GROUP if subgroup == "S" else T_GROUP
    return tuple(box(base, g) for g in members)


def in_coset(x, base, subgroup: str = "S", tol: float = 1e-9) -> bool:
    """Tolerant test of ``x in base [] G``, done in angle space."""
    step = _STEP[subgroup]
    d = math.fmod(abs(phi_inv(x) - phi_inv(base)), step)
    return min(d, step - d) <= tol
