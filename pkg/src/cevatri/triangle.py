"""Oriented triangles given by their counterclockwise side lengths.

A triangle ``(a, b, c)`` has ``a = BC``, ``b = CA`` and ``c = AB`` with the
vertices A, B, C labelled counterclockwise.  Most invariants here are
computed from the squared sides ``t = (a^2, b^2, c^2)``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTriangle, EquilateralInput, NonPositiveSide
from .extgroup import ExtReal, box_sqrt
from .matrices import kappa_vec
from .unitgroup import diamond, project

__all__ = [
    "Triangle",
    "TriangleClass",
    "ShapeDescriptor",
    "REL_TOL",
    "validate",
    "classify",
    "squared_vector",
    "is_equilateral",
    "cone_angle",
    "brocard_angle",
    "tan_brocard",
    "kappa",
    "kappa_vec",
    "mu_nu",
    "mu_closed_form",
    "fundamental_interval",
    "hajja_sigma",
    "shape_descriptor",
    "same_orientation_family",
]

#: relative tolerance for deciding equal squared sides
REL_TOL = 1e-9


def _check_sides(a: float, b: float, c: float) -> None:
    for name, s in zip("abc", (a, b, c)):
        if not math.isfinite(s) or s <= 0:
            raise NonPositiveSide(f"side {name}={s!r} must be a positive finite number", "a, b, c > 0")
    # both forms of the criterion are evaluated; either failing rejects
    linear_ok = abs(a - b) < c < a + b
    m = max(a, b, c)  # normalize so the quartic cannot overflow
    x, y, z = (a / m) ** 2, (b / m) ** 2, (c / m) ** 2
    quartic_ok = x * x + y * y + z * z < 2.0 * (x * y + y * z + z * x)
    if not linear_ok and not quartic_ok:
        raise DegenerateTriangle(
            f"({a!r}, {b!r}, {c!r}) violates |a-b| < c < a+b and a^4+b^4+c^4 < 2(a^2b^2+b^2c^2+c^2a^2)",
            "|a-b| < c < a+b",
        )
    if not linear_ok:
        raise DegenerateTriangle(f"({a!r}, {b!r}, {c!r}) violates |a-b| < c < a+b", "|a-b| < c < a+b")
    if not quartic_ok:
        raise DegenerateTriangle(
            f"({a!r}, {b!r}, {c!r}) violates a^4+b^4+c^4 < 2(a^2b^2+b^2c^2+c^2a^2)",
            "a^4+b^4+c^4 < 2(a^2b^2+b^2c^2+c^2a^2)",
        )


@dataclass(frozen=True, slots=True)
class Triangle:
    """Counterclockwise side triple; construction validates the triple."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "c", float(self.c))
        _check_sides(self.a, self.b, self.c)

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    @property
    def squares(self) -> tuple[float, float, float]:
        return (self.a * self.a, self.b * self.b, self.c * self.c)

    def __iter__(self):
        return iter(self.sides)

    def __getitem__(self, i):
        return self.sides[i]

    def scaled(self, factor: float) -> "Triangle":
        return Triangle(factor * self.a, factor * self.b, factor * self.c)

    def rotated(self, k: int = 1) -> "Triangle":
        """Cyclic relabelling; ``rotated(1)`` is ``(b, c, a)``.  Directly congruent."""
        s = self.sides
        k %= 3
        return Triangle(*(s[k:] + s[:k]))

    def reversed(self) -> "Triangle":
        """The mirror image ``(c, b, a)``; reversely congruent."""
        return Triangle(self.c, self.b, self.a)

    @classmethod
    def from_squares(cls, t) -> "Triangle":
        x, y, z = (float(v) for v in t)
        if min(x, y, z) <= 0:
            raise NonPositiveSide(f"squared sides {tuple(t)!r} must be positive", "a, b, c > 0")
        return cls(math.sqrt(x), math.sqrt(y), math.sqrt(z))


def validate(a: float, b: float, c: float) -> Triangle:
    return Triangle(a, b, c)


def squared_vector(T: Triangle) -> np.ndarray:
    return np.array(T.squares, dtype=float)


class TriangleClass(enum.Enum):
    EQUILATERAL = "equilateral"
    WIDE = "wide"
    NARROW = "narrow"
    INCREASING = "increasing"
    DECREASING = "decreasing"

    def __str__(self):
        return self.value


def _eq(x: float, y: float, tol: float = REL_TOL) -> bool:
    return abs(x - y) <= tol * max(abs(x), abs(y))


def is_equilateral(T: Triangle, tol: float = REL_TOL) -> bool:
    x, y, z = T.squares
    return _eq(x, y, tol) and _eq(y, z, tol) and _eq(x, z, tol)


def classify(T: Triangle, tol: float = REL_TOL) -> TriangleClass:
    x, y, z = T.squares
    exy, eyz, ezx = _eq(x, y, tol), _eq(y, z, tol), _eq(z, x, tol)
    if exy and eyz and ezx:
        return TriangleClass.EQUILATERAL
    if exy or eyz or ezx:
        if exy:
            leg, base = (x + y) / 2, z
        elif eyz:
            leg, base = (y + z) / 2, x
        else:
            leg, base = (z + x) / 2, y
        return TriangleClass.WIDE if base > leg else TriangleClass.NARROW
    if x < y < z or y < z < x or z < x < y:
        return TriangleClass.INCREASING
    return TriangleClass.DECREASING


def same_orientation_family(cls: TriangleClass) -> str:
    """Wide triangles travel with the increasing ones, narrow with decreasing."""
    if cls in (TriangleClass.INCREASING, TriangleClass.WIDE):
        return "increasing"
    if cls in (TriangleClass.DECREASING, TriangleClass.NARROW):
        return "decreasing"
    return "equilateral"


def _moments(T: Triangle):
    x, y, z = T.squares
    s1 = x + y + z
    # sum of squared differences = 2(S4 - S2), computed without cancellation
    spread = (x - y) ** 2 + (y - z) ** 2 + (z - x) ** 2
    return x, y, z, s1, spread


def cone_angle(T: Triangle) -> float:
    """Angle between (a^2, b^2, c^2) and (1, 1, 1), in [0, arctan(1/sqrt 2))."""
    *_, s1, spread = _moments(T)
    # tan^2 = (2k - 2)/(k + 2) with k = S4/S2, rewritten as spread / S1^2
    return math.atan(math.sqrt(spread) / s1)


def tan_brocard(T: Triangle) -> float:
    s1 = sum(T.squares)
    # (2 - k)/(k + 2) = (2 S2 - S4) / S1^2 and 2 S2 - S4 = 16 area^2 > 0
    a, b, c = T.sides
    sixteen_area_sq = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    return math.sqrt(sixteen_area_sq) / s1


def brocard_angle(T: Triangle) -> float:
    """Brocard angle omega in (0, pi/6]; satisfies 3 tan^2 w + 2 tan^2 g = 1."""
    return math.atan(tan_brocard(T))


def kappa(T: Triangle) -> ExtReal:
    """Parameter of the Ceva triangle directly similar to T itself."""
    return kappa_vec(T.squares)


def _require_non_equilateral(T: Triangle) -> TriangleClass:
    cls = classify(T)
    if cls is TriangleClass.EQUILATERAL:
        raise EquilateralInput(f"{T!r} is equilateral")
    return cls


def mu_nu(T: Triangle) -> tuple[float, float]:
    """(mu_T, nu_T): parameters in [0, 1) of the wide and narrow isosceles Ceva triangles."""
    cls = _require_non_equilateral(T)
    if cls is TriangleClass.WIDE:
        return 0.0, 0.5
    if cls is TriangleClass.NARROW:
        return 0.5, 0.0
    s1 = box_sqrt(project(kappa(T)))
    s2 = diamond(0.5, s1)
    if cls is TriangleClass.INCREASING:
        return s1, s2
    return s2, s1


def mu_closed_form(T: Triangle) -> float:
    """mu_T straight from the side lengths, after cyclic relabelling.

    Independent of the group machinery used by :func:`mu_nu`.
    """
    _require_non_equilateral(T)
    s = T.sides
    for k in range(3):
        a, b, c = s[k:] + s[:k]
        x, y, z = a * a, b * b, c * c
        root = math.sqrt(0.5 * ((x - y) ** 2 + (y - z) ** 2 + (z - x) ** 2))
        if a <= b < c:
            return (y - x) / (z - x + root)
        if a >= b > c:
            return (x - z) / (y - z + root)
    raise AssertionError("no admissible labelling found")  # unreachable for valid input


def fundamental_interval(T: Triangle) -> tuple[float, float]:
    mu, nu = mu_nu(T)
    return (min(mu, nu), max(mu, nu))


_W = cmath.exp(-2j * math.pi / 3)


def hajja_sigma(T: Triangle) -> complex:
    x, y, z = T.squares
    return (x + _W * y + _W.conjugate() * z) / (x + y + z)


@dataclass(frozen=True, slots=True)
class ShapeDescriptor:
    """gamma + i mu; a complete invariant of direct similarity."""

    gamma: float
    mu: float

    def close(self, other: "ShapeDescriptor", tol: float = 1e-9) -> bool:
        if abs(self.gamma - other.gamma) > tol:
            return False
        if self.mu == 1.0 or other.mu == 1.0:
            return self.mu == other.mu
        d = abs(self.mu - other.mu)
        # mu lives on I = [0, 1) where 0 and 1- are neighbours
        return min(d, 1.0 - d) <= tol

    def as_complex(self) -> complex:
        return complex(self.gamma, self.mu)


def shape_descriptor(T: Triangle) -> ShapeDescriptor:
    gamma = cone_angle(T)
    if classify(T) is TriangleClass.EQUILATERAL:
        return ShapeDescriptor(gamma, 1.0)
    return ShapeDescriptor(gamma, mu_nu(T)[0])
