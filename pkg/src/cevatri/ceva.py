"""Ceva's operator C_rho and everything built on top of it.

``apply(T, rho)`` returns the triangle formed by the three cevians that
split the sides of T in the ratio rho : (1 - rho), taken in the order
(CC_rho, BB_rho, AA_rho).  With this order C_rho(C_rho(T)) = <rho>^2 T.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BrocardMismatch,
    EquilateralInput,
    GammaOutOfRange,
    ParamOutsideInterval,
    ParamOutsideIntervalWarning,
    VerificationError,
)
from .extgroup import INF, ExtReal, box, box_chain, box_inv, box_sqrt, coset, ext, in_coset, norm
from .triangle import (
    Triangle,
    TriangleClass,
    brocard_angle,
    classify,
    cone_angle,
    fundamental_interval,
    kappa,
    mu_nu,
    same_orientation_family,
    tan_brocard,
)
from .unitgroup import check_unit, diamond, diamond_inv, project

__all__ = [
    "Similarity",
    "SimilarityRelation",
    "ReconstructionPlan",
    "apply",
    "apply_hajja",
    "iterate",
    "similarity",
    "param_similarity",
    "self_similar_params",
    "isosceles_params",
    "iota",
    "matching_param",
    "z_map",
    "triangle_from_shape",
    "wide_base_ratio",
    "right_ceva_param",
    "is_right",
    "reconstruct",
    "execute_plan",
]


def apply(T: Triangle, rho) -> Triangle:
    """C_rho(T) from the three cevian-length formulas."""
    rho = ext(rho)
    if rho is INF:
        return Triangle(T.c, T.b, T.a)
    x, y, z = T.squares
    u = 1.0 - rho
    w = rho * (rho - 1.0)
    sq = (rho * x + u * y + w * z, u * x + w * y + rho * z, w * x + rho * y + u * z)
    if not all(math.isfinite(v) for v in sq):
        raise OverflowError(f"C_rho(T) is out of floating point range for rho={rho!r}")
    return Triangle(*(math.sqrt(v) for v in sq))


def apply_hajja(T: Triangle, rho) -> Triangle:
    """The generalized median operator H_rho: same cevians, reversed order."""
    x, y, z = apply(T, rho).sides
    return Triangle(z, y, x)


def iterate(T: Triangle, rho, n: int) -> Triangle:
    if n < 0:
        raise ValueError("n must be nonnegative")
    rho = ext(rho)
    for _ in range(n):
        T = apply(T, rho)
    return T


# ---------------------------------------------------------------- similarity


class Similarity(enum.Enum):
    NOT_SIMILAR = "not_similar"
    DIRECT = "direct"
    REVERSE = "reverse"
    BOTH = "both"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SimilarityRelation:
    """How T relates to V; ``ratio`` is T/V (None when not similar)."""

    kind: Similarity
    ratio: Optional[float] = None

    @property
    def direct(self) -> bool:
        return self.kind in (Similarity.DIRECT, Similarity.BOTH)

    @property
    def reverse(self) -> bool:
        return self.kind in (Similarity.REVERSE, Similarity.BOTH)

    @property
    def similar(self) -> bool:
        return self.kind is not Similarity.NOT_SIMILAR


# index of V's side matched against (a, b, c)
_DIRECT = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_REVERSE = ((2, 1, 0), (1, 0, 2), (0, 2, 1))


def _pattern_ratio(t, v, perm, tol):
    r = [t[i] / v[perm[i]] for i in range(3)]
    mean = (r[0] + r[1] + r[2]) / 3.0
    if all(abs(ri - mean) <= tol * mean for ri in r):
        return r
    return None


def _match(T: Triangle, V: Triangle, patterns, tol):
    t, v = T.sides, V.sides
    for perm in patterns:
        r = _pattern_ratio(t, v, perm, tol)
        if r is not None:
            return perm, r
    return None


def _geomean(r) -> float:
    return math.exp(sum(math.log(x) for x in r) / len(r))


def similarity(T: Triangle, V: Triangle, tol: float = 1e-9) -> SimilarityRelation:
    d = _match(T, V, _DIRECT, tol)
    r = _match(T, V, _REVERSE, tol)
    if d and r:
        return SimilarityRelation(Similarity.BOTH, sum(d[1]) / 3.0)
    if d:
        return SimilarityRelation(Similarity.DIRECT, sum(d[1]) / 3.0)
    if r:
        return SimilarityRelation(Similarity.REVERSE, sum(r[1]) / 3.0)
    return SimilarityRelation(Similarity.NOT_SIMILAR)


def _non_equilateral(T: Triangle) -> TriangleClass:
    cls = classify(T)
    if cls is TriangleClass.EQUILATERAL:
        raise EquilateralInput(f"{T!r} is equilateral")
    return cls


def param_similarity(T: Triangle, rho, tau, tol: float = 1e-9) -> SimilarityRelation:
    """Relation between C_rho(T) and C_tau(T), decided by the group law.

    Direct iff tau is in rho [] S; reverse iff rho [] tau is in kappa_T [] S.
    The decision is cross-checked against the side lengths.
    """
    _non_equilateral(T)
    rho, tau = ext(rho), ext(tau)
    direct = in_coset(tau, rho, "S", tol)
    reverse = in_coset(box(rho, tau), kappa(T), "S", tol)
    ratio = norm(rho) / norm(tau)
    if direct and reverse:
        rel = SimilarityRelation(Similarity.BOTH, ratio)
    elif direct:
        rel = SimilarityRelation(Similarity.DIRECT, ratio)
    elif reverse:
        rel = SimilarityRelation(Similarity.REVERSE, ratio)
    else:
        rel = SimilarityRelation(Similarity.NOT_SIMILAR)
    check = similarity(apply(T, rho), apply(T, tau), tol)
    if check.kind is not rel.kind or (rel.similar and abs(check.ratio - ratio) > tol * ratio):
        raise VerificationError(f"group law says {rel}, side lengths say {check}")
    return rel


def self_similar_params(T: Triangle, tol: float = 1e-9) -> tuple:
    """kappa_T [] S: the parameters rho with C_rho(T) directly similar to T."""
    _non_equilateral(T)
    params = coset(kappa(T), "S")
    for rho in params:
        rel = similarity(apply(T, rho), T, tol)
        if not rel.direct or abs(rel.ratio - norm(rho)) > tol * norm(rho):
            raise VerificationError(f"C_{rho}(T) is not directly similar to T: {rel}")
    return params


def isosceles_params(T: Triangle) -> tuple:
    """sqrt(kappa_T) [] T_GROUP, ordered as sqrt(kappa_T) [] (0, 1/2, 1, 2, inf, -1).

    Positions 0, 2, 4 form the S-coset and share one isosceles type; positions
    1, 3, 5 have the other.
    """
    _non_equilateral(T)
    params = coset(box_sqrt(kappa(T)), "T")
    kinds = [classify(apply(T, rho)) for rho in params]
    s_half = {kinds[0], kinds[2], kinds[4]}
    t_half = {kinds[1], kinds[3], kinds[5]}
    ok = (
        len(s_half) == 1
        and len(t_half) == 1
        and {s_half.pop(), t_half.pop()} == {TriangleClass.WIDE, TriangleClass.NARROW}
    )
    if not ok:
        raise VerificationError(f"unexpected isosceles types {kinds} for {T!r}")
    return params


def _in_interval(xi: float, lo: float, hi: float, tol: float = 1e-12) -> bool:
    return lo - tol <= xi <= hi + tol


def iota(T: Triangle, xi: float, strict: bool = False) -> float:
    """p(kappa_T) <> xi^<>; C_xi(T) and C_iota(xi)(T) are reversely similar.

    For xi outside the fundamental interval the value is still returned;
    a warning is issued, or :class:`ParamOutsideInterval` if ``strict``.
    """
    _non_equilateral(T)
    xi = check_unit(xi, "xi")
    lo, hi = fundamental_interval(T)
    if not _in_interval(xi, lo, hi):
        msg = f"xi={xi!r} outside M_T=[{lo!r}, {hi!r}]"
        if strict:
            raise ParamOutsideInterval(msg)
        warnings.warn(msg, ParamOutsideIntervalWarning, stacklevel=2)
    return diamond(project(kappa(T)), diamond_inv(xi))


def _check_brocard(T: Triangle, V: Triangle, tol: float) -> None:
    wt, wv = brocard_angle(T), brocard_angle(V)
    if abs(wt - wv) > tol:
        raise BrocardMismatch(wt, wv)


def matching_param(T: Triangle, V: Triangle, tol: float = 1e-9) -> float:
    """mu_V <> mu_T: T is directly similar to C_result(V) (and V to C_result(T))."""
    _non_equilateral(T)
    _non_equilateral(V)
    _check_brocard(T, V, tol)
    return diamond(mu_nu(V)[0], mu_nu(T)[0])


def z_map(T: Triangle, V: Triangle, xi: float, tol: float = 1e-9) -> float:
    """Monotonic bijection from M_T onto M_V matching similar Ceva triangles."""
    ct, cv = _non_equilateral(T), _non_equilateral(V)
    _check_brocard(T, V, tol)
    xi = check_unit(xi, "xi")
    lo, hi = fundamental_interval(T)
    if not _in_interval(xi, lo, hi):
        raise ParamOutsideInterval(f"xi={xi!r} outside M_T=[{lo!r}, {hi!r}]")
    mu_t, mu_v = mu_nu(T)[0], mu_nu(V)[0]
    if same_orientation_family(ct) == same_orientation_family(cv):
        return diamond(diamond(mu_v, diamond_inv(mu_t)), xi)
    return diamond(diamond(mu_v, mu_t), diamond_inv(xi))


_GAMMA_MAX = math.atan(1.0 / math.sqrt(2.0))


def wide_base_ratio(gamma: float) -> float:
    """Base/leg ratio of the wide isosceles triangle with cone angle gamma."""
    if not (0.0 <= gamma < _GAMMA_MAX):
        raise GammaOutOfRange(f"gamma={gamma!r} outside [0, arctan(1/sqrt 2))")
    tg = math.tan(gamma)
    r2 = math.sqrt(2.0)
    return math.sqrt((r2 + 2.0 * tg) / (r2 - tg))


def triangle_from_shape(gamma: float, mu: float) -> Triangle:
    """A triangle whose shape descriptor is (gamma, mu): C_mu of a wide isosceles.

    ``mu == 1`` (or ``gamma == 0``) gives the equilateral triangle.
    """
    F = wide_base_ratio(gamma)
    if mu == 1.0 or gamma == 0.0:
        return Triangle(1.0, 1.0, 1.0)
    mu = check_unit(mu, "mu")
    return apply(Triangle(1.0, 1.0, F), mu)


def is_right(T: Triangle, tol: float = 1e-9) -> bool:
    x, y, z = T.squares
    return any(abs(p + q - h) <= tol * h for p, q, h in ((x, y, z), (y, z, x), (z, x, y)))


def right_ceva_param(T: Triangle, tol: float = 1e-9) -> Optional[ExtReal]:
    """A parameter rho with C_rho(T) a right triangle, or None if none exists.

    One exists exactly when tan(omega_T) <= 1/2.
    """
    _non_equilateral(T)
    tw = tan_brocard(T)
    if tw > 0.5 + 1e-12:
        return None
    mu = mu_nu(T)[0]
    if abs(tw - 0.5) <= 1e-12:
        result: ExtReal = mu
    else:
        F2 = wide_base_ratio(cone_angle(T)) ** 2
        tau = (2.0 - F2 + math.sqrt((F2 - 2.0) * (5.0 * F2 - 2.0))) / (2.0 * F2)
        # C_tau(C_mu(T)) is directly similar to C_zeta(T) for zeta in kappa [] mu^[] [] tau [] S
        result = box_chain(kappa(T), box_inv(mu), tau)
    if not is_right(apply(T, result), tol):
        raise VerificationError(f"C_{result!r}(T) is not a right triangle")
    return result


# ------------------------------------------------------------ reconstruction


@dataclass(frozen=True)
class ReconstructionPlan:
    """C_rho applied after 2*n0 applications of C_xi turns T into V."""

    rho: float
    n0: int
    xi: float
    scale: float

    @property
    def total_ops(self) -> int:
        return 2 * self.n0 + 1


def execute_plan(T: Triangle, plan: ReconstructionPlan) -> Triangle:
    return apply(iterate(T, plan.xi, 2 * plan.n0), plan.rho)


def _minimal_n0(l: float, tol: float) -> int:
    if abs(l - 1.0) <= tol:
        return 0
    n = 1
    while l ** (1.0 / n) < 0.75:
        n += 1
    return n


def reconstruct(T: Triangle, V: Triangle, tol: float = 1e-9) -> ReconstructionPlan:
    """Plan a congruent copy of V out of T, given equal Brocard angles."""
    _check_brocard(T, V, tol)
    if classify(T) is TriangleClass.EQUILATERAL:
        rho = 0.0
    else:
        _non_equilateral(V)
        rho = diamond(mu_nu(T)[0], mu_nu(V)[0])
    match = _match(V, apply(T, rho), _DIRECT, tol)
    if match is None:
        raise VerificationError("V is not directly similar to C_rho(T)")
    l = _geomean(match[1])
    n0 = _minimal_n0(l, tol)
    if n0 == 0:
        l, xi = 1.0, 1.0
    else:
        target = l ** (1.0 / n0)
        xi = 0.5 * (1.0 + math.sqrt(4.0 * target - 3.0))
    plan = ReconstructionPlan(rho=rho, n0=n0, xi=xi, scale=l)
    rel = similarity(execute_plan(T, plan), V, tol)
    if not rel.direct or abs(rel.ratio - 1.0) > tol:
        raise VerificationError(f"executing the plan gives {rel}, expected direct congruence")
    return plan
