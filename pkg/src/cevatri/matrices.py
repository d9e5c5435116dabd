"""Left-circulant reflection matrices M_rho and their composition law.

``<rho>^2 M_rho`` maps the squared sides of T to the squared sides of the
Ceva triangle C_rho(T).  Every M_rho is a symmetric orthogonal reflection
fixing r = -(1, 1, 1)/sqrt(3), and products of three of them collapse to a
single one whose parameter is given by the box group law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import IsotropicVector, NoSolution, VerificationError
from .extgroup import INF, ExtReal, box, box_inv, box_sqrt, ext, norm

__all__ = [
    "CevaMatrix",
    "EigenBasis",
    "R_VEC",
    "ceva_matrix",
    "eigenbasis",
    "change_of_basis",
    "rotation_about_r",
    "compose",
    "kappa_vec",
    "ReflectionSolution",
    "solve_reflection",
]

R_VEC = -np.ones(3) / math.sqrt(3.0)
_M_INF = np.array([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]])


def _rel_eq(x: float, y: float, tol: float) -> bool:
    return abs(x - y) <= tol * max(abs(x), abs(y))


def kappa_vec(t, tol: float = 1e-9) -> ExtReal:
    """(a' - b')/(a' - c'), or INF when a' = c'."""
    a_, b_, c_ = (float(v) for v in t)
    if _rel_eq(a_, b_, tol) and _rel_eq(b_, c_, tol) and _rel_eq(a_, c_, tol):
        raise IsotropicVector(f"vector {tuple(t)!r} is parallel to [1, 1, 1]")
    if a_ == c_:
        return INF
    return (a_ - b_) / (a_ - c_) + 0.0


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CevaMatrix:
    m: np.ndarray
    rho: ExtReal

    def __post_init__(self):
        object.__setattr__(self, "m", _frozen(self.m))

    def __matmul__(self, other):
        if isinstance(other, CevaMatrix):
            return self.m @ other.m
        return self.m @ np.asarray(other, dtype=float)


@dataclass(frozen=True)
class EigenBasis:
    p: np.ndarray
    q: np.ndarray
    r: np.ndarray = field(default_factory=lambda: _frozen(R_VEC))

    def __post_init__(self):
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    def as_matrix(self) -> np.ndarray:
        """Columns p, q, r."""
        return np.column_stack([self.p, self.q, self.r])


def ceva_matrix(rho) -> CevaMatrix:
    rho = ext(rho)
    if rho is INF:
        return CevaMatrix(_M_INF, INF)
    u = 1.0 - rho
    w = rho * (rho - 1.0)
    n2 = 1.0 - rho + rho * rho
    m = np.array([[rho, u, w], [u, w, rho], [w, rho, u]]) / n2
    return CevaMatrix(m, rho)


def eigenbasis(rho) -> EigenBasis:
    """Orthonormal, positively oriented eigenvectors for eigenvalues 1, -1, 1."""
    rho = ext(rho)
    if rho is INF:
        p = np.array([-1.0, 2.0, -1.0]) / math.sqrt(6.0)
        q = np.array([1.0, 0.0, -1.0]) / math.sqrt(2.0)
        return EigenBasis(p, q)
    n = norm(rho)
    p = np.array([1.0 + rho, 1.0 - 2.0 * rho, rho - 2.0]) / (math.sqrt(6.0) * n)
    q = np.array([1.0 - rho, -1.0, rho]) / (math.sqrt(2.0) * n)
    return EigenBasis(p, q)


def change_of_basis() -> np.ndarray:
    """Q with columns p_0, q_0, r."""
    return eigenbasis(0.0).as_matrix()


def rotation_about_r(angle: float) -> np.ndarray:
    """Counterclockwise rotation about r, in standard coordinates (Q Rot Q^T)."""
    c, s = math.cos(angle), math.sin(angle)
    rot = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    Q = change_of_basis()
    return Q @ rot @ Q.T


def compose(zeta, tau, rho, tol: float = 1e-9) -> tuple[CevaMatrix, ExtReal]:
    """M_zeta M_tau M_rho together with its parameter rho [] tau^[] [] zeta.

    The numeric product and the matrix of the group-law parameter are
    computed independently and must agree entrywise within ``tol``.
    """
    param = box(box(rho, box_inv(tau)), zeta)
    product = ceva_matrix(zeta).m @ ceva_matrix(tau).m @ ceva_matrix(rho).m
    expected = ceva_matrix(param).m
    err = float(np.max(np.abs(product - expected)))
    if err > tol:
        raise VerificationError(
            f"M_zeta M_tau M_rho differs from M_param by {err:.3e} (zeta={zeta!r}, tau={tau!r}, rho={rho!r})"
        )
    return CevaMatrix(product, param), param


@dataclass(frozen=True)
class ReflectionSolution:
    lam: float
    rho: ExtReal
    rho_candidates: tuple
    residual: float


def _check_not_isotropic(vec: np.ndarray, name: str) -> None:
    n = np.linalg.norm(vec)
    if n == 0 or abs(abs(vec @ R_VEC) - n) <= 1e-12 * n:
        raise IsotropicVector(f"{name} is a multiple of r")


def solve_reflection(t, v, solvable_tol: float = 1e-7, verify_tol: float = 1e-9) -> ReflectionSolution:
    """Solve M_rho t = lambda v for lambda and rho.

    Solvable exactly when t and v make the same angle with r.  The two
    candidate parameters sqrt(k_v) [] sqrt(k_t) and the same times [] 2 are
    both checked numerically; exactly one of them reproduces v.
    """
    t = np.asarray(t, dtype=float)
    v = np.asarray(v, dtype=float)
    _check_not_isotropic(t, "t")
    _check_not_isotropic(v, "v")
    nt, nv = float(np.linalg.norm(t)), float(np.linalg.norm(v))
    ct, cv = float(t @ R_VEC) / nt, float(v @ R_VEC) / nv
    if abs(ct - cv) > solvable_tol * max(abs(ct), abs(cv), 1.0):
        raise NoSolution(f"t and v make different angles with r: {ct!r} vs {cv!r}")
    lam = nt / nv
    st = box_sqrt(kappa_vec(t))
    sv = box_sqrt(kappa_vec(v))
    first = box(sv, st)
    candidates = (first, box(first, 2.0))
    best = None
    for cand in candidates:
        res = float(np.linalg.norm(ceva_matrix(cand).m @ t - lam * v)) / nt
        if best is None or res < best[1]:
            best = (cand, res)
    if best[1] > verify_tol:
        raise VerificationError(f"no candidate reproduces v (best residual {best[1]:.3e})")
    return ReflectionSolution(lam, best[0], candidates, best[1])
