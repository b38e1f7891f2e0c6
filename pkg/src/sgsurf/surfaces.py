"""Closed-form semi-discrete surfaces: discrete curves with an isoperimetric flow.

Four families, indexed by elliptic family and a twist flag.  With
phi_m = m alpha + beta k t (dn) or m alpha + beta t (cn) and
psi_m = m gamma + beta t:

  dn untwisted: Gamma = ( cos(phi) dn(psi)/k, sin(phi) dn(psi)/k, z(psi) ),
                B = ( cos(phi) sn(psi), sin(phi) sn(psi), -cn(psi) ),
                cos(alpha) = dn(gamma), sin(alpha) = k sn(gamma), eps = +1;
  dn twisted:   x, y components gain (-1)^m, cos(alpha) = -dn(gamma), eps = -1;
  cn untwisted: Gamma = ( k cos(phi) cn, k sin(phi) cn, z ),
                B = ( -k cos(phi) sn, -k sin(phi) sn, dn ),
                cos(alpha) = cn(gamma), sin(alpha) = sn(gamma), eps = +1;
  cn twisted:   (-1)^m on x, y, cos(alpha) = -cn(gamma), eps = -1;

with z(psi) = -k (int_0^psi sn^2 - m int_0^gamma sn^2) for dn and the same
expression scaled by k^2 for cn.  Every edge satisfies
Gamma_{m+1} - Gamma_m = eps B_{m+1} x B_m, the edge length is |sn gamma|
(dn) or |k sn gamma| (cn), and <B_m, B_{m+1}> is cn(gamma) resp. dn(gamma).

Frames: T_m = sigma (B_{m+1} x B_m) / s with s = sn(gamma) or k sn(gamma)
and sigma = +-1 from frame_sign; the admissible pairings are
sigma s > 0 (untwisted) and sigma s < 0 (twisted), checked at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .elliptic import EllipticModulus, jacobi, make_modulus, sn2_integral
from .errors import DegenerateFrameError, DomainError, ValidationError
from .frames import Frame
from .sg import HalfAngle

_SPEED_TOL = 1e-12


@dataclass(frozen=True)
class SurfaceParams:
    """One closed-form family member; alpha and the frame data are derived."""

    mod: EllipticModulus
    family: str
    gamma_step: float
    beta_rate: float
    twisted: bool = False
    frame_sign: str = "+"
    alpha_step: float = field(init=False)
    epsilon_sign: int = field(init=False)

    def __post_init__(self):
        if self.family not in ("dn", "cn"):
            raise DomainError(f"family must be 'dn' or 'cn', got {self.family!r}")
        if self.frame_sign not in ("+", "-"):
            raise DomainError(f"frame_sign must be '+' or '-', got {self.frame_sign!r}")
        sng, cng, dng = jacobi(self.gamma_step, self.mod)
        if self.family == "dn":
            alpha = math.atan2(self.mod.k * sng, -dng if self.twisted else dng)
        else:
            alpha = math.atan2(sng, -cng if self.twisted else cng)
        object.__setattr__(self, "alpha_step", alpha)
        object.__setattr__(self, "epsilon_sign", -1 if self.twisted else 1)
        s = self.edge_speed_signed()
        if abs(s) < _SPEED_TOL:
            raise DegenerateFrameError("sn(gamma) = 0: zero-length edges")
        sigma = 1.0 if self.frame_sign == "+" else -1.0
        # sin(nu) = sigma * s must be > 0 untwisted, < 0 twisted
        if (sigma * s > 0.0) == self.twisted:
            raise DomainError(
                f"frame_sign {self.frame_sign!r} inadmissible for sign(sn gamma) = "
                f"{math.copysign(1, s):+.0f} with twisted={self.twisted}"
            )

    def edge_speed_signed(self) -> float:
        """Signed edge scale s: sn(gamma) for dn, k sn(gamma) for cn."""
        sng = jacobi(self.gamma_step, self.mod)[0]
        return sng if self.family == "dn" else self.mod.k * sng

    @property
    def sigma(self) -> float:
        return 1.0 if self.frame_sign == "+" else -1.0

    def phases(self, m: int, t: float) -> tuple[float, float]:
        rate = self.beta_rate * (self.mod.k if self.family == "dn" else 1.0)
        return m * self.alpha_step + rate * t, m * self.gamma_step + self.beta_rate * t


def gamma_point(p: SurfaceParams, m: int, t: float) -> np.ndarray:
    phi, psi = p.phases(m, t)
    sn, cn, dn = jacobi(psi, p.mod)
    k = p.mod.k
    zint = sn2_integral(psi, p.mod) - m * sn2_integral(p.gamma_step, p.mod)
    pre = (-1.0) ** (m % 2) if p.twisted else 1.0
    if p.family == "dn":
        return np.array([pre * math.cos(phi) * dn / k,
                         pre * math.sin(phi) * dn / k,
                         -k * zint])
    return np.array([pre * k * math.cos(phi) * cn,
                     pre * k * math.sin(phi) * cn,
                     -k * k * zint])


def b_point(p: SurfaceParams, m: int, t: float) -> np.ndarray:
    phi, psi = p.phases(m, t)
    sn, cn, dn = jacobi(psi, p.mod)
    pre = (-1.0) ** (m % 2) if p.twisted else 1.0
    if p.family == "dn":
        return np.array([pre * math.cos(phi) * sn, pre * math.sin(phi) * sn, -cn])
    k = p.mod.k
    return np.array([-pre * k * math.cos(phi) * sn, -pre * k * math.sin(phi) * sn, dn])


def half_angle_at(p: SurfaceParams, m: int, t: float) -> HalfAngle:
    """Field sample carried by the surface: (dn, -k sn) for dn, (cn, sn) for cn.

    Includes the analytic time derivative so the sample chain can be fed to
    the semi-discrete residual evaluators.
    """
    _, psi = p.phases(m, t)
    sn, cn, dn = jacobi(psi, p.mod)
    k, b = p.mod.k, p.beta_rate
    if p.family == "dn":
        return HalfAngle(c=dn, s=-k * sn, dwdt=-2.0 * b * k * cn)
    return HalfAngle(c=cn, s=sn, dwdt=2.0 * b * dn)


def frame_at(p: SurfaceParams, m: int, t: float) -> Frame:
    """Frenet frame with T along the edge, oriented by frame_sign."""
    b0 = b_point(p, m, t)
    b1 = b_point(p, m + 1, t)
    T = p.sigma * np.cross(b1, b0) / p.edge_speed_signed()
    return Frame(T=T, N=np.cross(b0, T), B=b0)


def flow_velocity(p: SurfaceParams, m: int, t: float) -> np.ndarray:
    """Closed-form time derivative of the curve point (no finite differences)."""
    phi, psi = p.phases(m, t)
    sn, cn, dn = jacobi(psi, p.mod)
    k, b = p.mod.k, p.beta_rate
    pre = (-1.0) ** (m % 2) if p.twisted else 1.0
    if p.family == "dn":
        return b * np.array([
            pre * (-math.sin(phi) * dn - k * math.cos(phi) * sn * cn),
            pre * (math.cos(phi) * dn - k * math.sin(phi) * sn * cn),
            -k * sn * sn,
        ])
    return b * k * np.array([
        pre * (-math.sin(phi) * cn - math.cos(phi) * sn * dn),
        pre * (math.cos(phi) * cn - math.sin(phi) * sn * dn),
        -k * sn * sn,
    ])


def flow_angle(p: SurfaceParams, m: int, t: float) -> HalfAngle:
    """(cos w_m, sin w_m) of the flow decomposition d Gamma / dt = sigma rho (cos w T + sin w N).

    w_m = (w_m - w_{m+1})/2 of the carried field for the untwisted families
    and (w_m + w_{m+1})/2 for the twisted ones; rho = beta (dn) or beta k (cn).
    """
    h0 = half_angle_at(p, m, t)
    h1 = half_angle_at(p, m + 1, t)
    if p.twisted:
        return HalfAngle(c=h0.c * h1.c - h0.s * h1.s, s=h0.s * h1.c + h0.c * h1.s)
    return HalfAngle(c=h0.c * h1.c + h0.s * h1.s, s=h0.s * h1.c - h0.c * h1.s)


@dataclass(frozen=True)
class CurveSnapshot:
    """One time slice of the deforming curve with its frames."""

    t: float
    m_values: np.ndarray
    points: np.ndarray     # (M, 3)
    binormals: np.ndarray  # (M, 3)
    frames: tuple[Frame, ...]


def snapshot(p: SurfaceParams, m_range: Sequence[int], t: float,
             tol: float = 1e-10) -> CurveSnapshot:
    """Assemble and validate one snapshot; raises ValidationError on defects."""
    ms = np.asarray(list(m_range), dtype=int)
    pts = np.array([gamma_point(p, int(m), t) for m in ms])
    bs = np.array([b_point(p, int(m), t) for m in ms])
    frames = tuple(frame_at(p, int(m), t) for m in ms)
    edge_res = 0.0
    speed_res = 0.0
    speed = abs(p.edge_speed_signed())
    for j in range(len(ms) - 1):
        if ms[j + 1] != ms[j] + 1:
            continue
        edge = pts[j + 1] - pts[j]
        edge_res = max(edge_res, float(np.abs(
            edge - p.epsilon_sign * np.cross(bs[j + 1], bs[j])).max()))
        speed_res = max(speed_res, abs(float(np.linalg.norm(edge)) - speed))
    report = {"edge_identity": edge_res, "constant_speed": speed_res}
    if max(report.values()) > tol:
        raise ValidationError("snapshot violates curve invariants", report)
    return CurveSnapshot(t=t, m_values=ms, points=pts, binormals=bs, frames=frames)


def kaleidocycle_params(n: int, family: str = "dn", beta_rate: float = 1.0,
                        twisted: bool = False) -> SurfaceParams:
    """Closed-linkage parameters: k = sin(pi/n), gamma = K.

    The dn family closes with period 2n (hinge count 2n); the cn family
    closes with period 2 for any modulus.  Requires n >= 3 so that the
    modulus stays inside (0, 1).
    """
    if n < 3:
        raise DomainError(f"kaleidocycle order must be >= 3, got {n}")
    mod = make_modulus(math.sin(math.pi / n))
    sign = "-" if twisted else "+"
    return SurfaceParams(mod=mod, family=family, gamma_step=mod.K,
                         beta_rate=beta_rate, twisted=twisted, frame_sign=sign)
