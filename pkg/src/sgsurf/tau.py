"""Tau-function route to the semi-discrete surfaces, kept as an independent oracle.

For each family the four entire functions (f, g, f*, g*) are explicit theta
expressions on the 2 tau' lattice in shifted variables

  dn:  v_pm = v + (z i +- lam) / (k K'),         v = (psi_m - K) / (2 i K')
  cn:  v_pm = v + 1/2 + tau' + (z i +- lam) / K'

multiplied by the phase exp(-+ i phi_m / 2); the starred pair is the analytic
continuation of the complex conjugate (theta indices swap v_+ <-> v_- with a
sign on theta_2 in the cn family).  The twisted variants multiply f by i^m,
g by (-i)^m and the bilinear H by (-1)^m, which is the substitution
phi_m -> phi_m - m pi, and flip the edge sign to -1.

Everything the surface needs is bilinear: F = f f* + g g* collapses to a
single theta product, H is the Hirota lambda-derivative D_lam g . f* / (2i),
and the third coordinate combines i R_m (a closed form built from the
Weierstrass scalar 2E'/K') with the analytic z-derivative of log F.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .elliptic import EllipticModulus, jacobi, sn2_integral
from .errors import DomainError
from .theta import ThetaParams, theta_j, theta_with_prime


@dataclass(frozen=True)
class TauContext:
    """Family, twist and step data fixing one tau-function quartet."""

    mod: EllipticModulus
    family: str
    gamma_step: float
    beta_rate: float
    twisted: bool = False
    lambda0: float = field(init=False)
    alpha_step: float = field(init=False)
    epsilon_sign: int = field(init=False)

    def __post_init__(self):
        if self.family not in ("dn", "cn"):
            raise DomainError(f"family must be 'dn' or 'cn', got {self.family!r}")
        k = self.mod.k
        sng, cng, dng = jacobi(self.gamma_step, self.mod)
        if self.family == "dn":
            lam0 = k * self.mod.Kp / 2.0
            alpha = math.atan2(k * sng, -dng if self.twisted else dng)
        else:
            lam0 = self.mod.Kp / 2.0
            alpha = math.atan2(sng, -cng if self.twisted else cng)
        object.__setattr__(self, "lambda0", lam0)
        object.__setattr__(self, "alpha_step", alpha)
        object.__setattr__(self, "epsilon_sign", -1 if self.twisted else 1)

    @property
    def chain_den(self) -> float:
        """Denominator of the (lam, z) -> v chain rule: k K' (dn) or K' (cn)."""
        return self.mod.k * self.mod.Kp if self.family == "dn" else self.mod.Kp

    def phases(self, m: int, t: float) -> tuple[float, float]:
        """(phi_m, psi_m); phi advances by beta k t for dn, beta t for cn."""
        rate = self.beta_rate * (self.mod.k if self.family == "dn" else 1.0)
        return m * self.alpha_step + rate * t, m * self.gamma_step + self.beta_rate * t

    def v_base(self, m: int, t: float) -> complex:
        _, psi = self.phases(m, t)
        return (psi - self.mod.K) / (2j * self.mod.Kp)


@dataclass(frozen=True)
class TauSample:
    """Quartet values and derived bilinears at one (m, t, lam, z)."""

    f: complex
    g: complex
    fstar: complex
    gstar: complex
    F: complex
    H: complex
    R: float  # the real value of i R_m
    eta: float


def _lattices(ctx: TauContext) -> tuple[ThetaParams, ThetaParams]:
    return ThetaParams(ctx.mod.taup), ThetaParams(2 * ctx.mod.taup)


def _quartet(ctx: TauContext, m: int, t: float, lam: float, z: complex):
    """(f, g, f*, g*) at general (lam, z); z may be complex (analytic continuation)."""
    _, p2 = _lattices(ctx)
    phi, _ = ctx.phases(m, t)
    den = ctx.chain_den
    off = 0.0 if ctx.family == "dn" else 0.5 + ctx.mod.taup
    vp = ctx.v_base(m, t) + off + (lam + 1j * z) / den
    vm = ctx.v_base(m, t) + off + (-lam + 1j * z) / den
    iu = 1j if ctx.family == "dn" else 1.0
    t3p, t2p = theta_j(3, vp, p2), theta_j(2, vp, p2)
    t3m, t2m = theta_j(3, vm, p2), theta_j(2, vm, p2)
    twf = 1j ** (m % 4) if ctx.twisted else 1.0
    twg = (-1j) ** (m % 4) if ctx.twisted else 1.0
    em = cmath.exp(-0.5j * phi)
    ep = cmath.exp(0.5j * phi)
    f = twf * em * (t3m + iu * t2m)
    g = twg * ep * (t3p + iu * t2p)
    fstar = twg * ep * (t3p - iu * t2p)
    gstar = twf * em * (t3m - iu * t2m)
    return f, g, fstar, gstar


def _F_closed(ctx: TauContext, m: int, t: float, lam: float, z: complex) -> complex:
    """F = f f* + g g* collapsed to one theta product, valid at any lam."""
    p1, _ = _lattices(ctx)
    den = ctx.chain_den
    v = ctx.v_base(m, t) + 1j * z / den
    if ctx.family == "dn":
        return 2.0 * theta_j(3, v, p1) * theta_j(3, lam / den, p1)
    return 2.0 * theta_j(0, v + 0.5 + ctx.mod.taup, p1) * theta_j(0, lam / den, p1)


def _H(ctx: TauContext, m: int, t: float, z: complex) -> complex:
    phi, _ = ctx.phases(m, t)
    _, p2 = _lattices(ctx)
    den = ctx.chain_den
    half = 0.5 if ctx.family == "dn" else 1.0 + ctx.mod.taup
    vp = ctx.v_base(m, t) + half + 1j * z / den
    t3, d3 = theta_with_prime(3, vp, p2)
    t2, d2 = theta_with_prime(2, vp, p2)
    pref = 1.0 / den if ctx.family == "dn" else -1j / den
    if ctx.twisted:
        pref *= (-1) ** (m % 2)
    return pref * cmath.exp(1j * phi) * (t2 * d3 - t3 * d2)


def eta_m(ctx: TauContext, m: int, t: float) -> float:
    """Phase function of the spectral prefactor; offset pi/2E' (dn) or 3pi/2E' (cn)."""
    _, psi = ctx.phases(m, t)
    off = 0.5 if ctx.family == "dn" else 1.5
    k2 = ctx.mod.m
    gi = sn2_integral(ctx.gamma_step, ctx.mod)
    return psi - off * math.pi / ctx.mod.Ep - m * k2 * ctx.mod.Kp * gi / ctx.mod.Ep


def i_r_m(ctx: TauContext, m: int, t: float) -> float:
    """Closed form of i R_m = -(E'/chain_den) eta_m, a real number."""
    return -(ctx.mod.Ep / ctx.chain_den) * eta_m(ctx, m, t)


def dlog_F_dz(ctx: TauContext, m: int, t: float, z: complex = 0.0) -> complex:
    """Analytic z-derivative of log F at fixed lam = lambda0."""
    p1, _ = _lattices(ctx)
    den = ctx.chain_den
    v = ctx.v_base(m, t) + 1j * z / den
    t3, d3 = theta_with_prime(3, v, p1)
    out = (1j / den) * d3 / t3
    if ctx.family == "cn":
        # F carries exp(-pi i (2 v(z) + tau')): adds 2 pi / K' to the log-derivative
        out = out + 2.0 * math.pi / ctx.mod.Kp
    return out


def tau_sample(ctx: TauContext, m: int, t: float, lam: Optional[float] = None,
               z: complex = 0.0) -> TauSample:
    """Evaluate the quartet and its bilinears; lam defaults to lambda0."""
    if lam is None:
        lam = ctx.lambda0
    f, g, fstar, gstar = _quartet(ctx, m, t, lam, z)
    return TauSample(
        f=f, g=g, fstar=fstar, gstar=gstar,
        F=_F_closed(ctx, m, t, lam, z),
        H=_H(ctx, m, t, z),
        R=i_r_m(ctx, m, t),
        eta=eta_m(ctx, m, t),
    )


def gamma_from_tau(ctx: TauContext, m: int, t: float) -> tuple[np.ndarray, np.ndarray]:
    """(curve point, binormal) assembled from the quartet at lam = lambda0, z = 0."""
    s = tau_sample(ctx, m, t)
    F = s.F
    gamma = np.array([
        ((s.H + s.H.conjugate()) / F).real,
        ((s.H - s.H.conjugate()) / (1j * F)).real,
        s.R - 0.5 * dlog_F_dz(ctx, m, t).real,
    ])
    b = np.array([
        ((s.fstar * s.g + s.f * s.gstar) / F).real,
        ((s.fstar * s.g - s.f * s.gstar) / (1j * F)).real,
        ((s.f * s.fstar - s.g * s.gstar) / F).real,
    ])
    return gamma, b


def bilinear_checks(ctx: TauContext, m: int, t: float,
                    fd_step: float = 1e-5) -> tuple[float, float, float]:
    """Residuals of the three structural relations tying the quartet together.

    fh_res: F_m H_{m+1} - H_m F_{m+1} = (eps/i) Psi^FH, with the quartic
            Psi^FH = f*_m f*_{m+1} (f_m g_{m+1} - f_{m+1} g_m)
                   + g_m g_{m+1} (f*_m g*_{m+1} - f*_{m+1} g*_m);
    fr_res: (1/2) D_z F_m . F_{m+1} + i(R_{m+1} - R_m) F_m F_{m+1}
            = (2 eps / i) Psi^FR  with  Psi^FR = f_{m+1} f*_m g_m g*_{m+1}
                                              - f*_{m+1} f_m g*_m g_{m+1};
    cr_res: max residual of the Cauchy-Riemann pairing f_lam = i f_z,
            f*_lam = -i f*_z, g_lam = -i g_z, g*_lam = i g*_z by central
            differences (the lam and z dependence is structural, entering
            only through v_pm).

    All three residuals are normalized by the magnitude of their terms,
    since the quartet grows exponentially along m and an absolute residual
    would just measure that scale.
    """
    lam0 = ctx.lambda0
    s0 = tau_sample(ctx, m, t)
    s1 = tau_sample(ctx, m + 1, t)
    eps = ctx.epsilon_sign

    psi_fh = (s0.fstar * s1.fstar * (s0.f * s1.g - s1.f * s0.g)
              + s0.g * s1.g * (s0.fstar * s1.gstar - s1.fstar * s0.gstar))
    lhs = s0.F * s1.H - s0.H * s1.F
    scale = abs(s0.F * s1.H) + abs(s0.H * s1.F) + abs(psi_fh) + 1e-300
    fh_res = abs(lhs - (eps / 1j) * psi_fh) / scale

    dF0 = dlog_F_dz(ctx, m, t) * s0.F
    dF1 = dlog_F_dz(ctx, m + 1, t) * s1.F
    psi_fr = s1.f * s0.fstar * s0.g * s1.gstar - s1.fstar * s0.f * s0.gstar * s1.g
    lhs2 = 0.5 * (dF0 * s1.F - s0.F * dF1) + (s1.R - s0.R) * s0.F * s1.F
    scale2 = abs(lhs2) + abs(psi_fr) + abs(s0.F * s1.F) + 1e-300
    fr_res = abs(lhs2 - (2.0 * eps / 1j) * psi_fr) / scale2

    h = fd_step
    cr_res = 0.0
    quartets = {}
    for dl, dz in ((h, 0.0), (-h, 0.0), (0.0, h), (0.0, -h)):
        quartets[(dl, dz)] = _quartet(ctx, m, t, lam0 + dl, dz)
    for idx, sign in ((0, 1.0), (1, -1.0), (2, -1.0), (3, 1.0)):
        d_lam = (quartets[(h, 0.0)][idx] - quartets[(-h, 0.0)][idx]) / (2.0 * h)
        d_z = (quartets[(0.0, h)][idx] - quartets[(0.0, -h)][idx]) / (2.0 * h)
        cr_res = max(cr_res, abs(d_lam - sign * 1j * d_z) / max(1.0, abs(d_lam)))
    return fh_res, fr_res, cr_res
