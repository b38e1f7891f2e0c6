"""Elliptic solution families of the semi-discrete and discrete sine-Gordon equations.

Fields are never stored as angles.  A sample is the pair
(cos w/2, sin w/2); residuals expand every trigonometric expression through
angle-addition identities on those pairs, and the quarter angles needed by the
fully discrete equation come from the half-angle construction below, with the
branch fixed by sign(sin w/4) = sign(sin w/2).

Two families per equation:
  dn:  cos(w/2) = dn(4K xi),  sin(w/2) = k sn(4K xi)
  cn:  cos(w/2) = cn(4K xi),  sin(w/2) = sn(4K xi)
with xi = m Omega + xi0 + A t (semi-discrete) or m Omega + n P + xi0
(discrete).  Default phases: xi0 = 1/2 for dn, 0 for cn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .elliptic import EllipticModulus, jacobi
from .errors import PoleError

_POLE_TOL = 1e-12

FAMILIES = ("dn", "cn")


@dataclass(frozen=True)
class HalfAngle:
    """One field sample, stored as (cos w/2, sin w/2) plus optional d w/dt."""

    c: float
    s: float
    dwdt: Optional[float] = None

    def __post_init__(self):
        r = self.c * self.c + self.s * self.s
        if abs(r - 1.0) > 1e-12:
            raise ValueError(f"half-angle pair not normalized: c^2+s^2-1 = {r - 1.0:.3e}")

    def half_exponential(self) -> complex:
        """exp(i w/2)."""
        return complex(self.c, self.s)

    def quarter_exponential(self) -> complex:
        """exp(i w/4) on the principal band, sign(sin w/4) = sign(s)."""
        cq = math.sqrt(max(0.0, 0.5 * (1.0 + self.c)))
        sq = math.copysign(math.sqrt(max(0.0, 0.5 * (1.0 - self.c))), self.s)
        return complex(cq, sq)

    def tan_quarter(self) -> float:
        """tan(w/4) = sin(w/2) / (1 + cos(w/2)); rejects cos(w/2) = -1."""
        if abs(1.0 + self.c) < _POLE_TOL:
            raise PoleError("tan(w/4) undefined at cos(w/2) = -1")
        return self.s / (1.0 + self.c)


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")


def _default_phase(family: str) -> float:
    return 0.5 if family == "dn" else 0.0


@dataclass(frozen=True)
class SemiDiscreteParams:
    """Lattice step Omega, phase xi0 and time coefficient A of one semi-discrete field."""

    mod: EllipticModulus
    Omega: float
    A: float
    family: str = "dn"
    xi0: Optional[float] = None

    def __post_init__(self):
        _check_family(self.family)
        if self.xi0 is None:
            object.__setattr__(self, "xi0", _default_phase(self.family))

    def xi(self, m: int, t: float) -> float:
        return m * self.Omega + self.xi0 + self.A * t


@dataclass(frozen=True)
class DiscreteParams:
    """Steps (Omega, P) and phase xi0 of one doubly discrete field."""

    mod: EllipticModulus
    Omega: float
    P: float
    family: str = "dn"
    xi0: Optional[float] = None

    def __post_init__(self):
        _check_family(self.family)
        if self.xi0 is None:
            object.__setattr__(self, "xi0", _default_phase(self.family))

    def xi(self, m: int, n: int) -> float:
        return m * self.Omega + n * self.P + self.xi0


def _field(mod: EllipticModulus, family: str, u: float) -> tuple[float, float]:
    sn, cn, dn = jacobi(u, mod)
    if family == "dn":
        return dn, mod.k * sn
    return cn, sn


def semi_sample(p: SemiDiscreteParams, m: int, t: float) -> HalfAngle:
    """Field sample with its analytic time derivative (chain rule, no quadrature)."""
    u = 4.0 * p.mod.K * p.xi(m, t)
    sn, cn, dn = jacobi(u, p.mod)
    rate = 8.0 * p.mod.K * p.A
    if p.family == "dn":
        return HalfAngle(c=dn, s=p.mod.k * sn, dwdt=rate * p.mod.k * cn)
    return HalfAngle(c=cn, s=sn, dwdt=rate * dn)


def semi_sg_coeffs(p: SemiDiscreteParams) -> tuple[float, float]:
    """(sine-Gordon coefficient, mKdV coefficient) for the family of p.

    dn family: (-8KA sn dn / cn, 8KA cn / (sn dn)) at 2K Omega.
    cn family: (-8 k^2 KA sn cn / dn, 8KA dn / (sn cn)) at 2K Omega.
    """
    sn, cn, dn = jacobi(2.0 * p.mod.K * p.Omega, p.mod)
    rate = 8.0 * p.mod.K * p.A
    if p.family == "dn":
        if abs(cn) < _POLE_TOL or abs(sn * dn) < _POLE_TOL:
            raise PoleError("Omega at a half-period: sn dn / cn degenerate")
        return -rate * sn * dn / cn, rate * cn / (sn * dn)
    if abs(dn) < _POLE_TOL or abs(sn * cn) < _POLE_TOL:
        raise PoleError("Omega at a half-period: sn cn / dn degenerate")
    return -rate * p.mod.m * sn * cn / dn, rate * dn / (sn * cn)


def semi_residuals_from(w0: HalfAngle, w1: HalfAngle,
                        sg_coeff: float, mkdv_coeff: float) -> tuple[float, float]:
    """Residuals of the two lattice equations for one adjacent sample pair.

    sine-Gordon: dw_{m+1}/dt - dw_m/dt = c1 sin((w_{m+1} + w_m)/2)
    mKdV:        dw_{m+1}/dt + dw_m/dt = c2 sin((w_{m+1} - w_m)/2)
    """
    if w0.dwdt is None or w1.dwdt is None:
        raise ValueError("semi-discrete residuals need samples with dwdt")
    sin_sum = w1.s * w0.c + w1.c * w0.s
    sin_diff = w1.s * w0.c - w1.c * w0.s
    return (w1.dwdt - w0.dwdt) - sg_coeff * sin_sum, (w1.dwdt + w0.dwdt) - mkdv_coeff * sin_diff


def semi_residuals(p: SemiDiscreteParams, m: int, t: float) -> tuple[float, float]:
    """(sine-Gordon, mKdV) residuals of the sampled solution at site m, time t."""
    c1, c2 = semi_sg_coeffs(p)
    return semi_residuals_from(semi_sample(p, m, t), semi_sample(p, m + 1, t), c1, c2)


def discrete_sample(p: DiscreteParams, m: int, n: int) -> HalfAngle:
    c, s = _field(p.mod, p.family, 4.0 * p.mod.K * p.xi(m, n))
    return HalfAngle(c=c, s=s)


def discrete_sg_coeff(p: DiscreteParams) -> float:
    """Coupling constant of the discrete sine-Gordon equation for the family of p."""
    so, co, do = jacobi(2.0 * p.mod.K * p.Omega, p.mod)
    sp, cp, dp = jacobi(2.0 * p.mod.K * p.P, p.mod)
    if p.family == "dn":
        if min(abs(co), abs(cp)) < _POLE_TOL:
            raise PoleError("Omega or P at a half-period: cn denominator degenerate")
        return -(so * do / co) * (sp * dp / cp)
    if min(abs(do), abs(dp)) < _POLE_TOL:
        raise PoleError("Omega or P at a half-period: dn denominator degenerate")
    return -p.mod.m * (so * co / do) * (sp * cp / dp)


def discrete_sg_residual_from(wA: HalfAngle, wB: HalfAngle, wC: HalfAngle,
                              wD: HalfAngle, coeff: float) -> float:
    """Residual of sin((A-C)/4 - (D-B)/4) = coeff sin((A+C)/4 + (D+B)/4).

    Corner naming: A = w_{m+1,n+1}, B = w_{m,n}, C = w_{m+1,n}, D = w_{m,n+1}.
    """
    zA, zB = wA.quarter_exponential(), wB.quarter_exponential()
    zC, zD = wC.quarter_exponential(), wD.quarter_exponential()
    lhs = (zA * zC.conjugate() * zD.conjugate() * zB).imag
    rhs = (zA * zC * zD * zB).imag
    return lhs - coeff * rhs


def discrete_sg_residual(p: DiscreteParams, m: int, n: int) -> float:
    return discrete_sg_residual_from(
        discrete_sample(p, m + 1, n + 1), discrete_sample(p, m, n),
        discrete_sample(p, m + 1, n), discrete_sample(p, m, n + 1),
        discrete_sg_coeff(p),
    )
