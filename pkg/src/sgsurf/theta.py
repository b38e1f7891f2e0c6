"""Jacobi theta functions on pure-imaginary lattices, plus the Weierstrass scalars.

Index convention: theta_0 here is the classical theta_4 (the only index where
conventions diverge); theta_1, theta_2, theta_3 are standard.  All series are
summed in the unit-period normalization theta_3(v|tau) = 1 + 2 sum q^{n^2}
cos(2 pi n v) with q = exp(i pi tau) (https://dlmf.nist.gov/20.2#i).

Arguments are reduced into the fundamental band before summation: first by
v -> v - c tau using the quasi-period factor exp(-i pi c^2 tau - 2 pi i c v),
then by the unit real period.  The public entry points refuse arguments whose
imaginary part would overflow the restored prefactor in double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .elliptic import EllipticModulus
from .errors import PoleError, ThetaOverflowError

_N_MAX = 64
# |Im v| * pi / Im tau below this keeps the restored prefactor finite in binary64
_BAND_LIMIT = 30.0


@dataclass(frozen=True)
class ThetaParams:
    """Lattice parameter and truncation control for one theta lattice."""

    tau: complex
    trunc_eps: float = 1e-16
    q: complex = field(init=False)

    def __post_init__(self):
        if self.tau.imag <= 0.0:
            raise ValueError(f"lattice parameter needs Im(tau) > 0, got {self.tau}")
        if abs(self.tau.real) > 1e-15:
            raise ValueError("only pure-imaginary lattice parameters are supported")
        object.__setattr__(self, "q", cmath.exp(1j * math.pi * self.tau))


def lattice_params(mod: EllipticModulus, multiple: int = 1) -> ThetaParams:
    """ThetaParams for the taup lattice of a modulus, or an integer multiple of it."""
    return ThetaParams(tau=multiple * mod.taup)


def _series(j: int, v: complex, q: complex, eps: float) -> tuple[complex, complex]:
    """Raw q-series value and argument-derivative at an already reduced argument."""
    if j in (1, 2):
        val = 0j
        dval = 0j
        for n in range(_N_MAX):
            a = q ** ((n + 0.5) ** 2)
            w = (2 * n + 1) * math.pi
            if j == 1:
                t = 2.0 * (-1) ** n * a * cmath.sin(w * v)
                dt = 2.0 * (-1) ** n * a * w * cmath.cos(w * v)
            else:
                t = 2.0 * a * cmath.cos(w * v)
                dt = -2.0 * a * w * cmath.sin(w * v)
            val += t
            dval += dt
            if n >= 2 and abs(t) + abs(dt) <= eps * (abs(val) + abs(dval) + 1e-300):
                return val, dval
        return val, dval
    val = 1.0 + 0j
    dval = 0j
    for n in range(1, _N_MAX):
        a = q ** (n * n)
        s = -1.0 if (j == 0 and n % 2) else 1.0
        w = 2 * n * math.pi
        t = 2.0 * s * a * cmath.cos(w * v)
        dt = -2.0 * s * a * w * cmath.sin(w * v)
        val += t
        dval += dt
        if n >= 2 and abs(t) + abs(dt) <= eps * (abs(val) + abs(dval)):
            return val, dval
    return val, dval


def theta_with_prime(j: int, v: complex, p: ThetaParams) -> tuple[complex, complex]:
    """(theta_j(v), theta_j'(v)); the derivative is with respect to v itself."""
    if j not in (0, 1, 2, 3):
        raise ValueError(f"theta index must be 0..3, got {j}")
    v = complex(v)
    im_tau = p.tau.imag
    if abs(v.imag) * math.pi / im_tau >= _BAND_LIMIT:
        raise ThetaOverflowError(
            f"Im(v) = {v.imag:g} outside convergence band for Im(tau) = {im_tau:g}"
        )
    c = round(v.imag / im_tau)
    v1 = v - c * p.tau
    n1 = round(v1.real)
    v0 = v1 - n1
    sign = -1.0 if (j in (1, 2) and n1 % 2) else 1.0
    if j in (0, 1) and c % 2:
        sign = -sign
    pref = sign * cmath.exp(-1j * math.pi * c * c * p.tau - 2j * math.pi * c * v0)
    val, dval = _series(j, v0, p.q, p.trunc_eps)
    return pref * val, pref * (dval - 2j * math.pi * c * val)


def theta_j(j: int, v: complex, p: ThetaParams) -> complex:
    return theta_with_prime(j, v, p)[0]


def theta_j_prime(j: int, v: complex, p: ThetaParams) -> complex:
    return theta_with_prime(j, v, p)[1]


def jacobi_complex(u: complex, mod: EllipticModulus) -> tuple[complex, complex, complex]:
    """(sn, cn, dn) of a complex argument through theta quotients on the taup lattice.

    Uses v = (u - K) / (2 i K') and the quotient triple
        sn u =    theta_0(v) theta_3(0) / (theta_3(v) theta_0(0)),
        cn u = -i theta_1(v) theta_2(0) / (theta_3(v) theta_0(0)),
        dn u =    theta_2(v) theta_2(0) / (theta_3(v) theta_3(0)).
    On real u this agrees with elliptic.jacobi and serves as its oracle.
    """
    p = lattice_params(mod)
    v = (complex(u) - mod.K) / (2j * mod.Kp)
    t3v = theta_j(3, v, p)
    t00 = theta_j(0, 0.0, p)
    t20 = theta_j(2, 0.0, p)
    t30 = theta_j(3, 0.0, p)
    if abs(t3v) < 1e-12 * abs(t30):
        raise PoleError(f"argument {u} too close to a pole of sn/cn/dn")
    sn = theta_j(0, v, p) * t30 / (t3v * t00)
    cn = -1j * theta_j(1, v, p) * t20 / (t3v * t00)
    dn = theta_j(2, v, p) * t20 / (t3v * t30)
    return sn, cn, dn


@dataclass(frozen=True)
class WeierstrassConstants:
    """Branch points, half-periods and the zeta scalar of the spectral curve."""

    e1: complex
    e2: complex
    e3: complex
    omega: float
    omegap: complex
    zeta_omega_over_omega: float


def weierstrass_constants(mod: EllipticModulus) -> WeierstrassConstants:
    k, kp = mod.k, mod.kp
    e1 = (2.0 / 3.0) * (2.0 * k * k - 1.0)
    return WeierstrassConstants(
        e1=e1,
        e2=-(1.0 / 3.0) * (2.0 * k * k - 1.0) - 2j * k * kp,
        e3=-(1.0 / 3.0) * (2.0 * k * k - 1.0) + 2j * k * kp,
        omega=mod.Kp,
        omegap=(1j * mod.K + mod.Kp) / 2.0,
        zeta_omega_over_omega=2.0 * mod.Ep / mod.Kp - (e1 + 1.0),
    )


def weierstrass_p(z: complex, mod: EllipticModulus) -> complex:
    """Weierstrass p-function of the spectral curve, periods {2K', iK + K'}.

    Evaluated as (dn(2iz + iK') - i k sn(2iz + iK'))^2 + e1 through the
    complex-argument Jacobi functions.  PoleError marks the lattice points
    z in {2K', iK + K'} and also the odd half-lattice points a K' + i b K
    (a + b odd), where the quotient representation degenerates even though
    the limit of the combination is finite.
    """
    sn, _, dn = jacobi_complex(2j * z + 1j * mod.Kp, mod)
    e1 = weierstrass_constants(mod).e1
    return (dn - 1j * mod.k * sn) ** 2 + e1
