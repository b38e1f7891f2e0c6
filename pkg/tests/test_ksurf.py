import math

import numpy as np
import pytest

from sgsurf import elliptic, ksurf, sg
from sgsurf.errors import DomainError, PoleError

MOD = elliptic.make_modulus(0.6)


def _params(family="dn", gamma=0.8, delta=0.55, k=0.6):
    return ksurf.KParams(mod=elliptic.make_modulus(k), family=family,
                         gamma_step=gamma, delta_step=delta)


def test_origin_points():
    F, N = ksurf.k_point(_params("dn"), 0, 0)
    assert F == pytest.approx([1 / 0.6, 0.0, 0.0])
    assert N == pytest.approx([0.0, 0.0, -1.0])
    F, N = ksurf.k_point(_params("cn"), 0, 0)
    assert F == pytest.approx([0.6, 0.0, 0.0])
    assert N == pytest.approx([0.0, 0.0, -1.0])


def test_angle_constraints():
    p = _params("dn")
    sng, cng, dng = elliptic.jacobi(p.gamma_step, p.mod)
    snd, cnd, dnd = elliptic.jacobi(p.delta_step, p.mod)
    assert math.cos(p.alpha_step) == pytest.approx(dng)
    assert math.sin(p.alpha_step) == pytest.approx(0.6 * sng)
    assert math.cos(p.beta_step) == pytest.approx(-dnd)
    assert math.sin(p.beta_step) == pytest.approx(0.6 * snd)
    p = _params("cn")
    assert math.cos(p.alpha_step) == pytest.approx(cng)
    assert math.cos(p.beta_step) == pytest.approx(-cnd)


@pytest.mark.parametrize("family", ["dn", "cn"])
def test_normals_unit(family):
    p = _params(family)
    rng = np.random.default_rng(40)
    for _ in range(30):
        _, N = ksurf.k_point(p, int(rng.integers(-12, 12)), int(rng.integers(-12, 12)))
        assert np.linalg.norm(N) == pytest.approx(1.0, abs=1e-13)


@pytest.mark.parametrize("family", ["dn", "cn"])
def test_edge_identities(family):
    p = _params(family)
    worst = 0.0
    for m in range(-10, 10):
        for n in range(-10, 10):
            rm, rn = ksurf.k_edge_residuals(p, m, n)
            worst = max(worst, rm, rn)
    assert worst < 1e-10


def test_edge_sign_sensitivity():
    # flipping the sign in the n-direction identity must fail loudly
    p = _params("dn")
    worst = 0.0
    for m in range(-5, 5):
        F, N = ksurf.k_point(p, m, 0)
        Fn, Nn = ksurf.k_point(p, m, 1)
        worst = max(worst, float(np.linalg.norm(Fn - F - np.cross(Nn, N))))
    assert worst > 1e-2


@pytest.mark.parametrize("family", ["dn", "cn"])
def test_grid_axioms(family):
    grid = ksurf.k_grid(_params(family), range(-10, 10), range(-10, 10))
    rep = grid.invariant_residuals()
    assert rep["planarity"] < 1e-10
    assert rep["opposite_edges"] < 1e-10
    assert rep["length_spread"] < 1e-10  # A_m only depends on m, B_n only on n


@pytest.mark.parametrize("family", ["dn", "cn"])
def test_direction_torsions(family):
    p = _params(family)
    sng, cng, dng = elliptic.jacobi(p.gamma_step, p.mod)
    snd, cnd, dnd = elliptic.jacobi(p.delta_step, p.mod)
    tg = cng if family == "dn" else dng
    td = cnd if family == "dn" else dnd
    for m in range(-8, 8):
        for n in range(-8, 8):
            _, N = ksurf.k_point(p, m, n)
            _, Nm = ksurf.k_point(p, m + 1, n)
            _, Nn = ksurf.k_point(p, m, n + 1)
            assert abs(float(np.dot(N, Nm)) - tg) < 1e-12
            assert abs(float(np.dot(N, Nn)) - td) < 1e-12


def test_tan_half():
    with pytest.raises(PoleError):
        ksurf.tan_half(0.0, -1.0)
    # half-argument product: sn(u)/(1 + cn(u)) = sn(u/2) dn(u/2) / cn(u/2)
    for u in (0.5, 1.1, 2.3):
        sn, cn, dn = elliptic.jacobi(u, MOD)
        sh, ch, dh = elliptic.jacobi(u / 2, MOD)
        assert ksurf.tan_half(sn, cn) == pytest.approx(sh * dh / ch, abs=1e-12)


def _compat_inputs(family):
    Om, P = 0.13, 0.19
    p = sg.DiscreteParams(mod=MOD, Omega=Om, P=P, family=family)
    g, d = 4 * MOD.K * Om, 4 * MOD.K * P
    sng, cng, dng = elliptic.jacobi(g, MOD)
    snd, cnd, dnd = elliptic.jacobi(d, MOD)
    if family == "dn":
        nu1, nu2 = math.atan2(sng, cng), math.atan2(snd, cnd)
    else:
        nu1, nu2 = math.atan2(MOD.k * sng, dng), math.atan2(MOD.k * snd, dnd)
    return p, nu1, nu2


@pytest.mark.parametrize("family", ["dn", "cn"])
def test_compat_same_sign(family):
    # coupling equals -tan(nu1/2) tan(nu2/2): the same-sign condition
    p, nu1, nu2 = _compat_inputs(family)
    t1 = ksurf.tan_half(math.sin(nu1), math.cos(nu1))
    t2 = ksurf.tan_half(math.sin(nu2), math.cos(nu2))
    assert sg.discrete_sg_coeff(p) == pytest.approx(-t1 * t2, abs=1e-12)
    worst = 0.0
    for m in range(-6, 6):
        for n in range(-6, 6):
            corners = (sg.discrete_sample(p, m + 1, n + 1), sg.discrete_sample(p, m, n),
                       sg.discrete_sample(p, m + 1, n), sg.discrete_sample(p, m, n + 1))
            for s in ("+", "-"):
                worst = max(worst, ksurf.compat_matrices(*corners, nu1, nu2, (s, s)))
    assert worst < 1e-11


@pytest.mark.parametrize("family", ["dn", "cn"])
def test_compat_mixed_sign(family):
    # mixed signs need the opposite n-direction torsion angle, so that the
    # coupling equals +tan(nu1/2) tan(nu2/2)
    p, nu1, nu2 = _compat_inputs(family)
    t1 = ksurf.tan_half(math.sin(nu1), math.cos(nu1))
    t2 = ksurf.tan_half(math.sin(-nu2), math.cos(-nu2))
    assert sg.discrete_sg_coeff(p) == pytest.approx(t1 * t2, abs=1e-12)
    worst = 0.0
    for m in range(-6, 6):
        for n in range(-6, 6):
            corners = (sg.discrete_sample(p, m + 1, n + 1), sg.discrete_sample(p, m, n),
                       sg.discrete_sample(p, m + 1, n), sg.discrete_sample(p, m, n + 1))
            worst = max(worst, ksurf.compat_matrices(*corners, nu1, -nu2, ("+", "-")))
            worst = max(worst, ksurf.compat_matrices(*corners, nu1, -nu2, ("-", "+")))
    assert worst < 1e-11


def test_compat_sensitivity():
    p, nu1, nu2 = _compat_inputs("dn")
    detected = 0.0
    for m in range(-4, 4):
        wA = sg.discrete_sample(p, m + 1, 1)
        s = 1.01 * wA.s
        nrm = math.hypot(wA.c, s)
        wAp = sg.HalfAngle(c=wA.c / nrm, s=s / nrm)
        r = ksurf.compat_matrices(wAp, sg.discrete_sample(p, m, 0),
                                  sg.discrete_sample(p, m + 1, 0),
                                  sg.discrete_sample(p, m, 1), nu1, nu2, ("+", "+"))
        detected = max(detected, r)
    assert detected > 1e-3


@pytest.mark.parametrize("family", ["dn", "cn"])
def test_compat_angle_identity(family):
    # -sin(V) = tan(nu1/2) tan(nu2/2) sin(U), U = (A+B+C+D)/4, V = (A+B-C-D)/4
    p, nu1, nu2 = _compat_inputs(family)
    t1 = ksurf.tan_half(math.sin(nu1), math.cos(nu1))
    t2 = ksurf.tan_half(math.sin(nu2), math.cos(nu2))
    for m in range(-6, 6):
        for n in range(-6, 6):
            zA = sg.discrete_sample(p, m + 1, n + 1).quarter_exponential()
            zB = sg.discrete_sample(p, m, n).quarter_exponential()
            zC = sg.discrete_sample(p, m + 1, n).quarter_exponential()
            zD = sg.discrete_sample(p, m, n + 1).quarter_exponential()
            sinU = (zA * zB * zC * zD).imag
            sinV = (zA * zB * zC.conjugate() * zD.conjugate()).imag
            assert -sinV == pytest.approx(t1 * t2 * sinU, abs=1e-10)


def test_periodicity_case_1a():
    rep = ksurf.k_periodicity("1a", order=3, window=12)
    assert rep["max_defect"] < 1e-9
    assert rep["family"] == "dn"
    assert rep["modulus"] == pytest.approx(math.sin(math.pi / 3))
    assert "(6,6)" in rep["shifts"]


@pytest.mark.parametrize("case", ["1b", "1c", "2a", "2b", "2c"])
def test_periodicity_other_cases(case):
    rep = ksurf.k_periodicity(case, order=3, window=8)
    assert rep["max_defect"] < 1e-9


def test_periodicity_case_2c_shifts():
    rep = ksurf.k_periodicity("2c", order=3, window=8)
    assert set(rep["shifts"]) == {"(2,0)", "(0,4)", "(1,2)"}


def test_periodicity_validation():
    with pytest.raises(DomainError):
        ksurf.k_periodicity("3a")
    with pytest.raises(DomainError):
        ksurf.k_periodicity("1a", order=2)
