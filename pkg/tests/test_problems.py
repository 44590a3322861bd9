import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from itmfree.errors import InvalidParams, SingularRhs
from itmfree.itm import ItmConfig, evaluate_gamma, original_profile, secant_solve
from itmfree.ivp import State2
from itmfree.problems import (
    STEFAN_GUESSES,
    SpreadingParams,
    StefanParams,
    make_spreading,
    make_stefan,
    stefan_default_guesses,
)
from itmfree.reference import exact_spreading, neumann_eta_w, neumann_profile


def test_param_validation():
    with pytest.raises(InvalidParams):
        StefanParams(S=0.0)
    with pytest.raises(InvalidParams):
        StefanParams(S=-1.0)
    with pytest.raises(InvalidParams):
        SpreadingParams(H=0.0, L=1.0)
    SpreadingParams(H=-0.5, L=0.0)  # negative H and any L are allowed


def test_stefan_extended_degenerates_at_h1():
    problem, _ = make_stefan(StefanParams(S=2.0))
    y = State2(0.3, 0.7)
    for z in np.linspace(0.0, 1.5, 11):
        assert problem.extended_rhs(1.0, z, y) == problem.rhs(z, y)
    assert problem.extended_boundary_value(1.0, 0.8) == problem.boundary_value(0.8)
    assert problem.extended_boundary_slope(1.0, 0.8) == pytest.approx(
        problem.boundary_slope(0.8), rel=1e-15)


def test_spreading_extended_degenerates_at_h1():
    problem, _ = make_spreading(SpreadingParams(H=0.5, L=-0.5))
    y = State2(0.3 + 0.7, -0.5 + 1.0)  # shifted variables at eta = 0.7
    assert problem.extended_rhs(1.0, 0.7, y) == problem.rhs(0.7, y)
    assert problem.extended_boundary_value(1.0, 0.7) == problem.boundary_value(0.7)
    assert problem.extended_boundary_slope(1.0, 0.7) == problem.boundary_slope(0.7)


def test_spreading_boundary_slope_value():
    # L/(5 H^3) = -0.5/0.625 = -4/5; the shifted slope adds 1
    problem, _ = make_spreading(SpreadingParams(H=0.5, L=-0.5))
    assert problem.boundary_slope(1.0) == pytest.approx(0.2, rel=1e-14)
    assert problem.to_original(1.0, State2(1.5, 0.2)) == State2(0.5, -0.8)


def test_spreading_positivity_guard():
    problem, _ = make_spreading(SpreadingParams(H=0.5, L=-0.5))
    with pytest.raises(SingularRhs) as exc:
        problem.extended_rhs(4.0, 1.0, State2(1.0, 0.0))  # V - 2 eta = -1
    assert exc.value.abscissa == 1.0


def test_stefan_full_solve_s10():
    problem, scaling = make_stefan(StefanParams(S=10.0))
    h0, h1 = STEFAN_GUESSES[10.0]
    result = secant_solve(problem, scaling, ItmConfig(s_star=0.5, step=1e-3, h0=h0, h1=h1))
    assert result.converged
    assert result.s == pytest.approx(neumann_eta_w(10.0), abs=1e-6)
    assert result.dw0 == pytest.approx(-2.3092862287748814, abs=1e-6)


def test_stefan_full_solve_s01():
    problem, scaling = make_stefan(StefanParams(S=0.1))
    h0, h1 = STEFAN_GUESSES[0.1]
    result = secant_solve(problem, scaling, ItmConfig(s_star=0.5, step=1e-3, h0=h0, h1=h1))
    assert result.converged
    assert result.s == pytest.approx(neumann_eta_w(0.1), abs=5e-6)
    assert result.w0 == pytest.approx(1.0, abs=1e-12)


def test_stefan_profile_matches_closed_form():
    problem, scaling = make_stefan(StefanParams(S=1.0))
    result = secant_solve(problem, scaling,
                          ItmConfig(s_star=0.5, step=1e-3, h0=30.0, h1=40.0))
    prof = original_profile(problem, result.s, 200)
    sup = max(abs(prof.u[i] - neumann_profile(eta, result.s).w)
              for i, eta in enumerate(prof.eta))
    assert sup <= 1e-3


def test_spreading_profile_matches_exact():
    problem, scaling = make_spreading(SpreadingParams(H=0.5, L=-0.5))
    result = secant_solve(problem, scaling,
                          ItmConfig(s_star=0.5, step=5e-4, h0=0.5, h1=0.1))
    prof = original_profile(problem, result.s, 200)
    for i, eta in enumerate(prof.eta):
        exact = exact_spreading(min(eta, 1.0))
        assert abs(prof.u[i] - exact.w) <= 1e-6
        assert abs(prof.du[i] - exact.dw) <= 1e-5


def test_spreading_s_star_independence():
    # the recovered boundary must not depend on the arbitrary starred boundary
    problem, scaling = make_spreading(SpreadingParams(H=0.5, L=-0.5))
    results = [
        secant_solve(problem, scaling,
                     ItmConfig(s_star=s_star, step=5e-4, h0=0.5, h1=0.1))
        for s_star in (0.5, 0.8, 1.0)
    ]
    for r in results:
        assert r.converged
        assert r.s == pytest.approx(1.0, abs=1e-6)
        assert r.w0 == pytest.approx((17.0 / 40.0) ** (1.0 / 3.0), abs=1e-6)


def test_stefan_s_star_independence():
    problem, scaling = make_stefan(StefanParams(S=1.0))
    a = secant_solve(problem, scaling, ItmConfig(s_star=0.5, step=1e-3, h0=30.0, h1=40.0))
    b = secant_solve(problem, scaling, ItmConfig(s_star=1.0, step=1e-3, h0=2.0, h1=3.0))
    assert a.converged and b.converged
    assert a.s == pytest.approx(b.s, abs=1e-6)
    assert a.dw0 == pytest.approx(b.dw0, abs=1e-6)


def test_default_guesses_tabulated():
    assert stefan_default_guesses(1.0) == (30.0, 40.0)
    assert stefan_default_guesses(50.0) == (1e-3, 1e-2)


@pytest.mark.parametrize("S", [0.2, 0.7, 2.0, 8.0, 20.0])
def test_default_guesses_untabulated_converge(S):
    problem, scaling = make_stefan(StefanParams(S=S))
    h0, h1 = stefan_default_guesses(S)
    result = secant_solve(problem, scaling, ItmConfig(s_star=0.5, step=1e-3, h0=h0, h1=h1))
    assert result.converged
    assert result.s == pytest.approx(neumann_eta_w(S), abs=1e-5)


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=0.15, max_value=30.0))
def test_default_guesses_property(S):
    problem, scaling = make_stefan(StefanParams(S=S))
    h0, h1 = stefan_default_guesses(S)
    result = secant_solve(problem, scaling, ItmConfig(s_star=0.5, step=1e-3, h0=h0, h1=h1))
    assert result.converged
    # Stefan condition at the recovered front: dU(eta_w) = -(S/2) eta_w
    prof = original_profile(problem, result.s, 100)
    assert prof.du[-1] == pytest.approx(-0.5 * S * result.s, rel=1e-12)


def test_stefan_gamma_sign_brackets_root():
    # Gamma changes sign across the root for S = 1
    problem, scaling = make_stefan(StefanParams(S=1.0))
    config = ItmConfig(s_star=0.5, step=1e-3, h0=30.0, h1=40.0)
    g_lo, _, _ = evaluate_gamma(problem, scaling, 30.0, config)
    g_hi, _, _ = evaluate_gamma(problem, scaling, 40.0, config)
    # Gamma is decreasing in h* for this embedding
    assert g_hi < 0.0 < g_lo
