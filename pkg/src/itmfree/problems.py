"""Concrete problem builders: the one-phase Stefan problem and the viscous
gravity-current spreading problem, each reduced to a free boundary ODE and
paired with its extended scaling group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParams, SingularRhs
from .itm import ExtendedScaling, ReducedFreeBvp
from .ivp import State2
from .similarity import OriginKind, SimilarityExponents

__all__ = [
    "StefanParams",
    "SpreadingParams",
    "make_stefan",
    "make_spreading",
    "stefan_default_guesses",
    "stefan_exponents",
    "spreading_exponents",
    "STEFAN_GUESSES",
]

# Initial secant guesses (h0, h1) per inverse Stefan number, as used for the
# tabulated runs; unlisted S fall back to an estimate scaled from the
# large-S front position.
STEFAN_GUESSES: dict[float, tuple[float, float]] = {
    0.1: (600.0, 700.0),
    0.5: (100.0, 150.0),
    1.0: (30.0, 40.0),
    5.0: (3.0, 2.0),
    10.0: (1.0, 0.5),
    50.0: (1e-3, 1e-2),
}


@dataclass(frozen=True)
class StefanParams:
    """S is the inverse Stefan number (S > 0)."""

    S: float

    def __post_init__(self) -> None:
        if not self.S > 0.0:
            raise InvalidParams(f"S must be positive, got {self.S}")


@dataclass(frozen=True)
class SpreadingParams:
    """Free-boundary fluid height H (nonzero) and slope constant L."""

    H: float
    L: float

    def __post_init__(self) -> None:
        if self.H == 0.0:
            raise InvalidParams("H must be nonzero")


def stefan_exponents() -> SimilarityExponents:
    """n = 0, A = 1, alpha = 0, gamma = 2 (linear heat equation, Dirichlet)."""
    return SimilarityExponents(n=0.0, alpha=0.0, gamma=2.0, coefficient=1.0,
                               origin_kind=OriginKind.DIRICHLET)


def spreading_exponents() -> SimilarityExponents:
    """n = 3, B = 0, alpha = beta = -1/5, gamma = 5 (zero-flux Neumann)."""
    return SimilarityExponents(n=3.0, alpha=-0.2, gamma=5.0, coefficient=0.0,
                               origin_kind=OriginKind.NEUMANN, beta=-0.2)


def make_stefan(params: StefanParams) -> tuple[ReducedFreeBvp, ExtendedScaling]:
    """Free boundary reduction of the one-phase Stefan problem.

    Original ODE: U'' = -(1/2) eta U', with U(0) = 1, U(eta_w) = 0 and
    U'(eta_w) = -(S/2) eta_w. The extended problem multiplies the convection
    coefficient by h^(1/2) and the boundary slope by h^(3/4); the group
    exponents are delta = -1, sigma = 4 and omega is read off as U*(0). The
    h^(1/2) factor restricts h* to positive values.
    """
    S = params.S

    def rhs(z: float, y: State2) -> float:
        return -0.5 * z * y.dw

    def extended_rhs(h: float, z: float, y: State2) -> float:
        return -0.5 * math.sqrt(h) * z * y.dw

    problem = ReducedFreeBvp(
        rhs=rhs,
        origin_condition=lambda y: y.w,
        origin_constant=1.0,
        boundary_value=lambda s: 0.0,
        boundary_slope=lambda s: -0.5 * S * s,
        extended_rhs=extended_rhs,
        extended_boundary_value=lambda h, s: 0.0,
        extended_boundary_slope=lambda h, s: -0.5 * h ** 0.75 * S * s,
        h_star_domain=(0.0, math.inf),
    )
    scaling = ExtendedScaling(
        delta=-1.0,
        sigma=4.0,
        omega_rule=lambda h, endpoint: endpoint.w,
    )
    return problem, scaling


def make_spreading(params: SpreadingParams) -> tuple[ReducedFreeBvp, ExtendedScaling]:
    """Free boundary reduction of the viscous spreading problem.

    The origin condition U'(0) = 0 is homogeneous, so the solver works in the
    shifted variable V = U + eta, for which V'(0) = 1. The extended problem
    carries h^(1/2) inside the shift and h^2 on the singular terms; the group
    exponents are delta = 1/2, sigma = 1 and omega = (V*'(0))^2. Profiles and
    recovered values are mapped back to U = V - eta.
    """
    H, L = params.H, params.L
    slope = L / (5.0 * H ** 3) + 1.0

    def shifted_terms(h: float, z: float, y: State2) -> float:
        sh = math.sqrt(h)
        u = y.w - sh * z
        if u <= 0.0:
            # (V - h^(1/2) eta)^(-3) blows up; diagnose instead of NaN
            raise SingularRhs(z, f"V - h^(1/2) eta = {u} <= 0 at eta = {z}")
        du = y.dw - sh
        c = h * h / 5.0
        return -3.0 * du * du / u - c * z * du / u ** 3 - c / u ** 2

    problem = ReducedFreeBvp(
        rhs=lambda z, y: shifted_terms(1.0, z, y),
        origin_condition=lambda y: y.dw,
        origin_constant=1.0,
        boundary_value=lambda s: H + s,
        boundary_slope=lambda s: slope,
        extended_rhs=shifted_terms,
        extended_boundary_value=lambda h, s: h * H + math.sqrt(h) * s,
        extended_boundary_slope=lambda h, s: math.sqrt(h) * slope,
        h_star_domain=(0.0, math.inf),
        to_original=lambda eta, y: State2(y.w - eta, y.dw - 1.0),
    )
    scaling = ExtendedScaling(
        delta=0.5,
        sigma=1.0,
        omega_rule=lambda h, endpoint: endpoint.dw ** 2,
    )
    return problem, scaling


def stefan_default_guesses(S: float) -> tuple[float, float]:
    """Secant starting pair for a given S.

    Tabulated values reproduce the reference runs; otherwise the pair is
    scaled from a closed-form estimate of the front position.
    """
    if S in STEFAN_GUESSES:
        return STEFAN_GUESSES[S]
    # eta_w ~ 2 sqrt(ln(1 + 1/(sqrt(pi) S))): exact to ~6% for large S and a
    # mild overestimate for small S; converted via omega = eta_w / s*, s* = 1/2
    lam = math.sqrt(math.log(1.0 + 1.0 / (math.sqrt(math.pi) * S)))
    h_est = (4.0 * lam) ** 4
    return h_est, 0.5 * h_est
