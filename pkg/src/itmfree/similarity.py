"""Scaling-group analysis for the parabolic moving-boundary class.

The model PDE is u_t = (u^n u_x)_x on 0 < x < x_w(t) with a power-law
condition at x = 0 (Dirichlet u(0,t) = A t^alpha or Neumann
u_x(0,t) = B t^beta). The one-parameter stretching group

    x -> lam x,  t -> lam^gamma t,  u -> lam^(alpha gamma) u

leaves the problem invariant when the exponents balance; the invariant
combinations eta = x t^(-1/gamma), U = t^(-alpha) u collapse the PDE to a
free boundary ODE. This module computes and validates the exponents and maps
profiles between physical and similarity variables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateExponent, NonPositiveTime
from .ivp import SolutionProfile

__all__ = [
    "OriginKind",
    "SimilarityExponents",
    "PhysicalProfile",
    "gamma_from_alpha",
    "alpha_from_beta",
    "check_invariance",
    "reconstruct_physical",
    "flux_at_origin",
    "height_at_origin",
]


class OriginKind(enum.Enum):
    DIRICHLET = "dirichlet"   # u(0, t) = A t^alpha
    NEUMANN = "neumann"       # u_x(0, t) = B t^beta


@dataclass(frozen=True)
class SimilarityExponents:
    """Exponents (n, alpha, beta, gamma) and coefficient (A or B) of the group."""

    n: float
    alpha: float
    gamma: float
    coefficient: float
    origin_kind: OriginKind
    beta: Optional[float] = None


@dataclass(frozen=True)
class PhysicalProfile:
    """A solution profile in physical (x, u) variables at a fixed time."""

    t: float
    x: np.ndarray
    u: np.ndarray
    du_dx: np.ndarray
    x_w: float


def gamma_from_alpha(n: float, alpha: float) -> float:
    """Similarity time exponent gamma = 2 / (n alpha + 1)."""
    denom = n * alpha + 1.0
    if denom == 0.0:
        raise DegenerateExponent(f"n*alpha + 1 = 0 for n={n}, alpha={alpha}")
    return 2.0 / denom


def alpha_from_beta(n: float, beta: float, rederived: bool = False) -> float:
    """Dirichlet exponent implied by a Neumann exponent beta.

    The default evaluates (beta + 1) / (2 - n - n*beta). With
    ``rederived=True`` the alternative balance (2*beta + 1) / (2 - n) is used
    instead; the two disagree for n != 0 and both are kept available.
    """
    if rederived:
        denom = 2.0 - n
    else:
        denom = 2.0 - n - n * beta
    if denom == 0.0:
        raise DegenerateExponent(f"degenerate denominator for n={n}, beta={beta}")
    if rederived:
        return (2.0 * beta + 1.0) / denom
    return (beta + 1.0) / denom


def check_invariance(exps: SimilarityExponents) -> list[float]:
    """Residuals of the exponent-balance relations for the scaling group.

    Returns [pde_residual, origin_residual]; both are zero exactly when the
    group leaves the PDE and the origin condition invariant. The PDE balance
    is gamma*(n*alpha + 1) - 2; the origin balance is zero by construction in
    the Dirichlet case and alpha*gamma - 1 - gamma*beta in the Neumann case
    (defined as zero when the coefficient B vanishes).
    """
    pde = exps.gamma * (exps.n * exps.alpha + 1.0) - 2.0
    if exps.origin_kind is OriginKind.DIRICHLET:
        origin = 0.0
    else:
        if exps.coefficient == 0.0 or exps.beta is None:
            origin = 0.0
        else:
            origin = exps.alpha * exps.gamma - 1.0 - exps.gamma * exps.beta
    return [pde, origin]


def reconstruct_physical(profile: SolutionProfile, exps: SimilarityExponents,
                         eta_w: float, t: float) -> PhysicalProfile:
    """Map a similarity profile back to physical variables at time t.

    x = eta t^(1/gamma), u = t^alpha U(eta), du/dx = t^(alpha - 1/gamma) U'(eta),
    and x_w = eta_w t^(1/gamma).
    """
    if t <= 0.0:
        raise NonPositiveTime(f"t must be positive, got {t}")
    tg = t ** (1.0 / exps.gamma)
    ta = t ** exps.alpha
    return PhysicalProfile(
        t=t,
        x=profile.eta * tg,
        u=profile.u * ta,
        du_dx=profile.du * (ta / tg),
        x_w=eta_w * tg,
    )


def flux_at_origin(exps: SimilarityExponents, U0: float, dU0: float, t: float) -> float:
    """Flux u^n u_x at x = 0: B t^(beta (n+1)) U(0)^n U'(0)."""
    if t <= 0.0:
        raise NonPositiveTime(f"t must be positive, got {t}")
    beta = exps.beta if exps.beta is not None else 0.0
    return exps.coefficient * t ** (beta * (exps.n + 1.0)) * U0 ** exps.n * dU0


def height_at_origin(exps: SimilarityExponents, U0: float, t: float) -> float:
    """Field value at x = 0: t^alpha U(0)."""
    if t <= 0.0:
        raise NonPositiveTime(f"t must be positive, got {t}")
    return t ** exps.alpha * U0
