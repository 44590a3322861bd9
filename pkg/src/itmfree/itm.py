"""The iterative transformation method for free boundary ODE problems.

A problem of the form

    w'' = f(z, w, w'),  g(w(0), w'(0)) = C,  w(s) = j(s),  w'(s) = l(s)

with unknown free boundary s is embedded in an extended problem carrying a
parameter h; the extension is chosen to be partially invariant under the
stretching group z -> omega^delta z, w -> omega w, h -> omega^sigma h. One
inward RK4 integration of the extended problem from a fixed starred boundary
s* yields the group parameter omega and hence the transformation function

    Gamma(h*) = omega^(-sigma) h* - 1 ,

whose root corresponds to h = 1, i.e. to the original problem. The secant
method drives Gamma to zero; the physical values follow from the scaling
relations s = omega^(-delta) s*, w(0) = omega^(-1) w*(0),
w'(0) = omega^(delta-1) w*'(0).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import (
    DomainExit,
    OmegaNonPositive,
    SecantBreakdown,
    SingularRhs,
)
from .ivp import IntegrationResult, SolutionProfile, State2, integrate_inward, steps_for_interval

__all__ = [
    "ReducedFreeBvp",
    "ExtendedScaling",
    "ItmConfig",
    "ItmIteration",
    "ItmStatus",
    "ItmResult",
    "evaluate_gamma",
    "secant_solve",
    "recover_values",
    "generic_omega_rule",
    "original_profile",
]


def _identity_output(eta: float, state: State2) -> State2:
    return state


@dataclass(frozen=True)
class ReducedFreeBvp:
    """A second-order free boundary problem plus its extended embedding.

    ``rhs(z, y)`` returns w'' for the original problem; ``extended_rhs`` takes
    the embedding parameter h* first. Setting h* = 1 in the extended closures
    must reproduce the original ones pointwise. ``to_original`` undoes any
    dependent-variable shift used to make the origin condition inhomogeneous
    (identity when no shift was needed).
    """

    rhs: Callable[[float, State2], float]
    origin_condition: Callable[[State2], float]
    origin_constant: float
    boundary_value: Callable[[float], float]
    boundary_slope: Callable[[float], float]
    extended_rhs: Callable[[float, float, State2], float]
    extended_boundary_value: Callable[[float, float], float]
    extended_boundary_slope: Callable[[float, float], float]
    h_star_domain: tuple[float, float] = (0.0, math.inf)
    to_original: Callable[[float, State2], State2] = _identity_output


@dataclass(frozen=True)
class ExtendedScaling:
    """Group exponents (delta, sigma) and the omega-recovery rule."""

    delta: float
    sigma: float
    omega_rule: Callable[[float, State2], float]


@dataclass(frozen=True)
class ItmConfig:
    s_star: float
    step: float
    h0: float
    h1: float
    tol: float = 1e-6
    max_iter: int = 50

    def validate(self, h_star_domain: tuple[float, float] = (0.0, math.inf)) -> None:
        from .errors import InvalidParams

        lo, hi = h_star_domain
        if self.s_star <= 0.0:
            raise InvalidParams("s_star must be positive")
        if self.step <= 0.0:
            raise InvalidParams("step must be positive")
        if self.tol <= 0.0:
            raise InvalidParams("tol must be positive")
        if self.h0 == self.h1:
            raise InvalidParams("initial guesses h0 and h1 must differ")
        for h in (self.h0, self.h1):
            if not lo < h < hi:
                raise InvalidParams(f"initial guess {h} outside h* domain ({lo}, {hi})")


@dataclass(frozen=True)
class ItmIteration:
    j: int
    h_star: float
    gamma_val: float
    omega: float
    s_j: float


class ItmStatus(enum.Enum):
    CONVERGED = "converged"
    MAX_ITER_EXCEEDED = "max_iter_exceeded"
    SINGULAR_INTEGRATION = "singular_integration"
    OMEGA_NON_POSITIVE = "omega_non_positive"


@dataclass(frozen=True)
class ItmResult:
    status: ItmStatus
    omega: float
    h_star: float
    s: float
    w0: float
    dw0: float
    trace: list[ItmIteration] = field(default_factory=list)
    profile: Optional[SolutionProfile] = None

    @property
    def converged(self) -> bool:
        return self.status is ItmStatus.CONVERGED

    @property
    def iterations(self) -> int:
        return self.trace[-1].j if self.trace else 0


def generic_omega_rule(problem: ReducedFreeBvp, scaling: ExtendedScaling
                       ) -> Callable[[float, State2], float]:
    """Default omega recovery via the extended origin condition.

    omega = h*^(1/sigma) g(h*^(-1/sigma) w*(0), h*^((delta-1)/sigma) w*'(0)) / C.
    Requires C != 0; problems with a homogeneous origin condition must be
    shifted first and given a problem-specific rule.
    """
    C = problem.origin_constant
    if C == 0.0:
        raise ValueError("generic omega rule requires a nonzero origin constant")
    delta, sigma = scaling.delta, scaling.sigma

    def rule(h_star: float, endpoint: State2) -> float:
        scaled = State2(
            h_star ** (-1.0 / sigma) * endpoint.w,
            h_star ** ((delta - 1.0) / sigma) * endpoint.dw,
        )
        return h_star ** (1.0 / sigma) * problem.origin_condition(scaled) / C

    return rule


def evaluate_gamma(problem: ReducedFreeBvp, scaling: ExtendedScaling,
                   h_star: float, config: ItmConfig
                   ) -> tuple[float, float, State2]:
    """One inward integration of the extended problem; returns (Gamma, omega, endpoint).

    Raises SingularRhs if the integration hits a singularity and
    OmegaNonPositive if the recovered group parameter is not positive.
    """
    s_star = config.s_star
    y_start = State2(
        problem.extended_boundary_value(h_star, s_star),
        problem.extended_boundary_slope(h_star, s_star),
    )
    n_steps = steps_for_interval(s_star, 0.0, config.step)

    def rhs(z: float, y: State2) -> tuple[float, float]:
        return (y.dw, problem.extended_rhs(h_star, z, y))

    res = integrate_inward(rhs, s_star, y_start, 0.0, n_steps)
    omega = scaling.omega_rule(h_star, res.endpoint)
    if not (omega > 0.0) or not math.isfinite(omega):
        raise OmegaNonPositive(f"omega = {omega} at h* = {h_star}")
    gamma_val = omega ** (-scaling.sigma) * h_star - 1.0
    return gamma_val, omega, res.endpoint


def recover_values(omega: float, scaling: ExtendedScaling, endpoint: State2,
                   s_star: float) -> tuple[float, float, float]:
    """Scale the starred origin values back to the original problem.

    Returns (s, w(0), dw/dz(0)) with s = omega^(-delta) s*,
    w(0) = omega^(-1) w*(0), dw/dz(0) = omega^(delta - 1) dw*/dz*(0).
    """
    if not omega > 0.0:
        raise OmegaNonPositive(f"omega = {omega}")
    s = omega ** (-scaling.delta) * s_star
    w0 = endpoint.w / omega
    dw0 = omega ** (scaling.delta - 1.0) * endpoint.dw
    return s, w0, dw0


def original_profile(problem: ReducedFreeBvp, s: float, n_steps: int) -> SolutionProfile:
    """Integrate the original (h = 1) problem inward from s, recording all steps.

    The returned profile is in the original, un-shifted variables and ordered
    by increasing abscissa.
    """
    y_start = State2(problem.boundary_value(s), problem.boundary_slope(s))

    def rhs(z: float, y: State2) -> tuple[float, float]:
        return (y.dw, problem.rhs(z, y))

    res = integrate_inward(rhs, s, y_start, 0.0, n_steps, record_profile=True)
    prof = res.profile
    assert prof is not None
    out = prof.reversed()
    for i in range(len(out)):
        st = problem.to_original(out.eta[i], State2(out.u[i], out.du[i]))
        out.u[i], out.du[i] = st.w, st.dw
    return out


def _clamp_to_domain(h_new: float, h_prev: float,
                     domain: tuple[float, float]) -> float:
    """Pull an out-of-domain iterate to the midpoint between the violated
    boundary and the last in-domain iterate."""
    lo, hi = domain
    if h_new <= lo:
        return 0.5 * (lo + h_prev)
    if h_new >= hi:
        return 0.5 * (hi + h_prev)
    return h_new


def secant_solve(problem: ReducedFreeBvp, scaling: ExtendedScaling,
                 config: ItmConfig, record_profile: bool = False,
                 profile_steps: Optional[int] = None) -> ItmResult:
    """Drive Gamma(h*) to zero with the secant method.

    Convergence requires both |Gamma(h*_j)| <= tol and |s_j - s_{j-1}| <= tol;
    the two-clause test is first applied at j >= 1 (the s-difference needs two
    iterates), except that a root handed in as h0 is accepted immediately
    after the burn-in pair. On convergence the free boundary and origin
    values are recovered from the scaling relations; optionally the original
    problem is re-integrated from the recovered boundary to record a profile
    in un-shifted variables.
    """
    config.validate(problem.h_star_domain)
    tol = config.tol

    def make_result(status: ItmStatus, h_star: float, omega: float,
                    endpoint: Optional[State2], trace: list[ItmIteration]) -> ItmResult:
        if endpoint is not None and omega > 0.0:
            s, w0, dw0 = recover_values(omega, scaling, endpoint, config.s_star)
        else:
            s = w0 = dw0 = math.nan
        profile = None
        if status is ItmStatus.CONVERGED and record_profile:
            n = profile_steps or steps_for_interval(s, 0.0, config.step)
            profile = original_profile(problem, s, n)
        return ItmResult(status=status, omega=omega, h_star=h_star, s=s,
                         w0=w0, dw0=dw0, trace=trace, profile=profile)

    # burn-in pair: Gamma must be evaluable at both guesses
    g0, om0, _ep0 = evaluate_gamma(problem, scaling, config.h0, config)
    s0 = om0 ** (-scaling.delta) * config.s_star
    trace = [ItmIteration(0, config.h0, g0, om0, s0)]

    g1, om1, ep1 = evaluate_gamma(problem, scaling, config.h1, config)
    s1 = om1 ** (-scaling.delta) * config.s_star
    trace.append(ItmIteration(1, config.h1, g1, om1, s1))

    if abs(g0) <= tol:
        return make_result(ItmStatus.CONVERGED, config.h0, om0, _ep0, trace)

    h_prev, g_prev, s_prev = config.h0, g0, s0
    h_cur, g_cur, s_cur, om_cur, ep_cur = config.h1, g1, s1, om1, ep1
    clamped_last = False

    j = 1
    while not (abs(g_cur) <= tol and abs(s_cur - s_prev) <= tol):
        if j >= config.max_iter:
            return make_result(ItmStatus.MAX_ITER_EXCEEDED, h_cur, om_cur, ep_cur, trace)
        if g_cur == g_prev:
            raise SecantBreakdown(
                f"Gamma({h_cur}) == Gamma({h_prev}) = {g_cur} away from a root")
        h_next = h_cur - g_cur * (h_cur - h_prev) / (g_cur - g_prev)
        lo, hi = problem.h_star_domain
        if not lo < h_next < hi:
            if clamped_last:
                raise DomainExit(
                    f"secant iterate {h_next} left the h* domain twice in a row")
            h_next = _clamp_to_domain(h_next, h_cur, problem.h_star_domain)
            clamped_last = True
        else:
            clamped_last = False

        j += 1
        try:
            g_next, om_next, ep_next = evaluate_gamma(problem, scaling, h_next, config)
        except SingularRhs:
            return make_result(ItmStatus.SINGULAR_INTEGRATION, h_next, math.nan, None, trace)
        except OmegaNonPositive:
            return make_result(ItmStatus.OMEGA_NON_POSITIVE, h_next, math.nan, None, trace)
        s_next = om_next ** (-scaling.delta) * config.s_star
        trace.append(ItmIteration(j, h_next, g_next, om_next, s_next))

        h_prev, g_prev, s_prev = h_cur, g_cur, s_cur
        h_cur, g_cur, s_cur, om_cur, ep_cur = h_next, g_next, s_next, om_next, ep_next

    return make_result(ItmStatus.CONVERGED, h_cur, om_cur, ep_cur, trace)
