"""Closed-form interface-speed laws, one per problem variant.

Every law is a pure function of one-sided boundary derivatives of the
transformed variable w (in physical-x units: callers holding d/dy values
must divide by s first) and the problem coefficients.

The reaction term of the balanced branch carries the coefficient
-(n-1)*c0/dwdx.  The literature formula this implements is sometimes
printed without the (n-1) factor; the balanced form is the one consistent
with the worked adsorption and turbulent-flow laws and is pinned by the
analytic-identity regression tests.
"""

import math
from dataclasses import dataclass

from .errors import (
    CoefficientNonfinite,
    CoefficientSignViolation,
    SlopeTooFlat,
)
from .problem import (
    REACTION_BALANCED,
    ContaminantParams,
    GeneralizedCoefficients,
    OxygenParams,
    PowerLawParams,
    TransformInfo,
)

DEFAULT_SLOPE_GUARD = 1e-8


@dataclass(frozen=True)
class BoundarySlopeSample:
    """One-sided boundary derivatives of w at x = s(t).

    dw_dx is d(w)/dx as x -> s(t) (negative for a genuine front);
    d2w_dx2 is needed by the oxygen law only.
    """

    dw_dx: float
    s: float
    t: float = 0.0
    d2w_dx2: float | None = None


def convection_weight(gamma: float) -> float:
    """G(gamma): 1 at gamma = 1, 0 for gamma > 1."""
    return 1.0 if gamma == 1.0 else 0.0


def speed_power_law(sample: BoundarySlopeSample,
                    params: PowerLawParams,
                    info: TransformInfo,
                    slope_guard: float = DEFAULT_SLOPE_GUARD) -> float:
    """ds/dt for the constant-coefficient power-law equation.

    Balanced branch (m+n = 2):  -(n/(n-1)) dwdx - (n-1) c0 / dwdx - G(gamma) b0
    Otherwise (m+n > 2 or c0=0): -(n/(n-1)) dwdx - G(gamma) b0
    """
    n = params.n
    dwdx = sample.dw_dx
    speed = -(n / (n - 1.0)) * dwdx - convection_weight(params.gamma) * params.b0
    if info.branch == REACTION_BALANCED:
        if abs(dwdx) < slope_guard:
            raise SlopeTooFlat(
                f"|dw/dx| = {abs(dwdx):.3e} < guard {slope_guard:.1e} in the "
                "reaction-balanced law (front flattening signals extinction)")
        speed -= (n - 1.0) * params.c0 / dwdx
    return speed


def speed_generalized(sample: BoundarySlopeSample,
                      coeffs: GeneralizedCoefficients,
                      params: PowerLawParams,
                      info: TransformInfo,
                      slope_guard: float = DEFAULT_SLOPE_GUARD) -> float:
    """ds/dt with g(t) u^n diffusion and (x,t)-dependent convection/reaction.

    g(t, 0) multiplies the diffusion term in every branch; convection and
    reaction coefficients are evaluated at (s(t), t).
    """
    n = params.n
    s, t = sample.s, sample.t
    g0 = coeffs.g(t)
    b0 = coeffs.b0_fn(s, t)
    c0 = coeffs.c0_fn(s, t)
    if not (math.isfinite(g0) and math.isfinite(b0) and math.isfinite(c0)):
        raise CoefficientNonfinite(f"coefficient not finite at (s, t) = ({s}, {t})")
    dwdx = sample.dw_dx
    speed = -(n * g0 / (n - 1.0)) * dwdx - convection_weight(params.gamma) * b0
    if info.branch == REACTION_BALANCED and c0 != 0.0:
        if abs(dwdx) < slope_guard:
            raise SlopeTooFlat(f"|dw/dx| = {abs(dwdx):.3e} < guard {slope_guard:.1e}")
        speed -= (n - 1.0) * c0 * coeffs.p0 / dwdx
    return speed


def speed_oxygen(sample: BoundarySlopeSample, params: OxygenParams) -> float:
    """ds/dt for the non-degenerate absorption variant.

    (2a-1) a0 sqrt(-a(a-1) a0/c0) d2w/dx2 - b0 + 2 da0/dx + (a-1) dc0/dx a0/c0,
    coefficients at (s(t), t), a = 2/(1-m).
    """
    if sample.d2w_dx2 is None:
        raise CoefficientNonfinite("oxygen law needs the boundary curvature d2w_dx2")
    s, t = sample.s, sample.t
    a0 = params.a0_fn(s, t)
    b0 = params.b0_fn(s, t)
    c0 = params.c0_fn(s, t)
    da0 = params.da0_dx(s, t)
    dc0 = params.dc0_dx(s, t)
    if not all(map(math.isfinite, (a0, b0, c0, da0, dc0))):
        raise CoefficientNonfinite(f"coefficient not finite at (s, t) = ({s}, {t})")
    if a0 < params.delta or c0 > -params.delta:
        raise CoefficientSignViolation(
            f"need a0 >= {params.delta} and c0 <= -{params.delta} at "
            f"(s, t) = ({s}, {t}); got a0 = {a0}, c0 = {c0}")
    alpha = 2.0 / (1.0 - params.m)
    root_arg = -alpha * (alpha - 1.0) * a0 / c0
    if root_arg <= 0.0:
        raise CoefficientSignViolation(f"square-root argument {root_arg} <= 0")
    return ((2.0 * alpha - 1.0) * a0 * math.sqrt(root_arg) * sample.d2w_dx2
            - b0 + 2.0 * da0 + (alpha - 1.0) * dc0 * a0 / c0)


def speed_contaminant(sample: BoundarySlopeSample, params: ContaminantParams) -> float:
    """ds/dt = -(D / (rho a (1-p))) dw/dx for equilibrium adsorption transport."""
    denom = params.rho * params.a * (1.0 - params.p)
    if denom <= 0.0:
        raise CoefficientSignViolation(f"rho*a*(1-p) = {denom} must be positive")
    return -(params.D / denom) * sample.dw_dx
