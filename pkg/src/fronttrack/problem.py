"""Problem definitions, parameter-regime validation and the transformation exponent.

Each variant of the front-tracked equation gets its own parameter record.
``validate`` maps a record to the exponent of the substitution u = w**beta
(or u = w**alpha for the non-degenerate absorption variant) and the branch
of the interface law, or rejects the record with a diagnostic naming the
violated condition.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    ConvectionExponentOutOfRange,
    DegenerationRequired,
    EmptySupport,
    InterfaceNonexistent,
    InvalidSpec,
    ReactionExponentOutOfRange,
    SingularIsotherm,
)

# branch tags
REACTION_BALANCED = "reaction-balanced"
DIFFUSION_DOMINATED = "diffusion-dominated"
NO_REACTION = "no-reaction"
OXYGEN = "oxygen"
CONTAMINANT = "contaminant"

_BRANCH_TOL = 1e-12


def _snap(x: float, tol: float = 1e-12) -> float:
    """Round an exponent to the nearest integer when it is one up to roundoff.

    Structural exponents like (n-1)*beta - 1 are zero by construction; tiny
    negative residues would turn pow(0, e) into inf.
    """
    r = round(x)
    return float(r) if abs(x - r) < tol else x


@dataclass(frozen=True)
class PowerLawParams:
    """Coefficients of du/dt = d2(u^n)/dx2 + b0 d(u^gamma)/dx + c0 u^m.

    extra_reactions lists additional (coefficient, exponent) source terms;
    they must be of strictly higher order at the front (m_k + n > 2) so the
    interface law is untouched by them.
    """

    n: float
    m: float = 0.0
    gamma: float = 1.0
    b0: float = 0.0
    c0: float = 0.0
    extra_reactions: tuple = ()

    def reaction_terms(self):
        """All (coefficient, exponent) reaction pairs with nonzero coefficient."""
        terms = []
        if self.c0 != 0.0:
            terms.append((self.c0, self.m))
        terms.extend((c, m) for c, m in self.extra_reactions if c != 0.0)
        return terms


@dataclass(frozen=True)
class GeneralizedCoefficients:
    """Time/space dependent coefficients a = g(t) u^n, b = b0(x,t) u^gamma, c = c0(x,t) p0 u^m.

    g is restricted to g(t) >= delta > 0 and the reaction prefactor to a
    constant p0; that is exactly what the interface law consumes.
    """

    g: Callable[[float], float]
    b0_fn: Callable[[float, float], float]
    c0_fn: Callable[[float, float], float]
    p0: float = 1.0


@dataclass(frozen=True)
class OxygenParams:
    """Non-degenerate absorption variant: a = a0(x,t) u, b = b0(x,t) u, c = c0(x,t) H(u) u^m.

    Requires a0 >= delta > 0 and c0 <= -delta at every queried point.
    The optional second derivatives default to zero when not supplied.
    """

    a0_fn: Callable
    b0_fn: Callable
    c0_fn: Callable
    m: float
    da0_dx: Callable
    dc0_dx: Callable
    d2a0_dx2: Callable | None = None
    db0_dx: Callable | None = None
    delta: float = 1e-10


@dataclass(frozen=True)
class ContaminantParams:
    """Equilibrium transport with adsorption isotherm Psi(u) = a u^p / (1 + b u^p)."""

    D: float
    v: float
    rho: float = 1.0
    a: float = 1.0
    b: float = 0.0
    p: float = 0.5


@dataclass(frozen=True)
class BoundaryCondition:
    """Left-boundary condition at x = 0.

    kind "dirichlet" carries u = phi(t) >= 0; kind "flux" carries the Robin
    datum q(t) of -d(u^n)/dx + b0 u^gamma = q(t); "symmetry" means du/dx = 0.
    data may be a constant or a callable of t.
    """

    kind: str
    data: float | Callable[[float], float] | None = None

    def __post_init__(self):
        if self.kind not in ("dirichlet", "flux", "symmetry"):
            raise InvalidSpec(f"unknown boundary kind {self.kind!r}")
        if self.kind != "symmetry" and self.data is None:
            raise InvalidSpec(f"{self.kind} boundary needs a time function or constant")

    def value(self, t: float) -> float:
        if self.kind == "symmetry":
            return 0.0
        return self.data(t) if callable(self.data) else float(self.data)


@dataclass(frozen=True)
class InitialProfile:
    """Nonnegative initial datum u0 on [0, L0], identically zero beyond."""

    u0: Callable[[np.ndarray], np.ndarray] | None
    L0: float


@dataclass(frozen=True)
class TransformInfo:
    """Transformation exponent and interface-law branch for a validated problem."""

    exponent: float            # beta (power-law/contaminant) or alpha (oxygen)
    branch: str
    kind: str = "power_law"    # power_law | generalized | oxygen | contaminant

    @property
    def beta(self) -> float:
        return self.exponent


def validate(spec) -> TransformInfo:
    """Check a parameter record against the interface-existence conditions.

    Returns the transformation exponent and branch, or raises the error
    naming the violated condition.  Total on finite inputs: every record
    maps to exactly one TransformInfo or one error.
    """
    if isinstance(spec, PowerLawParams):
        return _validate_power_law(spec, kind="power_law")
    if isinstance(spec, GeneralizedCoefficients):
        raise InvalidSpec("generalized coefficients validate together with "
                          "their PowerLawParams; use validate_generalized")
    if isinstance(spec, OxygenParams):
        return _validate_oxygen(spec)
    if isinstance(spec, ContaminantParams):
        return _validate_contaminant(spec)
    raise InvalidSpec(f"unknown problem spec type {type(spec).__name__}")


def validate_generalized(coeffs: GeneralizedCoefficients, params: PowerLawParams) -> TransformInfo:
    """Validate the generalized variant: exponents from params, coefficients finite."""
    info = _validate_power_law(params, kind="generalized")
    if not math.isfinite(coeffs.p0):
        raise InvalidSpec("reaction prefactor p0 must be finite")
    return info


def _validate_power_law(p: PowerLawParams, kind: str) -> TransformInfo:
    for name in ("n", "m", "gamma", "b0", "c0"):
        if not math.isfinite(getattr(p, name)):
            raise InvalidSpec(f"parameter {name} is not finite")
    if p.m < 0:
        raise ReactionExponentOutOfRange(f"reaction exponent m={p.m} must be >= 0")
    # physical nonexistence trumps method-hypothesis violations
    if p.b0 != 0.0 and p.c0 < 0.0 and min(p.n, p.gamma) <= min(p.m, 1.0):
        raise InterfaceNonexistent(
            f"min(n, gamma) = {min(p.n, p.gamma)} <= min(m, 1) = {min(p.m, 1.0)} "
            "with b0 != 0 and c0 < 0: no interface exists")
    if p.n <= 1.0:
        raise DegenerationRequired(f"diffusion exponent n={p.n} must exceed 1")
    if p.m >= 1.0:
        raise ReactionExponentOutOfRange(f"reaction exponent m={p.m} must be < 1")
    if p.gamma < 1.0:
        raise ConvectionExponentOutOfRange(f"convection exponent gamma={p.gamma} must be >= 1")

    mn = p.m + p.n
    if p.c0 != 0.0 and mn < 2.0 - _BRANCH_TOL:
        raise ReactionExponentOutOfRange(
            f"m + n = {mn} < 2 with c0 != 0: no interface law for the "
            "fractional-front branch")
    for ck, mk in p.extra_reactions:
        if not (math.isfinite(ck) and math.isfinite(mk)):
            raise InvalidSpec("extra reaction term has non-finite entries")
        if ck != 0.0 and mk + p.n <= 2.0 + _BRANCH_TOL:
            raise ReactionExponentOutOfRange(
                f"extra reaction exponent m={mk} must satisfy m + n > 2")

    beta = 1.0 / (p.n - 1.0)
    if p.c0 == 0.0:
        branch = NO_REACTION
    elif abs(mn - 2.0) <= _BRANCH_TOL:
        branch = REACTION_BALANCED
    else:
        branch = DIFFUSION_DOMINATED
    return TransformInfo(exponent=beta, branch=branch, kind=kind)


def _validate_oxygen(p: OxygenParams) -> TransformInfo:
    if not 0.0 <= p.m < 1.0:
        raise ReactionExponentOutOfRange(f"consumption exponent m={p.m} must lie in [0, 1)")
    alpha = 2.0 / (1.0 - p.m)
    return TransformInfo(exponent=alpha, branch=OXYGEN, kind="oxygen")


def _validate_contaminant(p: ContaminantParams) -> TransformInfo:
    if p.D <= 0:
        raise InvalidSpec(f"diffusion coefficient D={p.D} must be positive")
    if p.rho <= 0 or p.a <= 0:
        raise InvalidSpec("rho and a must be positive")
    if p.b < 0:
        raise InvalidSpec(f"isotherm saturation b={p.b} must be >= 0")
    if not 0.0 < p.p < 1.0:
        raise SingularIsotherm(
            f"isotherm exponent p={p.p} must lie in (0, 1); p = 1 is the "
            "singular (infinite interface speed) case")
    beta = 1.0 / (1.0 - p.p)
    return TransformInfo(exponent=beta, branch=CONTAMINANT, kind="contaminant")


def regularize_initial_profile(profile: InitialProfile,
                               floor: float,
                               mesh,
                               info: TransformInfo,
                               aux_support: float | None = None):
    """Transformed nodal values W_i = max(u0(y_i s0), floor*chi(y_i))**(1/beta) and s(0).

    chi is a linear ramp, positive on [0, 1) and zero at y = 1, so the
    returned profile is strictly positive on (0, 1) with W_N = 0 exactly.
    When u0 is absent/empty the caller must request an auxiliary support
    radius; the profile is then the pure ramp of height ``floor`` in u.
    """
    if floor < 0:
        raise InvalidSpec("regularization floor must be >= 0")
    y = mesh.y
    chi = 1.0 - y

    empty = profile.u0 is None or profile.L0 <= 0.0
    if empty:
        if aux_support is None or aux_support <= 0.0:
            raise EmptySupport("initial profile has empty support and no "
                               "auxiliary support radius was requested")
        if floor <= 0.0:
            raise InvalidSpec("auxiliary start needs a positive floor")
        s0 = float(aux_support)
        u_vals = floor * chi
    else:
        s0 = float(profile.L0)
        u_vals = np.maximum(np.asarray(profile.u0(y * s0), dtype=float), floor * chi)

    w = np.maximum(u_vals, 0.0) ** (1.0 / info.exponent)
    w[-1] = 0.0
    return w, s0
