"""Exception types shared across the library."""


class FrontTrackError(Exception):
    """Base class for all fronttrack errors."""


class InvalidSpec(FrontTrackError):
    """A parameter set or mesh specification violates a structural precondition."""


# ---------------------------------------------------------------------------
# problem validation
# ---------------------------------------------------------------------------

class DegenerationRequired(InvalidSpec):
    """Diffusion exponent n <= 1: no degenerate front for the power-law variant."""


class ReactionExponentOutOfRange(InvalidSpec):
    """Reaction exponent outside the supported regime (m >= 1, or m+n < 2 with a reaction term)."""


class ConvectionExponentOutOfRange(InvalidSpec):
    """Convection exponent gamma < 1."""


class InterfaceNonexistent(InvalidSpec):
    """Parameters for which no interface exists (min(n, gamma) <= min(m, 1) with b0 != 0, c0 < 0)."""


class SingularIsotherm(InvalidSpec):
    """Isotherm exponent p outside (0, 1); p = 1 makes the interface speed infinite."""


class EmptySupport(InvalidSpec):
    """Initial profile has no support and no auxiliary support radius was requested."""


# ---------------------------------------------------------------------------
# meshing
# ---------------------------------------------------------------------------

class NoGeometricRatio(InvalidSpec):
    """Geometric grid needs N >= M; fewer points would force a ratio q > 1."""


# ---------------------------------------------------------------------------
# RHS evaluation: recoverable means the integrator may retry a smaller step
# ---------------------------------------------------------------------------

class RecoverableRhsError(FrontTrackError):
    """RHS evaluation failed in a way that a smaller step may fix."""


class SlopeTooFlat(RecoverableRhsError):
    """|dw/dx| at the interface below the slope guard in a law that divides by it."""


class CoefficientSignViolation(RecoverableRhsError):
    """Coefficient sign condition (a0 >= delta, c0 <= -delta) violated at the query point."""


class CoefficientNonfinite(RecoverableRhsError):
    """A coefficient function returned a non-finite value."""


class BoundaryDegenerate(RecoverableRhsError):
    """Ghost-point formula would divide by C_0 = 0."""


class NonfiniteRhs(RecoverableRhsError):
    """NaN/Inf detected in an assembled right-hand side."""


# ---------------------------------------------------------------------------
# integrator
# ---------------------------------------------------------------------------

class SolverFailure(FrontTrackError):
    """Terminal integrator failure; carries the time and state reached."""

    def __init__(self, message, t=None, state=None):
        super().__init__(message)
        self.t = t
        self.state = state


class StepSizeUnderflow(SolverFailure):
    """Error control drove the step below the representable minimum."""


class NewtonDivergence(SolverFailure):
    """Newton failed after Jacobian refresh and step-halving retries."""


class RhsFailure(SolverFailure):
    """RHS kept failing at the smallest admissible step."""


# ---------------------------------------------------------------------------
# metrics / experiment plumbing
# ---------------------------------------------------------------------------

class DegenerateDenominator(FrontTrackError):
    """Analytic solution identically zero on the sample (post-extinction)."""


class MeshIncompatible(FrontTrackError):
    """Restart donor section missing, extinct, or incompatible with the new mesh."""


class ConfigError(FrontTrackError):
    """Config file problem; carries a line/field diagnostic."""
