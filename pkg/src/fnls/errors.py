"""Exception hierarchy for the solver suite.

Each error family maps to one CLI exit code (see cli.EXIT_CODES).
"""


class FnlsError(Exception):
    """Base class for all solver errors."""


# --- grid / transform errors ---------------------------------------------

class NonEvenN(FnlsError):
    """Grid size must be even (and should be a power of two)."""


class DegenerateInterval(FnlsError):
    """Interval endpoints must satisfy a < b."""


class NonFiniteInput(FnlsError):
    """NaN or Inf encountered in input samples."""


class MismatchedGrids(FnlsError):
    """Two fields that must share a grid do not."""


# --- model errors ----------------------------------------------------------

class ZeroProfile(FnlsError):
    """Operation undefined on the identically-zero profile."""


class InvalidRegime(FnlsError):
    """(beta, sigma) outside the admissible parameter window."""


class InadmissibleExponent(FnlsError):
    """Lebesgue exponent outside the embedding inequality's range."""


# --- iteration errors ------------------------------------------------------

class NonexistenceRegime(FnlsError):
    """No nontrivial profile exists for these parameters."""


class SpeedTooLarge(FnlsError):
    """Boosted solve requires c^2 < 4*lambda*omega."""


class IndefiniteSymbol(FnlsError):
    """Linear symbol omega + c*k + lambda*k^2 is not positive on the grid."""


class ZeroDenominator(FnlsError):
    """Stabilizing-factor denominator vanished (zero iterate?)."""


class NotConverged(FnlsError):
    """Iteration hit max_iter before reaching tolerance."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class Diverged(FnlsError):
    """Iteration error exceeded the divergence cap."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


# --- time stepping ---------------------------------------------------------

class NonFiniteOutput(FnlsError):
    """Substep produced NaN/Inf (blow-up candidate)."""


# --- semiclassical ---------------------------------------------------------

class SeriesTooShort(FnlsError):
    """Time series too short for break detection."""


class BoundaryNotDecayed(FnlsError):
    """Amplitude does not decay at the domain boundary."""


# --- files / config --------------------------------------------------------

class ConfigInvalid(FnlsError):
    """Experiment configuration rejected (field + reason in message)."""


class BadMagic(FnlsError):
    """Profile file does not start with the FNLS magic bytes."""


class UnsupportedVersion(FnlsError):
    """Profile file format version not supported."""


class TruncatedFile(FnlsError):
    """Profile file shorter than its header promises."""
