"""Exception types shared across the library."""


class PossdecError(Exception):
    """Base class for all library-specific errors."""


class DomainError(PossdecError, ValueError):
    """An argument is outside the operation's domain (non-finite input,
    probability outside (0,1), empty sample request, degenerate grid)."""


class UnsupportedModelError(PossdecError, ValueError):
    """The distribution lacks the structure an operation requires,
    e.g. a flat or multimodal density where a unimodal one is needed."""


class NonPrevisibleError(PossdecError, RuntimeError):
    """An upper expected loss (or ordinary expected loss) diverges: the
    loss grows too fast in the tails for the integral to exist."""
