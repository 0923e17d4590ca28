"""Exception types shared across the package."""


class DownupError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DownupError):
    """Malformed or unsupported input (bad indices, bad literals, bad files)."""


class HypothesisError(DownupError):
    """A mathematical precondition of the requested operation is not satisfied.

    Raised e.g. when a solvable-structure computation is requested for
    parameters with lambda*omega == 0 or deg f == 0.  The CLI reports these
    as skipped checks rather than failures.
    """


class CertificationError(DownupError):
    """An expected structural certificate failed to verify.

    Carries the witness of the failure in ``args[1]`` when available.
    """
