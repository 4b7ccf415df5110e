"""Exception types raised by the library."""


class WedgeLieError(Exception):
    """Base class for every error raised by wedgelie."""


class InvalidArgument(WedgeLieError, ValueError):
    pass


class ForeignGenerator(WedgeLieError, ValueError):
    pass


class CutoffExceeded(WedgeLieError, ValueError):
    pass


class UnsupportedAlphabet(WedgeLieError, ValueError):
    pass


class WeightOneInput(WedgeLieError, ValueError):
    pass


class AlphabetMismatch(WedgeLieError, ValueError):
    pass


class InhomogeneousInput(WedgeLieError, ValueError):
    pass


class MixedDegreeInput(WedgeLieError, ValueError):
    pass


class InconsistentSeries(WedgeLieError, ArithmeticError):
    pass


class OutOfRange(WedgeLieError, IndexError):
    pass


class VerificationFailure(WedgeLieError):
    """A cross-check disagreed.

    ``dim`` is the first Whitehead dimension where the independent counts
    differ and ``values`` maps each method name to the number it produced.
    """

    def __init__(self, dim, values):
        self.dim = dim
        self.values = dict(values)
        shown = ", ".join(f"{k}={v}" for k, v in self.values.items())
        super().__init__(f"verification failed at dimension {dim}: {shown}")
