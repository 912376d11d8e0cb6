"""Exception hierarchy shared by the engine and the command line."""


class SliceEngineError(Exception):
    """Base class for every error raised by simpleslice."""


class InvalidSeifertMatrix(SliceEngineError, ValueError):
    pass


class InvalidForm(SliceEngineError, ValueError):
    pass


class DimensionMismatch(SliceEngineError, ValueError):
    pass


class SingularAtRoot(SliceEngineError):
    """The Alexander polynomial vanishes at the requested root of unity.

    The Levine-Tristram signature is not well defined there without a
    convention (averaged or one-sided), so the engine refuses to pick one.
    """

    def __init__(self, j, d):
        super().__init__(f"Alexander polynomial vanishes at exp(2*pi*i*{j}/{d})")
        self.j = j
        self.d = d


class CertificationFailed(SliceEngineError):
    """Interval bounds did not separate every eigenvalue from zero within the bit cap."""


class NotCharacteristic(SliceEngineError, ValueError):
    pass


class NotDivisibleBy8(SliceEngineError, ValueError):
    pass
