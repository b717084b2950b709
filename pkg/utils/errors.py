"""
Exception hierarchy shared by the library and the command line
"""


class SierpinskiError(Exception):
    """Base class for all toolkit errors"""


class InvalidParamsError(SierpinskiError, ValueError):
    """Bad n, m, s, t, vertex digits or mismatched dimensions"""


class SizeCapError(SierpinskiError):
    """Instance is larger than a configured cap"""


class RangeError(SierpinskiError, ValueError):
    """ℓ, rank or pair ordering outside the admissible range"""


class SetSpecError(SierpinskiError, ValueError):
    """Malformed vertex-set specification"""


class NotCompressedError(SierpinskiError):
    """Subadditivation was asked to act on a set that is not compressed"""


class CanonicalSetError(SierpinskiError):
    """Subadditivation was asked to act on a set that is already the lex segment"""


class IterationBoundError(SierpinskiError):
    """Cyclic compression failed to stabilize within its bound"""


class RecurrenceCalibrationError(SierpinskiError):
    """No corner-term variant of the profile recurrence matches the direct count"""


class SteinerPropertyError(SierpinskiError):
    """A Steiner operation changed |S| or increased the boundary"""
