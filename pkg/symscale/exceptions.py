"""
Error hierarchy. Library code raises these; only the command line maps them
to process exit codes.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


class SymscaleError(Exception):
    exit_code: int = 1


class ConfigError(SymscaleError):
    exit_code = 1


class DataError(SymscaleError):
    exit_code = 2


class NumericalError(SymscaleError):
    exit_code = 3


class CanonicalizationError(DataError):
    pass


class CapExceededError(CanonicalizationError):
    """
    Raised when expanding an expression grows past the node cap.
    """
    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f'expansion reached {size} nodes (cap {cap})')
        self.size = size
        self.cap = cap


class ExpressionParseError(DataError):
    pass


class VocabularyError(DataError):
    pass


class SequenceLengthError(DataError):
    pass


class ValueRangeError(DataError):
    pass


class ChecksumError(DataError):
    pass


class ArtifactHashError(DataError):
    pass


class InsufficientGridError(DataError):
    pass


class FitError(NumericalError):
    pass
