"""Mantissa/exponent encoding of dataset cells.

A finite value x is written as m·10^e with 1 <= |m| < 10, the sign folded into
the mantissa, the mantissa rounded to four decimals and e in [-100, 100].
Zero encodes as (0.0, 0).
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from typing import NamedTuple, Tuple

# third-party imports
import numpy as np

# symscale
from symscale.exceptions import ValueRangeError


MANTISSA_DECIMALS: int = 4
MIN_EXPONENT: int = -100
MAX_EXPONENT: int = 100


class CellCode(NamedTuple):
    mantissa: float
    exponent: int


def encode_array(values) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized ``encode_value``.

    Returns:
        (mantissas float64, exponents int64) with the input's shape.

    Raises:
        ValueRangeError:
            Raised if any value is non-finite or its exponent falls outside
            [-100, 100].
    """
    values = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise ValueRangeError('cannot encode non-finite values')
    magnitude = np.abs(values)
    nonzero = magnitude > 0
    exponents = np.zeros(values.shape, dtype=np.int64)
    exponents[nonzero] = np.floor(np.log10(magnitude[nonzero])).astype(np.int64)
    with np.errstate(over='ignore', under='ignore'):
        mantissas = np.where(nonzero, values / np.power(10.0, exponents.astype(np.float64)), 0.0)
    # log10 can land one off near powers of ten
    low = nonzero & (np.abs(mantissas) < 1.0)
    exponents[low] -= 1
    mantissas[low] *= 10.0
    high = np.abs(mantissas) >= 10.0
    exponents[high] += 1
    mantissas[high] /= 10.0
    mantissas = np.round(mantissas, MANTISSA_DECIMALS)
    carried = np.abs(mantissas) >= 10.0
    exponents[carried] += 1
    mantissas[carried] = np.round(mantissas[carried] / 10.0, MANTISSA_DECIMALS)
    if np.any((exponents < MIN_EXPONENT) | (exponents > MAX_EXPONENT)):
        raise ValueRangeError(f'exponent outside [{MIN_EXPONENT}, {MAX_EXPONENT}]')
    return mantissas, exponents


def is_representable(values) -> np.ndarray:
    """
    Elementwise: finite and zero or within [1e-100, 1e101).
    """
    values = np.asarray(values, dtype=np.float64)
    magnitude = np.abs(values)
    with np.errstate(invalid='ignore'):
        return np.isfinite(values) & ((magnitude == 0) | ((magnitude >= 1e-100) & (magnitude < 9.99995e100)))


def encode_value(x: float) -> CellCode:
    mantissas, exponents = encode_array(np.array([x]))
    return CellCode(float(mantissas[0]), int(exponents[0]))


def decode_value(code: CellCode) -> float:
    mantissa, exponent = code
    return float(mantissa) * 10.0 ** int(exponent)


def decode_array(mantissas, exponents) -> np.ndarray:
    return np.asarray(mantissas, dtype=np.float64) * np.power(10.0, np.asarray(exponents, dtype=np.float64))
