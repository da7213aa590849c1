__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import numbers

# third-party imports
import numpy as np


def values_look_equal(a, b, relative: float = 1e-5) -> bool:
    """
    Numbers within ``relative`` of each other, arrays elementwise (nan
    matching nan), anything else by equality or string form.
    """
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        a, b = np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
        return a.shape == b.shape and bool(np.allclose(a, b, rtol=relative, atol=0.0, equal_nan=True))

    if isinstance(a, numbers.Number) and isinstance(b, numbers.Number):
        a = float(a)
        b = float(b)
        if a == b:
            return True
        delta = abs(a - b)
        return delta <= relative * max(abs(a), abs(b))

    if a == b:
        return True
    return str(a) == str(b)
