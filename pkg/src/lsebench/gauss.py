"""Standard normal tail, density, and CDF.

These are the only special functions used anywhere in the package; all
three are routed through the complementary error function, which is
accurate to full double precision.
"""

import numpy as np
from scipy.special import erfc

_SQRT2 = np.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / np.sqrt(2.0 * np.pi)


def qfunc(x):
    """Gaussian tail probability Q(x) = P(Z > x)."""
    return 0.5 * erfc(np.asarray(x, dtype=float) / _SQRT2)


def normpdf(x):
    """Standard normal density."""
    x = np.asarray(x, dtype=float)
    return _INV_SQRT_2PI * np.exp(-0.5 * x * x)


def normcdf(x):
    """Standard normal CDF, computed as 1 - Q(x)."""
    return 0.5 * erfc(-np.asarray(x, dtype=float) / _SQRT2)
