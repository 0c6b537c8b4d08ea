"""Directed-rounding surrogates and compensated summation.

Certified quantities are not tracked in interval arithmetic.  Instead,
every value that must be an upper bound is inflated by one part in 2^30
after it is computed, and every lower bound deflated by the same factor.
The factor is far above the roundoff actually accumulated by the short
float64 pipelines used here, and tests account for it explicitly.
"""

from __future__ import annotations

import numpy as np

INFLATE = 1.0 + 2.0**-30
DEFLATE = 1.0 - 2.0**-30


def round_up(x: float) -> float:
    """Nudge x toward +inf by a relative 2^-30."""
    return x * INFLATE if x >= 0.0 else x * DEFLATE


def round_down(x: float) -> float:
    """Nudge x toward -inf by a relative 2^-30."""
    return x * DEFLATE if x >= 0.0 else x * INFLATE


def neumaier_sum(values) -> float:
    """Compensated (Neumaier) summation of an iterable or array."""
    total = 0.0
    comp = 0.0
    for v in np.asarray(values, dtype=float).ravel():
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp
