"""Adaptive Gauss-Legendre quadrature for matrix-valued integrands.

The integrands appearing in the flow averages are entire in t, so
node doubling converges spectrally; the doubling cap exists only to turn
a genuinely divergent request into a clean failure signal.
"""

import numpy as np
import numpy.polynomial.legendre as _leg

from .errors import NumericalFailureError

DEFAULT_NODES = 32
MAX_DOUBLINGS = 8


def integrate_matrix(f, a, b, nodes=DEFAULT_NODES, rtol=1e-10):
    """Integrate a matrix-valued ``f`` over [a, b] with node doubling.

    Doubles the Gauss-Legendre rule until two successive levels agree to
    ``rtol`` in Frobenius norm (relative to the result), then returns the
    finer level.  Raises :class:`NumericalFailureError` if the cap on
    doublings is reached without convergence.
    """
    if b <= a:
        raise ValueError("integration interval must have b > a")
    n = max(2, int(nodes))
    prev = None
    for _ in range(MAX_DOUBLINGS + 1):
        x, w = _leg.leggauss(n)
        t = 0.5 * (b - a) * (x + 1.0) + a
        wt = 0.5 * (b - a) * w
        acc = sum(wi * f(ti) for ti, wi in zip(t, wt))
        if prev is not None:
            scale = max(1.0, float(np.linalg.norm(acc)))
            if float(np.linalg.norm(acc - prev)) <= rtol * scale:
                return acc
        prev = acc
        n *= 2
    raise NumericalFailureError(
        f"quadrature did not converge after {MAX_DOUBLINGS} node doublings"
    )
