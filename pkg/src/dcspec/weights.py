"""Quadratic averaging weight, deformed symbols and canonical normalizers.

The weight G_q integrates the real part of the form along the flow of the
imaginary part against a triangular profile; a first-order deformation of
real phase space along i * H_G then trades the degenerate real part for a
strictly elliptic one.  The plain shift X + i delta H_G X is not canonical,
but multiplying by the inverse square root of 1 + delta^2 H_G^2 repairs it
exactly, which keeps the Hamilton spectrum invariant.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as sla

from ._linalg import sym, frob, symplectic_defect
from ._quadrature import integrate_matrix, DEFAULT_NODES
from .errors import DeltaTooLargeError
from .singular import averaged_real_part
from .symplectic import hamilton_map, standard_j

__all__ = [
    "j_profile",
    "QuadraticWeight",
    "DeformedSymbol",
    "CanonicalMap",
    "weight_gq",
    "averaging_identity_defect",
    "deformed_symbol",
    "ellipticity_margin",
    "delta_max",
    "canonical_normalizer",
]


def j_profile(t):
    """Triangular profile with distributional derivative delta_0 - 1_[-1,0].

    Integrating that derivative gives -(t+1) on [-1, 0) and 0 elsewhere;
    the Dirac mass only produces the jump back to 0 at t = 0, so the
    quadrature never needs to see it.
    """
    t = np.asarray(t, dtype=float)
    out = np.where((t >= -1.0) & (t < 0.0), -(t + 1.0), 0.0)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class QuadraticWeight:
    """Real quadratic weight G(X) = <X, G X> with averaging time T."""

    T: float
    matrix: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return self.matrix.shape[0] // 2

    @property
    def hamilton_matrix(self):
        """Flow generator of the weight, H_G = -2 J G."""
        return -2.0 * standard_j(self.dim) @ self.matrix


@dataclass(frozen=True)
class DeformedSymbol:
    """Coefficient matrix of the symbol restricted to the deformed contour."""

    delta: float
    matrix: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class CanonicalMap:
    """Linear canonical map onto the deformed contour at deformation delta.

    ``normalizer`` is the real matrix S = (1 + delta^2 H_G^2)^(-1/2) with
    matrix = (1 + i delta H_G) S; it is kept so that callers can verify the
    image containment kappa X = (1 + i delta H_G)(S X) with S X real.
    """

    matrix: np.ndarray = field(repr=False)
    delta: float
    normalizer: np.ndarray = field(repr=False, default=None)

    @property
    def dim(self):
        return self.matrix.shape[0] // 2

    @property
    def symplectic_defect(self):
        return symplectic_defect(self.matrix, standard_j(self.dim))


def weight_gq(q, T=1.0, nodes=DEFAULT_NODES):
    """The averaging weight: G = int_0^T (1 - t/T) M(t)^T Re A M(t) dt.

    M(t) = exp(2 t Im F) is the flow of the imaginary part.  When Im q = 0
    the flow is the identity and G reduces to (T/2) Re A.
    """
    if T <= 0:
        raise ValueError("averaging time T must be positive")
    ReA = q.matrix.real
    ImF = hamilton_map(q).imag

    def integrand(t):
        M = sla.expm(2.0 * t * ImF)
        return (1.0 - t / T) * (M.T @ ReA @ M)

    G = integrate_matrix(integrand, 0.0, T, nodes=nodes)
    return QuadraticWeight(T, sym(G))


def averaging_identity_defect(q, T=1.0):
    """Norm of (d/ds G_q(e^{s H_Im q} X))|_0 - (<Re q>_T - Re q) as forms.

    The derivative of the weight along the flow has form matrix
    sym(H^T G + G H) with H = 2 Im F; by integration by parts it equals
    the averaged matrix minus Re A exactly, so this measures only
    quadrature error.
    """
    w = weight_gq(q, T)
    avg = averaged_real_part(q, T)
    H = 2.0 * hamilton_map(q).imag
    lhs = sym(H.T @ w.matrix + w.matrix @ H)
    return frob(lhs - (avg.matrix - q.matrix.real))


def deformed_symbol(q, weight, delta):
    """Symbol coefficients after the contour shift X -> X + i delta H_G X."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    n = 2 * q.dim
    K = np.eye(n) + 1j * delta * weight.hamilton_matrix
    return DeformedSymbol(delta, sym(K.T @ q.matrix @ K))


def ellipticity_margin(deformed):
    """Minimum of the deformed real part on the unit sphere."""
    return float(np.linalg.eigvalsh(deformed.matrix.real).min())


def delta_max(weight):
    """Largest deformation with spectral radius of delta^2 H_G^2 below 1."""
    rho = float(np.max(np.abs(np.linalg.eigvals(weight.hamilton_matrix))))
    return np.inf if rho == 0.0 else 1.0 / rho


def canonical_normalizer(weight, delta):
    """The canonical map (1 + i delta H_G) (1 + delta^2 H_G^2)^(-1/2).

    The inverse square root is taken as the principal matrix function
    (Schur based), which is valid for any delta below the spectral-radius
    bound, not merely inside the power-series radius; it commutes with
    H_G and stays symmetric with respect to the symplectic form, so the
    product is exactly canonical.
    """
    if delta < 0:
        raise ValueError("delta must be >= 0")
    H = weight.hamilton_matrix
    n = H.shape[0]
    if delta > 0 and delta >= delta_max(weight):
        raise DeltaTooLargeError(
            f"delta = {delta} >= delta_max = {delta_max(weight):.6g}"
        )
    T_op = np.eye(n) + delta**2 * (H @ H)
    root = sla.sqrtm(T_op)
    root = np.asarray(root)
    if np.iscomplexobj(root):
        # principal root of a real matrix with spectrum off (-inf, 0] is real
        root = root.real
    S = np.linalg.inv(root)
    kappa = (np.eye(n) + 1j * delta * H) @ S
    return CanonicalMap(kappa, delta, S)
