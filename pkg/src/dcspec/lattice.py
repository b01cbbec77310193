"""Spectral lattice of a quadratic Weyl operator and admissible regions.

When the singular space is trivial, the spectrum is the lattice
``(h/i) sum_j (1 + 2 k_j) lambda_j`` over nonnegative multi-indices k,
where the lambda_j are the d Hamilton-matrix eigenvalues with positive
imaginary part.  Writing mu_j = lambda_j / i, every lattice value is
``h * mu(k)`` with Re mu(k) > 0, which makes enumeration, strip counting
and simplex-volume asymptotics elementary.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from ._linalg import frob
from .errors import DegenerateSpectrumError, DomainError

__all__ = [
    "LatticeSpectrum",
    "RegionSpec",
    "Admissibility",
    "Schedules",
    "stable_eigenvalues",
    "lattice_points",
    "dist_to_spectrum",
    "strip_count",
    "simplex_volume",
    "admissible",
    "exclusion_discs",
    "excluded_area_fraction",
    "schedules",
]

REAL_EIGENVALUE_TOL = 1e-10
DEDUP_RTOL = 1e-9
MC_SAMPLES = 10**6


@dataclass(frozen=True)
class LatticeSpectrum:
    """The d stable eigenvalues lambda_j (Im > 0) and mu_j = lambda_j / i."""

    dim: int
    lambdas: np.ndarray = field(repr=False)
    mus: np.ndarray = field(repr=False)


def stable_eigenvalues(fmap):
    """Eigenvalues of the Hamilton matrix with positive imaginary part.

    Raises :class:`DegenerateSpectrumError` when some eigenvalue is within
    ``1e-10 * ||F||`` of the real axis or the positive-imaginary count is
    not exactly d; no algorithmic tie-break exists in that regime, so the
    caller must decide.
    """
    evals = np.linalg.eigvals(fmap.matrix)
    scale = max(frob(fmap.matrix), 1e-300)
    if np.min(np.abs(evals.imag)) <= REAL_EIGENVALUE_TOL * scale:
        raise DegenerateSpectrumError(
            "Hamilton matrix has a (near-)real eigenvalue; spectral lattice undefined"
        )
    lam = np.array(sorted(evals[evals.imag > 0], key=lambda z: (z.real, z.imag)))
    if lam.size != fmap.dim:
        raise DegenerateSpectrumError(
            f"expected {fmap.dim} stable eigenvalues, found {lam.size}"
        )
    return LatticeSpectrum(fmap.dim, lam, lam / 1j)


def _mu_value(spec, k):
    return complex(np.sum((1.0 + 2.0 * np.asarray(k)) * spec.mus))


def _enumerate_k(spec, bound_fn):
    """Yield all k with k_j <= bound_fn(j); bounds derive from Re mu_j > 0."""
    ranges = [range(int(bound_fn(j)) + 1) for j in range(spec.dim)]
    return itertools.product(*ranges)


def lattice_points(spec, h, radius):
    """All lattice values h*mu(k) with modulus <= radius, with multiplicity.

    Since |h mu(k)| >= h Re mu(k) >= 2 h k_j Re mu_j, the per-index bound
    k_j <= radius / (2 h Re mu_j) makes the enumeration complete.  Values
    are deduplicated at relative tolerance 1e-9 because rationally dependent
    mu_j collide exactly in exact arithmetic but only nearly in floats.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if h <= 0:
        raise ValueError("h must be positive")
    remu = spec.mus.real
    vals = []
    for k in _enumerate_k(spec, lambda j: math.floor(radius / (2 * h * remu[j]))):
        z = h * _mu_value(spec, k)
        if abs(z) <= radius * (1 + 1e-12):
            vals.append(z)
    if not vals:
        return []
    vals.sort(key=lambda z: (abs(z), z.real, z.imag))
    out = []
    for z in vals:
        if out and abs(z - out[-1][0]) <= DEDUP_RTOL * max(abs(z), abs(out[-1][0])):
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((z, 1))
    return out


def dist_to_spectrum(spec, h, z):
    """Distance from z to the full spectral lattice.

    Enumerates inside a radius that provably contains the minimizer: the
    ground value h*mu(0) is a candidate, so nothing farther from the origin
    than |z| plus that candidate distance can win.
    """
    z = complex(z)
    ground = h * _mu_value(spec, np.zeros(spec.dim, dtype=int))
    reach = abs(z) + abs(z - ground) + 2.0 * h * float(np.sum(spec.mus.real))
    best = abs(z - ground)
    for pt, _ in lattice_points(spec, h, reach):
        best = min(best, abs(z - pt))
    return best


def strip_count(spec, rho, r):
    """#{k : |rho - Re mu(k)| <= r}, by exact bounded enumeration."""
    if r < 0:
        raise ValueError("strip half-width r must be >= 0")
    remu = spec.mus.real
    if rho + r < float(np.sum(remu)):
        return 0
    count = 0
    for k in _enumerate_k(spec, lambda j: math.floor((rho + r) / (2 * remu[j]))):
        if abs(rho - float(np.sum((1.0 + 2.0 * np.asarray(k)) * remu))) <= r:
            count += 1
    return count


def simplex_volume(spec, radius):
    """vol{x in R^d_+ : sum 2 x_j Re mu_j <= R} = R^d / (2^d d! prod Re mu_j)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    d = spec.dim
    c = 1.0 / (2**d * math.factorial(d) * float(np.prod(spec.mus.real)))
    return c * radius**d


@dataclass(frozen=True)
class RegionSpec:
    """Admissible spectral-parameter region at semiclassical scale h.

    The outer radius is ``h * F(h)`` with the double-logarithmic growth
    factor ``F(h) = (loglog(1/h))^(1/dim) / C0``; points closer than
    ``h * exp(-F(h)/C1)`` to the spectral lattice are excluded, and an
    optional inner radius carves out the core already handled at scale h.
    """

    h: float
    C0: float
    C1: float
    dim: int
    inner_radius: float | None = None

    def __post_init__(self):
        if not 0 < self.h <= 1:
            raise DomainError(f"h must lie in (0, 1], got {self.h}")
        if self.h >= 1 / math.e:
            raise DomainError(
                f"h = {self.h} too large: loglog(1/h) must be positive (h < 1/e)"
            )
        if self.C0 <= 0 or self.C1 <= 0:
            raise DomainError("C0 and C1 must be positive")
        if self.inner_radius is not None and self.inner_radius < 0:
            raise DomainError("inner_radius must be >= 0")

    @classmethod
    def with_f_value(cls, h, f_value, C1, dim, inner_radius=None):
        """Build a region with a prescribed growth-factor value F(h).

        Desk-scale h cannot reach large F(h) through the iterated logarithm,
        so geometry studies fix F directly and derive the matching C0.
        """
        C0 = math.log(math.log(1.0 / h)) ** (1.0 / dim) / f_value
        return cls(h=h, C0=C0, C1=C1, dim=dim, inner_radius=inner_radius)

    @property
    def f_value(self):
        return math.log(math.log(1.0 / self.h)) ** (1.0 / self.dim) / self.C0

    @property
    def outer_radius(self):
        return self.h * self.f_value

    @property
    def exclusion_radius(self):
        return self.h * math.exp(-self.f_value / self.C1)


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    reason: str
    dist: float


def admissible(region, spec, z):
    """Test one spectral parameter against all region constraints.

    The reason names the first violated constraint, checked outer bound,
    inner bound, then exclusion disc; admissible points carry reason "".
    """
    z = complex(z)
    dist = dist_to_spectrum(spec, region.h, z)
    if abs(z) > region.outer_radius:
        return Admissibility(False, "outer bound", dist)
    if region.inner_radius is not None and abs(z) < region.inner_radius:
        return Admissibility(False, "inner bound", dist)
    if dist < region.exclusion_radius:
        return Admissibility(False, "exclusion disc", dist)
    return Admissibility(True, "", dist)


def exclusion_discs(region, spec):
    """Lattice points whose exclusion disc meets the region annulus."""
    r = region.exclusion_radius
    inner = region.inner_radius or 0.0
    pts = lattice_points(spec, region.h, region.outer_radius + r)
    out = []
    for z, _ in pts:
        if inner - r < abs(z) < region.outer_radius + r:
            out.append(z)
    return out


def _lens_area(dist, r, R):
    """Area of disc(center at distance dist, radius r) ∩ disc(0, R)."""
    if R <= 0 or dist >= R + r:
        return 0.0
    if dist <= abs(R - r):
        return math.pi * min(r, R) ** 2
    a1 = r**2 * math.acos((dist**2 + r**2 - R**2) / (2 * dist * r))
    a2 = R**2 * math.acos((dist**2 + R**2 - r**2) / (2 * dist * R))
    a3 = 0.5 * math.sqrt(
        (-dist + r + R) * (dist + r - R) * (dist - r + R) * (dist + r + R)
    )
    return a1 + a2 - a3


def excluded_area_fraction(region, spec, samples=MC_SAMPLES, seed=0):
    """Fraction of the annulus covered by the exclusion discs.

    Uses exact clipped lens areas while the discs are pairwise disjoint
    (guaranteed when twice the exclusion radius is below the minimal
    lattice gap) and falls back to seeded Monte Carlo otherwise.
    """
    r = region.exclusion_radius
    inner = region.inner_radius or 0.0
    outer = region.outer_radius
    annulus = math.pi * (outer**2 - inner**2)
    if annulus <= 0:
        return 0.0
    centers = exclusion_discs(region, spec)
    if not centers:
        return 0.0
    gaps = [
        abs(a - b) for i, a in enumerate(centers) for b in centers[i + 1:]
    ]
    if not gaps or min(gaps) > 2 * r:
        total = sum(
            _lens_area(abs(c), r, outer) - _lens_area(abs(c), r, inner)
            for c in centers
        )
        return min(1.0, total / annulus)
    # overlapping discs: seeded Monte Carlo over the annulus
    rng = np.random.default_rng(seed)
    rr = np.sqrt(inner**2 + rng.random(samples) * (outer**2 - inner**2))
    zz = rr * np.exp(2j * math.pi * rng.random(samples))
    covered = np.zeros(samples, dtype=bool)
    for c in centers:
        covered |= np.abs(zz - c) < r
    return float(covered.mean())


@dataclass(frozen=True)
class Schedules:
    """The five scalar schedules tying the deformation scales to h."""

    epsilon: float
    h_tilde: float
    F_of_h: float
    f_of_h: float
    r_of_h: float


def schedules(h, C, C0, M, dim):
    """Evaluate all parameter schedules at a given h.

    epsilon = h log(1/h) / C, h_tilde = h / epsilon,
    F(h) = (loglog(1/h))^(1/d) / C0, f(h) = (log(1/h))^(1/d) / M and
    r(h) = exp(-f(h)/C0).  Values are reported raw for any h where the
    logarithms are positive; no smallness of h is enforced beyond that.
    """
    if min(C, C0, M) <= 0:
        raise DomainError("C, C0 and M must be positive")
    if not 0 < h < 1 / math.e:
        raise DomainError(f"need 0 < h < 1/e for positive iterated logs, got {h}")
    log_inv = math.log(1.0 / h)
    epsilon = h * log_inv / C
    f_of_h = log_inv ** (1.0 / dim) / M
    return Schedules(
        epsilon=epsilon,
        h_tilde=h / epsilon,
        F_of_h=math.log(log_inv) ** (1.0 / dim) / C0,
        f_of_h=f_of_h,
        r_of_h=math.exp(-f_of_h / C0),
    )
