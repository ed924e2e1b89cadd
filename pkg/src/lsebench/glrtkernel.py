"""Pairwise GLRT detector between two candidate frequency vectors.

The detector compares projected energies onto the two candidate signal
subspaces. Its exact distribution is an indefinite quadratic form; the
module matches its first two moments under the null and uses the
resulting Gaussian kernel, plus a seeded Monte Carlo kernel for
validation.
"""

import math
from dataclasses import dataclass

import numpy as np

from .gauss import qfunc
from .errors import IllConditioned  # noqa: F401  (re-raised from fisher)
from .fisher import projector
from .linmodel import ModelConfig, Snapshot, build_A, complex_normal, derive_seed


@dataclass(frozen=True)
class HypothesisPair:
    """Null frequencies phi against alternative phi + delta."""

    phi: np.ndarray
    delta: np.ndarray

    def __post_init__(self):
        phi = np.asarray(self.phi, dtype=float)
        delta = np.asarray(self.delta, dtype=float)
        if phi.shape != delta.shape:
            raise ValueError("phi and delta must have equal length")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "delta", delta)

    @property
    def nu(self) -> np.ndarray:
        """Alternative-hypothesis frequency vector."""
        return self.phi + self.delta

    def swapped(self) -> "HypothesisPair":
        return HypothesisPair(phi=self.nu, delta=-self.delta)


@dataclass(frozen=True)
class KernelMoments:
    """Null-hypothesis mean and variance of the detector statistic."""

    mu: float
    sigma2: float

    @property
    def score(self) -> float:
        """mu / sigma; inf for a noiseless separable pair, 0 when both
        moments vanish (indistinguishable hypotheses)."""
        if self.sigma2 == 0.0:
            return math.inf if self.mu > 0.0 else 0.0
        return self.mu / math.sqrt(self.sigma2)


def _projector_difference(pair: HypothesisPair, M: int) -> np.ndarray:
    P0 = projector(build_A(pair.phi, M))
    P1 = projector(build_A(pair.nu, M))
    return P0 - P1


def glrt_statistic(snapshot: Snapshot, pair: HypothesisPair) -> float:
    """Projected-energy difference Tr(Y^H (P_phi - P_{phi+delta}) Y).

    Antisymmetric under swapping the two hypotheses; positive values
    favor the null.
    """
    D = _projector_difference(pair, snapshot.M)
    return float(np.real(np.sum(np.conj(snapshot.Y) * (D @ snapshot.Y))))


def kernel_moments(config: ModelConfig, pair: HypothesisPair) -> KernelMoments:
    """First two moments of the statistic with the null true.

    With M0 = A(phi) X and D the projector difference:
    mu = ||M0||_F^2 - ||P_{phi+delta} M0||_F^2 >= 0 and
    var = 2 sigma2 ||D M0||_F^2 + T sigma2^2 ||D||_F^2.
    """
    M = config.M
    P1 = projector(build_A(pair.nu, M))
    P0 = projector(build_A(pair.phi, M))
    D = P0 - P1
    M0 = build_A(pair.phi, M) @ config.X
    # mu via the projection-shrinks form, nonnegative by construction
    mu = float(np.sum(np.abs(M0) ** 2) - np.sum(np.abs(P1 @ M0) ** 2))
    mu = max(mu, 0.0)
    s2 = config.sigma2
    var = (2.0 * s2 * float(np.sum(np.abs(D @ M0) ** 2))
           + config.T * s2 * s2 * float(np.sum(np.abs(D) ** 2)))
    return KernelMoments(mu=mu, sigma2=var)


def gaussian_kernel(moments: KernelMoments) -> float:
    """Gaussianized pairwise error probability Q(mu / sigma).

    Degenerate conventions: zero variance with positive mean is a
    deterministic correct decision (0); zero variance with zero mean is
    an indistinguishable pair (1/2). Always lands in [0, 1/2] since the
    null mean is nonnegative.
    """
    if moments.sigma2 == 0.0:
        return 0.0 if moments.mu > 0.0 else 0.5
    return float(qfunc(moments.mu / math.sqrt(moments.sigma2)))


def gamma_samples(config: ModelConfig, pair: HypothesisPair, trials: int,
                  seed: int) -> np.ndarray:
    """Seeded draws of the statistic under the null.

    Trial t uses its own noise stream derived from (seed, t), so the
    sample vector is independent of evaluation order and identical
    regardless of how callers chunk the work.
    """
    M, T, s2 = config.M, config.T, config.sigma2
    D = _projector_difference(pair, M)
    M0 = build_A(pair.phi, M) @ config.X
    DM0 = D @ M0
    base = float(np.real(np.sum(np.conj(M0) * DM0)))
    out = np.empty(trials)
    if s2 == 0.0:
        out.fill(base)
        return out
    scale = math.sqrt(s2)
    for t in range(trials):
        N = scale * complex_normal((M, T), derive_seed(seed, t))
        cross = 2.0 * float(np.real(np.sum(np.conj(N) * DM0)))
        quad = float(np.real(np.sum(np.conj(N) * (D @ N))))
        out[t] = base + cross + quad
    return out


def empirical_kernel(config: ModelConfig, pair: HypothesisPair, trials: int,
                     seed: int):
    """Monte Carlo pairwise error probability and its standard error.

    Counts null-hypothesis draws with a negative statistic; exact ties
    get weight 1/2 (randomized-decision convention), which makes the
    delta = 0 case come out at exactly one half.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    g = gamma_samples(config, pair, trials, seed)
    errs = np.where(g < 0.0, 1.0, np.where(g == 0.0, 0.5, 0.0))
    pe = float(math.fsum(errs) / trials)
    if trials == 1:
        return pe, 0.0
    var = float(math.fsum((errs - pe) ** 2)) / (trials - 1)
    return pe, math.sqrt(var / trials)
