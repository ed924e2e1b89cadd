"""Multi-tone line spectral model: steering geometry, signal synthesis, noise.

The observation model is Y = A(omega) X + N with an M x K Vandermonde
matrix A built from unit-modulus steering vectors, a deterministic K x T
amplitude matrix X, and i.i.d. circularly symmetric complex Gaussian
noise of variance sigma2 per entry.
"""

from dataclasses import dataclass, field

import numpy as np


def steering(omega_k: float, M: int) -> np.ndarray:
    """Length-M steering vector with entries exp(j*m*omega_k), m = 0..M-1."""
    m = np.arange(M)
    return np.exp(1j * m * omega_k)


def steering_derivative(omega_k: float, M: int) -> np.ndarray:
    """Derivative of the steering vector: entry m is j*m*exp(j*m*omega_k)."""
    m = np.arange(M)
    return 1j * m * np.exp(1j * m * omega_k)


def build_A(omega: np.ndarray, M: int) -> np.ndarray:
    """M x K Vandermonde matrix whose column k is steering(omega[k], M)."""
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    m = np.arange(M)[:, None]
    return np.exp(1j * m * omega[None, :])


def build_A_derivative(omega: np.ndarray, M: int) -> np.ndarray:
    """M x K matrix whose column k is steering_derivative(omega[k], M)."""
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    m = np.arange(M)[:, None]
    return 1j * m * np.exp(1j * m * omega[None, :])


@dataclass(frozen=True)
class ModelConfig:
    """One deterministic problem instance.

    Frequencies are strictly increasing and live inside the ordered prior
    support [prior_lo, prior_hi]. sigma2 = 0 is allowed and means
    noise-free synthesis (useful for smoke rows); every benchmark that
    needs sigma2 > 0 handles the degenerate case explicitly.
    """

    M: int
    K: int
    T: int
    omega: np.ndarray
    X: np.ndarray
    sigma2: float
    prior_lo: float
    prior_hi: float

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=float)
        X = np.asarray(self.X, dtype=complex)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "X", X)
        if self.M < 1 or self.K < 1 or self.T < 1:
            raise ValueError("M, K, T must be positive")
        if self.K >= self.M:
            raise ValueError(f"need K < M, got K={self.K}, M={self.M}")
        if omega.shape != (self.K,):
            raise ValueError(f"omega must have shape ({self.K},)")
        if X.shape != (self.K, self.T):
            raise ValueError(f"X must have shape ({self.K}, {self.T})")
        if not self.prior_hi > self.prior_lo:
            raise ValueError("prior support must have positive width")
        if np.any(np.diff(omega) <= 0):
            raise ValueError("omega must be strictly increasing")
        if omega[0] < self.prior_lo or omega[-1] > self.prior_hi:
            raise ValueError("omega must lie inside [prior_lo, prior_hi]")
        if self.sigma2 < 0:
            raise ValueError("sigma2 must be nonnegative")

    @property
    def zeta(self) -> float:
        """Width of the ordered prior support."""
        return self.prior_hi - self.prior_lo

    def steering_matrix(self) -> np.ndarray:
        return build_A(self.omega, self.M)

    def with_sigma2(self, sigma2: float) -> "ModelConfig":
        return ModelConfig(self.M, self.K, self.T, self.omega, self.X,
                           sigma2, self.prior_lo, self.prior_hi)


@dataclass(frozen=True)
class Snapshot:
    """One noisy realization Y of the observation model."""

    Y: np.ndarray = field(repr=False)

    @property
    def M(self) -> int:
        return self.Y.shape[0]

    @property
    def T(self) -> int:
        return self.Y.shape[1]


def derive_seed(*parts: int) -> int:
    """Collapse an integer key tuple into one 64-bit stream seed.

    Uses numpy's SeedSequence hash, which is stable across platforms and
    releases, so per-trial streams depend only on the key tuple and not
    on evaluation order or worker count.
    """
    ss = np.random.SeedSequence([int(p) & 0xFFFFFFFFFFFFFFFF for p in parts])
    return int(ss.generate_state(1, np.uint64)[0])


def complex_normal(shape, seed: int) -> np.ndarray:
    """Unit-variance circularly symmetric complex Gaussian array.

    Draws uniforms from a counter-based Philox stream keyed by `seed` and
    maps each pair through Box-Muller, so one uniform pair yields one
    complex sample (real and imaginary parts of variance 1/2 each).
    """
    gen = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    u1 = gen.random(shape)
    u2 = gen.random(shape)
    r = np.sqrt(-np.log1p(-u1))  # Rayleigh with E[r^2] = 1
    return r * np.exp(2j * np.pi * u2)


def synthesize(config: ModelConfig, noise_seed: int) -> Snapshot:
    """Draw Y = A(omega) X + N for one seeded noise realization.

    Identical seeds give bit-identical snapshots; sigma2 = 0 returns the
    noise-free mean exactly.
    """
    mean = config.steering_matrix() @ config.X
    if config.sigma2 == 0.0:
        return Snapshot(Y=mean)
    noise = np.sqrt(config.sigma2) * complex_normal((config.M, config.T), noise_seed)
    return Snapshot(Y=mean + noise)


def signal_energy(config: ModelConfig) -> float:
    """Frobenius energy of the noise-free mean, ||A(omega) X||_F^2."""
    mean = config.steering_matrix() @ config.X
    return float(np.sum(np.abs(mean) ** 2))


def sigma2_for_snr_db(config: ModelConfig, snr_db: float) -> float:
    """Noise variance hitting a target SNR in dB.

    SNR is defined as average per-entry signal power over per-entry noise
    power, ||A X||_F^2 / (M T sigma2), so the returned value is invariant
    to rescaling M or T at fixed per-entry signal power.
    """
    snr_lin = 10.0 ** (snr_db / 10.0)
    return signal_energy(config) / (config.M * config.T * snr_lin)


def snr_db_for_sigma2(config: ModelConfig, sigma2: float) -> float:
    """Inverse of sigma2_for_snr_db."""
    snr_lin = signal_energy(config) / (config.M * config.T * sigma2)
    return 10.0 * np.log10(snr_lin)


def random_amplitudes(K: int, T: int, seed: int) -> np.ndarray:
    """Deterministic amplitude matrix for experiments.

    Entries are drawn once from a seeded standard circular complex
    Gaussian and the matrix is scaled to unit Frobenius norm, then kept
    fixed across an SNR sweep.
    """
    X = complex_normal((K, T), seed)
    return X / np.linalg.norm(X)


def random_ordered_omega(K: int, lo: float, hi: float, seed: int) -> np.ndarray:
    """K frequencies drawn i.i.d. uniform on [lo, hi] and sorted ascending."""
    gen = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    return np.sort(lo + (hi - lo) * gen.random(K))
