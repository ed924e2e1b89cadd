"""Reference estimators used to validate the benchmarks.

Spectral MUSIC with grid search plus parabolic refinement on the log
pseudospectrum, and least-squares amplitude reconstruction at the
estimated frequencies. Estimates are returned sorted ascending so the
pairing with the true ordered frequencies is by index.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import DegenerateCovariance, IllConditioned
from .fisher import COND_LIMIT
from .linmodel import Snapshot, build_A


@dataclass(frozen=True)
class FreqEstimate:
    """Sorted frequency estimates, optionally with the scanned spectrum."""

    omega_hat: np.ndarray
    #: (frequencies, pseudospectrum) for diagnostics; None unless requested
    spectrum_grid: Optional[tuple] = None
    #: true when fewer than K local maxima existed and the fill rule ran
    shortfall: bool = False


@dataclass(frozen=True)
class AmpEstimate:
    """K x T least-squares amplitude reconstruction."""

    X_hat: np.ndarray


@lru_cache(maxsize=8)
def _grid_and_steering(M: int, grid_size: int, lo: float, hi: float):
    grid = np.linspace(lo, hi, grid_size)
    A = build_A(grid, M)
    grid.flags.writeable = False
    A.flags.writeable = False
    return grid, A


def music_estimate(snapshot: Snapshot, K: int, grid_size: int,
                   prior_lo: float, prior_hi: float,
                   return_spectrum: bool = False) -> FreqEstimate:
    """Spectral MUSIC over a uniform grid on the prior support.

    Noise subspace comes from the M-K smallest eigenvalues of the sample
    covariance; the K largest local maxima of the pseudospectrum are
    refined by parabolic interpolation on its logarithm. If fewer than K
    local maxima exist, the remaining estimates are filled with the
    highest-valued unused grid points (ties resolved toward lower
    frequency), so the estimate is always length K.
    """
    Y = snapshot.Y
    M, T = Y.shape
    if K >= M:
        raise ValueError("need K < M")
    if grid_size < 256:
        raise ValueError("grid_size must be at least 256")
    R = (Y @ Y.conj().T) / T
    try:
        _, vecs = np.linalg.eigh(R)
    except np.linalg.LinAlgError as exc:
        raise DegenerateCovariance(f"covariance eigendecomposition failed: {exc}") from exc
    En = vecs[:, : M - K]  # eigh sorts ascending

    grid, Agrid = _grid_and_steering(M, grid_size, float(prior_lo), float(prior_hi))
    proj = En.conj().T @ Agrid
    denom = np.sum(np.abs(proj) ** 2, axis=0)
    p = 1.0 / np.maximum(denom, 1e-300)

    # local maxima; plateau ties resolve to the leftmost point
    interior = np.flatnonzero((p[1:-1] > p[:-2]) & (p[1:-1] >= p[2:])) + 1
    cand = list(interior)
    if p[0] > p[1]:
        cand.insert(0, 0)
    if p[-1] > p[-2]:
        cand.append(grid_size - 1)
    cand = np.asarray(sorted(cand), dtype=int)

    # keep the K strongest; stable sort so equal peaks pick lower frequency
    order = np.argsort(-p[cand], kind="stable")
    chosen = cand[order[:K]]

    logp = np.log(p)
    step = grid[1] - grid[0]
    estimates = []
    for idx in chosen:
        if 0 < idx < grid_size - 1:
            d2 = logp[idx - 1] - 2.0 * logp[idx] + logp[idx + 1]
            if d2 < 0.0:
                offset = 0.5 * (logp[idx - 1] - logp[idx + 1]) / d2
                offset = float(np.clip(offset, -1.0, 1.0))
            else:
                offset = 0.0
            estimates.append(grid[idx] + offset * step)
        else:
            estimates.append(grid[idx])

    shortfall = len(estimates) < K
    if shortfall:
        taken = set(int(i) for i in chosen)
        fill_order = np.argsort(-p, kind="stable")
        for idx in fill_order:
            if len(estimates) == K:
                break
            if int(idx) in taken:
                continue
            taken.add(int(idx))
            estimates.append(grid[idx])

    omega_hat = np.sort(np.asarray(estimates, dtype=float))
    spectrum = (np.array(grid), p) if return_spectrum else None
    return FreqEstimate(omega_hat=omega_hat, spectrum_grid=spectrum,
                        shortfall=shortfall)


def ls_amplitudes(snapshot: Snapshot, omega_hat: np.ndarray) -> AmpEstimate:
    """Least-squares amplitudes (A^H A)^{-1} A^H Y at the given frequencies.

    Raises IllConditioned when the estimated frequencies nearly coincide;
    the harness counts such trials as reconstruction failures.
    """
    A = build_A(omega_hat, snapshot.M)
    G = A.conj().T @ A
    cond = float(np.linalg.cond(G))
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise IllConditioned(
            f"Gram condition number {cond:.3e} at the estimated frequencies")
    return AmpEstimate(X_hat=np.linalg.solve(G, A.conj().T @ snapshot.Y))
