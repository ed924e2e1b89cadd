"""Fisher information for the line spectral model.

Provides the effective frequency information matrix after eliminating the
unknown deterministic amplitudes (projector form), the marginalized
frequency-side CRB, and an independently assembled full joint FIM over
(omega, Re X, Im X) used to cross-check the Schur-complement route.
"""

from dataclasses import dataclass

import numpy as np

from .errors import IllConditioned, Singular
from .linmodel import ModelConfig, build_A, build_A_derivative

#: Gram solves refuse condition numbers above this; near-coincident
#: frequencies land here long before double precision actually dies.
COND_LIMIT = 1e12


def gram_cond(A: np.ndarray) -> float:
    """Condition number of the Gram matrix A^H A."""
    G = A.conj().T @ A
    return float(np.linalg.cond(G))


def _check_gram(G: np.ndarray):
    cond = float(np.linalg.cond(G))
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise IllConditioned(
            f"Gram condition number {cond:.3e} exceeds {COND_LIMIT:.0e}; "
            "frequencies are too close")
    return G


def projector(A: np.ndarray) -> np.ndarray:
    """Orthogonal projector A (A^H A)^-1 A^H onto the column space of A.

    Hermitian and idempotent with trace equal to the column count.
    Raises IllConditioned when the Gram matrix is numerically singular.
    """
    G = _check_gram(A.conj().T @ A)
    P = A @ np.linalg.solve(G, A.conj().T)
    return 0.5 * (P + P.conj().T)  # suppress round-off asymmetry


def _symmetrize(S: np.ndarray) -> np.ndarray:
    return 0.5 * (S + S.T)


def effective_fim(config: ModelConfig) -> np.ndarray:
    """K x K frequency information matrix with amplitudes projected out.

    Entry (i, j) is (2/sigma2) Re{ (a'_i^H P_perp a'_j) (x_i^H x_j) }
    where P_perp is the orthogonal complement of the signal subspace and
    x_i is the i-th amplitude row.
    """
    if config.sigma2 <= 0:
        raise ValueError("effective_fim requires sigma2 > 0")
    A = build_A(config.omega, config.M)
    Ap = build_A_derivative(config.omega, config.M)
    Pperp = np.eye(config.M) - projector(A)
    Gp = Ap.conj().T @ Pperp @ Ap                 # a'_i^H P_perp a'_j
    Rxx = config.X @ config.X.conj().T            # (i,j) entry = x_j^H x_i
    J = (2.0 / config.sigma2) * np.real(Gp * np.conj(Rxx))
    return _symmetrize(J)


def unprojected_fim(config: ModelConfig) -> np.ndarray:
    """Frequency block with P_perp replaced by identity (known-amplitude
    geometry); dominates effective_fim in the PSD order."""
    if config.sigma2 <= 0:
        raise ValueError("unprojected_fim requires sigma2 > 0")
    Ap = build_A_derivative(config.omega, config.M)
    Gp = Ap.conj().T @ Ap
    Rxx = config.X @ config.X.conj().T
    return _symmetrize((2.0 / config.sigma2) * np.real(Gp * np.conj(Rxx)))


def _solve_spd(J: np.ndarray) -> np.ndarray:
    """Invert a symmetric information matrix via linear solves."""
    try:
        C = np.linalg.solve(J, np.eye(J.shape[0]))
    except np.linalg.LinAlgError as exc:
        raise Singular(f"information matrix is singular: {exc}") from exc
    if not np.all(np.isfinite(C)):
        raise Singular("information matrix solve produced non-finite entries")
    return _symmetrize(C)


@dataclass(frozen=True)
class FisherSummary:
    """Frequency-side CRB quantities plus the amplitude-side scalar CRB."""

    J_eff: np.ndarray
    C_omega: np.ndarray
    crb_omega_trace_avg: float
    crb_x: float


def marginal_crb(config: ModelConfig) -> FisherSummary:
    """Marginalized frequency-side CRB and the transfer-form amplitude CRB.

    C_omega is the inverse of the effective frequency FIM; crb_x is the
    oracle least-squares baseline plus the transfer-Hessian penalty
    Tr(H_X C_omega), which equals the amplitude block of the full joint
    CRB (the equality is exercised numerically by the test suite).
    """
    from . import ampbench  # deferred: ampbench imports this module

    J_eff = effective_fim(config)
    C_omega = _solve_spd(J_eff)
    H = ampbench.transfer_hessian(config)
    crb_x = ampbench.oracle_baseline(config) + float(np.trace(H @ C_omega))
    return FisherSummary(
        J_eff=J_eff,
        C_omega=C_omega,
        crb_omega_trace_avg=float(np.trace(C_omega)) / config.K,
        crb_x=crb_x,
    )


# ---------------------------------------------------------------------------
# Full joint FIM over the real parameterization (omega, vec Re X, vec Im X).
# The model only pins down the partition structure; the entries follow from
# the Gaussian-mean rule J_ab = (2/sigma2) Re{ g_a^H g_b } with g_a the
# complex derivative of vec(A X) along real parameter a. Kept as an
# independent route so the projector-form effective FIM can be checked
# against explicit block elimination at small sizes.
# ---------------------------------------------------------------------------

def _mean_jacobian(config: ModelConfig) -> np.ndarray:
    """Complex (M*T) x (K + 2KT) Jacobian of vec(A(omega) X)."""
    M, K, T = config.M, config.K, config.T
    A = build_A(config.omega, M)
    Ap = build_A_derivative(config.omega, M)
    cols = []
    for i in range(K):
        Di_X = np.outer(Ap[:, i], config.X[i, :])      # D_i X, rank one
        cols.append(Di_X.ravel(order="F"))
    basis = np.zeros((M, T), dtype=complex)
    for t in range(T):
        for k in range(K):
            basis[:, t] = A[:, k]
            cols.append(basis.ravel(order="F").copy())
            basis[:, t] = 0.0
    n_x = K * T
    jac = np.column_stack(cols + [1j * c for c in cols[K:K + n_x]])
    return jac


def full_joint_fim(config: ModelConfig) -> np.ndarray:
    """(K + 2KT) square joint FIM; first K indices are the frequencies."""
    if config.sigma2 <= 0:
        raise ValueError("full_joint_fim requires sigma2 > 0")
    jac = _mean_jacobian(config)
    J = (2.0 / config.sigma2) * np.real(jac.conj().T @ jac)
    return _symmetrize(J)


def joint_crb_blocks(config: ModelConfig):
    """Invert the full joint FIM; returns (omega block, amplitude trace).

    The amplitude trace is normalized by KT so it is directly comparable
    to FisherSummary.crb_x. Intended for small instances only (the
    matrix is dense of side K + 2KT).
    """
    J = full_joint_fim(config)
    C = _solve_spd(J)
    K = config.K
    c_omega = _symmetrize(C[:K, :K])
    crb_x = float(np.trace(C[K:, K:])) / (config.K * config.T)
    return c_omega, crb_x
