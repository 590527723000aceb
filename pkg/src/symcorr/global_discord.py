"""Global discord through dephasing in locally rotated product bases.

The collective measurement is parametrized by one rotation
R(theta, phi) = cos(theta) I + i sin(theta) cos(phi) sigma_y
              + i sin(theta) sin(phi) sigma_x
per qubit, applied to the computational product basis.  Global discord is the
minimum over angles of the relative entropy to the dephased state minus the
sum of the single-qubit relative entropies, each evaluated through the
identity S(rho || Pi(rho)) = S(Pi(rho)) - S(rho).

For permutation-invariant states one shared (theta, phi) pair suffices; the
projector set is exactly pi/2-periodic in theta, so the search runs over
theta in (0, pi/2] and reports the computational-basis optimum as pi/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .optim import golden_section_min
from .qstate import (
    DensityMatrix,
    partial_trace,
    shannon_entropy,
    von_neumann_entropy,
)

_THETA_GRID = 64
_PHI_GRID = 64
_GRID_CHUNK = 256
_REFINE_SWEEPS = 3
_REFINE_TOL = 1e-7
_SEAM_TOL = 1e-6
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RotationAngles:
    """Per-qubit (theta, phi) rotation pairs, theta in [0, pi), phi in [0, 2 pi)."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple((float(t), float(p)) for t, p in self.pairs)
        for t, p in pairs:
            if not 0.0 <= t < math.pi:
                raise ValueError(f"theta {t} outside [0, pi)")
            if not 0.0 <= p < _TWO_PI:
                raise ValueError(f"phi {p} outside [0, 2 pi)")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def uniform(cls, n_qubits: int, theta: float, phi: float) -> "RotationAngles":
        return cls(((theta, phi),) * n_qubits)

    @property
    def n_qubits(self) -> int:
        return len(self.pairs)


def rotation_matrix(theta: float, phi: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [[c, s * np.exp(1j * phi)], [-s * np.exp(-1j * phi), c]], dtype=complex
    )


def _dephased_probs(data: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Diagonal of basis^dag @ data @ basis, i.e. the outcome distribution."""
    return (basis.conj() * (data @ basis)).sum(axis=0).real


def dephase_in_rotated_basis(rho: DensityMatrix, angles: RotationAngles) -> DensityMatrix:
    """Zero all off-diagonal elements of `rho` in the rotated product basis."""
    if angles.n_qubits != rho.n_qubits:
        raise ValueError("angle count does not match the state's qubit count")
    basis = reduce(np.kron, [rotation_matrix(t, p) for t, p in angles.pairs])
    probs = _dephased_probs(rho.data, basis)
    out = (basis * probs) @ basis.conj().T
    out = (out + out.conj().T) / 2.0
    return DensityMatrix(rho.n_qubits, out)


def global_discord_thermo_analytic(n: int, p0: float) -> float:
    """Closed-form global discord of the remixed thermal state family.

    Direct evaluation of
    p0^n log2 p0^n + p1^n log2 p1^n - (p0^n + p1^n) log2((p0^n + p1^n) / 2)
    with the 0 * log 0 = 0 convention.
    """
    p0 = float(p0)
    if not 0.0 <= p0 <= 1.0:
        raise ValueError(f"p0 must lie in [0, 1], got {p0}")
    x = p0**n
    y = (1.0 - p0) ** n

    def plog(t: float) -> float:
        return t * math.log2(t) if t > 0.0 else 0.0

    return plog(x) + plog(y) - (x + y) * math.log2((x + y) / 2.0)


def _rotation_batch(thetas: np.ndarray, phis: np.ndarray) -> np.ndarray:
    c, s = np.cos(thetas), np.sin(thetas)
    e = np.exp(1j * phis)
    r = np.empty((thetas.size, 2, 2), dtype=complex)
    r[:, 0, 0] = c
    r[:, 0, 1] = s * e
    r[:, 1, 0] = -s * e.conj()
    r[:, 1, 1] = c
    return r


def _entropy_rows(probs: np.ndarray) -> np.ndarray:
    p = np.clip(probs, 0.0, 1.0)
    terms = np.where(p > 0.0, p * np.log2(np.where(p > 0.0, p, 1.0)), 0.0)
    return -terms.sum(axis=-1)


def _paired_tensor(data: np.ndarray, n: int) -> np.ndarray:
    """Reindex rho so each qubit contributes one 4-valued (row, col) axis."""
    t = data.reshape((2,) * (2 * n))
    order = []
    for i in range(n):
        order += [i, n + i]
    return t.transpose(order).reshape((4,) * n)


def _shared_rotation_probs(paired: np.ndarray, n: int, r: np.ndarray) -> np.ndarray:
    """Dephased outcome distributions for a batch of shared per-qubit rotations.

    Contracts one qubit at a time, O(n 4^n) per grid point instead of the
    O(8^n) full change of basis.
    """
    v = (r.conj()[:, :, None, :] * r[:, None, :, :]).reshape(-1, 4, 2)
    p = np.einsum("xr,gxm->gmr", paired.reshape(4, -1), v)
    done = 2
    for _ in range(n - 1):
        shape = p.shape
        p = p.reshape(shape[0], done, 4, -1)
        p = np.einsum("gkxr,gxm->gkmr", p, v)
        done *= 2
    return p.reshape(-1, 2**n).real


def _symmetric_grid_scan(data, d0, n, s_rho, s_rho0) -> tuple[float, float, float]:
    """Best (value, theta, phi) over the shared-angle 64 x 64 grid."""
    thetas = np.linspace(0.0, math.pi / 2.0, _THETA_GRID + 1)[1:]
    phis = np.linspace(0.0, _TWO_PI, _PHI_GRID, endpoint=False)
    tt, pp = [a.reshape(-1) for a in np.meshgrid(thetas, phis, indexing="ij")]
    paired = _paired_tensor(data, n)
    best = (math.inf, thetas[-1], 0.0)
    for lo in range(0, tt.size, _GRID_CHUNK):
        t_chunk = tt[lo : lo + _GRID_CHUNK]
        p_chunk = pp[lo : lo + _GRID_CHUNK]
        r = _rotation_batch(t_chunk, p_chunk)
        probs = _shared_rotation_probs(paired, n, r)
        glob = _entropy_rows(probs) - s_rho
        local_probs = np.einsum("gak,ab,gbk->gk", r.conj(), d0, r).real
        local = _entropy_rows(local_probs) - s_rho0
        values = glob - n * local
        i = int(np.argmin(values))
        if values[i] < best[0]:
            best = (float(values[i]), float(t_chunk[i]), float(p_chunk[i]))
    return best


def _fold_theta(theta: float) -> float:
    """Canonical representative in (0, pi/2]; the projector set has period pi/2."""
    t = theta % (math.pi / 2.0)
    if t <= _SEAM_TOL:
        return math.pi / 2.0
    return t


def global_discord(
    rho: DensityMatrix, mode: str = "symmetric"
) -> tuple[float, RotationAngles]:
    """Global discord of `rho` and the minimizing rotation angles.

    Symmetric mode (permutation-invariant states) shares one (theta, phi) pair
    across all qubits and runs a 64 x 64 grid with coordinate-wise
    golden-section refinement.  General mode optimizes all 2n angles through
    the multi-start oracle (small systems only).
    """
    if mode == "general":
        from .oracle import DEFAULT_CONFIG, oracle_global_discord_full

        return oracle_global_discord_full(rho, DEFAULT_CONFIG)
    if mode != "symmetric":
        raise ValueError(f"mode must be 'symmetric' or 'general', got {mode!r}")
    from .genuine import _require_permutation_symmetric

    _require_permutation_symmetric(rho, "symmetric-mode global discord")
    n = rho.n_qubits
    s_rho = von_neumann_entropy(rho)
    rho0 = partial_trace(rho, {0})
    s_rho0 = von_neumann_entropy(rho0)
    data, d0 = rho.data, rho0.data

    def objective(theta: float, phi: float) -> float:
        r = rotation_matrix(theta, phi)
        basis = reduce(np.kron, [r] * n)
        glob = shannon_entropy(_dephased_probs(data, basis)) - s_rho
        local = shannon_entropy(_dephased_probs(d0, r)) - s_rho0
        return glob - n * local

    _, t, p = _symmetric_grid_scan(data, d0, n, s_rho, s_rho0)
    ht = (math.pi / 2.0) / _THETA_GRID
    hp = _TWO_PI / _PHI_GRID
    for _ in range(_REFINE_SWEEPS):
        t, _ = golden_section_min(lambda x: objective(x, p), t - ht, t + ht, tol=_REFINE_TOL)
        p, _ = golden_section_min(lambda x: objective(t, x), p - hp, p + hp, tol=_REFINE_TOL)
        ht /= 8.0
        hp /= 8.0
    t = _fold_theta(t)
    p = p % _TWO_PI
    value = objective(t, p)
    if value < -1e-9:
        raise ValueError(f"global discord evaluated to {value}, below the numerical slack")
    return max(value, 0.0), RotationAngles.uniform(n, t, p)
