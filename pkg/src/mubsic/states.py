"""Density matrices: validation, purity, Bloch form, and random sampling.

Random sampling is built on counter-based Philox streams so that
Monte-Carlo campaigns can derive an independent generator per task from
(seed, stream-id) and stay bitwise reproducible in any execution order.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import DimensionMismatchError, DomainError

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


def generator(seed) -> np.random.Generator:
    """Return a Philox generator for an integer seed (generators pass through)."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def stream(seed: int, *stream_id: int) -> np.random.Generator:
    """Independent counter-based generator for the task (seed, stream_id).

    Distinct stream ids give statistically independent streams for the
    same master seed, which is what parallel campaign drivers key on.
    """
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in stream_id))
    return np.random.Generator(np.random.Philox(ss))


class DensityMatrix:
    """A validated density operator: Hermitian, unit trace, positive semidefinite.

    Construction validates all three invariants (hermiticity and trace to
    1e-12, eigenvalues >= -1e-10) and freezes the underlying array.
    """

    __slots__ = ("mat", "dim")

    def __init__(self, mat):
        mat = np.array(mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DomainError(f"density matrix must be square, got shape {mat.shape}")
        herm_dev = float(np.max(np.abs(mat - mat.conj().T)))
        if herm_dev > HERMITICITY_ATOL:
            raise DomainError(f"matrix is not Hermitian (deviation {herm_dev:.3e})")
        trace_dev = abs(np.trace(mat) - 1.0)
        if trace_dev > TRACE_ATOL:
            raise DomainError(f"trace differs from 1 by {trace_dev:.3e}")
        min_eig = float(np.linalg.eigvalsh(mat).min())
        if min_eig < EIGENVALUE_FLOOR:
            raise DomainError(f"matrix has negative eigenvalue {min_eig:.3e}")
        mat.setflags(write=False)
        self.mat = mat
        self.dim = mat.shape[0]

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim}, purity={purity(self):.6f})"


def purity(rho: DensityMatrix) -> float:
    """tr(rho^2), in [1/d, 1]."""
    m = rho.mat
    # tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return float(np.vdot(m, m).real)


def maximally_mixed(d: int) -> DensityMatrix:
    """The state I/d."""
    return DensityMatrix(np.eye(d, dtype=complex) / d)


def from_bloch(s) -> DensityMatrix:
    """Qubit state (I + s . sigma)/2 for a Bloch vector with |s| <= 1."""
    s = np.asarray(s, dtype=float)
    if s.shape != (3,):
        raise DomainError(f"Bloch vector must have 3 real components, got shape {s.shape}")
    norm = float(np.linalg.norm(s))
    if norm > 1.0 + 1e-12:
        raise DomainError(f"Bloch vector has length {norm:.12f} > 1")
    sx, sy, sz = s
    mat = 0.5 * np.array(
        [[1.0 + sz, sx - 1j * sy], [sx + 1j * sy, 1.0 - sz]], dtype=complex
    )
    return DensityMatrix(mat)


def bloch_vector(rho: DensityMatrix) -> np.ndarray:
    """Read back the Bloch vector of a qubit state via Pauli expectations."""
    if rho.dim != 2:
        raise DimensionMismatchError("Bloch vector is defined for qubits only")
    return np.array([np.trace(rho.mat @ p).real for p in PAULIS])


def random_pure(d: int, seed) -> DensityMatrix:
    """Haar-random pure state |psi><psi| in dimension d.

    The ket is a normalized vector of i.i.d. standard complex Gaussians,
    so the distribution is unitarily invariant.  Deterministic given an
    integer seed; a Generator may be passed for stream control.
    """
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    rng = generator(seed)
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    z /= np.linalg.norm(z)
    return DensityMatrix(np.outer(z, z.conj()))


def random_mixed(d: int, rank: int, seed) -> DensityMatrix:
    """Ginibre-induced mixed state G G^dag / tr(G G^dag) with G of shape (d, rank)."""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    if not 1 <= rank <= d:
        raise DomainError(f"rank must lie in [1, {d}], got {rank}")
    rng = generator(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = g @ g.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix(m / np.trace(m).real)


def to_json(rho: DensityMatrix) -> str:
    """Serialize to the JSON wire format {"dim", "re", "im"}."""
    return json.dumps(
        {
            "dim": rho.dim,
            "re": rho.mat.real.tolist(),
            "im": rho.mat.imag.tolist(),
        }
    )


def from_json(text: str) -> DensityMatrix:
    """Parse the JSON wire format produced by :func:`to_json`."""
    obj = json.loads(text)
    try:
        d = int(obj["dim"])
        mat = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed density-matrix JSON: {exc}") from exc
    if mat.shape != (d, d):
        raise DomainError(f"JSON dim field {d} does not match matrix shape {mat.shape}")
    return DensityMatrix(mat)
