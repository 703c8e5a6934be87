"""Quantum measurements: bases, MUB sets, POVMs, and SIC-POVMs.

Every constructed object re-verifies its defining structural invariant
before it is returned, so downstream code never sees an unverified
measurement:

* orthonormal bases check their Gram matrix,
* MUB sets check all cross-basis overlaps against 1/d,
* POVMs check positivity and completeness,
* SIC ket families check the pairwise overlap condition
  |<phi_j|phi_k>|^2 = 1/(d+1) and the completeness relation
  (1/d) sum_j |phi_j><phi_j| = I.

The SIC tolerance is looser (1e-8) than elsewhere because fiducial
vectors loaded from published numerical data are themselves inexact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstructionError,
    DimensionMismatchError,
    DomainError,
    NotASicError,
)
from .linalg import kron
from .states import DensityMatrix

GRAM_ATOL = 1e-10
MUB_ATOL = 1e-10
POVM_ATOL = 1e-10
SIC_ATOL = 1e-8
PROB_CLAMP = 1e-14


class ProbDist:
    """A finite probability vector with the normalization invariant.

    Entries in [-1e-14, 0) are clamped to zero; larger negatives and
    sums off 1 by more than 1e-12 are rejected.
    """

    __slots__ = ("p",)

    def __init__(self, p):
        p = np.array(p, dtype=float).ravel()
        if p.size == 0:
            raise DomainError("empty probability vector")
        worst = float(p.min())
        if worst < -PROB_CLAMP:
            raise DomainError(f"negative probability {worst:.3e}")
        p = np.where(p < 0.0, 0.0, p)
        total = float(p.sum())
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"probabilities sum to {total!r}, not 1")
        p.setflags(write=False)
        self.p = p

    def __len__(self):
        return self.p.size

    def __iter__(self):
        return iter(self.p)

    def __repr__(self):
        return f"ProbDist({np.array2string(self.p, precision=6)})"


class OrthonormalBasis:
    """d unit vectors of dimension d with Gram matrix equal to identity."""

    __slots__ = ("vectors", "dim")

    def __init__(self, vectors):
        vectors = np.array(vectors, dtype=complex)
        if vectors.ndim != 2 or vectors.shape[0] != vectors.shape[1]:
            raise DomainError(f"expected d vectors of dimension d, got shape {vectors.shape}")
        gram = vectors.conj() @ vectors.T
        dev = float(np.max(np.abs(gram - np.eye(vectors.shape[0]))))
        if dev > GRAM_ATOL:
            raise ConstructionError(f"basis is not orthonormal (Gram deviation {dev:.3e})")
        vectors.setflags(write=False)
        self.vectors = vectors
        self.dim = vectors.shape[0]

    def to_povm(self) -> "Povm":
        """The projective measurement |b_j><b_j|."""
        elems = np.einsum("ji,jk->jik", self.vectors, self.vectors.conj())
        return Povm(elems)


class MubSet:
    """M pairwise mutually unbiased orthonormal bases in dimension d."""

    __slots__ = ("bases", "dim", "count")

    def __init__(self, bases):
        bases = tuple(
            b if isinstance(b, OrthonormalBasis) else OrthonormalBasis(b) for b in bases
        )
        if len(bases) < 1:
            raise DomainError("a MUB set needs at least one basis")
        d = bases[0].dim
        if any(b.dim != d for b in bases):
            raise DimensionMismatchError("bases have differing dimensions")
        target = 1.0 / d
        for a in range(len(bases)):
            for b in range(a + 1, len(bases)):
                overlap2 = np.abs(bases[a].vectors.conj() @ bases[b].vectors.T) ** 2
                dev = float(np.max(np.abs(overlap2 - target)))
                if dev > MUB_ATOL:
                    raise ConstructionError(
                        f"bases {a} and {b} are not unbiased (worst deviation {dev:.3e})"
                    )
        self.bases = bases
        self.dim = d
        self.count = len(bases)

    def __iter__(self):
        return iter(self.bases)

    def __len__(self):
        return self.count


class Povm:
    """Positive operators summing to the identity."""

    __slots__ = ("elements", "dim")

    def __init__(self, elements):
        elements = np.array(elements, dtype=complex)
        if elements.ndim != 3 or elements.shape[1] != elements.shape[2]:
            raise DomainError(f"expected N square matrices, got shape {elements.shape}")
        d = elements.shape[1]
        total = elements.sum(axis=0)
        dev = float(np.max(np.abs(total - np.eye(d))))
        if dev > POVM_ATOL:
            raise ConstructionError(f"POVM completeness fails (deviation {dev:.3e})")
        for k, e in enumerate(elements):
            herm_dev = float(np.max(np.abs(e - e.conj().T)))
            if herm_dev > POVM_ATOL:
                raise ConstructionError(f"element {k} is not Hermitian ({herm_dev:.3e})")
            min_eig = float(np.linalg.eigvalsh(e).min())
            if min_eig < -1e-10:
                raise ConstructionError(f"element {k} has negative eigenvalue {min_eig:.3e}")
        elements.setflags(write=False)
        self.elements = elements
        self.dim = d

    def __len__(self):
        return self.elements.shape[0]

    def rank_one_kets(self, atol: float = 1e-10) -> np.ndarray:
        """Subnormalized kets m_j with element_j = |m_j><m_j|.

        Raises :class:`~mubsic.errors.PreconditionError` when any element
        has rank above one within ``atol``.
        """
        from .errors import PreconditionError

        kets = np.empty((len(self), self.dim), dtype=complex)
        for k, e in enumerate(self.elements):
            eigs, vecs = np.linalg.eigh(e)
            if eigs.size > 1 and eigs[-2] > atol:
                raise PreconditionError(
                    f"element {k} is not rank-one (second eigenvalue {eigs[-2]:.3e})"
                )
            kets[k] = np.sqrt(max(eigs[-1], 0.0)) * vecs[:, -1]
        return kets


class SicPovm:
    """d^2 unit kets whose weighted projectors (1/d)|phi_j><phi_j| form a POVM."""

    __slots__ = ("kets", "dim")

    def __init__(self, kets, atol: float = SIC_ATOL):
        kets = np.array(kets, dtype=complex)
        d = kets.shape[1] if kets.ndim == 2 else 0
        if kets.ndim != 2 or kets.shape[0] != d * d:
            raise DomainError(f"expected d^2 kets of dimension d, got shape {kets.shape}")
        overlap2 = np.abs(kets.conj() @ kets.T) ** 2
        off = overlap2 - 1.0 / (d + 1.0)
        np.fill_diagonal(off, 0.0)
        worst = float(np.max(np.abs(off)))
        norm_dev = float(np.max(np.abs(np.diag(overlap2) - 1.0)))
        completeness = np.einsum("jk,jl->kl", kets, kets.conj()) / d
        comp_dev = float(np.max(np.abs(completeness - np.eye(d))))
        if max(worst, norm_dev, comp_dev) > atol:
            raise NotASicError(
                "kets fail the SIC conditions "
                f"(worst overlap deviation {worst:.3e}, norm {norm_dev:.3e}, "
                f"completeness {comp_dev:.3e})",
                worst_deviation=max(worst, norm_dev, comp_dev),
            )
        kets.setflags(write=False)
        self.kets = kets
        self.dim = d

    def __len__(self):
        return self.kets.shape[0]

    def elements(self) -> np.ndarray:
        """The POVM elements (1/d)|phi_j><phi_j| as an (d^2, d, d) array."""
        return np.einsum("ji,jk->jik", self.kets, self.kets.conj()) / self.dim

    def to_povm(self) -> Povm:
        return Povm(self.elements())


def probabilities(meas, rho: DensityMatrix) -> ProbDist:
    """Outcome probabilities of a measurement on a state.

    p_j = <b_j|rho|b_j> for a basis, tr(M_j rho) for a POVM, and
    (1/d)<phi_j|rho|phi_j> for a SIC ket family.
    """
    if isinstance(meas, OrthonormalBasis):
        if meas.dim != rho.dim:
            raise DimensionMismatchError(f"basis dim {meas.dim} vs state dim {rho.dim}")
        p = np.einsum("jk,kl,jl->j", meas.vectors.conj(), rho.mat, meas.vectors).real
    elif isinstance(meas, SicPovm):
        if meas.dim != rho.dim:
            raise DimensionMismatchError(f"SIC dim {meas.dim} vs state dim {rho.dim}")
        p = np.einsum("jk,kl,jl->j", meas.kets.conj(), rho.mat, meas.kets).real / meas.dim
    elif isinstance(meas, Povm):
        if meas.dim != rho.dim:
            raise DimensionMismatchError(f"POVM dim {meas.dim} vs state dim {rho.dim}")
        p = np.einsum("jkl,lk->j", meas.elements, rho.mat).real
    else:
        raise DomainError(f"unsupported measurement type {type(meas).__name__}")
    return ProbDist(p)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


_PAULI_EIGENBASES = (
    # sigma_z, sigma_x, sigma_y eigenbases
    np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex),
    np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0),
    np.array([[1.0, 1.0j], [1.0, -1.0j]], dtype=complex) / np.sqrt(2.0),
)


def mub_construct(d: int, count: int) -> MubSet:
    """Build ``count`` mutually unbiased bases in prime dimension d.

    d = 2 uses the three Pauli eigenbases.  For an odd prime d the set is
    the standard basis followed by the d quadratic-phase bases with
    components <k|b_j^(m)> = d^(-1/2) omega^(m k^2 + j k), omega =
    exp(2 pi i / d); the first ``count`` of those d+1 bases are returned.
    The unbiasedness invariant is re-verified on construction.
    """
    d = int(d)
    count = int(count)
    if d != 2 and not (_is_prime(d) and d % 2 == 1):
        raise DomainError(f"unsupported dimension {d}: construction needs d = 2 or an odd prime")
    if not 2 <= count <= d + 1:
        raise DomainError(f"basis count must lie in [2, {d + 1}], got {count}")
    if d == 2:
        return MubSet(_PAULI_EIGENBASES[:count])
    omega = np.exp(2j * np.pi / d)
    k = np.arange(d)
    bases = [np.eye(d, dtype=complex)]
    for m in range(d):
        phase = m * k[None, :] ** 2 + k[:, None] * k[None, :]  # rows j, columns k
        bases.append(omega ** np.mod(phase, d) / np.sqrt(d))
        if len(bases) == count:
            break
    return MubSet(bases[:count])


_TETRAHEDRON_BLOCH = np.array(
    [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ]
) / np.sqrt(3.0)


def _ket_from_bloch(s) -> np.ndarray:
    sx, sy, sz = s
    theta = np.arccos(np.clip(sz, -1.0, 1.0))
    phi = np.arctan2(sy, sx)
    return np.array([np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)])


_BUILTIN_FIDUCIALS = {
    3: np.array([0.0, 1.0, -1.0], dtype=complex) / np.sqrt(2.0),
}


def weyl_heisenberg_orbit(fiducial) -> np.ndarray:
    """The d^2 kets X^a Z^b |f> with X|k> = |k+1 mod d>, Z|k> = omega^k |k>."""
    f = np.asarray(fiducial, dtype=complex).ravel()
    d = f.size
    omega = np.exp(2j * np.pi / d)
    kets = np.empty((d * d, d), dtype=complex)
    k = np.arange(d)
    for a in range(d):
        shifted = np.roll(f, a)  # X^a f, component k is f[k - a]
        for b in range(d):
            kets[a * d + b] = omega ** np.mod(b * (k - a), d) * shifted
    return kets


def sic_from_fiducial(d: int, fiducial=None) -> SicPovm:
    """SIC-POVM from a Weyl-Heisenberg orbit of a fiducial ket.

    With ``fiducial=None`` the builtin is used: for d = 2 the four
    Bloch-tetrahedron kets with Bloch vectors (+-1, +-1, +-1)/sqrt(3)
    having an even number of minus signs, for d = 3 the orbit of
    (0, 1, -1)/sqrt(2).  Other dimensions need an explicit fiducial
    (e.g. loaded with :func:`load_fiducial`).

    Raises :class:`~mubsic.errors.NotASicError` with the worst pairwise
    deviation if the orbit fails the SIC conditions.
    """
    d = int(d)
    if fiducial is None:
        if d == 2:
            kets = np.array([_ket_from_bloch(s) for s in _TETRAHEDRON_BLOCH])
            return SicPovm(kets)
        if d in _BUILTIN_FIDUCIALS:
            return SicPovm(weyl_heisenberg_orbit(_BUILTIN_FIDUCIALS[d]))
        raise DomainError(f"no builtin fiducial for dimension {d}; provide one")
    f = np.asarray(fiducial, dtype=complex).ravel()
    if f.size != d:
        raise DimensionMismatchError(f"fiducial has dimension {f.size}, expected {d}")
    norm_dev = abs(np.linalg.norm(f) - 1.0)
    if norm_dev > 1e-10:
        raise DomainError(f"fiducial is not unit norm (deviation {norm_dev:.3e})")
    return SicPovm(weyl_heisenberg_orbit(f))


@dataclass(frozen=True)
class SicConsequences:
    """Deviations from the two completeness-relation identities."""

    trace_identity_dev: float
    reconstruction_dev: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return max(self.trace_identity_dev, self.reconstruction_dev) <= self.tolerance


def sic_consequences_check(sic: SicPovm, a, psi, tolerance: float = 1e-10) -> SicConsequences:
    """Check (1/d^2) sum_ij <phi_i|A|phi_j><phi_j|phi_i> = tr A and ket reconstruction.

    Both identities follow from completeness; the report carries the
    maximal deviations.
    """
    a = np.asarray(a, dtype=complex)
    psi = np.asarray(psi, dtype=complex).ravel()
    d = sic.dim
    if a.shape != (d, d) or psi.size != d:
        raise DimensionMismatchError("operator or ket dimension does not match the SIC")
    kets = sic.kets
    cross = kets.conj() @ kets.T  # cross[i, j] = <phi_i|phi_j>
    amat = np.einsum("ik,kl,jl->ij", kets.conj(), a, kets)  # <phi_i|A|phi_j>
    double_sum = np.einsum("ij,ji->", amat, cross) / d**2
    trace_dev = abs(double_sum - np.trace(a))
    rebuilt = (kets.T * (kets.conj() @ psi)).sum(axis=1) / d
    rec_dev = float(np.max(np.abs(rebuilt - psi)))
    return SicConsequences(float(trace_dev), rec_dev, tolerance)


def sic_design_basis(sic: SicPovm) -> np.ndarray:
    """Orthonormal basis of H (x) H built from a SIC ket family.

    Returns the d^2 vectors

        v_0     = d^(-3/2) sum_j phi_j (x) phi_j*
        v_k     = sqrt(d+1) d^(-3/2) sum_j omega^(k(j-1)) phi_j (x) phi_j*

    for k = 1..d^2-1, with omega = exp(2 pi i / d^2) and j-1 running over
    the stored ket order.  The Gram matrix is re-verified; deviations
    beyond 1e-8 raise :class:`~mubsic.errors.ConstructionError` (the
    input did not satisfy the SIC conditions tightly enough).
    """
    d = sic.dim
    n = d * d
    pairs = np.empty((n, n), dtype=complex)
    for j in range(n):
        pairs[j] = kron(sic.kets[j], sic.kets[j].conj())
    omega = np.exp(2j * np.pi / n)
    phases = omega ** (np.arange(n)[:, None] * np.arange(n)[None, :])  # [k, j]
    vectors = phases @ pairs / d**1.5
    vectors[1:] *= np.sqrt(d + 1.0)
    gram = vectors.conj() @ vectors.T
    dev = float(np.max(np.abs(gram - np.eye(n))))
    if dev > 1e-8:
        raise ConstructionError(
            f"design-basis Gram deviation {dev:.3e}; input kets are not a SIC"
        )
    return vectors


def distort(p, eta: float) -> ProbDist:
    """Detector-inefficiency distortion: scale by eta, append the no-click outcome.

    The output has one more entry than the input; the final entry is
    1 - eta.
    """
    eta = float(eta)
    if np.isnan(eta) or not 0.0 <= eta <= 1.0:
        raise DomainError(f"efficiency must lie in [0, 1], got {eta}")
    p = p.p if isinstance(p, ProbDist) else ProbDist(p).p
    return ProbDist(np.append(eta * p, 1.0 - eta))


def load_fiducial(path) -> tuple[np.ndarray, float]:
    """Load a fiducial ket from JSON {"dim": d, "re": [...], "im": [...]}.

    The vector is normalized to unit norm; the applied rescaling factor
    is returned alongside it.
    """
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    try:
        d = int(obj["dim"])
        vec = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed fiducial JSON: {exc}") from exc
    vec = vec.ravel()
    if vec.size != d:
        raise DomainError(f"fiducial JSON dim {d} does not match {vec.size} components")
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        raise DomainError("fiducial vector is zero")
    return vec / norm, 1.0 / norm
