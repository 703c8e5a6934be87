"""Entanglement detection with a product SIC-POVM.

A SIC ket family on one party, conjugated on the other, yields the
product POVM with elements (1/d^2)|phi_i phi_j*><phi_i phi_j*| on
H (x) H.  The sum G of its diagonal outcome probabilities is capped at
2/(d(d+1)) for every separable state, while the maximally entangled
state reaches 1/d, so G > 2/(d(d+1)) witnesses entanglement.  The cap
is only a necessary criterion for separability: a False detection flag
does not certify a state as separable.
"""

from __future__ import annotations

import numpy as np

from .bounds import BoundReport, make_report
from .errors import ConstructionError, DimensionMismatchError, DomainError
from .linalg import kron
from .measurements import SicPovm
from .states import DensityMatrix

COMPLETENESS_ATOL = 1e-10


class BipartitePovm:
    """The d^4-outcome product measurement built from a SIC ket family.

    Party B carries the conjugated kets, taken in the same fixed
    computational basis used everywhere in this package.
    """

    __slots__ = ("kets_a", "kets_b", "dim")

    def __init__(self, kets_a, kets_b):
        kets_a = np.array(kets_a, dtype=complex)
        kets_b = np.array(kets_b, dtype=complex)
        if kets_a.shape != kets_b.shape or kets_a.ndim != 2:
            raise DomainError("party ket arrays must share one (n, d) shape")
        d = kets_a.shape[1]
        if kets_a.shape[0] != d * d:
            raise DomainError(f"expected d^2 kets per party, got {kets_a.shape[0]}")
        # completeness factorizes over the parties
        sum_a = np.einsum("jk,jl->kl", kets_a, kets_a.conj())
        sum_b = np.einsum("jk,jl->kl", kets_b, kets_b.conj())
        total = kron(sum_a, sum_b) / (d * d)
        dev = float(np.max(np.abs(total - np.eye(d * d))))
        if dev > 1e-8:
            raise ConstructionError(f"product POVM completeness fails (deviation {dev:.3e})")
        kets_a.setflags(write=False)
        kets_b.setflags(write=False)
        self.kets_a = kets_a
        self.kets_b = kets_b
        self.dim = d

    def __len__(self):
        return self.kets_a.shape[0] ** 2

    def element(self, i: int, j: int) -> np.ndarray:
        """The PSD matrix (1/d^2)|phi_i phi_j*><phi_i phi_j*| on H (x) H."""
        w = kron(self.kets_a[i], self.kets_b[j])
        return np.outer(w, w.conj()) / self.dim**2


def product_sic_povm(sic: SicPovm) -> BipartitePovm:
    """Product POVM with SIC kets on party A and their conjugates on party B."""
    return BipartitePovm(sic.kets, sic.kets.conj())


def maximally_entangled(d: int) -> DensityMatrix:
    """The projector onto d^(-1/2) sum_n |n> (x) |n>."""
    d = int(d)
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    ket = np.eye(d, dtype=complex).ravel() / np.sqrt(d)
    return DensityMatrix(np.outer(ket, ket.conj()))


def joint_probabilities(povm: BipartitePovm, rho: DensityMatrix) -> np.ndarray:
    """All d^4 outcome probabilities P(i, j) as an (d^2, d^2) array."""
    d = povm.dim
    if rho.dim != d * d:
        raise DimensionMismatchError(f"state dim {rho.dim} is not {d * d}")
    w = np.einsum("ik,jl->ijkl", povm.kets_a, povm.kets_b).reshape(d**4, d * d)
    p = np.einsum("pk,kl,pl->p", w.conj(), rho.mat, w).real / d**2
    return p.reshape(d * d, d * d)


def correlation_G(povm: BipartitePovm, rho: DensityMatrix) -> float:
    """Sum of the d^2 diagonal probabilities P(j, j); linear in the state."""
    d = povm.dim
    if rho.dim != d * d:
        raise DimensionMismatchError(f"state dim {rho.dim} is not {d * d}")
    w = np.einsum("jk,jl->jkl", povm.kets_a, povm.kets_b).reshape(d * d, d * d)
    diag = np.einsum("jk,kl,jl->j", w.conj(), rho.mat, w).real / d**2
    return float(diag.sum())


def separable_bound(d: int, purity_a: float, purity_b: float) -> float:
    """Cap on G for a product state with the given marginal purities.

    sqrt(purity_a + 1) sqrt(purity_b + 1) / (d(d+1)); both purities at 1
    give the universal separable cap 2/(d(d+1)).
    """
    d = int(d)
    for value in (purity_a, purity_b):
        value = float(value)
        if not 1.0 / d - 1e-9 <= value <= 1.0 + 1e-9:
            raise DomainError(f"purity {value!r} outside [1/{d}, 1]")
    return float(
        np.sqrt(float(purity_a) + 1.0) * np.sqrt(float(purity_b) + 1.0) / (d * (d + 1.0))
    )


def detect_entanglement(
    sic: SicPovm, rho: DensityMatrix, tolerance: float = 1e-12
) -> tuple[bool, BoundReport]:
    """Flag a bipartite state as entangled when G exceeds the universal cap.

    Uses only the purity-independent cap 2/(d(d+1)) since the marginals
    of an unknown joint state are not observable from G alone.  A True
    flag is sufficient for entanglement; False is inconclusive.
    """
    povm = product_sic_povm(sic)
    g = correlation_G(povm, rho)
    cap = 2.0 / (sic.dim * (sic.dim + 1.0))
    report = make_report("ENT-G", g, cap, tolerance, sense="<=")
    return (g > cap + tolerance), report
