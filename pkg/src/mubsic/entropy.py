"""Generalized entropies of finite probability distributions.

Renyi and Tsallis entropies of order alpha > 0, the alpha-logarithm,
binary Tsallis entropy, symmetrized entropies at conjugate order pairs,
the index of coincidence, and the max-element bound that converts a
known coincidence value into a cap on the largest probability.

All entropies are in nats.  Order alpha = 1 and alpha = inf dispatch to
the Shannon and min-entropy closed forms; a guard band |alpha - 1| <
1e-6 reroutes to first-order expansions because the generic formulas
lose all precision there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

ALPHA_ONE_BAND = 1e-6


def _check_order(alpha) -> float:
    alpha = float(alpha)
    if np.isnan(alpha) or alpha <= 0.0:
        raise DomainError(f"entropy order must be positive, got {alpha}")
    return alpha


def as_probabilities(p) -> np.ndarray:
    """Validate and return a probability vector as a float array.

    Accepts anything array-like (including :class:`ProbDist` from the
    measurements module via its ``p`` attribute).  Entries in
    [-1e-14, 0) are clamped to zero; larger negatives and sums away from
    1 beyond 1e-12 are hard errors.
    """
    p = getattr(p, "p", p)
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0:
        raise DomainError("empty probability vector")
    worst = float(p.min())
    if worst < -1e-14:
        raise DomainError(f"negative probability {worst:.3e}")
    p = np.where(p < 0.0, 0.0, p)
    total = float(p.sum())
    if abs(total - 1.0) > 1e-12:
        raise DomainError(f"probabilities sum to {total!r}, not 1")
    return p


def _shannon(p: np.ndarray) -> float:
    nz = p[p > 0.0]
    return float(-np.sum(nz * np.log(nz)))


def renyi(p, alpha) -> float:
    """Renyi alpha-entropy (1 - alpha)^-1 ln(sum p_j^alpha), in nats.

    alpha = 1 gives the Shannon entropy, alpha = inf the min-entropy
    -ln(max p_j), alpha = 2 the collision entropy -ln(sum p_j^2).
    """
    p = as_probabilities(p)
    alpha = _check_order(alpha)
    if np.isinf(alpha):
        return float(-np.log(p.max()))
    nz = p[p > 0.0]
    if abs(alpha - 1.0) < ALPHA_ONE_BAND:
        lp = np.log(nz)
        s1 = float(np.sum(nz * lp))
        m2 = float(np.sum(nz * lp * lp))
        return -s1 - 0.5 * (alpha - 1.0) * (m2 - s1 * s1)
    return float(np.log(np.sum(nz**alpha)) / (1.0 - alpha))


def tsallis(p, alpha) -> float:
    """Tsallis alpha-entropy (1 - alpha)^-1 (sum p_j^alpha - 1), in nats at alpha = 1."""
    p = as_probabilities(p)
    alpha = _check_order(alpha)
    if np.isinf(alpha):
        raise DomainError("Tsallis entropy is defined for finite positive order")
    nz = p[p > 0.0]
    if abs(alpha - 1.0) < ALPHA_ONE_BAND:
        lp = np.log(nz)
        s1 = float(np.sum(nz * lp))
        m2 = float(np.sum(nz * lp * lp))
        return -s1 - 0.5 * (alpha - 1.0) * m2
    return float((np.sum(nz**alpha) - 1.0) / (1.0 - alpha))


def alpha_log(x, alpha) -> float:
    """Deformed logarithm ln_alpha(x) = (x^(1-alpha) - 1)/(1 - alpha) for x > 0.

    Continuous in alpha at 1, where it equals ln x.
    """
    x = float(x)
    if np.isnan(x) or x <= 0.0:
        raise DomainError(f"alpha-logarithm needs x > 0, got {x}")
    alpha = _check_order(alpha)
    if np.isinf(alpha):
        raise DomainError("alpha-logarithm is defined for finite positive order")
    if abs(alpha - 1.0) < ALPHA_ONE_BAND:
        lx = np.log(x)
        return float(lx + 0.5 * (1.0 - alpha) * lx * lx)
    return float((x ** (1.0 - alpha) - 1.0) / (1.0 - alpha))


def binary_tsallis(eta, alpha) -> float:
    """Binary Tsallis entropy -eta^a ln_a(eta) - (1-eta)^a ln_a(1-eta) on [0, 1]."""
    eta = float(eta)
    if np.isnan(eta) or not 0.0 <= eta <= 1.0:
        raise DomainError(f"efficiency must lie in [0, 1], got {eta}")
    alpha = _check_order(alpha)
    total = 0.0
    for t in (eta, 1.0 - eta):
        if t > 0.0:
            total -= t**alpha * alpha_log(t, alpha)
    return total


@dataclass(frozen=True)
class SymOrderPair:
    """Conjugate entropic orders alpha = 1/(1-s), beta = 1/(1+s).

    The constraint 1/alpha + 1/beta = 2 holds exactly by construction
    for s in [0, 1).
    """

    s: float

    def __post_init__(self):
        if np.isnan(self.s) or not 0.0 <= self.s < 1.0:
            raise DomainError(f"symmetrization parameter must lie in [0, 1), got {self.s}")

    @property
    def alpha(self) -> float:
        return 1.0 / (1.0 - self.s)

    @property
    def beta(self) -> float:
        return 1.0 / (1.0 + self.s)

    @property
    def mu(self) -> float:
        """max of the pair, 1/(1-s)."""
        return self.alpha


def conjugate_order(alpha) -> float:
    """The order beta with 1/alpha + 1/beta = 2; requires alpha > 1/2."""
    alpha = _check_order(alpha)
    if np.isinf(alpha) or alpha <= 0.5:
        raise DomainError(f"conjugate order needs finite alpha > 1/2, got {alpha}")
    return alpha / (2.0 * alpha - 1.0)


def symmetrized(p, s, kind: str = "tsallis") -> float:
    """Half-sum of the order-alpha and order-beta entropies of the pair for s.

    ``kind`` selects "renyi" or "tsallis".
    """
    pair = s if isinstance(s, SymOrderPair) else SymOrderPair(float(s))
    fn = _entropy_fn(kind)
    return 0.5 * (fn(p, pair.alpha) + fn(p, pair.beta))


def _entropy_fn(kind: str):
    if kind == "renyi":
        return renyi
    if kind == "tsallis":
        return tsallis
    raise DomainError(f"unknown entropy kind {kind!r} (expected 'renyi' or 'tsallis')")


def index_of_coincidence(p) -> float:
    """Collision probability sum_j p_j^2, in (0, 1]."""
    p = as_probabilities(p)
    return float(np.sum(p * p))


def max_prob_bound(n: int, b2: float) -> float:
    """Largest element allowed for n nonnegative numbers with sum 1, sum of squares b2.

    Returns (1 + sqrt(n-1) sqrt(n b2 - 1)) / n.  Only b2 in [1/n, 1] is
    feasible; a 1e-12 slack absorbs rounding in computed coincidences.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    b2 = float(b2)
    if not (1.0 / n - 1e-12 <= b2 <= 1.0 + 1e-12):
        raise DomainError(f"sum of squares {b2!r} infeasible for n = {n}")
    radicand = max(n * b2 - 1.0, 0.0)
    return (1.0 + np.sqrt(n - 1.0) * np.sqrt(radicand)) / n
