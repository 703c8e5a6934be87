"""Entropic uncertainty bounds and their margin reports.

Each bound function returns the right-hand-side value of one
uncertainty relation; :func:`check_bound` pairs it with the directly
computed entropy quantity and wraps the comparison in a
:class:`BoundReport`.  The implemented relations are labeled

* ``P1-mub-tsallis``  -- averaged Tsallis entropy over a MUB set,
  order in (0, 2], state-dependent via tr(rho^2), with a detector
  inefficiency variant,
* ``P2-mub-renyi``    -- averaged Renyi entropy, order in [2, inf],
* ``P3-mub-minent``   -- averaged min-entropy, improved over the
  order-inf limit of P2,
* ``P4-mub-sym``      -- averaged symmetrized entropies at conjugate
  orders 1/(1-s), 1/(1+s),
* ``P5-sic-ic``       -- the exact SIC index-of-coincidence identity
  sum p^2 = (tr(rho^2) + 1)/(d(d+1)),
* ``P6-sic-tsallis`` / ``P7-sic-renyi`` / ``P8-sic-minent`` -- single
  SIC-POVM bounds built on that identity,
* ``P9-mu-pair``      -- Maassen-Uffink-type pair bound for two
  rank-one POVMs, driven by the state-dependent overlap factor g,
* ``LWBM-sum``        -- the coincidence-sum inequality
  sum_m C_m <= tr(rho^2) + (M-1)/d underlying P1-P3,
* ``APXA-max``        -- max probability vs. the coincidence cap,
* ``APXB-riesz``      -- the 2-norm contraction property of the
  overlap transformation used by P9,
* ``ENT-G``           -- the separable-state cap on the diagonal
  correlation measure of a product SIC-POVM.

Margins follow the signed convention lhs - rhs; a lower bound passes
when margin >= -tolerance.  The default pass threshold 1e-10 absorbs
accumulated floating error in d^2-outcome entropy sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import (
    SymOrderPair,
    alpha_log,
    as_probabilities,
    binary_tsallis,
    conjugate_order,
    index_of_coincidence,
    max_prob_bound,
    renyi,
    symmetrized,
    tsallis,
)
from .errors import ConstructionError, DomainError, PreconditionError
from .measurements import (
    MubSet,
    OrthonormalBasis,
    Povm,
    SicPovm,
    distort,
    probabilities,
)
from .states import DensityMatrix, generator, purity

DEFAULT_TOLERANCE = 1e-10
ZERO_PROB_THRESHOLD = 1e-14

PROPOSITION_LABELS = (
    "P1-mub-tsallis",
    "P2-mub-renyi",
    "P3-mub-minent",
    "P4-mub-sym",
    "P5-sic-ic",
    "P6-sic-tsallis",
    "P7-sic-renyi",
    "P8-sic-minent",
    "P9-mu-pair",
    "LWBM-sum",
    "APXA-max",
    "APXB-riesz",
    "ENT-G",
)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound check.

    ``margin`` is always lhs - rhs; ``sense`` records the inequality
    direction that ``lhs`` must satisfy (">=", "<=", or "==" for exact
    identities), and ``passed``/``saturated`` are evaluated at
    ``tolerance``.
    """

    label: str
    lhs: float
    rhs: float
    margin: float
    tolerance: float
    saturated: bool
    passed: bool
    sense: str = ">="


def make_report(label, lhs, rhs, tolerance=DEFAULT_TOLERANCE, sense=">=") -> BoundReport:
    lhs = float(lhs)
    rhs = float(rhs)
    margin = lhs - rhs
    if sense == ">=":
        passed = margin >= -tolerance
    elif sense == "<=":
        passed = margin <= tolerance
    elif sense == "==":
        passed = abs(margin) <= tolerance
    else:
        raise DomainError(f"unknown report sense {sense!r}")
    return BoundReport(
        label=label,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        tolerance=tolerance,
        saturated=abs(margin) <= tolerance,
        passed=passed,
        sense=sense,
    )


def _check_purity(d: int, value) -> float:
    value = float(value)
    lo = 1.0 / d
    if not lo - 1e-9 <= value <= 1.0 + 1e-9:
        raise DomainError(f"purity {value!r} outside [{lo}, 1] for dimension {d}")
    return min(max(value, lo), 1.0)


def _check_counts(d, m) -> tuple[int, int]:
    d = int(d)
    m = int(m)
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    if m < 1:
        raise DomainError(f"basis count must be >= 1, got {m}")
    return d, m


def _tsallis_order(alpha) -> float:
    alpha = float(alpha)
    if np.isnan(alpha) or not 0.0 < alpha <= 2.0:
        raise DomainError(f"Tsallis-type bound needs order in (0, 2], got {alpha}")
    return alpha


def _renyi_order(alpha) -> float:
    alpha = float(alpha)
    if np.isnan(alpha) or alpha < 2.0:
        raise DomainError(f"Renyi-type bound needs order in [2, inf], got {alpha}")
    return alpha


def mub_tsallis_bound(d, m, alpha, state_purity, state_independent=False) -> float:
    """Lower bound on the MUB-averaged Tsallis entropy, order in (0, 2]."""
    d, m = _check_counts(d, m)
    alpha = _tsallis_order(alpha)
    p2 = 1.0 if state_independent else _check_purity(d, state_purity)
    return alpha_log(m * d / (p2 * d + m - 1.0), alpha)


def mub_tsallis_bound_inefficiency(d, m, alpha, state_purity, eta, state_independent=False) -> float:
    """Inefficiency-model variant: eta^alpha times the clean bound plus h_alpha(eta)."""
    base = mub_tsallis_bound(d, m, alpha, state_purity, state_independent)
    eta = float(eta)
    if np.isnan(eta) or not 0.0 <= eta <= 1.0:
        raise DomainError(f"efficiency must lie in [0, 1], got {eta}")
    return eta ** float(alpha) * base + binary_tsallis(eta, alpha)


def mub_renyi_bound(d, m, alpha, state_purity, state_independent=False) -> float:
    """Lower bound on the MUB-averaged Renyi entropy, order in [2, inf]."""
    d, m = _check_counts(d, m)
    alpha = _renyi_order(alpha)
    p2 = 1.0 if state_independent else _check_purity(d, state_purity)
    factor = 0.5 if np.isinf(alpha) else alpha / (2.0 * (alpha - 1.0))
    return factor * math.log(m * d / (p2 * d + m - 1.0))


def mub_minentropy_bound(d, m, state_purity, state_independent=False) -> float:
    """Lower bound on the MUB-averaged min-entropy (improves the alpha=inf Renyi form)."""
    d, m = _check_counts(d, m)
    if state_independent:
        rm = math.sqrt(m)
        return math.log(rm * d / (d + rm - 1.0))
    p2 = _check_purity(d, state_purity)
    radicand = max(p2 * d - 1.0, 0.0)
    return math.log(d) - math.log(
        1.0 + math.sqrt((d - 1.0) * radicand) / math.sqrt(m)
    )


def mub_symmetrized_bound(d, s, kind: str = "tsallis") -> float:
    """Lower bound on the MUB-averaged symmetrized entropy of parameter s."""
    d = int(d)
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    pair = s if isinstance(s, SymOrderPair) else SymOrderPair(float(s))
    if kind == "tsallis":
        return 0.5 * alpha_log(d, pair.mu)
    if kind == "renyi":
        return 0.5 * math.log(d)
    raise DomainError(f"unknown entropy kind {kind!r}")


def sic_tsallis_bound(d, alpha, state_purity, state_independent=False) -> float:
    """Lower bound on the Tsallis entropy of a single SIC-POVM, order in (0, 2]."""
    d = int(d)
    alpha = _tsallis_order(alpha)
    p2 = 1.0 if state_independent else _check_purity(d, state_purity)
    return alpha_log(d * (d + 1.0) / (p2 + 1.0), alpha)


def sic_tsallis_bound_inefficiency(d, alpha, state_purity, eta, state_independent=False) -> float:
    """Inefficiency-model variant of the single-SIC Tsallis bound."""
    base = sic_tsallis_bound(d, alpha, state_purity, state_independent)
    eta = float(eta)
    if np.isnan(eta) or not 0.0 <= eta <= 1.0:
        raise DomainError(f"efficiency must lie in [0, 1], got {eta}")
    return eta ** float(alpha) * base + binary_tsallis(eta, alpha)


def sic_renyi_bound(d, alpha, state_purity, state_independent=False) -> float:
    """Lower bound on the Renyi entropy of a single SIC-POVM, order in [2, inf]."""
    d = int(d)
    alpha = _renyi_order(alpha)
    p2 = 1.0 if state_independent else _check_purity(d, state_purity)
    factor = 0.5 if np.isinf(alpha) else alpha / (2.0 * (alpha - 1.0))
    return factor * math.log(d * (d + 1.0) / (p2 + 1.0))


def sic_minentropy_bound(d, state_purity) -> float:
    """Lower bound on the min-entropy of a single SIC-POVM."""
    d = int(d)
    p2 = _check_purity(d, state_purity)
    radicand = max(p2 * d - 1.0, 0.0)
    return 2.0 * math.log(d) - math.log(1.0 + math.sqrt((d - 1.0) * radicand))


def coincidence_sum_check(mubs: MubSet, rho: DensityMatrix, tolerance=1e-12) -> BoundReport:
    """Check sum_m C(B_m|rho) <= tr(rho^2) + (M-1)/d over a MUB set."""
    dists = [probabilities(b, rho) for b in mubs]
    lhs = sum(index_of_coincidence(p) for p in dists)
    rhs = purity(rho) + (mubs.count - 1.0) / mubs.dim
    return make_report("LWBM-sum", lhs, rhs, tolerance, sense="<=")


def simple_bounds(p, d, alpha, kind: str = "tsallis", tolerance=DEFAULT_TOLERANCE) -> BoundReport:
    """Max-probability bounds for SIC statistics: entropy >= ln_a(1/max p) >= ln_a(d).

    Requires max p <= 1/d (every SIC probability obeys it); violation
    raises :class:`PreconditionError`.
    """
    p = as_probabilities(p)
    d = int(d)
    pmax = float(p.max())
    if pmax > 1.0 / d + 1e-12:
        raise PreconditionError(
            f"max probability {pmax!r} exceeds 1/d = {1.0 / d!r}; not SIC statistics"
        )
    if kind == "tsallis":
        lhs = tsallis(p, alpha)
        rhs = alpha_log(1.0 / pmax, alpha)
        floor = alpha_log(d, alpha)
        label = "simple-tsallis"
    elif kind == "renyi":
        lhs = renyi(p, alpha)
        rhs = -math.log(pmax)
        floor = math.log(d)
        label = "simple-renyi"
    else:
        raise DomainError(f"unknown entropy kind {kind!r}")
    # max p <= 1/d implies rhs >= floor; the 1e-9 slack mirrors the
    # precondition slack scaled by d
    if rhs < floor - 1e-9:
        raise ConstructionError(
            f"intermediate bound {rhs!r} fell below its floor {floor!r}"
        )
    return make_report(label, lhs, rhs, tolerance)


def _rank_one_kets(meas) -> np.ndarray:
    """Subnormalized kets of a rank-one measurement."""
    if isinstance(meas, SicPovm):
        return meas.kets / np.sqrt(meas.dim)
    if isinstance(meas, OrthonormalBasis):
        return np.asarray(meas.vectors)
    if isinstance(meas, Povm):
        return meas.rank_one_kets()
    raise DomainError(f"unsupported measurement type {type(meas).__name__}")


def _sqrt_factor(rho: DensityMatrix) -> np.ndarray:
    """Hermitian square root of the state, eigenvalues clipped at zero."""
    eigs, vecs = np.linalg.eigh(rho.mat)
    return (vecs * np.sqrt(np.clip(eigs, 0.0, None))) @ vecs.conj().T


def _overlap_transform(kets_m, kets_n, rho: DensityMatrix, threshold=ZERO_PROB_THRESHOLD):
    """The matrix t_ij = <m_i|n_j><n_j|rho|m_i> / sqrt(<m_i|rho|m_i><n_j|rho|n_j>).

    Evaluated through the factorization rho = R R with R = rho^(1/2):
    <n|rho|m> = (R n)^dag (R m) and the probabilities are squared norms
    of R-images, so the Cauchy-Schwarz structure survives rounding even
    for probabilities many orders below one.  Rows and columns whose
    probability falls below ``threshold`` are zeroed, matching the
    exclusion of unobservable outcomes.
    """
    root = _sqrt_factor(rho)
    zm = kets_m @ root.T  # row i is R m_i
    zn = kets_n @ root.T
    qm = np.einsum("ik,ik->i", zm.conj(), zm).real
    qn = np.einsum("jk,jk->j", zn.conj(), zn).real
    overlap = kets_m.conj() @ kets_n.T  # [i, j] = <m_i|n_j>
    cross = zn.conj() @ zm.T  # [j, i] = <n_j|rho|m_i>
    keep_m = qm > threshold
    keep_n = qn > threshold
    denom = np.sqrt(np.outer(np.where(keep_m, qm, 1.0), np.where(keep_n, qn, 1.0)))
    t = overlap * cross.T / denom
    t[~keep_m, :] = 0.0
    t[:, ~keep_n] = 0.0
    return t


def mu_g_factor(meas_m, meas_n, rho: DensityMatrix, threshold=ZERO_PROB_THRESHOLD) -> float:
    """State-dependent overlap factor g driving the Maassen-Uffink pair bounds.

    The maximum of |<m_i|n_j><n_j|rho|m_i>| over the geometric mean of
    the outcome probabilities, taken over pairs where both probabilities
    exceed ``threshold``.  Always <= 1 by Cauchy-Schwarz; for two
    SIC-POVMs the subnormalized kets carry the 1/d prefactor
    automatically.
    """
    kets_m = _rank_one_kets(meas_m)
    kets_n = _rank_one_kets(meas_n)
    if kets_m.shape[1] != rho.dim or kets_n.shape[1] != rho.dim:
        raise DomainError("measurement and state dimensions differ")
    t = _overlap_transform(kets_m, kets_n, rho, threshold)
    return float(np.max(np.abs(t)))


def mu_f_bar(meas_m, meas_n) -> float:
    """State-independent overlap cap: max_ij |<m_i|n_j>| over subnormalized kets."""
    kets_m = _rank_one_kets(meas_m)
    kets_n = _rank_one_kets(meas_n)
    return float(np.max(np.abs(kets_m.conj() @ kets_n.T)))


@dataclass(frozen=True)
class MuPairReports:
    """Maassen-Uffink pair-bound reports at conjugate orders (alpha, beta)."""

    tsallis: BoundReport
    renyi: BoundReport
    tsallis_state_independent: BoundReport
    renyi_state_independent: BoundReport
    g: float
    f_bar: float


def _resolve_order_pair(alpha=None, beta=None, s=None):
    if s is not None:
        pair = s if isinstance(s, SymOrderPair) else SymOrderPair(float(s))
        return pair.alpha, pair.beta
    if alpha is None:
        raise DomainError("give either s or the order alpha (optionally beta)")
    alpha = float(alpha)
    if beta is None:
        return alpha, conjugate_order(alpha)
    beta = float(beta)
    if abs(1.0 / alpha + 1.0 / beta - 2.0) > 1e-12:
        raise DomainError(f"orders must satisfy 1/alpha + 1/beta = 2, got {alpha}, {beta}")
    return alpha, beta


def mu_pair_bounds(
    meas_m,
    meas_n,
    rho: DensityMatrix,
    alpha=None,
    beta=None,
    s=None,
    tolerance=DEFAULT_TOLERANCE,
) -> MuPairReports:
    """Check the Tsallis and Renyi pair bounds for two rank-one POVMs.

    H_a(M|rho) + H_b(N|rho) >= ln_mu(g^-2) and R_a + R_b >= -2 ln g with
    mu = max(alpha, beta); the state-independent variants replace g by
    the overlap cap f-bar.
    """
    alpha, beta = _resolve_order_pair(alpha, beta, s)
    mu = max(alpha, beta)
    g = mu_g_factor(meas_m, meas_n, rho)
    fbar = mu_f_bar(meas_m, meas_n)
    pm = probabilities(_as_measurement(meas_m), rho)
    pn = probabilities(_as_measurement(meas_n), rho)
    lhs_t = tsallis(pm, alpha) + tsallis(pn, beta)
    lhs_r = renyi(pm, alpha) + renyi(pn, beta)
    return MuPairReports(
        tsallis=make_report("P9-mu-pair-tsallis", lhs_t, alpha_log(g**-2, mu), tolerance),
        renyi=make_report("P9-mu-pair-renyi", lhs_r, -2.0 * math.log(g), tolerance),
        tsallis_state_independent=make_report(
            "P9-mu-pair-tsallis-si", lhs_t, alpha_log(fbar**-2, mu), tolerance
        ),
        renyi_state_independent=make_report(
            "P9-mu-pair-renyi-si", lhs_r, -2.0 * math.log(fbar), tolerance
        ),
        g=g,
        f_bar=fbar,
    )


def _as_measurement(meas):
    if isinstance(meas, (SicPovm, OrthonormalBasis, Povm)):
        return meas
    raise DomainError(f"unsupported measurement type {type(meas).__name__}")


def riesz_precondition_check(
    meas_m,
    meas_n,
    rho: DensityMatrix,
    u=None,
    trials: int = 0,
    seed=0,
    tolerance: float = 1e-12,
) -> BoundReport:
    """Verify the overlap transformation is a 2-norm contraction.

    Applies t to the given input vector (if any) and to ``trials``
    random complex vectors, and reports the worst case of
    ||t u||_2 <= ||u||_2.
    """
    kets_m = _rank_one_kets(meas_m)
    kets_n = _rank_one_kets(meas_n)
    t = _overlap_transform(kets_m, kets_n, rho)
    n = t.shape[1]
    inputs = []
    if u is not None:
        u = np.asarray(u, dtype=complex).ravel()
        if u.size != n:
            raise DomainError(f"input vector has length {u.size}, expected {n}")
        inputs.append(u)
    rng = generator(seed)
    for _ in range(int(trials)):
        inputs.append(rng.standard_normal(n) + 1j * rng.standard_normal(n))
    if not inputs:
        raise DomainError("need an input vector or trials >= 1")
    worst_lhs, worst_rhs, worst_margin = 0.0, 0.0, -np.inf
    for vec in inputs:
        nu = float(np.linalg.norm(vec))
        nv = float(np.linalg.norm(t @ vec))
        if nv - nu > worst_margin:
            worst_lhs, worst_rhs, worst_margin = nv, nu, nv - nu
    return make_report("APXB-riesz", worst_lhs, worst_rhs, tolerance, sense="<=")


def _sym_param_from_alpha(alpha) -> float:
    alpha = float(alpha)
    if np.isinf(alpha) or alpha < 1.0:
        raise DomainError(
            f"symmetrized orders need 1 <= alpha < inf (alpha is max of the pair), got {alpha}"
        )
    return 1.0 - 1.0 / alpha


def check_bound(
    meas,
    rho: DensityMatrix,
    which: str,
    *,
    alpha=None,
    s=None,
    kind: str = "tsallis",
    eta=None,
    trials: int = 16,
    seed=0,
    tolerance: float = DEFAULT_TOLERANCE,
) -> BoundReport:
    """Evaluate one labeled bound check on a state.

    ``meas`` is the measurement object the label expects: a
    :class:`MubSet` for P1-P4 and LWBM-sum, a :class:`SicPovm` for
    P5-P8, APXA-max and ENT-G (ENT-G takes the bipartite state on
    H (x) H), and a pair of rank-one measurements for P9 and
    APXB-riesz.  ``eta`` switches P1/P6 to the detector-inefficiency
    variant.
    """
    if which not in PROPOSITION_LABELS:
        raise DomainError(f"unknown proposition label {which!r}")
    if eta is not None and which not in ("P1-mub-tsallis", "P6-sic-tsallis"):
        raise DomainError(f"inefficiency model applies to P1/P6 only, not {which}")

    if which == "P1-mub-tsallis":
        mubs = _expect(meas, MubSet, which)
        p2 = purity(rho)
        # bound first: it owns the order-range diagnostics
        if eta is None:
            rhs = mub_tsallis_bound(mubs.dim, mubs.count, alpha, p2)
            lhs = float(np.mean([tsallis(probabilities(b, rho), alpha) for b in mubs]))
        else:
            rhs = mub_tsallis_bound_inefficiency(mubs.dim, mubs.count, alpha, p2, eta)
            lhs = float(
                np.mean([tsallis(distort(probabilities(b, rho), eta), alpha) for b in mubs])
            )
        return make_report(which, lhs, rhs, tolerance)

    if which == "P2-mub-renyi":
        mubs = _expect(meas, MubSet, which)
        lhs = float(np.mean([renyi(probabilities(b, rho), alpha) for b in mubs]))
        rhs = mub_renyi_bound(mubs.dim, mubs.count, alpha, purity(rho))
        return make_report(which, lhs, rhs, tolerance)

    if which == "P3-mub-minent":
        mubs = _expect(meas, MubSet, which)
        lhs = float(np.mean([renyi(probabilities(b, rho), np.inf) for b in mubs]))
        rhs = mub_minentropy_bound(mubs.dim, mubs.count, purity(rho))
        return make_report(which, lhs, rhs, tolerance)

    if which == "P4-mub-sym":
        mubs = _expect(meas, MubSet, which)
        if s is None:
            s = _sym_param_from_alpha(alpha)
        lhs = float(np.mean([symmetrized(probabilities(b, rho), s, kind) for b in mubs]))
        rhs = mub_symmetrized_bound(mubs.dim, s, kind)
        return make_report(which, lhs, rhs, tolerance)

    if which == "P5-sic-ic":
        sic = _expect(meas, SicPovm, which)
        lhs = index_of_coincidence(probabilities(sic, rho))
        rhs = (purity(rho) + 1.0) / (sic.dim * (sic.dim + 1.0))
        return make_report(which, lhs, rhs, tolerance, sense="==")

    if which == "P6-sic-tsallis":
        sic = _expect(meas, SicPovm, which)
        p2 = purity(rho)
        if eta is None:
            rhs = sic_tsallis_bound(sic.dim, alpha, p2)
            lhs = tsallis(probabilities(sic, rho), alpha)
        else:
            rhs = sic_tsallis_bound_inefficiency(sic.dim, alpha, p2, eta)
            lhs = tsallis(distort(probabilities(sic, rho), eta), alpha)
        return make_report(which, lhs, rhs, tolerance)

    if which == "P7-sic-renyi":
        sic = _expect(meas, SicPovm, which)
        lhs = renyi(probabilities(sic, rho), alpha)
        rhs = sic_renyi_bound(sic.dim, alpha, purity(rho))
        return make_report(which, lhs, rhs, tolerance)

    if which == "P8-sic-minent":
        sic = _expect(meas, SicPovm, which)
        lhs = renyi(probabilities(sic, rho), np.inf)
        rhs = sic_minentropy_bound(sic.dim, purity(rho))
        return make_report(which, lhs, rhs, tolerance)

    if which == "P9-mu-pair":
        meas_m, meas_n = _expect_pair(meas, which)
        reports = mu_pair_bounds(meas_m, meas_n, rho, alpha=alpha, s=s, tolerance=tolerance)
        if kind == "tsallis":
            return reports.tsallis
        if kind == "renyi":
            return reports.renyi
        raise DomainError(f"unknown entropy kind {kind!r}")

    if which == "LWBM-sum":
        mubs = _expect(meas, MubSet, which)
        return coincidence_sum_check(mubs, rho, tolerance)

    if which == "APXA-max":
        p = probabilities(_as_measurement(meas), rho)
        lhs = float(p.p.max())
        rhs = max_prob_bound(len(p), index_of_coincidence(p))
        return make_report(which, lhs, rhs, tolerance, sense="<=")

    if which == "APXB-riesz":
        meas_m, meas_n = _expect_pair(meas, which)
        return riesz_precondition_check(
            meas_m, meas_n, rho, trials=trials, seed=seed, tolerance=tolerance
        )

    # ENT-G: local import, the entanglement module builds on this one
    from .entanglement import correlation_G, product_sic_povm

    sic = _expect(meas, SicPovm, which)
    joint = product_sic_povm(sic)
    lhs = correlation_G(joint, rho)
    rhs = 2.0 / (sic.dim * (sic.dim + 1.0))
    return make_report(which, lhs, rhs, tolerance, sense="<=")


def _expect(meas, cls, which):
    if not isinstance(meas, cls):
        raise DomainError(f"{which} expects a {cls.__name__}, got {type(meas).__name__}")
    return meas


def _expect_pair(meas, which):
    if not isinstance(meas, (tuple, list)) or len(meas) != 2:
        raise DomainError(f"{which} expects a pair of rank-one measurements")
    return meas[0], meas[1]
