"""Command-line driver: construct measurements and run bound campaigns.

Subcommands:

* ``mub``         -- construct and verify a MUB set, emit it as JSON.
* ``verify``      -- run a Monte-Carlo bound-verification campaign over
  random states and write one CSV row (or JSON record) per check.
* ``coincidence`` -- evaluate both sides of the exact SIC
  index-of-coincidence identity for one state.

Exit codes: 0 all checks passed, 1 a bound check failed, 2 unsupported
or out-of-domain input, 3 I/O failure.  Campaigns with identical
configuration and seed produce bitwise-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import bounds as bnd
from .errors import DomainError, NotASicError, PreconditionError
from .linalg import kron
from .measurements import (
    MubSet,
    SicPovm,
    load_fiducial,
    mub_construct,
    probabilities,
    sic_from_fiducial,
)
from .states import (
    DensityMatrix,
    from_json,
    maximally_mixed,
    purity,
    random_mixed,
    stream,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_UNSUPPORTED = 2
EXIT_IO = 3

# labels whose check depends on an entropic order taken from --alphas
ALPHA_DEPENDENT = (
    "P1-mub-tsallis",
    "P2-mub-renyi",
    "P4-mub-sym",
    "P6-sic-tsallis",
    "P7-sic-renyi",
    "P9-mu-pair",
)
CSV_COLUMNS = (
    "prop",
    "dim",
    "M",
    "alpha",
    "eta",
    "seed",
    "sample",
    "purity",
    "lhs",
    "rhs",
    "margin",
    "saturated",
)

# seed of the fixed unitary that rotates the builtin SIC for pair checks
PAIR_ROTATION_SEED = 20130416


@dataclass
class CampaignConfig:
    """Validated configuration of one verification campaign."""

    dims: list[int]
    props: list[str]
    alphas: list[float]
    samples: int
    seed: int
    eta: float | None = None
    tolerance: float = 1e-10
    out: str | None = None
    fmt: str = "csv"
    count: int | None = None
    fiducial_path: str | None = None
    trials: int = 4

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError(f"samples must be >= 1, got {self.samples}")
        if self.tolerance < 0.0:
            raise DomainError("tolerance must be nonnegative")
        for a in self.alphas:
            if not a > 0.0:
                raise DomainError(f"entropy order must be positive, got {a}")
        for p in self.props:
            if p not in bnd.PROPOSITION_LABELS:
                raise DomainError(f"unknown proposition label {p!r}")
        if self.eta is not None and not 0.0 <= self.eta <= 1.0:
            raise DomainError(f"efficiency must lie in [0, 1], got {self.eta}")


def _parse_alpha(text: str) -> float:
    text = text.strip().lower()
    if text == "inf":
        return math.inf
    try:
        return float(text)
    except ValueError as exc:
        raise DomainError(f"cannot parse entropy order {text!r}") from exc


def _format_alpha(alpha) -> str:
    if alpha is None:
        return ""
    if math.isinf(alpha):
        return "inf"
    return repr(float(alpha))


def _fixed_rotation(d: int) -> np.ndarray:
    """Deterministic unitary used to produce the second measurement of a pair."""
    rng = stream(PAIR_ROTATION_SEED, d)
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


class _MeasurementCache:
    """Per-dimension measurement objects, built once per campaign."""

    def __init__(self, config: CampaignConfig):
        self.config = config
        self.fiducial = None
        if config.fiducial_path is not None:
            vec, scale = load_fiducial(config.fiducial_path)
            self.fiducial = vec
            if abs(scale - 1.0) > 1e-12:
                print(f"fiducial rescaled by factor {scale!r}", file=sys.stderr)
        self._mubs: dict[int, MubSet] = {}
        self._sics: dict[int, SicPovm] = {}
        self._pairs: dict[int, tuple[SicPovm, SicPovm]] = {}

    def mubs(self, d: int) -> MubSet:
        if d not in self._mubs:
            count = self.config.count if self.config.count is not None else d + 1
            self._mubs[d] = mub_construct(d, count)
        return self._mubs[d]

    def sic(self, d: int) -> SicPovm:
        if d not in self._sics:
            if self.fiducial is not None and self.fiducial.size == d:
                self._sics[d] = sic_from_fiducial(d, self.fiducial)
            else:
                self._sics[d] = sic_from_fiducial(d)
        return self._sics[d]

    def pair(self, d: int) -> tuple[SicPovm, SicPovm]:
        if d not in self._pairs:
            base = self.sic(d)
            rotated = SicPovm(base.kets @ _fixed_rotation(d).T)
            self._pairs[d] = (base, rotated)
        return self._pairs[d]


def _campaign_row(cache: _MeasurementCache, d, prop, alpha, sample, rng):
    """Evaluate one check and return (report, csv-ready dict)."""
    config = cache.config
    eta = config.eta if prop in ("P1-mub-tsallis", "P6-sic-tsallis") else None
    if prop == "ENT-G":
        # false-positive check on a random product state
        rank_a = 1 + sample % d
        rank_b = 1 + (sample // d) % d
        rho_a = random_mixed(d, rank_a, rng)
        rho_b = random_mixed(d, rank_b, rng)
        rho = DensityMatrix(kron(rho_a.mat, rho_b.mat))
    else:
        rho = random_mixed(d, 1 + sample % d, rng)

    if prop in ("P1-mub-tsallis", "P2-mub-renyi", "P3-mub-minent", "P4-mub-sym", "LWBM-sum"):
        meas = cache.mubs(d)
        outcomes = cache.mubs(d).count
    elif prop in ("P9-mu-pair", "APXB-riesz"):
        meas = cache.pair(d)
        outcomes = d * d
    elif prop == "ENT-G":
        meas = cache.sic(d)
        outcomes = d**4
    else:
        meas = cache.sic(d)
        outcomes = d * d

    s = None
    if prop in ("P4-mub-sym", "P9-mu-pair") and alpha is not None:
        s = 1.0 - 1.0 / _require_symmetrizable(alpha)

    report = bnd.check_bound(
        meas,
        rho,
        prop,
        alpha=alpha,
        s=s,
        eta=eta,
        trials=config.trials,
        seed=rng,
        tolerance=config.tolerance,
    )
    row = {
        "prop": prop,
        "dim": d,
        "M": outcomes,
        "alpha": _format_alpha(alpha),
        "eta": "" if eta is None else repr(float(eta)),
        "seed": config.seed,
        "sample": sample,
        "purity": repr(purity(rho)),
        "lhs": repr(report.lhs),
        "rhs": repr(report.rhs),
        "margin": repr(report.margin),
        "saturated": "true" if report.saturated else "false",
    }
    return report, row


def _require_symmetrizable(alpha) -> float:
    alpha = float(alpha)
    if math.isinf(alpha) or alpha < 1.0:
        raise DomainError(
            f"P4/P9 rows map alpha to the symmetrized-order parameter s = 1 - 1/alpha; "
            f"need 1 <= alpha < inf, got {alpha}"
        )
    return alpha


def run_campaign(config: CampaignConfig):
    """Execute a campaign; returns (reports, rows) in deterministic order."""
    cache = _MeasurementCache(config)
    reports = []
    rows = []
    for di, d in enumerate(config.dims):
        for pi, prop in enumerate(config.props):
            alphas = config.alphas if prop in ALPHA_DEPENDENT else [None]
            for ai, alpha in enumerate(alphas):
                for sample in range(config.samples):
                    rng = stream(config.seed, di, pi, ai, sample)
                    report, row = _campaign_row(cache, d, prop, alpha, sample, rng)
                    reports.append(report)
                    rows.append(row)
    return reports, rows


def _write_report(rows, summary, out, fmt):
    if fmt == "json":
        payload = json.dumps({"rows": rows, "summary": summary}, indent=2) + "\n"
        if out is None:
            sys.stdout.write(payload)
        else:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(payload)
        return
    target = open(out, "w", encoding="utf-8", newline="") if out else sys.stdout
    try:
        writer = csv.DictWriter(target, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out:
            target.close()


def cmd_verify(args) -> int:
    config = CampaignConfig(
        dims=[int(x) for x in args.dims.split(",") if x],
        props=(
            list(bnd.PROPOSITION_LABELS)
            if args.props.strip().lower() == "all"
            else [x.strip() for x in args.props.split(",") if x.strip()]
        ),
        alphas=[_parse_alpha(x) for x in args.alphas.split(",") if x.strip()],
        samples=args.samples,
        seed=args.seed,
        eta=args.eta,
        tolerance=args.tolerance,
        out=args.out,
        fmt=args.format,
        count=args.count,
        fiducial_path=args.fiducial,
        trials=args.trials,
    )
    reports, rows = run_campaign(config)
    if not reports:
        raise DomainError("campaign is empty: no (dim, proposition, order) cells to run")
    min_margin = min(r.margin for r in reports)
    n_saturated = sum(r.saturated for r in reports)
    n_failed = sum(not r.passed for r in reports)
    summary = {
        "checks": len(reports),
        "failed": n_failed,
        "min_margin": min_margin,
        "saturated": n_saturated,
    }
    _write_report(rows, summary, config.out, config.fmt)
    print(
        f"checks={len(reports)} failed={n_failed} "
        f"min_margin={min_margin!r} saturated={n_saturated}/{len(reports)}"
    )
    return EXIT_VIOLATION if n_failed else EXIT_OK


def cmd_mub(args) -> int:
    mubs = mub_construct(args.dim, args.count)
    worst = 0.0
    target = 1.0 / mubs.dim
    for a in range(mubs.count):
        for b in range(a + 1, mubs.count):
            overlap2 = (
                np.abs(mubs.bases[a].vectors.conj() @ mubs.bases[b].vectors.T) ** 2
            )
            worst = max(worst, float(np.max(np.abs(overlap2 - target))))
    payload = {
        "dim": mubs.dim,
        "count": mubs.count,
        "bases": [
            {"re": b.vectors.real.tolist(), "im": b.vectors.imag.tolist()}
            for b in mubs.bases
        ],
        "max_unbiasedness_deviation": worst,
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(
        f"mub ok: dim={mubs.dim} count={mubs.count} max_unbiasedness_deviation={worst:.3e}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_coincidence(args) -> int:
    d = args.dim
    if args.state is not None:
        with open(args.state, "r", encoding="utf-8") as fh:
            rho = from_json(fh.read())
        if rho.dim != d:
            raise DomainError(f"state dimension {rho.dim} does not match --dim {d}")
    elif args.random_rank is not None:
        rho = random_mixed(d, args.random_rank, args.seed)
    else:
        rho = maximally_mixed(d)
    if args.fiducial is not None:
        vec, _scale = load_fiducial(args.fiducial)
        sic = sic_from_fiducial(d, vec)
    else:
        sic = sic_from_fiducial(d)
    p = probabilities(sic, rho)
    lhs = float(np.sum(p.p**2))
    rhs = (purity(rho) + 1.0) / (d * (d + 1.0))
    residual = abs(lhs - rhs)
    print(f"coincidence dim={d} lhs={lhs!r} rhs={rhs!r} residual={residual:.3e}")
    return EXIT_OK if residual <= args.tolerance else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mubsic",
        description="Measurement construction and entropic-bound verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mub = sub.add_parser("mub", help="construct and verify a MUB set")
    p_mub.add_argument("--dim", type=int, required=True, help="Hilbert-space dimension")
    p_mub.add_argument("--count", type=int, required=True, help="number of bases")
    p_mub.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p_mub.set_defaults(func=cmd_mub)

    p_ver = sub.add_parser("verify", help="run a bound-verification campaign")
    p_ver.add_argument("--dims", default="2,3", help="comma list of dimensions")
    p_ver.add_argument(
        "--props",
        default="all",
        help="comma list of proposition labels, or 'all' "
        f"(available: {', '.join(bnd.PROPOSITION_LABELS)})",
    )
    p_ver.add_argument(
        "--alphas",
        default="2",
        help="comma list of entropy orders ('inf' allowed); alpha=2 is valid "
        "for every order-dependent label",
    )
    p_ver.add_argument("--samples", type=int, default=100, help="random states per cell")
    p_ver.add_argument("--seed", type=int, default=0, help="master seed")
    p_ver.add_argument("--count", type=int, default=None, help="MUB count (default d+1)")
    p_ver.add_argument("--eta", type=float, default=None, help="detector efficiency for P1/P6")
    p_ver.add_argument("--tolerance", type=float, default=1e-10, help="pass threshold")
    p_ver.add_argument("--trials", type=int, default=4, help="random inputs per APXB check")
    p_ver.add_argument("--out", default=None, help="report path (default stdout)")
    p_ver.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ver.add_argument("--fiducial", default=None, help="JSON fiducial for non-builtin dims")
    p_ver.set_defaults(func=cmd_verify)

    p_ic = sub.add_parser("coincidence", help="evaluate the exact SIC coincidence identity")
    p_ic.add_argument("--dim", type=int, required=True)
    p_ic.add_argument("--state", default=None, help="density-matrix JSON file")
    p_ic.add_argument("--random-rank", type=int, default=None, help="sample a random state")
    p_ic.add_argument("--seed", type=int, default=0)
    p_ic.add_argument("--fiducial", default=None, help="JSON fiducial file")
    p_ic.add_argument("--tolerance", type=float, default=1e-10)
    p_ic.set_defaults(func=cmd_coincidence)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, PreconditionError, NotASicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
