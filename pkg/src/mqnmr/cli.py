"""Parameter sweeps over preparation time and inverse temperature, written as CSV.

Examples
--------
Time sweep at beta = 3 with the default coupling ``2 pi 1307 rad/s``::

    mqnmr --mode sweep-tau --beta 3 --tau-max-s 2e-3 --steps 401 --out fig1.csv

Maximal double-quantum intensity and concurrence against beta::

    mqnmr --mode sweep-beta --beta-min 0.1 --beta-max 10 --out fig2.csv
"""
import argparse
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .coherence import coherence_profile
from .entangle import analytic_concurrence, concurrence, entanglement_witness, witness_threshold
from .errors import ConfigError, NumericResidueError
from .evolve import hermitian_eigendecompose, thermal_state
from .model import FIG_COUPLING, PhysicalParams, SpinSystem, beta_from, build_h_mq
from .spinops import matrix_tolerance, total_iz

MODES = ("sweep-tau", "sweep-beta", "single")
DEFAULT_STEPS = 401
DEFAULT_TAU_MAX = 2e-3
AGREEMENT_TOLERANCE = 1e-8

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

VALUE_COLUMNS = (
    "G0",
    "G2",
    "Gm2",
    "G2_plus_Gm2",
    "concurrence_numeric",
    "concurrence_analytic",
    "witness",
)


@dataclass(frozen=True)
class SweepConfig:
    mode: str = "sweep-tau"
    beta: Optional[float] = None
    omega0: Optional[float] = None  # rad/s
    temperature: Optional[float] = None  # K
    b: float = FIG_COUPLING  # rad/s
    tau_max: float = DEFAULT_TAU_MAX
    tau: Optional[float] = None
    beta_min: Optional[float] = None
    beta_max: Optional[float] = None
    steps: int = DEFAULT_STEPS
    out: Optional[str] = None

    def validate(self) -> "SweepConfig":
        if self.mode not in MODES:
            raise ConfigError("mode", f"must be one of {', '.join(MODES)}")
        if not np.isfinite(self.b):
            raise ConfigError("coupling", "must be finite")
        physical = (self.omega0, self.temperature)
        if self.mode == "sweep-beta":
            if self.beta is not None or any(v is not None for v in physical):
                raise ConfigError("beta", "sweep-beta takes --beta-min/--beta-max, not a single beta")
            if self.beta_min is None or self.beta_max is None:
                raise ConfigError("beta_min", "sweep-beta requires --beta-min and --beta-max")
            if not 0 < self.beta_min < self.beta_max:
                raise ConfigError("beta_min", "need 0 < beta_min < beta_max")
            if self.b == 0:
                raise ConfigError("coupling", "must be nonzero to locate the intensity maximum")
        else:
            if self.beta_min is not None or self.beta_max is not None:
                raise ConfigError("beta_min", f"--beta-min/--beta-max only apply to sweep-beta")
            if self.beta is not None and any(v is not None for v in physical):
                raise ConfigError("beta", "give either --beta or --omega0-hz/--temperature-k, not both")
            if self.beta is None:
                if any(v is None for v in physical):
                    raise ConfigError("beta", "need --beta or both --omega0-hz and --temperature-k")
                for name, v in (("omega0", self.omega0), ("temperature", self.temperature)):
                    if not v > 0:
                        raise ConfigError(name, "must be positive")
            elif not self.beta > 0:
                raise ConfigError("beta", "must be positive")
        if self.mode == "single":
            if self.tau is None or not self.tau >= 0:
                raise ConfigError("tau", "single mode needs --tau-s >= 0")
        elif self.mode == "sweep-tau" and not self.tau_max > 0:
            raise ConfigError("tau_max", "must be positive")
        if self.mode != "single" and self.steps < 2:
            raise ConfigError("steps", "sweeps need at least 2 steps")
        return self

    def resolved_beta(self) -> float:
        if self.beta is not None:
            return float(self.beta)
        return beta_from(PhysicalParams(self.omega0, self.temperature))


@dataclass(frozen=True)
class SweepRow:
    axis: str
    value: float
    G0: float
    G2: float
    Gm2: float
    G2_plus_Gm2: float
    concurrence_numeric: float
    concurrence_analytic: float
    witness: float
    threshold: Optional[float] = None

    def header(self) -> list:
        cols = [self.axis, *VALUE_COLUMNS]
        return cols + ["threshold"] if self.threshold is not None else cols

    def values(self) -> list:
        vals = [self.value] + [getattr(self, c) for c in VALUE_COLUMNS]
        return vals + [self.threshold] if self.threshold is not None else vals


class _PairPipeline:
    """Numeric two-spin pipeline with the Hamiltonian diagonalized once."""

    def __init__(self, b):
        self.b = b
        self.spec = hermitian_eigendecompose(build_h_mq(SpinSystem.pair(b)))
        self.iz = total_iz(2)

    def row(self, axis, value, beta, tau, threshold=False):
        rho = self.spec.conjugate(thermal_state(beta, 2), tau)
        ref = self.spec.conjugate(self.iz, tau)
        prof = coherence_profile(rho, ref, beta=beta, tau=tau)
        g_sum = prof.g2_plus_gm2
        c_num = concurrence(rho).concurrence
        c_ana = analytic_concurrence(beta, self.b, tau)
        if abs(c_num - c_ana) > AGREEMENT_TOLERANCE:
            raise NumericResidueError(
                f"numeric concurrence {c_num:.12g} disagrees with closed form {c_ana:.12g} "
                f"at beta={beta}, tau={tau}"
            )
        return SweepRow(
            axis=axis,
            value=value,
            G0=prof[0],
            G2=prof[2],
            Gm2=prof[-2],
            G2_plus_Gm2=g_sum,
            concurrence_numeric=c_num,
            concurrence_analytic=c_ana,
            witness=entanglement_witness(beta, g_sum),
            threshold=witness_threshold(beta) if threshold else None,
        )


def _check_mode(cfg, mode):
    cfg.validate()
    if cfg.mode != mode:
        raise ConfigError("mode", f"expected {mode}, got {cfg.mode}")


def run_sweep_tau(cfg: SweepConfig) -> list:
    """Rows at ``tau_i = i * tau_max / (steps - 1)``, in grid order."""
    _check_mode(cfg, "sweep-tau")
    beta = cfg.resolved_beta()
    pipe = _PairPipeline(cfg.b)
    taus = np.linspace(0.0, cfg.tau_max, cfg.steps)
    return [pipe.row("tau", float(t), beta, float(t)) for t in taus]


def run_sweep_beta(cfg: SweepConfig) -> list:
    """Per beta, the state at the first intensity maximum ``2 b tau = pi/2``.

    There the concurrence and ``G_2 + G_-2`` take their largest values over
    the preparation time; the extra ``threshold`` column is the witness
    threshold curve.
    """
    _check_mode(cfg, "sweep-beta")
    pipe = _PairPipeline(cfg.b)
    tau_peak = np.pi / (4 * abs(cfg.b))
    betas = np.linspace(cfg.beta_min, cfg.beta_max, cfg.steps)
    return [pipe.row("beta", float(bt), float(bt), tau_peak, threshold=True) for bt in betas]


def run_single(cfg: SweepConfig) -> list:
    _check_mode(cfg, "single")
    return [_PairPipeline(cfg.b).row("tau", float(cfg.tau), cfg.resolved_beta(), float(cfg.tau))]


RUNNERS = {"sweep-tau": run_sweep_tau, "sweep-beta": run_sweep_beta, "single": run_single}


def _fmt(x) -> str:
    # + 0.0 folds -0.0 into 0.0
    return format(float(x) + 0.0, ".12g")


def format_csv(rows) -> str:
    if not rows:
        raise ValueError("no rows to write")
    lines = [",".join(rows[0].header())]
    lines.extend(",".join(_fmt(v) for v in row.values()) for row in rows)
    return "\n".join(lines) + "\n"


def emit_csv(rows, path) -> None:
    """Write rows as CSV (UTF-8, LF endings, 12 significant digits).

    ``path`` of ``None`` or ``"-"`` writes to stdout.
    """
    text = format_csv(rows)
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mqnmr",
        description="Double-quantum NMR coherences, concurrence and entanglement witness for a dipolar spin pair.",
        allow_abbrev=False,
    )
    p.add_argument("--mode", choices=MODES, default="sweep-tau")
    p.add_argument("--beta", type=float, help="dimensionless inverse temperature")
    p.add_argument("--omega0-hz", type=float, help="Larmor frequency in Hz (multiplied by 2 pi)")
    p.add_argument("--temperature-k", type=float, help="spin temperature in kelvin")
    cp = p.add_mutually_exclusive_group()
    cp.add_argument("--coupling-rad-s", type=float, help="coupling b in rad/s (default 2 pi 1307)")
    cp.add_argument("--coupling-hz", type=float, help="coupling b in Hz (multiplied by 2 pi)")
    p.add_argument("--tau-max-s", type=float, default=DEFAULT_TAU_MAX)
    p.add_argument("--tau-s", type=float, help="preparation time for --mode single")
    p.add_argument("--beta-min", type=float)
    p.add_argument("--beta-max", type=float)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    return p


def config_from_args(args) -> SweepConfig:
    if args.coupling_rad_s is not None:
        b = args.coupling_rad_s
    elif args.coupling_hz is not None:
        b = 2 * np.pi * args.coupling_hz
    else:
        b = FIG_COUPLING
    return SweepConfig(
        mode=args.mode,
        beta=args.beta,
        omega0=None if args.omega0_hz is None else 2 * np.pi * args.omega0_hz,
        temperature=args.temperature_k,
        b=b,
        tau_max=args.tau_max_s,
        tau=args.tau_s,
        beta_min=args.beta_min,
        beta_max=args.beta_max,
        steps=args.steps,
        out=args.out,
    ).validate()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        matrix_tolerance()
        cfg = config_from_args(args)
        rows = RUNNERS[cfg.mode](cfg)
        emit_csv(rows, cfg.out)
    except ConfigError as exc:
        print(f"mqnmr: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, OSError) as exc:
        print(f"mqnmr: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericResidueError, ArithmeticError) as exc:
        print(f"mqnmr: numeric residue: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
