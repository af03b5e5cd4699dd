"""Command-line entry point: ``pyphonon solve|sweep|train|eval|predict|curve``.

Exit codes are 0 on success, 2 when a solver, dataset or model error stops the
run and 64 for usage errors (bad flags, invalid values, bad config files).
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, NoReturn, Optional, Sequence

import yaml

from pyphonon.api.detector import Detector
from pyphonon.api.solver import Solver
from pyphonon.api.sweeps import Sweeps
from pyphonon.const import (
    DEFAULT_DELTA,
    DEFAULT_EPS_A,
    DEFAULT_EPS_B,
    DEFAULT_GAMMA,
    DEFAULT_HIDDEN,
    DEFAULT_J,
    DEFAULT_N_CAV,
    DEFAULT_N_MECH,
    DEFAULT_N_TH,
    DEFAULT_SAMPLES,
    DEFAULT_SPLIT,
    JOBS_ENV_VAR,
    ExitCode,
    SamplingMode,
    SteadyStateMethod,
    __version__,
)
from pyphonon.dataset import SweepRanges, read_csv, write_csv, write_rejects
from pyphonon.dataset.io import fmt, rejects_path, write_table
from pyphonon.dataset.sampling import Interval
from pyphonon.exceptions import BaseException, ConfigException
from pyphonon.network import TrainOptions, write_history
from pyphonon.params import EffectiveParams, HilbertDims
from pyphonon.presets import CURVE_PRESETS, FIGURE_PRESETS

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class UsageError(Exception):
    """Invalid command line or config file."""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE_ERROR.value, f"{self.prog}: error: {message}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(build_parser(), argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    except UsageError as error:
        print(f"pyphonon: error: {error}", file=sys.stderr)
        return ExitCode.USAGE_ERROR.value

    configure_logging(args.verbose)
    try:
        args.handler(args)
    except ConfigException as error:
        print(f"pyphonon: invalid value: {error}", file=sys.stderr)
        return ExitCode.USAGE_ERROR.value
    except BaseException as error:
        logger.debug("run failed", exc_info=True)
        print(f"pyphonon: {type(error).__name__}: {error}", file=sys.stderr)
        return ExitCode.DOMAIN_ERROR.value
    return ExitCode.OK.value


def run() -> NoReturn:
    sys.exit(main())


def configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("pyphonon").setLevel(level)


def parse_args(
    parser: ArgumentParser, argv: Optional[Sequence[str]]
) -> argparse.Namespace:
    """Parse ``argv``, applying ``--config`` values as defaults beneath the flags."""
    argv = list(sys.argv[1:] if argv is None else argv)
    early = ArgumentParser(add_help=False)
    early.add_argument("--config", type=Path)
    known, _ = early.parse_known_args(argv)
    if known.config is not None:
        apply_config(parser, load_config(known.config))
    return parser.parse_args(argv)


def load_config(path: Path) -> dict[str, Any]:
    try:
        with path.open() as stream:
            values = yaml.safe_load(stream) or {}
    except (OSError, yaml.YAMLError) as error:
        raise UsageError(f"cannot read config {path}: {error}") from error
    if not isinstance(values, dict):
        raise UsageError(f"config {path} must be a mapping")
    return values


def apply_config(parser: ArgumentParser, values: dict[str, Any]) -> None:
    """Top-level keys reach every subcommand that has the flag; a mapping under a
    subcommand name reaches that subcommand only."""
    subparsers = _subparsers(parser)
    dests = {name: _dests(sub) for name, sub in subparsers.items()}
    every = set().union(*dests.values())

    shared = {k: v for k, v in values.items() if k not in subparsers}
    unknown = sorted(set(shared) - every)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")

    for name, sub in subparsers.items():
        own = values.get(name) or {}
        if not isinstance(own, dict):
            raise UsageError(f"config section {name!r} must be a mapping")
        unknown = sorted(set(own) - dests[name])
        if unknown:
            raise UsageError(f"unknown {name} config keys: {', '.join(unknown)}")
        defaults = {k: v for k, v in shared.items() if k in dests[name]}
        defaults.update(own)
        sub.set_defaults(**defaults)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="pyphonon",
        description="Phonon-blockade solver, dataset generator and neural detector.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", type=Path, help="YAML file of flag defaults")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="steady state of one parameter point")
    _add_point_flags(solve)
    _add_solver_flags(solve)
    solve.add_argument("--lab-config", type=Path, help="YAML file of LabParams")
    solve.add_argument(
        "--converge",
        type=float,
        metavar="REL_TOL",
        help="grow the truncation until g2b changes by less than REL_TOL",
    )
    solve.set_defaults(handler=cmd_solve)

    sweep = commands.add_parser("sweep", help="label a parameter sweep")
    _add_range_flags(sweep)
    _add_solver_flags(sweep)
    sweep.add_argument("--n", type=int, help=f"points (default {DEFAULT_SAMPLES})")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--grid", action="store_true", help="grid instead of uniform")
    sweep.add_argument("--fig", choices=tuple(FIGURE_PRESETS), help="figure preset")
    _add_jobs_flag(sweep)
    sweep.add_argument("--progress", action="store_true")
    sweep.add_argument("--out", type=Path, required=True)
    sweep.set_defaults(handler=cmd_sweep)

    train = commands.add_parser("train", help="train the detector on a dataset CSV")
    train.add_argument("data", type=Path)
    train.add_argument("--model-out", type=Path, required=True)
    train.add_argument("--history-out", type=Path)
    train.add_argument("--hidden", type=int, default=DEFAULT_HIDDEN)
    train.add_argument("--seed", type=int, default=0, help="weight init seed")
    train.add_argument("--split-seed", type=int, default=0)
    train.add_argument(
        "--fractions", type=float, nargs=3, default=list(DEFAULT_SPLIT)
    )
    defaults = TrainOptions()
    for name in (
        "lambda0",
        "lambda_up",
        "lambda_down",
        "lambda_max",
        "grad_tol",
        "mse_tol",
    ):
        train.add_argument(
            f"--{name.replace('_', '-')}", type=float, default=getattr(defaults, name)
        )
    train.add_argument("--max-iters", type=int, default=defaults.max_iters)
    train.add_argument("--val-patience", type=int, default=defaults.val_patience)
    train.set_defaults(handler=cmd_train)

    evaluate = commands.add_parser("eval", help="MSE of a model on a dataset CSV")
    evaluate.add_argument("--model", type=Path, required=True)
    evaluate.add_argument("data", type=Path)
    evaluate.add_argument("--out", type=Path, help="predicted-vs-real CSV")
    evaluate.set_defaults(handler=cmd_eval)

    predict = commands.add_parser("predict", help="predict log10 g2b from features")
    predict.add_argument("--model", type=Path, required=True)
    predict.add_argument("--p", type=float, required=True)
    predict.add_argument("--q", type=float, required=True)
    predict.add_argument("--n-c", type=float, required=True)
    predict.set_defaults(handler=cmd_predict)

    curve = commands.add_parser("curve", help="real and predicted curve of a preset")
    curve.add_argument("--model", type=Path, required=True)
    curve.add_argument("--fig", choices=CURVE_PRESETS, required=True)
    _add_solver_flags(curve)
    _add_jobs_flag(curve)
    curve.add_argument("--out", type=Path, required=True)
    curve.set_defaults(handler=cmd_curve)

    return parser


def cmd_solve(args: argparse.Namespace) -> None:
    dims = HilbertDims(args.n_cav, args.n_mech)
    solver = Solver(dims, args.method)
    if args.lab_config is not None:
        params, report = solver.from_lab(args.lab_config)
        if not report.ok:
            print("validity: " + "; ".join(report.warnings))
    else:
        delta_a = args.delta if args.delta_a is None else args.delta_a
        delta_b = args.delta if args.delta_b is None else args.delta_b
        params = EffectiveParams(
            delta_a=delta_a,
            delta_b=delta_b,
            J=complex(args.J, args.J_im) if args.J_im else args.J,
            eps_a=args.eps_a,
            eps_b=args.eps_b,
            gamma=args.gamma,
            n_th=args.n_th,
        )

    if args.converge is not None:
        dims = solver.converge(params, rel_tol=args.converge)
        solver = Solver(dims, args.method)
    print(solver.get(params))
    print(f"dims: {dims}")


def cmd_sweep(args: argparse.Namespace) -> None:
    _check_jobs(args.jobs)
    dims = HilbertDims(args.n_cav, args.n_mech)
    sweeps = Sweeps(dims, args.method)
    if args.n is not None and args.n < 1:
        raise ConfigException(f"n must be >= 1, got {args.n}")

    if args.fig is not None:
        ds = sweeps.preset(
            args.fig, seed=args.seed, jobs=args.jobs, n=args.n, progress=args.progress
        )
    else:
        ranges = SweepRanges(
            delta=Interval(*args.delta_range),
            J=Interval(*args.J_range),
            eps_a=Interval(*args.eps_a_range),
            eps_b=Interval(*args.eps_b_range),
            gamma=args.gamma,
            n_th=args.n_th,
        )
        mode = SamplingMode.grid if args.grid else SamplingMode.uniform
        ds = sweeps.generate(
            ranges,
            args.n or DEFAULT_SAMPLES,
            args.seed,
            jobs=args.jobs,
            mode=mode.value,
            progress=args.progress,
        )

    write_csv(ds, args.out)
    write_rejects(ds.rejects, rejects_path(args.out))
    print(f"wrote {len(ds)} samples to {args.out} ({len(ds.rejects)} rejected)")


def cmd_train(args: argparse.Namespace) -> None:
    opts = TrainOptions(
        lambda0=args.lambda0,
        lambda_up=args.lambda_up,
        lambda_down=args.lambda_down,
        lambda_max=args.lambda_max,
        max_iters=args.max_iters,
        val_patience=args.val_patience,
        grad_tol=args.grad_tol,
        mse_tol=args.mse_tol,
        seed=args.seed,
    )
    ds = read_csv(args.data)
    detector = Detector()
    _, history, _ = detector.train(
        ds,
        opts,
        hidden_size=args.hidden,
        fractions=tuple(args.fractions),
        split_seed=args.split_seed,
    )
    detector.save(args.model_out)
    history_out = args.history_out or Path(args.model_out).with_suffix(".history.csv")
    write_history(history, history_out)

    final = history.final
    print(
        f"stopped: {history.stop_reason.value} after {history.records[-1].iter} "
        f"iterations (selected {final.iter})"
    )
    print(
        f"mse (raw log10 units): train {final.train_mse:.6g} "
        f"test {final.test_mse:.6g} val {final.val_mse:.6g}"
    )


def cmd_eval(args: argparse.Namespace) -> None:
    detector = Detector()
    detector.load(args.model)
    ds = read_csv(args.data)
    error, predicted = detector.evaluate(ds)
    if args.out is not None:
        write_table(
            args.out,
            ("p", "q", "n_c", "log10_g2", "predicted"),
            ((*sample.x, sample.y, float(y)) for sample, y in zip(ds, predicted)),
        )
    print(f"mse (raw log10 units): {error:.17g}")


def cmd_predict(args: argparse.Namespace) -> None:
    detector = Detector()
    detector.load(args.model)
    y, blockaded = detector.classify(args.p, args.q, args.n_c)
    logger.info("blockade %s", "detected" if blockaded else "not detected")
    print(fmt(y))


def cmd_curve(args: argparse.Namespace) -> None:
    _check_jobs(args.jobs)
    detector = Detector(dims=HilbertDims(args.n_cav, args.n_mech), method=args.method)
    detector.load(args.model)
    rows = detector.curve(args.fig, jobs=args.jobs)
    axis = FIGURE_PRESETS[args.fig]["axes"][0]
    write_table(args.out, (axis, "log10_g2", "predicted"), rows)
    print(f"wrote {len(rows)} points to {args.out}")


def _add_point_flags(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--delta", type=float, default=DEFAULT_DELTA, help="common detuning"
    )
    parser.add_argument("--delta-a", type=float)
    parser.add_argument("--delta-b", type=float)
    parser.add_argument("--J", type=float, default=DEFAULT_J, help="Re J")
    parser.add_argument("--J-im", type=float, default=0.0, help="Im J")
    parser.add_argument("--eps-a", type=float, default=DEFAULT_EPS_A)
    parser.add_argument("--eps-b", type=float, default=DEFAULT_EPS_B)
    parser.add_argument("--gamma", type=float, default=DEFAULT_GAMMA)
    parser.add_argument("--n-th", type=float, default=DEFAULT_N_TH)


def _add_range_flags(parser: ArgumentParser) -> None:
    defaults = SweepRanges()
    for name in ("delta", "J", "eps_a", "eps_b"):
        interval = defaults.interval(name)
        parser.add_argument(
            f"--{name.replace('_', '-')}-range",
            dest=f"{name}_range",
            type=float,
            nargs=2,
            metavar=("LO", "HI"),
            default=[interval.lower, interval.upper],
        )
    parser.add_argument("--gamma", type=float, default=defaults.gamma)
    parser.add_argument("--n-th", type=float, default=defaults.n_th)


def _add_solver_flags(parser: ArgumentParser) -> None:
    parser.add_argument("--n-cav", type=int, default=DEFAULT_N_CAV)
    parser.add_argument("--n-mech", type=int, default=DEFAULT_N_MECH)
    parser.add_argument(
        "--method",
        choices=[method.value for method in SteadyStateMethod],
        default=SteadyStateMethod.direct.value,
    )


def _add_jobs_flag(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--jobs",
        type=int,
        default=_default_jobs(),
        help=f"worker processes (default ${JOBS_ENV_VAR} or 1)",
    )


def _check_jobs(jobs: int) -> None:
    if jobs < 1:
        raise ConfigException(f"jobs must be >= 1, got {jobs}")


def _default_jobs() -> int:
    value = os.environ.get(JOBS_ENV_VAR)
    if value is None:
        return 1
    try:
        jobs = int(value)
    except ValueError:
        raise UsageError(f"{JOBS_ENV_VAR} must be an integer, got {value!r}") from None
    if jobs < 1:
        raise UsageError(f"{JOBS_ENV_VAR} must be >= 1, got {jobs}")
    return jobs


def _subparsers(parser: argparse.ArgumentParser) -> dict[str, argparse.ArgumentParser]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return dict(action.choices)
    return {}


def _dests(parser: argparse.ArgumentParser) -> set[str]:
    return {
        action.dest
        for action in parser._actions
        if action.dest not in ("help", argparse.SUPPRESS) and not action.required
    }
