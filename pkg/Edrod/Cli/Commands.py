"""
Command-line surface.

Subcommands:
    score      per-sample scores (--explain INDEX prints one local group)
    eval       AUC of one detector, optional score file
    sweep-k    AUC over a K grid (averaged over --instances seeds)
    grid-h     AUC over a kernel-width grid and the best h
    generate   seeded look-alike dataset as CSV
    colorize   top-N four-color confusion classification
    compare    every detector on the same data
    bench      scorer runtime over --n sizes and the fitted log-log slope

Grids accept start:stop:step (stop included when aligned) or a comma list.
Exit codes: 0 success, 1 library error, 2 usage error.
"""
import argparse
import logging
import sys
from datetime import datetime, timezone
from typing import Callable, Dict, List, Optional

from Edrod import __version__
from Edrod.Business.ExperimentBusiness import ExperimentBusiness
from Edrod.Cli.validators import validate_run_args
from Edrod.Data.csv_io import save_csv
from Edrod.Data.synthetic import generate
from Edrod.Data.writers import FORMATS, open_artifact, save_comparison, save_curve, save_scores, to_json
from Edrod.Events.event_dispatcher import EventDispatcher, attach_logging
from Edrod.Exception.EdrodError import EdrodError
from Edrod.Model.DetectorSpec import Distance, Method
from Edrod.Model.KernelSpec import Normalization
from Edrod.Model.RunConfig import RunConfig
from Edrod.Utility.env import load_env_file

logger = logging.getLogger(__name__)

Handler = Callable[[RunConfig, ExperimentBusiness], int]


def _emit(payload) -> None:
    print(to_json(payload))


def HandleScore(config: RunConfig, business: ExperimentBusiness) -> int:
    data = business.LoadDataset(config)
    if config.explain is not None:
        if config.explain >= data.n:
            raise ValueError(f"--explain index {config.explain} is out of range for {data.n} samples")
        _emit(business.Explain(data, config.detector, config.explain))
        return 0
    report = business.Score(data, config.detector)
    save_scores(report, config.output_path, config.output_format, config.to_header())
    return 0


def HandleEval(config: RunConfig, business: ExperimentBusiness) -> int:
    data = business.LoadDataset(config)
    report, result = business.Evaluate(data, config.detector)
    if config.output_path:
        save_scores(report, config.output_path, config.output_format, config.to_header(),
                    trailer=result.to_dict())
    _emit({"method": report.method, **result.to_dict(), "diagnostics": report.diagnostics})
    return 0


def HandleSweepK(config: RunConfig, business: ExperimentBusiness) -> int:
    curve = business.SweepK(config)
    save_curve(curve, config.output_path, config.output_format, config.to_header())
    if config.output_path:
        _emit(curve.summary())
    return 0


def HandleGridH(config: RunConfig, business: ExperimentBusiness) -> int:
    data = business.LoadDataset(config)
    curve, best = business.GridH(data, config.detector, config.h_grid)
    save_curve(curve, config.output_path, config.output_format, config.to_header())
    if config.output_path:
        _emit({"best_h": best, **curve.summary()})
    return 0


def HandleGenerate(config: RunConfig, business: ExperimentBusiness) -> int:
    save_csv(generate(config.synthetic), config.output_path, config.to_header())
    return 0


def HandleColorize(config: RunConfig, business: ExperimentBusiness) -> int:
    data = business.LoadDataset(config)
    report, coloring = business.Colorize(data, config.detector, config.top_n)
    save_scores(report, config.output_path, config.output_format, config.to_header(),
                colors=coloring.per_sample, trailer=coloring.counts())
    if config.output_path:
        _emit(coloring.counts())
    return 0


def HandleCompare(config: RunConfig, business: ExperimentBusiness) -> int:
    if config.input_path:
        datasets = {config.input_path: business.LoadDataset(config)}
    else:
        seeds = [config.seed + i for i in range(config.instances)]
        datasets = {f"seed={seed}": business.LoadDataset(config, seed) for seed in seeds}
    detector = config.detector
    rows, summary = business.Compare(datasets, k=detector.k, bandwidth=detector.bandwidth,
                                     normalization=detector.normalization)
    save_comparison(rows, summary, config.output_path, config.output_format, config.to_header())
    if config.output_path:
        _emit(summary)
    return 0


def HandleBench(config: RunConfig, business: ExperimentBusiness) -> int:
    result = business.Bench(config.n_grid, config.synthetic.dimension, config.repeats, config.seed,
                            config.detector)
    payload = {
        "version": __version__,
        "config": config.to_header(),
        # wall-clock data is confined to this field
        "metadata": {"generated_at": datetime.now(timezone.utc).isoformat()},
        "result": result.to_dict(),
    }
    with open_artifact(config.output_path) as handle:
        handle.write(to_json(payload) + "\n")
    return 0


COMMAND_HELP: Dict[str, str] = {
    "score": "per-sample anomaly scores",
    "eval": "ROC-AUC against ground-truth labels",
    "sweep-k": "AUC over a grid of neighborhood sizes",
    "grid-h": "AUC over a grid of kernel widths (benchmark-only model selection)",
    "generate": "write a seeded look-alike dataset",
    "colorize": "four-color top-N confusion classification",
    "compare": "AUC of every detector on the same data",
    "bench": "scorer runtime and fitted log-log exponent",
}

HANDLERS: Dict[str, Handler] = {
    "score": HandleScore,
    "eval": HandleEval,
    "sweep-k": HandleSweepK,
    "grid-h": HandleGridH,
    "generate": HandleGenerate,
    "colorize": HandleColorize,
    "compare": HandleCompare,
    "bench": HandleBench,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="CSV dataset to read")
    common.add_argument("--kind", choices=("2d", "10d"), help="generate a seeded look-alike instead of --input")
    common.add_argument("--output", help="artifact path (default: stdout)")
    common.add_argument("--format", choices=FORMATS, default="csv", help="artifact format (default: csv)")
    common.add_argument("--detector", choices=[method.value for method in Method], default="edrod")
    common.add_argument("--k", help="neighborhood size; a grid for sweep-k (default 20, sweep 4:140:8)")
    common.add_argument("--h", help="kernel width; a grid for grid-h (default 1.0)")
    common.add_argument("--distance", choices=[distance.value for distance in Distance],
                        help="neighbor metric (default: mahalanobis for edrod, euclidean otherwise)")
    common.add_argument("--normalization", choices=[norm.value for norm in Normalization],
                        help="kernel constant: standard (2pi)^(-d/2) or paper (2pi)^(-d)")
    common.add_argument("--top-n", dest="top_n", type=int, help="samples flagged by colorize (default: anomaly count)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--threads", type=int, help="worker threads (env EDROD_THREADS, default 1)")
    common.add_argument("--n", help="10d sample count; a size grid for bench (default 250,500,1000,2000)")
    common.add_argument("--d", type=int, help="dimension of generated 10d-kind data")
    common.add_argument("--instances", type=int, default=1, help="seeded instances for sweep-k/compare")
    common.add_argument("--label-column", dest="label_column", help="label column name or index in --input (default: a `label` header column)")
    common.add_argument("--no-labels", dest="no_labels", action="store_true",
                        help="--input: drop a `label` header column instead of reading it")
    common.add_argument("--no-header", dest="no_header", action="store_true", help="--input has no header row")
    common.add_argument("--explain", type=int, help="score: print the local group of this sample")
    common.add_argument("--repeats", type=int, default=3, help="bench: timing repeats per size (best kept)")
    common.add_argument("--verbose", action="store_true", help="DEBUG logging on stderr")
    return common


def CreateParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edrod",
        description="Entropy Density Ratio outlier detection and benchmark harness",
        epilog="""
            Examples:
            python main.py generate --kind 2d --seed 42 --output data.csv
            python main.py eval --input data.csv --label-column label --k 20 --h 1.0
            python main.py sweep-k --kind 10d --h 0.36 --k 4:140:8 --instances 10
            python main.py bench --n 250,500,1000,2000 --d 10
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"edrod {__version__}")
    RegisterCommands(parser)
    return parser


def RegisterCommands(parser: argparse.ArgumentParser) -> None:
    common = _common_options()
    commands = parser.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        commands.add_parser(name, parents=[common], help=COMMAND_HELP[name])


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def Run(argv: Optional[List[str]] = None) -> int:
    """Parse, validate and execute one subcommand; returns the process exit code."""
    parser = CreateParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(args.verbose)
    load_env_file()
    try:
        config = validate_run_args(args)
        dispatcher = EventDispatcher()
        if args.verbose:
            attach_logging(dispatcher)
        business = ExperimentBusiness(threads=config.threads, dispatcher=dispatcher)
        return HANDLERS[config.subcommand](config, business)
    except EdrodError as e:
        print(f"edrod: error: {e.diagnostic()}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"edrod: usage error: {e}", file=sys.stderr)
        return 2
    except Exception:
        logger.exception("Unexpected failure")
        return 1
