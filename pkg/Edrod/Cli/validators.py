"""Argument validation: turns parsed CLI arguments into a RunConfig or raises ValueError."""
import math
from argparse import Namespace
from typing import Optional, Tuple

from Edrod.Data.synthetic import default_spec
from Edrod.Model.DetectorSpec import DetectorSpec
from Edrod.Model.RunConfig import RunConfig
from Edrod.Utility.Defaults import DEFAULT_BENCH_N_GRID, DEFAULT_H_GRID, DEFAULT_K_GRID
from Edrod.Utility.env import resolve_threads

DATA_SUBCOMMANDS = ("score", "eval", "sweep-k", "grid-h", "colorize", "compare")
LABELLED_SUBCOMMANDS = ("eval", "sweep-k", "grid-h", "colorize", "compare")

# relative slack when deciding whether stop lies on the float grid
_GRID_TOLERANCE = 1e-9


def _split_range(text: str) -> Optional[Tuple[str, str, str]]:
    parts = text.split(":")
    if len(parts) == 1:
        return None
    if len(parts) != 3 or not all(part.strip() for part in parts):
        raise ValueError(f"grid {text!r} must be start:stop:step or a comma list")
    return parts[0], parts[1], parts[2]


def _increasing(values, text: str):
    if not values:
        raise ValueError(f"grid {text!r} is empty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"grid {text!r} must be strictly increasing")
    return tuple(values)


def parse_int_grid(text: str) -> Tuple[int, ...]:
    """'4:140:8' -> 4, 12, ..., 140 (stop included when aligned); '250,500' -> 250, 500."""
    try:
        spans = _split_range(text)
        if spans is None:
            values = [int(part) for part in text.split(",")]
        else:
            start, stop, step = (int(part) for part in spans)
            if step <= 0 or stop < start:
                raise ValueError(f"grid {text!r} needs step > 0 and start <= stop")
            values = list(range(start, stop + 1, step))
    except ValueError as e:
        if "grid" in str(e):
            raise
        raise ValueError(f"grid {text!r} must contain integers")
    return _increasing(values, text)


def parse_float_grid(text: str) -> Tuple[float, ...]:
    """Same syntax as parse_int_grid for reals; values are rounded to 12 decimals."""
    try:
        spans = _split_range(text)
        if spans is None:
            values = [float(part) for part in text.split(",")]
        else:
            start, stop, step = (float(part) for part in spans)
            if not step > 0 or stop < start:
                raise ValueError(f"grid {text!r} needs step > 0 and start <= stop")
            count = int(math.floor((stop - start) / step + _GRID_TOLERANCE)) + 1
            values = [round(start + i * step, 12) for i in range(count)]
    except ValueError as e:
        if "grid" in str(e):
            raise
        raise ValueError(f"grid {text!r} must contain numbers")
    if not all(math.isfinite(value) for value in values):
        raise ValueError(f"grid {text!r} must be finite")
    return _increasing(values, text)


def _single_int(text: Optional[str], name: str) -> Optional[int]:
    if text is None:
        return None
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"--{name} must be a single integer for this subcommand, got {text!r}")


def _single_float(text: Optional[str], name: str) -> Optional[float]:
    if text is None:
        return None
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"--{name} must be a single number for this subcommand, got {text!r}")


def validate_run_args(args: Namespace) -> RunConfig:
    command = args.command
    if args.top_n is not None and args.top_n < 1:
        raise ValueError("--top-n must be at least 1")
    if args.instances < 1:
        raise ValueError("--instances must be at least 1")
    if args.repeats < 1:
        raise ValueError("--repeats must be at least 1")
    if args.explain is not None and args.explain < 0:
        raise ValueError("--explain must be a sample index")
    if args.seed < 0:
        raise ValueError("--seed must be non-negative")
    if command == "compare" and args.distance is not None:
        raise ValueError("compare runs every detector with its default distance; drop --distance")
    if args.no_labels and args.label_column is not None:
        raise ValueError("--no-labels and --label-column are mutually exclusive")
    threads = resolve_threads(args.threads)

    k_grid: Tuple[int, ...] = ()
    h_grid: Tuple[float, ...] = ()
    n_grid: Tuple[int, ...] = ()
    k = bandwidth = None
    if command == "sweep-k":
        k_grid = parse_int_grid(args.k or DEFAULT_K_GRID)
        bandwidth = _single_float(args.h, "h")
    elif command == "grid-h":
        h_grid = parse_float_grid(args.h or DEFAULT_H_GRID)
        k = _single_int(args.k, "k")
    else:
        k = _single_int(args.k, "k")
        bandwidth = _single_float(args.h, "h")
    if command == "bench":
        n_grid = parse_int_grid(args.n or DEFAULT_BENCH_N_GRID)
        if n_grid[0] < 2:
            raise ValueError("--n sizes must be at least 2")
    if args.explain is not None and args.detector != "edrod":
        raise ValueError("--explain shows an EDROD local group; use --detector edrod")

    detector = DetectorSpec.for_method(args.detector, k=k, bandwidth=bandwidth,
                                       distance=args.distance, normalization=args.normalization)

    synthetic = None
    if command in DATA_SUBCOMMANDS or command == "generate":
        if args.input and args.kind:
            raise ValueError("--input and --kind are mutually exclusive")
        kind = args.kind or ("2d" if command == "generate" else None)
        if not args.input and not kind:
            raise ValueError(f"{command} needs --input PATH or --kind {{2d,10d}}")
        if kind:
            synthetic = default_spec(kind, args.seed, n_samples=_single_int(args.n, "n"), dimension=args.d)
        if args.instances > 1 and args.input:
            raise ValueError("--instances needs generated data (--kind)")
    if command in ("generate", "bench") and args.input:
        raise ValueError(f"{command} does not read --input")
    if command == "bench":
        synthetic = default_spec("10d", args.seed, dimension=args.d)

    return RunConfig(
        subcommand=command,
        detector=detector,
        input_path=args.input,
        synthetic=synthetic,
        output_path=args.output,
        output_format=args.format,
        seed=args.seed,
        k_grid=k_grid,
        h_grid=h_grid,
        n_grid=n_grid,
        top_n=args.top_n,
        instances=args.instances,
        label_column=args.label_column,
        has_header=not args.no_header,
        ignore_labels=args.no_labels,
        explain=args.explain,
        repeats=args.repeats,
        threads=threads,
    )
