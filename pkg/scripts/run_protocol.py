#!/usr/bin/env python3
"""Run the full look-alike benchmark protocol and write one JSON report.

Covers the 2-D detector comparison, the 10-D K sweeps averaged over seeded
instances, the 300 vs 700 sample check and the runtime scaling fit.

Usage:
    python scripts/run_protocol.py --out reports/protocol.json --threads 4
"""
import argparse
import logging
import os
import sys
from datetime import datetime, timezone

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from Edrod import __version__
from Edrod.Business.ExperimentBusiness import ExperimentBusiness
from Edrod.Cli.validators import parse_float_grid, parse_int_grid
from Edrod.Data.synthetic import default_spec, generate
from Edrod.Data.writers import open_artifact, to_json
from Edrod.Evaluation.sweeps import average_curves, sweep_k
from Edrod.Model.DetectorSpec import DetectorSpec, Method
from Edrod.Utility.Defaults import DEFAULT_BENCH_N_GRID, DEFAULT_H_GRID, DEFAULT_K_GRID
from Edrod.Utility.env import load_env_file, resolve_threads

logger = logging.getLogger("run_protocol")

# kernel width used for the ten-dimensional sweeps
TEN_DIM_BANDWIDTH = 0.36


def two_dim_comparison(business: ExperimentBusiness, seed: int) -> dict:
    data = generate(default_spec("2d", seed))
    edrod = DetectorSpec.for_method(Method.EDROD)
    curve, best_h = business.GridH(data, edrod, parse_float_grid(DEFAULT_H_GRID))
    aucs = {"edrod": float(curve.auc_values.max())}
    for method in (Method.KNN_SUM, Method.KDE_DENSITY, Method.LOF):
        _, result = business.Evaluate(data, DetectorSpec.for_method(method))
        aucs[method.value] = result.auc
    _, coloring = business.Colorize(data, edrod.with_bandwidth(best_h))
    return {"best_h": best_h, "auc": aucs, "coloring": coloring.counts()}


def k_robustness(business: ExperimentBusiness, seed: int, instances: int) -> dict:
    k_grid = parse_int_grid(DEFAULT_K_GRID)
    curves = {Method.EDROD: [], Method.KNN_SUM: [], Method.LOF: []}
    for offset in range(instances):
        data = generate(default_spec("10d", seed + offset))
        for method, collected in curves.items():
            spec = DetectorSpec.for_method(method, bandwidth=TEN_DIM_BANDWIDTH)
            collected.append(sweep_k(data, spec, k_grid, business.threads, business.dispatcher))
    report = {}
    for method, collected in curves.items():
        averaged = average_curves(collected)
        report[method.value] = {
            "mean_auc": averaged.mean_auc,
            "averaged_spread": averaged.spread,
            "mean_instance_spread": sum(curve.spread for curve in collected) / len(collected),
            "curve": dict(zip(averaged.grid.astype(int).tolist(), averaged.auc_values.tolist())),
        }
    return report


def size_robustness(business: ExperimentBusiness, seed: int, instances: int) -> dict:
    spec = DetectorSpec.for_method(Method.EDROD, bandwidth=TEN_DIM_BANDWIDTH)
    means = {}
    for size in (300, 700):
        aucs = []
        for offset in range(instances):
            data = generate(default_spec("10d", seed + offset, n_samples=size))
            aucs.append(business.Evaluate(data, spec)[1].auc)
        means[str(size)] = sum(aucs) / len(aucs)
    return {"mean_auc": means, "difference": means["700"] - means["300"]}


def main():
    parser = argparse.ArgumentParser(description="EDROD look-alike benchmark protocol")
    parser.add_argument("--out", help="report path (default: stdout)")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--instances", type=int, default=10)
    parser.add_argument("--threads", type=int)
    parser.add_argument("--skip-bench", dest="skip_bench", action="store_true")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    load_env_file()
    business = ExperimentBusiness(threads=resolve_threads(args.threads))

    logger.info("2-D comparison")
    results = {"two_dim": two_dim_comparison(business, args.seed)}
    logger.info("K sweeps over %d instances", args.instances)
    results["k_robustness"] = k_robustness(business, args.seed, args.instances)
    results["size_robustness"] = size_robustness(business, args.seed, args.instances)
    if not args.skip_bench:
        logger.info("Runtime scaling")
        results["bench"] = business.Bench(parse_int_grid(DEFAULT_BENCH_N_GRID)).to_dict()

    payload = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "version": __version__,
        "seed": args.seed,
        "instances": args.instances,
        "results": results,
    }
    with open_artifact(args.out) as handle:
        handle.write(to_json(payload) + "\n")


if __name__ == '__main__':
    main()
