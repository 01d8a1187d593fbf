"""
Seeded look-alikes of the benchmark datasets.

Randomness comes from numpy's Philox counter-based bit generator seeded with
`SyntheticSpec.seed`; draws happen in a fixed order (normals, point anomalies,
cluster anomalies), so equal specs give equal datasets on every platform.
Rows are laid out normals first, then point anomalies, then cluster anomalies.
"""
import logging
from typing import Any, Dict, Optional

import numpy as np

from Edrod.Exception.EdrodError import SpecError
from Edrod.Model.Dataset import Dataset
from Edrod.Model.SyntheticSpec import SyntheticKind, SyntheticSpec
from Edrod.Utility.Defaults import DEFAULT_SYNTHETIC_GEOMETRY, TEN_DIM_CONTAMINATION

logger = logging.getLogger(__name__)

# rejection sampling gives up after this many batches
_MAX_REJECTION_ROUNDS = 1000


def _geometry(spec: SyntheticSpec) -> Dict[str, Any]:
    geometry = dict(DEFAULT_SYNTHETIC_GEOMETRY[SyntheticKind(spec.kind).value])
    geometry.update(spec.geometry)
    return geometry


def _validate(spec: SyntheticSpec) -> None:
    for name in ("n_normal", "n_point_anomalies", "n_cluster_anomalies", "dimension"):
        value = getattr(spec, name)
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 0:
            raise SpecError(f"{name} must be a non-negative integer, got {value!r}", location=name)
    if spec.dimension < 1:
        raise SpecError("dimension must be at least 1", location="dimension")
    if spec.n_total < 2:
        raise SpecError(f"a dataset needs at least 2 samples, spec has {spec.n_total}")
    if not 0 <= int(spec.seed) < 2 ** 64:
        raise SpecError(f"seed must be a 64-bit unsigned integer, got {spec.seed}", location="seed")


def _split(total: int, parts: int) -> np.ndarray:
    sizes = np.full(parts, total // parts)
    sizes[: total % parts] += 1
    return sizes


def _rejection_sample(rng: np.random.Generator, count: int, draw, accept) -> np.ndarray:
    accepted = []
    remaining = count
    for _ in range(_MAX_REJECTION_ROUNDS):
        if remaining == 0:
            break
        batch = draw(max(2 * remaining, 16))
        keep = batch[accept(batch)][:remaining]
        accepted.append(keep)
        remaining -= keep.shape[0]
    if remaining:
        raise SpecError(f"could not place {count} samples inside the requested geometry")
    return np.vstack(accepted) if accepted else np.empty((0, 0))


def _two_dim_mixed(spec: SyntheticSpec, rng: np.random.Generator) -> np.ndarray:
    g = _geometry(spec)
    if spec.dimension != 2:
        raise SpecError(f"the 2d kind is two-dimensional, got dimension {spec.dimension}", location="dimension")
    centers = np.asarray(g["normal_centers"], dtype=np.float64)
    scales = np.asarray(g["normal_scales"], dtype=np.float64)
    if centers.ndim != 2 or centers.shape[1] != 2 or scales.shape != (centers.shape[0],):
        raise SpecError("normal_centers must be (c, 2) with one scale per center", location="geometry")
    if np.any(scales <= 0) or g["cluster_scale"] <= 0:
        raise SpecError("cluster scales must be positive", location="geometry")

    blocks = []
    for center, scale, size in zip(centers, scales, _split(spec.n_normal, len(centers))):
        blocks.append(center + scale * rng.standard_normal((size, 2)))

    low, high = g["point_box"]
    if not low < high:
        raise SpecError("point_box must satisfy low < high", location="geometry")
    cluster_center = np.asarray(g["cluster_center"], dtype=np.float64)
    separation = float(g["point_min_separation"])
    # stay clear of every normal cluster core and of the anomaly cluster
    cores = np.vstack([centers, cluster_center])
    radii = separation * np.append(scales, g["cluster_scale"])

    def far_from_cores(batch: np.ndarray) -> np.ndarray:
        gaps = np.linalg.norm(batch[:, None, :] - cores[None, :, :], axis=2)
        return np.all(gaps >= radii, axis=1)

    if spec.n_point_anomalies:
        blocks.append(_rejection_sample(
            rng, spec.n_point_anomalies, lambda m: rng.uniform(low, high, size=(m, 2)), far_from_cores))

    (x_low, x_high), (y_low, y_high) = g["cluster_box"]

    def inside_box(batch: np.ndarray) -> np.ndarray:
        return (batch[:, 0] > x_low) & (batch[:, 0] < x_high) & (batch[:, 1] > y_low) & (batch[:, 1] < y_high)

    if not inside_box(cluster_center[None, :])[0]:
        raise SpecError("cluster_center must lie inside cluster_box", location="geometry")
    if spec.n_cluster_anomalies:
        blocks.append(_rejection_sample(
            rng, spec.n_cluster_anomalies,
            lambda m: cluster_center + g["cluster_scale"] * rng.standard_normal((m, 2)), inside_box))
    return np.vstack([block for block in blocks if block.size])


def _ten_dim_gaussian(spec: SyntheticSpec, rng: np.random.Generator) -> np.ndarray:
    g = _geometry(spec)
    if spec.n_cluster_anomalies:
        raise SpecError("the 10d kind has point anomalies only", location="n_cluster_anomalies")
    components = int(g["normal_components"])
    if components not in (1, 2):
        raise SpecError(f"normal_components must be 1 or 2, got {components}", location="geometry")
    if g["normal_scale"] <= 0:
        raise SpecError("normal_scale must be positive", location="geometry")
    low, high = g["anomaly_box"]
    if not low < high:
        raise SpecError("anomaly_box must satisfy low < high", location="geometry")

    d = spec.dimension
    offset = float(g["normal_offset"])
    blocks = []
    # components sit at +offset and -offset on every axis
    for sign, size in zip((1.0, -1.0), _split(spec.n_normal, components)):
        blocks.append(sign * offset + g["normal_scale"] * rng.standard_normal((size, d)))
    blocks.append(rng.uniform(low, high, size=(spec.n_point_anomalies, d)))
    return np.vstack([block for block in blocks if block.size])


def generate(spec: SyntheticSpec) -> Dataset:
    """Labelled dataset for `spec`; labels are 1 for every anomaly row."""
    _validate(spec)
    rng = np.random.Generator(np.random.Philox(int(spec.seed)))
    kind = SyntheticKind(spec.kind)
    if kind is SyntheticKind.TWO_DIM_MIXED:
        samples = _two_dim_mixed(spec, rng)
    else:
        samples = _ten_dim_gaussian(spec, rng)
    labels = np.concatenate((np.zeros(spec.n_normal, dtype=np.int64), np.ones(spec.n_anomalies, dtype=np.int64)))
    logger.info("Generated %s dataset: %d normal, %d anomalous (seed %d)",
                kind.value, spec.n_normal, spec.n_anomalies, spec.seed)
    return Dataset(samples=samples, labels=labels)


def default_spec(kind, seed: int = 42, n_samples: Optional[int] = None,
                 dimension: Optional[int] = None) -> SyntheticSpec:
    """Benchmark-shaped spec. For the 10d kind, `n_samples` keeps the 10% contamination."""
    kind = SyntheticKind(kind)
    defaults = DEFAULT_SYNTHETIC_GEOMETRY[kind.value]
    n_normal = defaults["n_normal"]
    n_point = defaults["n_point_anomalies"]
    n_cluster = defaults["n_cluster_anomalies"]
    if n_samples is not None:
        if kind is SyntheticKind.TWO_DIM_MIXED:
            raise SpecError("the 2d look-alike has a fixed size", location="n_samples")
        n_point = int(round(n_samples * TEN_DIM_CONTAMINATION))
        n_normal = int(n_samples) - n_point
    if dimension is not None and kind is SyntheticKind.TWO_DIM_MIXED and dimension != 2:
        raise SpecError("the 2d look-alike is two-dimensional", location="dimension")
    return SyntheticSpec(
        kind=kind,
        n_normal=n_normal,
        n_point_anomalies=n_point,
        n_cluster_anomalies=n_cluster,
        dimension=defaults["dimension"] if dimension is None else int(dimension),
        seed=int(seed),
    )
