
from typing import Any, Dict


# Per-detector parameter defaults. Fields a method does not use are kept so a
# DetectorSpec is always fully populated, but the method never reads them.
DEFAULT_DETECTOR_SETTINGS: Dict[str, Dict[str, Any]] = {
    "edrod": {
        "k": 20,
        "bandwidth": 1.0,
        "distance": "mahalanobis",
        "normalization": "standard",
    },
    "knn": {
        "k": 20,
        "bandwidth": 1.0,
        "distance": "euclidean",
        "normalization": "standard",
    },
    # the KDE baseline runs at kernel width 1.0
    "kde": {
        "k": 20,
        "bandwidth": 1.0,
        "distance": "euclidean",
        "normalization": "standard",
    },
    "lof": {
        "k": 20,
        "bandwidth": 1.0,
        "distance": "euclidean",
        "normalization": "standard",
    },
}

DEFAULT_RIDGE_LADDER: Dict[str, Any] = {
    "epsilons": (1e-10, 1e-8, 1e-6, 1e-4),
    "residual_tolerance": 1e-9,
}

# Synthetic look-alikes of the benchmark shapes.
DEFAULT_SYNTHETIC_GEOMETRY: Dict[str, Dict[str, Any]] = {
    "2d": {
        "n_normal": 712,
        "n_point_anomalies": 100,
        "n_cluster_anomalies": 30,
        "dimension": 2,
        "normal_centers": ((-4.0, 3.0), (2.5, 4.0), (-1.5, -3.5)),
        "normal_scales": (1.0, 0.9, 0.8),
        "point_box": (-11.0, 11.0),
        # point anomalies keep at least this many cluster scales from every normal center
        "point_min_separation": 4.0,
        "cluster_center": (6.25, -4.0),
        "cluster_scale": 0.35,
        "cluster_box": ((4.5, 8.0), (-7.0, -1.0)),
    },
    "10d": {
        "n_normal": 270,
        "n_point_anomalies": 30,
        "n_cluster_anomalies": 0,
        "dimension": 10,
        "normal_offset": 2.0,
        "normal_components": 2,
        "normal_scale": 0.3,
        "anomaly_box": (-4.0, 4.0),
    },
}

# contamination shared by the 300- and 700-sample ten-dimensional shapes
TEN_DIM_CONTAMINATION = 0.1

# Target number of float64 elements materialized per row block.
BLOCK_ELEMENT_BUDGET = 1 << 21

ENTROPY_FLOOR = 1e-300

ENV_THREADS = "EDROD_THREADS"

# Grids used when a sweep subcommand gets no explicit grid.
DEFAULT_K_GRID = "4:140:8"
DEFAULT_H_GRID = "0.25,0.5,0.75,1.0,1.5,2.0,2.5,3.0"
DEFAULT_BENCH_N_GRID = "250,500,1000,2000"

# Each bench timing loops the scorer until at least this much wall time has passed.
BENCH_MIN_SECONDS = 0.2
