import os

# Orientation strategies
ORIENTATION_STRATEGIES = [
    "degree",
    "original",
    "kcore",
    "goodrich_pszona",
    "barenboim_elkin"
]

# Short names accepted by the command line --order flag
CLI_ORDER_NAMES = {
    "degree": "degree",
    "original": "original",
    "kcore": "kcore",
    "goodrich": "goodrich_pszona",
    "barenboim": "barenboim_elkin"
}

# Counting parallelism
PARALLELISM_MODES = ["node", "edge", "auto"]
EDGE_PARALLELISM_CUTOFF = 8  # auto picks edge parallelism from this k upwards

# Numeric defaults
DEFAULT_EPSILON = 1.0
DEFAULT_PEEL_EPSILON = 0.5

# Bucketing structure: number of materialized buckets
BUCKET_WINDOW = 128

# Oracle limits
ORACLE_MAX_N_SUBSETS = 16
ORACLE_MAX_N_ENUM = 40

# Run report
REPORT_SCHEMA_VERSION = 1

# File paths
DATA_DIR = os.environ.get("KCLIQUE_DATA_DIR", "data")
RESULTS_DIR = os.environ.get("KCLIQUE_RESULTS_DIR", "results")


def _default_threads():
    value = os.environ.get("KCLIQUE_THREADS")
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            pass
    return os.cpu_count() or 1


DEFAULT_THREADS = _default_threads()


def resolve_threads(threads=None):
    """Return a usable thread count (>= 1), falling back to DEFAULT_THREADS"""
    if threads is None:
        return DEFAULT_THREADS
    return max(1, int(threads))
