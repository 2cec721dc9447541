import os

# defaults shared by the library and the CLI
DEFAULTS = {
    "denominator": 1000,
    "seed": 0,
    "max_equivalence_labels": 64,
    "verbose": False,
}

THREADS_ENV = "COAMOEBA_THREADS"


def get_thread_count() -> int:
    """
    Worker count for the parallel geometric checks, read from COAMOEBA_THREADS (default 1).
    """
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    if threads < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return threads
