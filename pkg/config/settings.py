"""
Configuration settings and constants for the Sierpinski edge-isoperimetry toolkit
"""

import logging
import os
import sys

# Size limits for construction, enumeration and verification
SIZE_LIMITS = {
    "max_m": 36,
    "max_vertices": 2 ** 32,
    "max_enumerable_vertices": 2 ** 24,
    "brute_force_max_vertices": 24,
    "brute_force_max_subsets": 200_000,
    "lemma_max_vertices": 2 ** 16,
    "optimality_max_vertices": 2 ** 12,
    "decomposition_max_vertices": 3 ** 5,
    "sweep_max_vertices": 2 ** 24,
    "calibration_max_vertices": 3 ** 7,
    "edge_scan_max_vertices": 2 ** 16,
}

# Vertices print as concatenated digits up to this alphabet size, dot-separated above
VERTEX_DIGIT_ALPHABET_MAX = 10

# Exit codes of the command-line surface
EXIT_CODES = {
    "ok": 0,
    "violation": 1,
    "usage": 2,
}

OUTPUT_FORMATS = ("text", "json", "csv")
PROFILE_METHODS = ("recurrence", "direct", "brute")
VERIFY_KINDS = ("subadd", "optimal", "lemmas")
STEINER_OPS = ("compress", "compress-inf", "subadd", "reduce")

# Optimality checks above the brute-force cap only look at these many sampled ℓ
OPTIMALITY_SAMPLE_SIZE = 16

# Pair sweeps hand out ℓ_a ranges of this length to each worker task
SWEEP_CHUNK_SIZE = 512

# Default messages
DEFAULT_MESSAGES = {
    "cap_exceeded": "Instance exceeds the configured size cap: {detail}",
    "bad_params": "Invalid parameters: {detail}",
    "bad_set": "Malformed vertex set: {detail}",
    "violation": "Violation detected: {detail}",
    "verified": "Verified {kind} for {count} instance(s) with no violations",
    "steiner_failed": "Steiner operation broke its contract: {detail}",
}


def get_default_jobs() -> int:
    """Worker count for verification sweeps (SIERPINSKI_JOBS, else all CPUs)"""
    value = os.getenv("SIERPINSKI_JOBS")
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            logging.getLogger(__name__).warning(f"Ignoring non-integer SIERPINSKI_JOBS={value!r}")
    return os.cpu_count() or 1


def get_default_seed() -> int:
    """Seed for randomized Steiner demos"""
    try:
        return int(os.getenv("SIERPINSKI_SEED", "0"))
    except ValueError:
        return 0


def get_log_level() -> str:
    """Log level name from SIERPINSKI_LOG_LEVEL"""
    return os.getenv("SIERPINSKI_LOG_LEVEL", "WARNING").upper()


def configure_logging(level: str = None) -> None:
    """
    Configure root logging on stderr so stdout only carries data

    Args:
        level: Level name; falls back to get_log_level()
    """
    logging.basicConfig(
        level=getattr(logging, (level or get_log_level()).upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
