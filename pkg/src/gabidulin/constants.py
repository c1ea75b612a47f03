"""
Package-wide tunables and the data behind the built-in towers.
"""

from pathlib import Path
from typing import Any, Dict

# Random coefficients are drawn from [-DEFAULT_BOX, DEFAULT_BOX]
DEFAULT_BOX = 3
DEFAULT_SEED = 0

FORMAT_VERSION = 1
PRESET_PREFIX = "preset:"

DEFAULT_CACHE_DIR = Path.home() / ".gabidulin_cache"
DEFAULT_CACHE_SIZE_MB = 64

CYCLOTOMIC_PRIMES = (5, 7, 11)

# Spec documents in the on-disk format (see formats.py).
# Q -> Q[a]/(a^8 + 1), theta: a -> a^3
ROOTS8_SPEC: Dict[str, Any] = {
    "version": FORMAT_VERSION,
    "levels": [{"generator": "a", "min_poly": [1, 0, 0, 0, 0, 0, 0, 0, 1]}],
    "theta_image": [0, 0, 0, 1, 0, 0, 0, 0],
}

# Q[h]/(h^4 + 1) -> K[a]/(a^8 - 3), theta: a -> h*a
KUMMER_SPEC: Dict[str, Any] = {
    "version": FORMAT_VERSION,
    "levels": [
        {"generator": "h", "min_poly": [1, 0, 0, 0, 1]},
        {"generator": "a", "min_poly": [-3, 0, 0, 0, 0, 0, 0, 0, 1]},
    ],
    "theta_image": [0, [0, 1, 0, 0], 0, 0, 0, 0, 0, 0],
}
