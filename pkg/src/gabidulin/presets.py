"""
Built-in towers, registered by name in ``preset_registry``.

- ``roots8``: Q -> Q[a]/(a^8 + 1) with θ: a -> a^3 (inadmissible)
- ``kummer``: Q[h]/(h^4 + 1) -> K[a]/(a^8 - 3) with θ: a -> h*a
- ``cyclotomic-p``: Q -> Q[z]/(Φ_p) with θ: z -> z^u, u the least primitive root mod p
"""

import copy
import logging
from typing import Any, Dict, List

from sympy import primitive_root

from .constants import CYCLOTOMIC_PRIMES, FORMAT_VERSION, KUMMER_SPEC, ROOTS8_SPEC
from .registry import preset_registry

logger = logging.getLogger(__name__)


def cyclotomic_spec(p: int) -> Dict[str, Any]:
    """Spec document for the p-th cyclotomic field over Q."""
    u = primitive_root(p)
    degree = p - 1
    image: List[int] = [0] * degree
    if u < degree:
        image[u] = 1
    else:
        # z^(p-1) = -(1 + z + ... + z^(p-2))
        image = [-1] * degree
    logger.debug(f"cyclotomic-{p}: θ(z) = z^{u}")
    return {
        "version": FORMAT_VERSION,
        "levels": [{"generator": "z", "min_poly": [1] * p}],
        "theta_image": image,
    }


preset_registry.register("roots8", lambda: copy.deepcopy(ROOTS8_SPEC))
preset_registry.register("kummer", lambda: copy.deepcopy(KUMMER_SPEC))
for _p in CYCLOTOMIC_PRIMES:
    preset_registry.register(f"cyclotomic-{_p}", lambda p=_p: cyclotomic_spec(p))
