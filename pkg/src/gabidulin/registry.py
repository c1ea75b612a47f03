"""
Name-keyed registries for built-in towers and reproduction checks.
"""

import logging
from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger(__name__)


class Registry:
    """Ordered mapping of names to zero-argument builders."""

    def __init__(self, kind: str):
        self.kind = kind
        self.entries: Dict[str, Callable[[], Any]] = {}

    def register(self, name: str, builder: Optional[Callable[[], Any]] = None):
        """Register ``builder`` under ``name``; usable as a decorator."""

        def decorator(func: Callable[[], Any]) -> Callable[[], Any]:
            if name in self.entries:
                logger.warning(f"Replacing {self.kind} {name!r}")
            self.entries[name] = func
            return func

        if builder is not None:
            return decorator(builder)
        return decorator

    def get(self, name: str) -> Callable[[], Any]:
        try:
            return self.entries[name]
        except KeyError:
            raise KeyError(
                f"unknown {self.kind} {name!r}; available: {', '.join(self.names())}"
            ) from None

    def build(self, name: str) -> Any:
        return self.get(name)()

    def names(self) -> List[str]:
        return list(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self.entries


preset_registry = Registry("preset")
repro_registry = Registry("example")
