"""Size caps, overridable through the GLOBALK_CAPS environment variable.

Format: ``order=48,gset=64,gamma=12,window=8,dim=4`` (any subset).
"""

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    order: int = 48
    gset: int = 64
    gamma: int = 12
    window: int = 8
    dim: int = 4


def caps():
    raw = os.environ.get("GLOBALK_CAPS", "").strip()
    c = Caps()
    if not raw:
        return c
    fields = {}
    for part in raw.split(","):
        if not part.strip():
            continue
        k, _, v = part.partition("=")
        k = k.strip()
        if k not in Caps.__dataclass_fields__:
            raise ValueError(f"unknown cap {k!r} in GLOBALK_CAPS")
        fields[k] = int(v)
    return replace(c, **fields)
