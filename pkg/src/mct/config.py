from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .rooting import DEFAULT_ENUMERATION_CAP, DEFAULT_ORDER_SAMPLES, DEFAULT_STREAM_LIMIT
from .generators import DEFAULT_POINT_CAP
from .lattice import DEFAULT_LATTICE_CAP


@dataclass(frozen=True)
class Config:
    primes: tuple[int, ...] = (2, 3, 5)
    lattice_cap: int = DEFAULT_LATTICE_CAP
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    order_samples: int = DEFAULT_ORDER_SAMPLES
    stream_limit: int = DEFAULT_STREAM_LIMIT
    point_cap: int = DEFAULT_POINT_CAP
    seed: int = 0
    output_format: str = "json"

    @classmethod
    def from_env(cls, **overrides) -> Config:
        cfg = cls()
        env_seed = os.environ.get("MCT_SEED")
        if env_seed is not None:
            cfg = replace(cfg, seed=int(env_seed))
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(cfg, **overrides)
