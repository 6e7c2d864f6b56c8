"""Named random streams derived from one seed.

Each stream is keyed by the seed and a tuple of names (suite, trial index, ...),
so trials can run in any order and still draw the same numbers.
"""

from __future__ import annotations

import hashlib
import random

GENERIC_RANGE = 10_000


def stream(seed: int, *names) -> random.Random:
    key = repr((int(seed),) + tuple(str(n) for n in names)).encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:16], "big"))


def generic_int(rng: random.Random, bound: int = GENERIC_RANGE, nonzero: bool = False) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v or not nonzero:
            return v


def distinct_ints(rng: random.Random, count: int, bound: int = GENERIC_RANGE) -> list[int]:
    return rng.sample(range(-bound, bound + 1), count)
