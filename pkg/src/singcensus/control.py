"""Enumeration caps and reproducible per-trial randomness."""

import os
import random

from .errors import CapExceeded

DEFAULT_CAP = 1 << 25

_MASK64 = (1 << 64) - 1


def resolve_cap(explicit=None):
    """Effective enumeration cap: explicit flag > SINGCENSUS_CAP env > default."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("SINGCENSUS_CAP")
    if env:
        return int(env)
    return DEFAULT_CAP


def check_cap(size, cap=None, what="enumeration"):
    cap = resolve_cap(cap)
    if size > cap:
        raise CapExceeded(
            f"{what} needs {size} items, above the cap of {cap}; "
            "pick smaller parameters or raise --cap / SINGCENSUS_CAP"
        )
    return size


def trial_rng(seed, index):
    """Independent stream for one trial; schedule-independent by construction."""
    return random.Random(((seed & _MASK64) << 32) ^ index)


def fresh_seed():
    """Seed to use when the caller did not provide one (echoed for replay)."""
    return random.SystemRandom().randrange(1 << 48)


def rational_json(value):
    """Exact fraction as base-10 string pair for JSON reports."""
    return {"num": str(value.numerator), "den": str(value.denominator)}
