# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Utility functions for pmmeas: subset bitmasks, seeding and formatting."""

import zlib
from datetime import datetime, timezone
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np


def iter_subsets(mask: int) -> Iterator[int]:
    """All subsets of mask, the empty set first."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def iter_disjoint_pairs(n: int) -> Iterator[Tuple[int, int]]:
    """All ordered pairs (E, F) of disjoint subsets of an n-element set."""
    full = (1 << n) - 1
    for e in range(1 << n):
        for f in iter_subsets(full & ~e):
            yield e, f


def iter_subset_pairs(n: int) -> Iterator[Tuple[int, int]]:
    """All pairs (E, F) with E a subset of F."""
    for f in range(1 << n):
        for e in iter_subsets(f):
            yield e, f


def mask_elements(mask: int) -> List[int]:
    """Indices of the elements in mask, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def format_mask(mask: int, labels: Optional[Sequence[str]] = None) -> str:
    """'{a,c}' style rendering of a subset."""
    names = [labels[i] if labels else str(i) for i in mask_elements(mask)]
    return "{" + ",".join(names) + "}"


def parse_mask(text: str, n: int) -> int:
    """
    Parse a subset given as an integer bitmask ('5', '0b101') or as
    comma-separated element indices in braces ('{0,2}').
    """
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        inner = text[1:-1].strip()
        mask = 0
        for part in filter(None, (p.strip() for p in inner.split(","))):
            idx = int(part)
            if not 0 <= idx < n:
                raise ValueError(f"Element index {idx} outside a universe of size {n}")
            mask |= 1 << idx
        return mask
    mask = int(text, 0)
    if not 0 <= mask < (1 << n):
        raise ValueError(f"Bitmask {text} outside a universe of size {n}")
    return mask


def suite_seed(seed: int, name: str) -> np.random.SeedSequence:
    """Seed sequence of a named task, independent of scheduling order."""
    return np.random.SeedSequence([int(seed) & 0xFFFFFFFF, zlib.crc32(name.encode("utf-8"))])


def rng_for(seed: int, name: str) -> np.random.Generator:
    """Deterministic numpy Generator for a named task."""
    return np.random.default_rng(suite_seed(seed, name))


def format_timestamp(dt: Optional[datetime] = None) -> str:
    """
    Format a datetime as an ISO-8601 UTC string.
    """
    if dt is None:
        dt = datetime.now(timezone.utc)
    return dt.strftime("%Y-%m-%dT%H:%M:%SZ")


def format_duration(seconds: float) -> str:
    """Human-readable elapsed time."""
    if seconds < 1.0:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 60.0:
        return f"{seconds:.1f} s"
    minutes, rest = divmod(seconds, 60.0)
    return f"{int(minutes)} min {rest:.0f} s"


def truncate_text(text: str, max_length: int = 100) -> str:
    """
    Truncate text to max length with ellipsis.
    """
    if len(text) <= max_length:
        return text
    return text[:max_length - 3] + "..."
