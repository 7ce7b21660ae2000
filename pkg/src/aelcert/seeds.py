"""Deterministic seed derivation: one root seed, per-component streams."""

from __future__ import annotations

import hashlib


def derive_seed(root_seed: int, *labels) -> int:
    """Derive a 64-bit seed from the root seed and a component label path.

    The derivation is a hash of the textual path, so execution order and
    parallelism cannot change which stream a component receives.
    """
    text = ":".join([str(root_seed), *map(str, labels)])
    digest = hashlib.sha256(text.encode()).digest()
    return int.from_bytes(digest[:8], "big")
