"""Deterministic seed derivation so every stage draws from one root seed."""

import hashlib


def derive_seed(root: int, *labels) -> int:
    """Derive a child seed from a root seed and a label path.

    Stable across runs and platforms; used to give each (record, stage,
    round) its own RNG stream without coupling stages to each other.
    """
    text = str(int(root)) + "".join(f"|{lab}" for lab in labels)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
