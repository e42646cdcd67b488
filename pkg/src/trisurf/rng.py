"""Deterministic seed derivation for nested random processes.

Every randomized routine takes a master seed and derives independent
sub-seeds with ``derive_seed(master, *labels)``.  Sub-streams are stable
across platforms and across serial/parallel execution, because the
derivation is a hash of the labels, not a shared mutable RNG.
"""

import hashlib
import random


def derive_seed(*parts) -> int:
    """Hash a label tuple into a 63-bit seed. Stable across runs and OSes."""
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def local_rng(*parts) -> random.Random:
    """A fresh ``random.Random`` seeded from the given label tuple."""
    return random.Random(derive_seed(*parts))


def bernoulli_subset(items, prob: float, rng: random.Random) -> set:
    """Independently keep each item with probability ``prob``.

    Items are visited in sorted order so the draw depends only on the
    RNG state, not on set iteration order.
    """
    return {v for v in sorted(items) if rng.random() < prob}
