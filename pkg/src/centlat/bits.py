"""Bitsets over element indices, stored as plain Python ints (bit i <=> element i)."""

import numpy as np


def from_indices(indices):
    b = 0
    for i in indices:
        b |= 1 << i
    return b


def to_indices(bits):
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def from_mask(mask):
    """Convert a numpy boolean vector to a bitset."""
    packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def popcount(bits):
    return bits.bit_count()


def is_subset(a, b):
    return a & ~b == 0


def full(n):
    return (1 << n) - 1


def sort_key(bits):
    """Deterministic order used everywhere: size first, then numeric value."""
    return (popcount(bits), bits)
