"""Upper-triangle edge-slot indexing and bit-packed edge masks.

Vertex pairs (i, j) with 1 <= i < j <= n are numbered row-major:
(1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).  Slot s of a mask is
bit ``1 << s``; the same numbering drives the text encoding, the
planarity tables, and census enumeration, so all three agree bit for bit.
"""

from __future__ import annotations

from functools import lru_cache


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Slot of the pair (i, j), requiring 1 <= i < j <= n."""
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def pairs_in_order(n: int) -> tuple[tuple[int, int], ...]:
    """All vertex pairs of {1..n} in slot order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def mask_from_edges(n: int, edges) -> int:
    mask = 0
    for i, j in edges:
        mask |= 1 << pair_index(n, i, j)
    return mask


def edges_from_mask(n: int, mask: int) -> tuple[tuple[int, int], ...]:
    pairs = pairs_in_order(n)
    out = []
    while mask:
        low = mask & -mask
        out.append(pairs[low.bit_length() - 1])
        mask ^= low
    return tuple(out)
