"""Words over generators and their formal inverses.

A symbol is a nonzero int: ``k`` stands for generator number ``k`` and ``-k``
for its inverse.  Words and relators are plain tuples of symbols, so they are
hashable, immutable and cheap to compare.

Symbols are ordered ``g1 < g1^-1 < g2 < g2^-1 < ...``; words of equal length
compare positionwise under that order, and relators are ordered by length
first (see :func:`order_key`).
"""
from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def symbol_key(s: int) -> int:
    """Rank of a symbol in the total symbol order."""
    if s > 0:
        return 2 * s - 1
    if s < 0:
        return -2 * s
    raise ValueError("0 is not a symbol")


def key_symbol(k: int) -> int:
    """Inverse of :func:`symbol_key`."""
    return (k + 1) // 2 if k % 2 else -(k // 2)


def order_key(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key for relators: length, then positionwise symbol order."""
    return len(w), tuple(map(symbol_key, w))


def free_reduce(raw: Iterable[int]) -> Word:
    out: list[int] = []
    for s in raw:
        if s == 0:
            raise ValueError("0 is not a symbol")
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def invert(w: Sequence[int]) -> Word:
    return tuple(-s for s in reversed(w))


def rotate(w: Sequence[int], k: int) -> Word:
    """Cyclic permutation of ``w`` starting at position ``k``."""
    if not 0 <= k < max(1, len(w)):
        raise IndexError(f"rotation {k} out of range for word of length {len(w)}")
    w = tuple(w)
    return w[k:] + w[:k]


def cyclic_reduce(w: Sequence[int]) -> Word:
    """Strip matching inverse pairs from the two ends of a freely reduced word."""
    lo, hi = 0, len(w) - 1
    while lo < hi and w[lo] == -w[hi]:
        lo += 1
        hi -= 1
    return tuple(w[lo:hi + 1])


def _least_rotation_keys(keys: tuple[int, ...]) -> tuple[int, ...]:
    n = len(keys)
    doubled = keys + keys
    return min(doubled[i:i + n] for i in range(n))


def canonical_form(raw: Iterable[int]) -> Word:
    """Least word among all rotations of the reduced word and of its inverse.

    >>> canonical_form([2, 1])
    (1, 2)
    >>> canonical_form([-2, -1])
    (1, 2)
    >>> canonical_form([1, -1])
    ()
    """
    w = cyclic_reduce(free_reduce(raw))
    if not w:
        return ()
    direct = tuple(map(symbol_key, w))
    inverse = tuple(map(symbol_key, invert(w)))
    best = min(_least_rotation_keys(direct), _least_rotation_keys(inverse))
    return tuple(map(key_symbol, best))


def is_proper_power(r: Sequence[int]) -> tuple[bool, int]:
    """Return ``(flag, period)``; ``flag`` is true when ``r`` is ``s**k`` with k >= 2.

    ``period`` is the length of the shortest such ``s`` (``len(r)`` if none).
    """
    n = len(r)
    if n == 0:
        raise ValueError("empty relator has no period")
    r = tuple(r)
    for p in range(1, n):
        if n % p == 0 and r[p:] + r[:p] == r:
            return True, p
    return False, n


def exponent_sums(w: Iterable[int], ngens: int) -> list[int]:
    """Signed occurrence count of each generator ``1..ngens``."""
    row = [0] * ngens
    for s in w:
        row[abs(s) - 1] += 1 if s > 0 else -1
    return row


def substitute(w: Sequence[int], gen: int, value: Sequence[int]) -> Word:
    """Replace ``gen`` by ``value`` (and its inverse by ``value``'s inverse) in ``w``."""
    inv = invert(value)
    out: list[int] = []
    for s in w:
        if s == gen:
            out.extend(value)
        elif s == -gen:
            out.extend(inv)
        else:
            out.append(s)
    return tuple(out)
