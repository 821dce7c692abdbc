"""Hashed 2-signatures for refuting substring containment cheaply.

Each adjacent symbol pair ``(x, y)`` hashes to bit ``|x - y| mod m``.  Since a
symbol's inverse is its negation, the pair ``(y^-1, x^-1)`` lands on the same
bit, so signatures do not change when a word is inverted.  Adding the
wraparound pair makes relator signatures rotation invariant too.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .search import useful_length


@dataclass(frozen=True)
class SigConfig:
    m: int = 32

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("signature width must be at least 2")


DEFAULT = SigConfig()


@dataclass(frozen=True, slots=True)
class Signature:
    bits: int
    m: int = 32

    @property
    def positions(self) -> frozenset[int]:
        return frozenset(i for i in range(self.m) if self.bits >> i & 1)


def pair_hash(s1: int, s2: int, cfg: SigConfig = DEFAULT) -> int:
    return abs(s1 - s2) % cfg.m


def cyclic_signature(r: Sequence[int], cfg: SigConfig = DEFAULT) -> Signature:
    n = len(r)
    if n == 0:
        raise ValueError("empty relator has no signature")
    m = cfg.m
    bits = 0
    prev = r[-1]
    for s in r:
        bits |= 1 << (abs(prev - s) % m)
        prev = s
    return Signature(bits, m)


def linear_signature(w: Sequence[int], cfg: SigConfig = DEFAULT) -> Signature:
    if len(w) < 2:
        raise ValueError("linear signature needs at least two symbols")
    m = cfg.m
    bits = 0
    for a, b in zip(w, w[1:]):
        bits |= 1 << (abs(a - b) % m)
    return Signature(bits, m)


def pattern_signatures(pattern: Sequence[int], cfg: SigConfig = DEFAULT) -> list[Signature]:
    """Signature of the shortest useful subword at every cyclic start."""
    l = len(pattern)
    if l < 2:
        raise ValueError("pattern must have length at least 2")
    k = useful_length(l)
    doubled = tuple(pattern) * 2
    return [linear_signature(doubled[p:p + k], cfg) for p in range(l)]


def compatible(s1: Signature, s2: Signature) -> bool:
    """True iff every bit of ``s1`` is set in ``s2``."""
    if s1.m != s2.m:
        raise ValueError(f"signature widths differ: {s1.m} vs {s2.m}")
    return s1.bits & s2.bits == s1.bits


def prefilter(pattern: Sequence[int], target: Sequence[int], cfg: SigConfig = DEFAULT,
              target_sig: Signature | None = None) -> bool:
    """False means no useful match can exist; True decides nothing."""
    if target_sig is None:
        target_sig = cyclic_signature(target, cfg)
    return any(compatible(s, target_sig) for s in pattern_signatures(pattern, cfg))
