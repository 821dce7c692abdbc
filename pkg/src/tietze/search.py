"""Circular substring search between two relators.

A match is *useful* when the common substring ``v`` is longer than half the
pattern: if the pattern (or its inverse) reads ``u v`` cyclically and the
target reads ``w v``, then ``v = u^-1`` and the target can be shortened to
``w u^-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Word, canonical_form, invert, is_proper_power


@dataclass(frozen=True)
class MatchSpec:
    pattern_index: int
    target_index: int
    v_length: int
    target_start: int
    pattern_start: int
    pattern_inverted: bool

    def substring(self, target: Sequence[int]) -> Word:
        n = len(target)
        return tuple(target[(self.target_start + i) % n] for i in range(self.v_length))


def useful_length(l: int) -> int:
    """Shortest useful match against a pattern of length ``l``."""
    return l // 2 + 1


def anchors(pattern: Sequence[int]) -> tuple[int, ...]:
    l = len(pattern)
    if is_proper_power(pattern)[0]:
        return (0,)
    return (0, l // 2)


def find_useful_match(pattern: Sequence[int], target: Sequence[int],
                      pattern_index: int = 0, target_index: int = 1) -> MatchSpec | None:
    """First useful match in scan order, extended maximally, or ``None``.

    Scans target offsets in ascending order; at each offset tries the pattern
    anchors (position 0 and the middle, or just 0 for a proper power).  A hit on
    the absolute value fixes the orientation: equal symbols read the pattern
    directly, opposite symbols read its inverse.
    """
    l, n = len(pattern), len(target)
    if l < 2 or n == 0:
        return None
    need = useful_length(l)
    cap = min(l, n)
    if need > cap:
        return None
    pat = tuple(pattern)
    inv = invert(pat)
    anc = anchors(pat)
    heads = [(abs(pat[a]), pat[a], a) for a in anc]
    for t in range(n):
        x = target[t]
        ax = abs(x)
        for absval, sym, a in heads:
            if ax != absval:
                continue
            if x == sym:
                P, ap, inverted = pat, a, False
            else:
                P, ap, inverted = inv, l - 1 - a, True
            back = 0
            while back + 1 < cap and target[(t - back - 1) % n] == P[(ap - back - 1) % l]:
                back += 1
            fwd = 0
            while back + fwd + 1 < cap and target[(t + fwd + 1) % n] == P[(ap + fwd + 1) % l]:
                fwd += 1
            v = back + fwd + 1
            if v >= need:
                return MatchSpec(pattern_index, target_index, v,
                                 (t - back) % n, (ap - back) % l, inverted)
    return None


def apply_replacement(pattern: Sequence[int], target: Sequence[int], m: MatchSpec) -> Word:
    """Canonical form of ``w u^-1`` for the match ``m``."""
    l, n, vl = len(pattern), len(target), m.v_length
    P = invert(pattern) if m.pattern_inverted else tuple(pattern)
    ps = (m.pattern_start + vl) % l
    ts = (m.target_start + vl) % n
    uv = P[ps:] + P[:ps]
    wv = tuple(target[ts:]) + tuple(target[:ts])
    if vl > min(l, n) or uv[l - vl:] != wv[n - vl:]:
        raise RuntimeError(f"inconsistent match {m} for pattern {pattern} and target {target}")
    return canonical_form(wv[:n - vl] + invert(uv[:l - vl]))


def brute_force_oracle(pattern: Sequence[int], target: Sequence[int]) -> MatchSpec | None:
    """Exhaustive search over every start pair and orientation.  Test use only."""
    l, n = len(pattern), len(target)
    if l < 2 or n == 0:
        return None
    need = useful_length(l)
    cap = min(l, n)
    if need > cap:
        return None
    for inverted, P in ((False, tuple(pattern)), (True, invert(pattern))):
        for t in range(n):
            for p in range(l):
                # longest common run from (t, p); a length-L match exists iff run >= L
                run = 0
                while run < cap and target[(t + run) % n] == P[(p + run) % l]:
                    run += 1
                if run >= need:
                    return MatchSpec(0, 1, run, t, p, inverted)
    return None
