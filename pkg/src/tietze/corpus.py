"""Seeded generation of deliberately bad presentations.

:func:`uglify` applies inverse Tietze moves driven by SplitMix64, a 64-bit
generator defined entirely by integer arithmetic, so a given ``(seed, ops)``
produces the same corpus on every platform::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                      # all arithmetic mod 2**64

``below(n)`` is ``next() % n``.
"""
from __future__ import annotations

import string

from .presentation import Presentation
from .textio import parse
from .words import Word, canonical_form, invert

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % n


def random_word(rng: SplitMix64, gens: list[int], length: int) -> Word:
    """Freely reduced word of exactly ``length`` symbols over ``gens``."""
    out: list[int] = []
    while len(out) < length:
        s = gens[rng.below(len(gens))] * (1 if rng.below(2) else -1)
        if out and out[-1] == -s:
            continue
        out.append(s)
    return tuple(out)


def _fresh_name(used: set[str]) -> str:
    for c in string.ascii_lowercase:
        if c not in used:
            return c
    k = len(used) + 1
    while f"x{k}" in used:
        k += 1
    return f"x{k}"


def _occurrences(r: Word, w: Word) -> list[int]:
    """Cyclic start positions of ``w`` inside relator ``r``."""
    n, k = len(r), len(w)
    if k > n:
        return []
    doubled = r + r
    return [i for i in range(n) if doubled[i:i + k] == w]


def uglify(p: Presentation, seed: int, op_count: int) -> Presentation:
    """Apply ``op_count`` group-preserving moves that make ``p`` worse.

    Each step either (a) adds a generator ``g`` with defining relator
    ``g w^-1`` for a random word ``w`` of length 2-5 and rewrites one random
    cyclic occurrence of ``w`` in some relator as ``g``, or (b) replaces a
    relator ``R_j`` by ``R_j c R_i^{+-1} c^-1`` for ``i != j`` and a random
    conjugator ``c`` of length at most 3.  Move (b) needs two relators.
    """
    if op_count < 1:
        raise ValueError("op_count must be at least 1")
    rng = SplitMix64(seed)
    q = p.compact()
    names = list(q.generators)
    rels: list[Word] = list(q.relators)
    for _ in range(op_count):
        gens = list(range(1, len(names) + 1))
        if len(rels) >= 2 and rng.below(2):
            n = len(rels)
            j = rng.below(n)
            i = rng.below(n - 1)
            if i >= j:
                i += 1
            other = rels[i] if rng.below(2) else invert(rels[i])
            c = random_word(rng, gens, rng.below(4))
            rels[j] = canonical_form(rels[j] + c + other + invert(c))
        else:
            w = random_word(rng, gens, 2 + rng.below(4))
            names.append(_fresh_name(set(names)))
            g = len(names)
            hits = [(k, pos) for k, r in enumerate(rels) for pos in _occurrences(r, w)]
            if hits:
                k, pos = hits[rng.below(len(hits))]
                r = rels[k][pos:] + rels[k][:pos]
                rels[k] = canonical_form((g,) + r[len(w):])
            rels.append(canonical_form((g,) + invert(w)))
    return Presentation.from_words(names, rels, note=f"uglify(seed={seed}, ops={op_count})")


TRIANGLE_335 = "< a, b | a^3, b^3, (a*b)^5 >"
FIBONACCI_2_9 = ("< a, b | b*a*b*a*b^2*a*b^2*a^-1*b*a^-2*b*a^-2, "
                 "a*b^2*a*b^2*a*b*a*b^2*a*b*a^2*b^-1*a*b^-1 >")
FIBONACCI_2_9_NINE = "abC\nbcD\ncdE\ndeF\nefG\nfgH\nghI\nhiA\niaB\n"


def corpus_ops(seed: int) -> int:
    """Move count for a corpus seed: 15 for seed 1 rising to 40 for seed 20."""
    return 15 + round((seed - 1) * 25 / 19)


def standard_corpus(seeds=range(1, 21)) -> list[tuple[str, Presentation, Presentation]]:
    """``(name, base, uglified)`` triples; odd seeds use the (3,3,5) triangle
    group, even seeds the two-generator Fibonacci group F(2,9)."""
    bases = {"t335": parse(TRIANGLE_335), "f29": parse(FIBONACCI_2_9)}
    out = []
    for s in seeds:
        key = "t335" if s % 2 else "f29"
        out.append((f"{key}-s{s:02d}", bases[key], uglify(bases[key], s, corpus_ops(s))))
    return out
