"""Finite presentations and their abelian invariants."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import Word, canonical_form, exponent_sums, order_key


@dataclass(frozen=True)
class AbelianInvariants:
    """Abelianization ``Z^free_rank + Z/t1 + Z/t2 + ...`` with ``t1 | t2 | ...``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Presentation:
    """Generator table plus a sorted, duplicate-free tuple of canonical relators.

    Generator ``k`` (1-based) is named ``generators[k - 1]``.  Eliminated
    generators keep their slot and name but have ``live[k - 1] == False``, so
    symbol numbers stay stable for the lifetime of a simplification run.

    The constructor trusts its input; use :meth:`from_words` to canonicalize
    raw words.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    live: tuple[bool, ...] | None = None
    note: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        if self.live is None:
            object.__setattr__(self, "live", (True,) * len(self.generators))
        else:
            object.__setattr__(self, "live", tuple(bool(x) for x in self.live))
        if len(self.live) != len(self.generators):
            raise ValueError("live mask does not match generator table")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for r in self.relators:
            for s in r:
                k = abs(s)
                if s == 0 or k > len(self.generators) or not self.live[k - 1]:
                    raise ValueError(f"relator references unknown or eliminated generator {s}")

    @classmethod
    def from_words(cls, generators: Sequence[str], words: Iterable[Iterable[int]],
                   live: Sequence[bool] | None = None, note: str | None = None) -> Presentation:
        rels = tuple(canonical_form(w) for w in words)
        return normalize(cls(tuple(generators), rels, None if live is None else tuple(live), note))

    @property
    def live_generators(self) -> list[int]:
        return [k + 1 for k, alive in enumerate(self.live) if alive]

    @property
    def num_live(self) -> int:
        return sum(self.live)

    def name(self, k: int) -> str:
        return self.generators[abs(k) - 1]

    def index(self, name: str) -> int:
        return self.generators.index(name) + 1

    def compact(self) -> Presentation:
        """Drop eliminated generators and renumber the live ones in order."""
        keep = self.live_generators
        relabel = {old: new for new, old in enumerate(keep, 1)}
        rels = [tuple(relabel[abs(s)] if s > 0 else -relabel[abs(s)] for s in r)
                for r in self.relators]
        return Presentation.from_words([self.name(k) for k in keep], rels, note=self.note)

    def __str__(self) -> str:
        from .textio import serialize
        return serialize(self)


def normalize(p: Presentation) -> Presentation:
    """Sort relators by length then symbol order, drop duplicates and empties."""
    rels = sorted({r for r in p.relators if r}, key=order_key)
    return Presentation(p.generators, tuple(rels), p.live, p.note)


def total_length(p: Presentation) -> int:
    return sum(len(r) for r in p.relators)


def occurrence_profile(p: Presentation, gen: int | str) -> list[tuple[int, int]]:
    """Relator indices containing ``gen`` (or its inverse), with occurrence counts."""
    k = p.index(gen) if isinstance(gen, str) and gen in p.generators else gen
    if not isinstance(k, int) or not 1 <= k <= len(p.generators) or not p.live[k - 1]:
        raise KeyError(f"unknown or eliminated generator {gen!r}")
    out = []
    for i, r in enumerate(p.relators):
        c = sum(1 for s in r if abs(s) == k)
        if c:
            out.append((i, c))
    return out


def exponent_matrix(p: Presentation) -> list[list[int]]:
    """Rows are relators, columns are live generators."""
    cols = [k - 1 for k in p.live_generators]
    n = len(p.generators)
    return [[row[c] for c in cols] for row in (exponent_sums(r, n) for r in p.relators)]


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, each entry dividing the next.

    Works on Python ints, so intermediate values never overflow.
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero magnitude in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        dirty = False
        piv = a[t][t]
        for i in range(t + 1, rows):
            q = a[i][t] // piv
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            dirty |= a[i][t] != 0
        for j in range(t + 1, cols):
            q = a[t][j] // piv
            if q:
                for row in a:
                    row[j] -= q * row[t]
            dirty |= a[t][j] != 0
        if dirty:
            continue
        # divisibility: fold an offending row into the pivot row and retry
        bad = next((i for i in range(t + 1, rows)
                    if any(a[i][j] % piv for j in range(t + 1, cols))), None)
        if bad is not None:
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            continue
        diag.append(abs(piv))
        t += 1
    return diag


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    diag = smith_diagonal(exponent_matrix(p))
    return AbelianInvariants(p.num_live - len(diag), tuple(d for d in diag if d > 1))
