"""Change flags that let a replacement pass skip pairs nothing has touched.

Every relator carries two flags: ``cslp`` (changed since the last pass) and
``ctp`` (changed during the current pass).  A pair in which neither relator
has changed was already searched without success, so searching it again is
pointless.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass
class PassFlags:
    cslp: bool = True
    ctp: bool = False

    @property
    def changed(self) -> bool:
        return self.cslp or self.ctp


class FlagTable:
    """Flags for each relator slot, kept aligned with the relator list."""

    def __init__(self, flags: Iterable[PassFlags] = ()):
        self.flags = list(flags)

    def __len__(self):
        return len(self.flags)

    def __getitem__(self, slot: int) -> PassFlags:
        return self.flags[slot]

    def __repr__(self):
        return "FlagTable([%s])" % ", ".join(
            f"({int(f.cslp)},{int(f.ctp)})" for f in self.flags)

    def _check(self, slot: int):
        if not 0 <= slot < len(self.flags):
            raise IndexError(f"no relator slot {slot}")

    def mark_elimination_change(self, slot: int):
        self._check(slot)
        self.flags[slot].cslp = True

    def mark_pass_change(self, slot: int):
        self._check(slot)
        self.flags[slot].ctp = True

    def should_search(self, i: int, j: int) -> bool:
        # ctp counts too: a relator rewritten earlier in this pass has new
        # contents that no earlier pass has seen
        return self.flags[i].changed or self.flags[j].changed

    def end_pass(self):
        for f in self.flags:
            f.cslp = f.ctp
            f.ctp = False

    def add(self, flags: PassFlags | None = None) -> int:
        self.flags.append(flags or PassFlags())
        return len(self.flags) - 1

    def regroup(self, groups: Sequence[Sequence[int]]):
        """Rebuild after sorting/dedup: slot ``k`` merges old slots ``groups[k]``."""
        old = self.flags
        self.flags = [PassFlags(any(old[i].cslp for i in g), any(old[i].ctp for i in g))
                      for g in groups]


def init_flags(p) -> FlagTable:
    """Fresh table with ``cslp`` set everywhere; ``p`` is a presentation or a count."""
    n = p if isinstance(p, int) else len(p.relators)
    return FlagTable(PassFlags(True, False) for _ in range(n))
