"""Tietze transformation engine.

The automatic loop follows the usual order: short eliminations until none
apply, substring replacement passes while they change something, then one
long elimination followed by more passes, repeated until nothing improves.

All four search strategies drive exactly the same sequence of moves; they only
differ in how many relator pairs reach the actual substring search.
"""
from __future__ import annotations

import enum
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .flags import FlagTable, init_flags
from .presentation import AbelianInvariants, Presentation, abelian_invariants, normalize
from .search import apply_replacement, find_useful_match
from .signatures import DEFAULT, SigConfig, cyclic_signature, compatible, pattern_signatures
from .words import Word, canonical_form, invert, order_key, substitute


class Strategy(enum.Enum):
    NAIVE = "naive"
    SIGNATURES = "sig"
    FLAGS = "flags"
    COMBINED = "both"

    @property
    def uses_flags(self) -> bool:
        return self in (Strategy.FLAGS, Strategy.COMBINED)

    @property
    def uses_signatures(self) -> bool:
        return self in (Strategy.SIGNATURES, Strategy.COMBINED)


# --- statistics -------------------------------------------------------------

@dataclass
class PassStats:
    number: int
    pairs_considered: int = 0
    skipped_by_flags: int = 0
    skipped_by_signature: int = 0
    searched: int = 0
    matches: int = 0
    elapsed_ms: float = 0.0


_COUNTERS = ("pairs_considered", "skipped_by_flags", "skipped_by_signature", "searched", "matches")


@dataclass
class SearchStats:
    passes: list[PassStats] = field(default_factory=list)
    elimination_ms: float = 0.0
    signature_ms: float = 0.0
    flag_ms: float = 0.0
    search_ms: float = 0.0

    def __getattr__(self, name):
        if name in _COUNTERS:
            return sum(getattr(p, name) for p in self.passes)
        raise AttributeError(name)

    def totals(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in _COUNTERS}


# --- transformation log -----------------------------------------------------

@dataclass(frozen=True)
class ShortElim:
    generator: int
    relator: Word


@dataclass(frozen=True)
class LongElim:
    generator: int
    relator: Word
    value: Word


@dataclass(frozen=True)
class Replace:
    target: int
    pattern: int
    pattern_relator: Word
    old: Word
    new: Word


@dataclass(frozen=True)
class Dedup:
    relator: Word


@dataclass(frozen=True)
class DropTrivial:
    relator: Word = ()


Move = ShortElim | LongElim | Replace | Dedup | DropTrivial


class TransformLog:
    def __init__(self, moves: Sequence[Move] = ()):
        self.moves: list[Move] = list(moves)

    def append(self, move: Move):
        self.moves.append(move)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def __len__(self):
        return len(self.moves)

    def __getitem__(self, i):
        return self.moves[i]

    def __eq__(self, other):
        return isinstance(other, TransformLog) and self.moves == other.moves

    def __repr__(self):
        return f"TransformLog({len(self.moves)} moves)"

    def count(self, kind: type) -> int:
        return sum(isinstance(m, kind) for m in self.moves)


# --- driver -----------------------------------------------------------------

class VerificationError(AssertionError):
    """A logged move changed the abelian invariants."""


class ReplayError(ValueError):
    """A log entry does not apply to the presentation being replayed."""


@dataclass
class SimplifyOptions:
    max_cycles: int = 1000
    max_growth: int | None = None
    verify: bool = False
    sig: SigConfig = DEFAULT
    # called as on_skip(reason, pattern, target) for every skipped pair
    on_skip: Callable[[str, Word, Word], None] | None = None


@dataclass
class SimplifyResult:
    presentation: Presentation
    stats: SearchStats
    log: TransformLog
    converged: bool
    cycles: int

    def __iter__(self):
        return iter((self.presentation, self.stats, self.log))


def predicted_delta(occurrences: int, relator_length: int) -> int:
    """Length change heuristic for eliminating a generator that occurs
    ``occurrences`` times in total via a relator of ``relator_length``."""
    return (occurrences - 1) * (relator_length - 1) - relator_length


class Simplifier:
    """Mutable working state for one simplification run.

    Owns the relator list, the flag table, the cached target signatures, the
    statistics and the log.  Relators stay sorted between phases; during a
    replacement pass they are rewritten in place and re-sorted at its end.
    """

    def __init__(self, p: Presentation, strategy: Strategy | str = Strategy.COMBINED,
                 options: SimplifyOptions | None = None, flags: FlagTable | None = None,
                 stats: SearchStats | None = None):
        self.strategy = Strategy(strategy)
        self.options = options or SimplifyOptions()
        p = normalize(p)
        self.generators = p.generators
        self.live = list(p.live)
        self.rels: list[Word] = list(p.relators)
        if flags is not None and len(flags) != len(self.rels):
            raise ValueError("flag table does not match relator count")
        self.flags = flags if flags is not None else init_flags(len(self.rels))
        self.sigs: list = [None] * len(self.rels)
        self.stats = stats if stats is not None else SearchStats()
        self.log = TransformLog()
        self.note = p.note
        self._invariants: AbelianInvariants | None = None
        if self.options.verify:
            self._invariants = abelian_invariants(p)

    def presentation(self) -> Presentation:
        return Presentation(self.generators, tuple(self.rels), tuple(self.live), self.note)

    # bookkeeping

    def _record(self, move: Move, state: Sequence[Word] | None = None):
        self.log.append(move)
        if self._invariants is not None:
            rels = self.rels if state is None else state
            got = abelian_invariants(Presentation(self.generators, tuple(rels), tuple(self.live)))
            if got != self._invariants:
                raise VerificationError(f"{move} changed abelian invariants "
                                        f"from {self._invariants} to {got}")

    def _normalize(self):
        kept: list[Word] = []
        groups: dict[Word, list[int]] = {}
        for idx, r in enumerate(self.rels):
            if r and r not in groups:
                groups[r] = [idx]
                kept.append(r)
                continue
            if r:
                groups[r].append(idx)
                move = Dedup(r)
            else:
                move = DropTrivial()
            self._record(move, kept + self.rels[idx + 1:])
        order = sorted(kept, key=order_key)
        self.flags.regroup([groups[r] for r in order])
        self.sigs = [self.sigs[groups[r][0]] for r in order]
        self.rels = order

    def _target_sig(self, j: int):
        sig = self.sigs[j]
        if sig is None:
            sig = self.sigs[j] = cyclic_signature(self.rels[j], self.options.sig)
        return sig

    # eliminations

    def _short_candidate(self) -> tuple[int, int] | None:
        for idx, r in enumerate(self.rels):
            if len(r) > 2:
                break
            if len(r) == 1:
                return idx, abs(r[0])
            if abs(r[0]) != abs(r[1]):
                return idx, max(abs(r[0]), abs(r[1]))
        return None

    def eliminate(self, gen: int, idx: int | None = None, short: bool = False):
        """Solve relator ``idx`` for ``gen`` and substitute it everywhere else.

        ``gen`` must occur exactly once in the relator.  Without ``idx`` the
        shortest such relator is used.
        """
        if idx is None:
            idx = next((i for i, r in enumerate(self.rels)
                        if sum(abs(s) == gen for s in r) == 1), None)
            if idx is None:
                raise ValueError(f"generator {gen} occurs exactly once in no relator")
        R = self.rels[idx]
        pos = [i for i, s in enumerate(R) if abs(s) == gen]
        if len(pos) != 1:
            raise ValueError(f"generator {gen} occurs {len(pos)} times in {R}")
        pos = pos[0]
        rest = R[pos + 1:] + R[:pos]
        value = invert(rest) if R[pos] > 0 else rest

        del self.rels[idx]
        del self.flags.flags[idx]
        del self.sigs[idx]
        self.live[gen - 1] = False
        for k, r in enumerate(self.rels):
            if any(abs(s) == gen for s in r):
                self.rels[k] = canonical_form(substitute(r, gen, value))
                self.flags.mark_elimination_change(k)
                self.sigs[k] = None
        self._record(ShortElim(gen, R) if short else LongElim(gen, R, value))
        self._normalize()

    def short_eliminations(self) -> bool:
        t0 = time.perf_counter()
        changed = False
        while (c := self._short_candidate()) is not None:
            idx, gen = c
            self.eliminate(gen, idx, short=True)
            changed = True
        self.stats.elimination_ms += (time.perf_counter() - t0) * 1e3
        return changed

    def long_candidate(self) -> tuple[int, int, int] | None:
        """Best ``(generator, relator index, predicted delta)`` or ``None``."""
        total = Counter(abs(s) for r in self.rels for s in r)
        cap = self.options.max_growth
        best = None
        for idx, r in enumerate(self.rels):
            n = len(r)
            if n <= 2:
                continue
            for g, c in Counter(abs(s) for s in r).items():
                if c != 1:
                    continue
                delta = predicted_delta(total[g], n)
                if cap is not None and delta > cap:
                    continue
                key = (delta, n, g, idx)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        return best[2], best[3], best[0]

    def long_elimination(self) -> bool:
        t0 = time.perf_counter()
        c = self.long_candidate()
        if c is not None:
            self.eliminate(c[0], c[1])
        self.stats.elimination_ms += (time.perf_counter() - t0) * 1e3
        return c is not None

    # substring replacement

    def replacement_pass(self) -> bool:
        st = PassStats(len(self.stats.passes) + 1)
        self.stats.passes.append(st)
        t_start = time.perf_counter()
        use_flags = self.strategy.uses_flags
        use_sigs = self.strategy.uses_signatures
        cfg = self.options.sig
        on_skip = self.options.on_skip
        clock = time.perf_counter
        rels = self.rels
        changed = False
        n = len(rels)
        for i in range(n):
            pat = rels[i]
            if len(pat) < 2:
                continue
            pkey = order_key(pat)
            psigs = None
            for j in range(i + 1, n):
                while True:
                    tgt = rels[j]
                    # pairs whose target dropped below the pattern wait for the re-sort
                    if not tgt or order_key(tgt) < pkey:
                        break
                    st.pairs_considered += 1
                    if use_flags:
                        t0 = clock()
                        ok = self.flags.should_search(i, j)
                        self.stats.flag_ms += (clock() - t0) * 1e3
                        if not ok:
                            st.skipped_by_flags += 1
                            if on_skip:
                                on_skip("flags", pat, tgt)
                            break
                    if use_sigs:
                        t0 = clock()
                        if psigs is None:
                            psigs = pattern_signatures(pat, cfg)
                        tsig = self._target_sig(j)
                        ok = any(compatible(s, tsig) for s in psigs)
                        self.stats.signature_ms += (clock() - t0) * 1e3
                        if not ok:
                            st.skipped_by_signature += 1
                            if on_skip:
                                on_skip("signature", pat, tgt)
                            break
                    st.searched += 1
                    t0 = clock()
                    m = find_useful_match(pat, tgt, i, j)
                    self.stats.search_ms += (clock() - t0) * 1e3
                    if m is None:
                        break
                    st.matches += 1
                    new = apply_replacement(pat, tgt, m)
                    rels[j] = new
                    self.sigs[j] = None
                    self.flags.mark_pass_change(j)
                    changed = True
                    self._record(Replace(j, i, pat, tgt, new))
        self.flags.end_pass()
        self._normalize()
        st.elapsed_ms = (time.perf_counter() - t_start) * 1e3
        return changed

    def replacement_passes(self) -> bool:
        changed = False
        while self.replacement_pass():
            changed = True
        return changed

    # control loop

    def run(self) -> SimplifyResult:
        cycles = 0
        converged = False
        first = True
        while cycles < self.options.max_cycles:
            cycles += 1
            if self.short_eliminations() or first:
                self.replacement_passes()
            first = False
            if self._short_candidate() is not None:
                continue
            if not self.long_elimination():
                converged = True
                break
            self.replacement_passes()
        return SimplifyResult(self.presentation(), self.stats, self.log, converged, cycles)


# --- module-level operations --------------------------------------------------

def short_eliminations(p: Presentation) -> tuple[Presentation, bool]:
    s = Simplifier(p)
    changed = s.short_eliminations()
    return s.presentation(), changed


def long_elimination(p: Presentation, max_growth: int | None = None) -> tuple[Presentation, bool]:
    s = Simplifier(p, options=SimplifyOptions(max_growth=max_growth))
    changed = s.long_elimination()
    return s.presentation(), changed


def eliminate(p: Presentation, gen: int | str, relator: Sequence[int] | None = None) -> Presentation:
    """Eliminate one chosen generator, optionally via a chosen relator."""
    s = Simplifier(p)
    k = p.index(gen) if isinstance(gen, str) else gen
    idx = None
    if relator is not None:
        idx = s.rels.index(canonical_form(relator))
    s.eliminate(k, idx)
    return s.presentation()


def replacement_pass(p: Presentation, strategy: Strategy | str = Strategy.COMBINED,
                     stats: SearchStats | None = None, flags: FlagTable | None = None,
                     sig: SigConfig = DEFAULT) -> tuple[Presentation, bool]:
    """One pass; ``flags`` (aligned with ``p.relators``) is updated in place."""
    s = Simplifier(p, strategy, SimplifyOptions(sig=sig), flags=flags, stats=stats)
    changed = s.replacement_pass()
    return s.presentation(), changed


def simplify(p: Presentation, strategy: Strategy | str = Strategy.COMBINED,
             options: SimplifyOptions | None = None) -> SimplifyResult:
    return Simplifier(p, strategy, options).run()


# --- replay -------------------------------------------------------------------

def _take(rels: list[Word], r: Word, what: str) -> None:
    try:
        rels.remove(r)
    except ValueError:
        raise ReplayError(f"{what}: relator {r} not present") from None


def replay(p: Presentation, log: TransformLog | Sequence[Move]) -> Presentation:
    """Re-apply every move of ``log`` to ``p``, checking each one as it goes."""
    live = list(p.live)
    rels = list(normalize(p).relators)
    for mv in log:
        if isinstance(mv, (ShortElim, LongElim)):
            g, R = mv.generator, mv.relator
            pos = [i for i, s in enumerate(R) if abs(s) == g]
            if len(pos) != 1 or not live[g - 1]:
                raise ReplayError(f"{mv}: generator not eliminable via this relator")
            if isinstance(mv, ShortElim) and len(R) > 2:
                raise ReplayError(f"{mv}: short elimination needs a relator of length <= 2")
            rest = R[pos[0] + 1:] + R[:pos[0]]
            value = invert(rest) if R[pos[0]] > 0 else rest
            if isinstance(mv, LongElim) and value != mv.value:
                raise ReplayError(f"{mv}: substituted word should be {value}")
            _take(rels, R, str(mv))
            live[g - 1] = False
            rels = [canonical_form(substitute(r, g, value)) if any(abs(s) == g for s in r) else r
                    for r in rels]
        elif isinstance(mv, Replace):
            if mv.pattern_relator not in rels:
                raise ReplayError(f"{mv}: pattern not present")
            m = find_useful_match(mv.pattern_relator, mv.old)
            if m is None or apply_replacement(mv.pattern_relator, mv.old, m) != mv.new:
                raise ReplayError(f"{mv}: replacement does not reproduce the new relator")
            _take(rels, mv.old, str(mv))
            rels.append(mv.new)
        elif isinstance(mv, Dedup):
            if rels.count(mv.relator) < 2:
                raise ReplayError(f"{mv}: relator is not duplicated")
            rels.remove(mv.relator)
        elif isinstance(mv, DropTrivial):
            _take(rels, (), str(mv))
        else:
            raise ReplayError(f"unknown move {mv!r}")
    if () in rels or len(set(rels)) != len(rels):
        raise ReplayError("log leaves duplicate or trivial relators behind")
    return Presentation(p.generators, tuple(sorted(rels, key=order_key)), tuple(live), p.note)
