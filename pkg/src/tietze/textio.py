"""Text formats for presentations, transformation logs and search statistics.

Explicit format::

    < a, b | a^3, b^3, (a*b)^5 >

Generator names match ``[A-Za-z][A-Za-z0-9_]*``; a word is a ``*``-separated
product of factors, each a name or a parenthesized word with an optional
nonzero integer exponent.  ``1`` denotes the empty word.  ``#`` starts a
comment running to the end of the line.

Compact format: one relator per line written in single letters, lowercase for
a generator and uppercase for its inverse.  An optional header line
``#gens: abe`` fixes the generator list; without it the generators are the
letters that occur, in alphabetical order.
"""
from __future__ import annotations

import csv
import io
import re
import string
from typing import Iterable, Sequence, TextIO

from .driver import (DropTrivial, Dedup, LongElim, Move, Replace, SearchStats, ShortElim,
                     TransformLog)
from .presentation import Presentation
from .words import Word


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<int>-?[0-9]+)
  | (?P<op>[<>|,*^()])
""", re.VERBOSE)


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                self.fail(f"unexpected character {text[pos]!r}", pos)
            if m.lastgroup != "ws":
                kind = m.lastgroup if m.lastgroup != "op" else m.group()
                self.tokens.append((kind, m.group(), pos))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, msg: str, pos: int | None = None):
        if pos is None:
            pos = self.peek()[2]
        raise ParseError(msg, *self.where(pos))

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.next()
        if tok[0] != kind:
            shown = tok[1] or "end of input"
            raise ParseError(f"expected {what}, found {shown!r}", *self.where(tok[2]))
        return tok


class _WordParser:
    def __init__(self, lex: _Lexer, names: dict[str, int]):
        self.lex = lex
        self.names = names

    def word(self) -> list[int]:
        out = self.factor()
        while self.lex.peek()[0] == "*":
            self.lex.next()
            out += self.factor()
        return out

    def factor(self) -> list[int]:
        lex = self.lex
        kind, text, pos = lex.peek()
        if kind == "(":
            lex.next()
            base = self.word()
            if lex.peek()[0] != ")":
                lex.fail("expected ')' to close parenthesis")
            lex.next()
        elif kind == "name":
            lex.next()
            if text not in self.names:
                lex.fail(f"unknown generator {text!r}", pos)
            base = [self.names[text]]
        elif kind == "int" and text == "1":
            lex.next()
            base = []
        else:
            lex.fail(f"expected generator name or '(', found {text or 'end of input'!r}")
        if lex.peek()[0] == "^":
            lex.next()
            _, etext, epos = lex.expect("int", "integer exponent")
            e = int(etext)
            if e == 0:
                lex.fail("exponent must be nonzero", epos)
            if e < 0:
                base = [-s for s in reversed(base)]
            base = base * abs(e)
        return base


def parse_word(text: str, names: Sequence[str]) -> list[int]:
    """Parse one explicit-format word against a generator name list."""
    lex = _Lexer(text)
    w = _WordParser(lex, {n: k for k, n in enumerate(names, 1)}).word()
    lex.expect("end", "end of word")
    return w


def _parse_explicit(text: str) -> Presentation:
    lex = _Lexer(text)
    lex.expect("<", "'<'")
    names: list[str] = []
    if lex.peek()[0] == "name":
        names.append(lex.next()[1])
        while lex.peek()[0] == ",":
            lex.next()
            _, n, pos = lex.expect("name", "generator name")
            if n in names:
                lex.fail(f"generator {n!r} declared twice", pos)
            names.append(n)
    lex.expect("|", "',' or '|'")
    words = []
    if lex.peek()[0] != ">":
        wp = _WordParser(lex, {n: k for k, n in enumerate(names, 1)})
        words.append(wp.word())
        while lex.peek()[0] == ",":
            lex.next()
            words.append(wp.word())
    lex.expect(">", "',' or '>'")
    lex.expect("end", "end of input")
    return Presentation.from_words(names, words)


def _parse_compact(text: str) -> Presentation:
    gens: list[str] | None = None
    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#gens:"):
            gens = list(line[len("#gens:"):].strip())
            continue
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, raw))
    if gens is None:
        gens = sorted({c.lower() for _, raw in lines for c in raw if c.isalpha()})
    for g in gens:
        if g not in string.ascii_lowercase:
            raise ParseError(f"compact generator {g!r} is not a lowercase letter", 1, 1)
    index = {g: k for k, g in enumerate(gens, 1)}
    words = []
    for lineno, raw in lines:
        w = []
        for col, c in enumerate(raw, 1):
            if c.isspace():
                continue
            k = index.get(c.lower())
            if k is None:
                raise ParseError(f"unknown generator {c!r}", lineno, col)
            w.append(k if c.islower() else -k)
        words.append(w)
    return Presentation.from_words(gens, words)


def detect_format(text: str) -> str:
    for line in text.splitlines():
        s = line.strip()
        if not s or (s.startswith("#") and not s.startswith("#gens:")):
            continue
        return "explicit" if s.startswith("<") else "compact"
    return "compact"


def parse(text: str, format: str = "auto") -> Presentation:
    """Parse a presentation; ``format`` is ``explicit``, ``compact`` or ``auto``."""
    if format == "auto":
        format = detect_format(text)
    if format == "explicit":
        return _parse_explicit(text)
    if format == "compact":
        return _parse_compact(text)
    raise ValueError(f"unknown format {format!r}")


# --- serialization ---------------------------------------------------------------

def format_word(w: Sequence[int], names: Sequence[str]) -> str:
    """Explicit-format word with runs collapsed to powers; ``1`` when empty."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = (j - i) * (1 if w[i] > 0 else -1)
        name = names[abs(w[i]) - 1]
        parts.append(name if run == 1 else f"{name}^{run}")
        i = j
    return "*".join(parts)


def compact_word(w: Sequence[int], letters: Sequence[str]) -> str:
    return "".join(letters[abs(s) - 1] if s > 0 else letters[abs(s) - 1].upper() for s in w)


def serialize(p: Presentation, format: str = "explicit") -> str:
    """Text for ``p`` restricted to its live generators."""
    q = p.compact()
    if format == "explicit":
        names = q.generators
        return "< %s | %s >" % (", ".join(names),
                                ", ".join(format_word(r, names) for r in q.relators))
    if format == "compact":
        if len(q.generators) > 26:
            raise ValueError("compact format holds at most 26 generators")
        letters = list(q.generators)
        if any(len(g) != 1 or g not in string.ascii_lowercase for g in letters):
            letters = list(string.ascii_lowercase[:len(letters)])
        lines = ["#gens: " + "".join(letters)]
        lines += [compact_word(r, letters) for r in q.relators]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")


# --- transformation log ------------------------------------------------------------

def format_move(mv: Move, names: Sequence[str]) -> str:
    w = lambda r: format_word(r, names)
    if isinstance(mv, ShortElim):
        return f"SHORT_ELIM g={names[mv.generator - 1]} via={w(mv.relator)}"
    if isinstance(mv, LongElim):
        return f"LONG_ELIM g={names[mv.generator - 1]} via={w(mv.relator)} subst={w(mv.value)}"
    if isinstance(mv, Replace):
        return (f"REPLACE target={mv.target} pattern={mv.pattern} using={w(mv.pattern_relator)} "
                f"old={w(mv.old)} new={w(mv.new)}")
    if isinstance(mv, Dedup):
        return f"DEDUP rel={w(mv.relator)}"
    if isinstance(mv, DropTrivial):
        return "DROP_TRIVIAL rel=1"
    raise TypeError(f"not a move: {mv!r}")


def format_log(log: Iterable[Move], names: Sequence[str]) -> str:
    return "".join(format_move(mv, names) + "\n" for mv in log)


def _word_field(fields: dict[str, str], key: str, names: Sequence[str]) -> Word:
    from .words import free_reduce
    return free_reduce(parse_word(fields[key], names))


def parse_log(text: str, names: Sequence[str]) -> TransformLog:
    """Inverse of :func:`format_log` for a log written against ``names``."""
    log = TransformLog()
    index = {n: k for k, n in enumerate(names, 1)}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *rest = line.split()
        try:
            fields = dict(item.split("=", 1) for item in rest)
            if keyword == "SHORT_ELIM":
                log.append(ShortElim(index[fields["g"]], _word_field(fields, "via", names)))
            elif keyword == "LONG_ELIM":
                log.append(LongElim(index[fields["g"]], _word_field(fields, "via", names),
                                    _word_field(fields, "subst", names)))
            elif keyword == "REPLACE":
                log.append(Replace(int(fields["target"]), int(fields["pattern"]),
                                   _word_field(fields, "using", names),
                                   _word_field(fields, "old", names),
                                   _word_field(fields, "new", names)))
            elif keyword == "DEDUP":
                log.append(Dedup(_word_field(fields, "rel", names)))
            elif keyword == "DROP_TRIVIAL":
                log.append(DropTrivial())
            else:
                raise ParseError(f"unknown log keyword {keyword!r}", lineno, 1)
        except (KeyError, ValueError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(f"malformed log entry: {e}", lineno, 1) from None
    return log


# --- statistics report -------------------------------------------------------------

STATS_HEADER = ("strategy", "pass_number", "phase", "pairs_considered", "skipped_flags",
                "skipped_sig", "searched", "matches", "elapsed_ms")


def stats_rows(strategy: str, stats: SearchStats) -> list[list]:
    """One row per replacement pass, a summary row, and one row per timed phase."""
    rows = []
    for p in stats.passes:
        rows.append([strategy, p.number, "replace", p.pairs_considered, p.skipped_by_flags,
                     p.skipped_by_signature, p.searched, p.matches, f"{p.elapsed_ms:.3f}"])
    t = stats.totals()
    total_ms = sum(p.elapsed_ms for p in stats.passes) + stats.elimination_ms
    rows.append([strategy, "all", "summary", t["pairs_considered"], t["skipped_by_flags"],
                 t["skipped_by_signature"], t["searched"], t["matches"], f"{total_ms:.3f}"])
    for phase, ms in (("elimination", stats.elimination_ms), ("signatures", stats.signature_ms),
                      ("flags", stats.flag_ms), ("searching", stats.search_ms)):
        rows.append([strategy, "all", phase, 0, 0, 0, 0, 0, f"{ms:.3f}"])
    return rows


def write_stats(out: TextIO, reports: Iterable[tuple[str, SearchStats]]):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(STATS_HEADER)
    for strategy, stats in reports:
        w.writerows(stats_rows(strategy, stats))


def read_stats(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))
