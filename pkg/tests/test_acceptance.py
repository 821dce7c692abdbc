"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (the lines are gathered into the terminal summary) or
directly with ``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tietze.cli import REFERENCE_SAVINGS, run_cli
from tietze.corpus import FIBONACCI_2_9_NINE, standard_corpus
from tietze.driver import SimplifyOptions, Strategy, eliminate, replay, simplify
from tietze.presentation import abelian_invariants, total_length
from tietze.search import apply_replacement, brute_force_oracle, find_useful_match
from tietze.signatures import SigConfig, cyclic_signature, prefilter
from tietze.textio import parse
from tietze.words import canonical_form, invert

from conftest import cf, w

REPORT: list[str] = []


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    REPORT.append(line)
    print(line, flush=True)
    return ok


def reduced_word(rng, length, ngens):
    """Uniform cyclically reduced word of exactly ``length`` symbols."""
    while True:
        out = []
        while len(out) < length:
            s = rng.choice((1, -1)) * rng.randint(1, ngens)
            if out and out[-1] == -s:
                continue
            out.append(s)
        if length < 2 or out[0] != -out[-1]:
            return tuple(out)


def planted_pair(rng, ngens):
    """Pattern that shares a useful cyclic subword with the target, in some orientation."""
    tgt = reduced_word(rng, rng.randint(2, 20), ngens)
    l = rng.randint(2, 20)
    k = min(rng.randint(l // 2 + 1, l), len(tgt))
    start = rng.randrange(len(tgt))
    v = ((tgt + tgt)[start:start + k])
    if rng.random() < 0.5:
        v = invert(v)
    pat = canonical_form(v + reduced_word(rng, l - k, ngens) if l > k else v)
    return pat, tgt


@pytest.fixture(scope="module")
def corpus_runs():
    """Every corpus item under all four strategies, timed as a whole."""
    items = standard_corpus()
    t0 = time.perf_counter()
    runs = {name: {s: simplify(ug, s) for s in Strategy} for name, _, ug in items}
    elapsed = time.perf_counter() - t0
    return items, runs, elapsed


def test_1_golden_pipeline():
    t0 = time.perf_counter()
    p = parse(FIBONACCI_2_9_NINE)
    res = simplify(p, "both")
    elapsed = time.perf_counter() - t0
    q = res.presentation
    inv_in, inv_out = abelian_invariants(p), abelian_invariants(q)
    ok = (q.num_live == 2 and len(q.relators) == 2 and total_length(q) <= 36
          and elapsed < 1.0 and inv_in == inv_out)
    assert report(1, ok, f"{q.num_live} generators, {len(q.relators)} relators, total length "
                         f"{total_length(q)} (<= 36), {elapsed * 1e3:.1f} ms (< 1 s), "
                         f"invariants {inv_in} -> {inv_out}")


def test_2_step_fidelity():
    p = parse(FIBONACCI_2_9_NINE)
    for g, r in (("c", "abC"), ("f", "deF"), ("i", "ghI")):
        p = eliminate(p, g, w(r))
    expect = {cf(x) for x in ("babD", "abdE", "edeG", "degH", "hghA", "ghaB")}
    first = set(p.relators) == expect
    pattern, target = cf("ebabeG"), cf("babegH")
    m = find_useful_match(pattern, target)
    new = apply_replacement(pattern, target, m) if m else None
    second = new == cf("EggH")
    assert report(2, first and second,
                  f"eliminating c, f, i gives the six expected relators: {first}; "
                  f"babegH via ebabeG -> EggH: {second}")


def test_3_strategy_equivalence(corpus_runs):
    items, runs, elapsed = corpus_runs
    bad = [name for name, by in runs.items()
           if any(by[s].presentation != by[Strategy.NAIVE].presentation
                  or by[s].log != by[Strategy.NAIVE].log for s in Strategy)]
    ok = len(items) >= 20 and not bad and elapsed < 60
    assert report(3, ok, f"{len(items)} corpus items x 4 strategies, outputs and logs identical "
                         f"(divergent: {bad or 'none'}), {elapsed:.2f} s (< 60 s)")


def test_4_search_savings(corpus_runs):
    _, runs, _ = corpus_runs
    weak_fail, strict, totals = [], 0, {s: 0 for s in Strategy}
    for name, by in runs.items():
        n, sg, fl, bo = (by[s].stats.searched for s in
                         (Strategy.NAIVE, Strategy.SIGNATURES, Strategy.FLAGS, Strategy.COMBINED))
        for s in Strategy:
            totals[s] += by[s].stats.searched
        if not (fl <= n and sg <= n and bo <= min(fl, sg)):
            weak_fail.append(name)
        if fl < n and sg < n and bo < min(fl, sg):
            strict += 1
    naive = totals[Strategy.NAIVE]
    savings = ", ".join(f"{s.value} {1 - totals[s] / naive:.1%} (ref {REFERENCE_SAVINGS[s.value]:.0%})"
                        for s in (Strategy.SIGNATURES, Strategy.FLAGS, Strategy.COMBINED))
    ok = not weak_fail and strict >= 15
    assert report(4, ok, f"ordering holds on {len(runs) - len(weak_fail)}/{len(runs)} items, "
                         f"strict on {strict}/{len(runs)} (>= 15); savings {savings}")


def test_5_signature_soundness():
    rng = random.Random(5)
    t0 = time.perf_counter()
    cases = false_neg = positives = variant = 0
    for m in (32,) * 5 + (64,):
        cfg = SigConfig(m)
        for _ in range(20000 if m == 32 else 10000):
            ngens = rng.randint(1, 10)
            if rng.random() < 0.5:
                pat, tgt = planted_pair(rng, ngens)
            else:
                pat = reduced_word(rng, rng.randint(2, 20), ngens)
                tgt = reduced_word(rng, rng.randint(2, 20), ngens)
            if len(pat) < 2 or not tgt:
                continue
            cases += 1
            if find_useful_match(pat, tgt) is not None:
                positives += 1
                if not prefilter(pat, tgt, cfg):
                    false_neg += 1
            s = cyclic_signature(tgt, cfg)
            k = rng.randrange(len(tgt))
            if (cyclic_signature(tgt[k:] + tgt[:k], cfg) != s
                    or cyclic_signature(invert(tgt), cfg) != s):
                variant += 1
    elapsed = time.perf_counter() - t0
    ok = cases >= 100000 and false_neg == 0 and variant == 0 and elapsed < 30
    assert report(5, ok, f"{cases} pairs ({positives} with a useful match), {false_neg} false "
                         f"negatives, {variant} invariance failures, {elapsed:.1f} s (< 30 s)")


def _oracle_canonical(word):
    stack = []
    for s in word:
        if stack and stack[-1] == -s:
            stack.pop()
        else:
            stack.append(s)
    while len(stack) >= 2 and stack[0] == -stack[-1]:
        stack = stack[1:-1]
    if not stack:
        return ()

    def key(u):
        return [2 * s - 1 if s > 0 else -2 * s for s in u]

    inv = [-s for s in reversed(stack)]
    cands = [u[i:] + u[:i] for u in (stack, inv) for i in range(len(u))]
    return tuple(min(cands, key=key))


def test_6_oracle_equivalence():
    rng = random.Random(6)
    match_bad = found = 0
    for _ in range(10000):
        ngens = rng.randint(1, 4)
        if rng.random() < 0.3:
            pat, tgt = planted_pair(rng, ngens)
            pat, tgt = pat[:15], tgt[:15]
            pat, tgt = canonical_form(pat), canonical_form(tgt)
        else:
            pat = reduced_word(rng, rng.randint(2, 15), ngens)
            tgt = reduced_word(rng, rng.randint(1, 15), ngens)
        a = find_useful_match(pat, tgt) is not None
        b = brute_force_oracle(pat, tgt) is not None
        found += a
        match_bad += a != b
    canon_bad = 0
    for _ in range(100000):
        raw = tuple(rng.choice((1, -1)) * rng.randint(1, rng.randint(1, 5))
                    for _ in range(rng.randint(0, 20)))
        canon_bad += canonical_form(raw) != _oracle_canonical(raw)
    ok = match_bad == 0 and canon_bad == 0
    assert report(6, ok, f"10000 pairs ({found} matches), {match_bad} search disagreements; "
                         f"100000 words, {canon_bad} canonical-form disagreements")


def test_7_flag_soundness():
    skipped = []

    def on_skip(reason, pat, tgt):
        if reason == "flags":
            skipped.append((pat, tgt))

    for _, _, ug in standard_corpus():
        for s in (Strategy.FLAGS, Strategy.COMBINED):
            simplify(ug, s, SimplifyOptions(on_skip=on_skip))
    rng = random.Random(7)
    sample = skipped if len(skipped) <= 5000 else rng.sample(skipped, 5000)
    violations = sum(brute_force_oracle(p, t) is not None for p, t in sample)
    ok = len(sample) >= 1000 and violations == 0
    assert report(7, ok, f"{len(skipped)} flag-skipped pairs, {len(sample)} checked by brute "
                         f"force (>= 1000), {violations} violations")


def test_8_log_replay(corpus_runs, tmp_path):
    _, runs, _ = corpus_runs
    items = {name: ug for name, _, ug in standard_corpus()}
    golden = parse(FIBONACCI_2_9_NINE)
    checked = mismatched = verify_failed = 0
    jobs = [(golden, s) for s in Strategy] + [(items[n], s) for n in runs for s in Strategy]
    for p, s in jobs:
        try:
            res = simplify(p, s, SimplifyOptions(verify=True))
        except AssertionError:
            verify_failed += 1
            continue
        checked += 1
        mismatched += replay(p, res.log) != res.presentation
    # the same checks through the command line switch
    src = tmp_path / "f29.cpt"
    src.write_text(FIBONACCI_2_9_NINE)
    cli = run_cli(["simplify", "--in", str(src), "--verify", "--out", str(tmp_path / "o")])
    ok = mismatched == 0 and verify_failed == 0 and cli == 0
    assert report(8, ok, f"{checked} runs replayed, {mismatched} mismatches, "
                         f"{verify_failed} per-move verification failures; "
                         f"simplify --verify exit {cli}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
