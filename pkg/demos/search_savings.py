"""How much pairwise searching the filters save on a seeded corpus.

The replacement passes compare every pair of relators.  Change flags skip
pairs where neither relator moved since they were last compared, and hashed
signatures skip pairs that cannot share a long enough subword.  All four
strategies must produce the same output; only the work differs.

    python demos/search_savings.py
"""
from tietze import Strategy, simplify
from tietze.cli import REFERENCE_SAVINGS
from tietze.corpus import standard_corpus
from tietze.presentation import total_length

totals = dict.fromkeys(Strategy, 0)
print(f"{'item':12} {'gens':>5} {'len':>5} -> {'len':>4}   "
      + " ".join(f"{s.value:>6}" for s in Strategy))
for name, base, ugly in standard_corpus():
    runs = {s: simplify(ugly, s) for s in Strategy}
    ref = runs[Strategy.NAIVE]
    assert all(r.presentation == ref.presentation and r.log == ref.log for r in runs.values())
    for s, r in runs.items():
        totals[s] += r.stats.searched
    print(f"{name:12} {ugly.num_live:>5} {total_length(ugly):>5} -> "
          f"{total_length(ref.presentation):>4}   "
          + " ".join(f"{runs[s].stats.searched:>6}" for s in Strategy))

print()
naive = totals[Strategy.NAIVE]
for s in (Strategy.SIGNATURES, Strategy.FLAGS, Strategy.COMBINED):
    print(f"{s.value:6} searched {totals[s]:6} of {naive} naive searches: saving "
          f"{1 - totals[s] / naive:.1%} (reference "
          f"{REFERENCE_SAVINGS[s.value]:.0%})")
