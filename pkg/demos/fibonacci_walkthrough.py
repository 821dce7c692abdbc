"""Simplify the nine-generator Fibonacci presentation of F(2,9) step by step.

Each generator x_k is defined by x_k x_{k+1} = x_{k+2}, which makes the
presentation very redundant.  We first repeat a few eliminations by hand,
then let the driver finish the job and print its transformation log.

    python demos/fibonacci_walkthrough.py
"""
from tietze import abelian_invariants, eliminate, parse, simplify, total_length
from tietze.corpus import FIBONACCI_2_9_NINE
from tietze.textio import format_log, parse_word

p = parse(FIBONACCI_2_9_NINE)
print("input:", p)
print("abelianization:", abelian_invariants(p))

# Each relator like abC says c = ab, so c can go.  Doing this for c, f and i
# leaves six relators in six generators.
q = p
for gen, via in (("c", "a*b*c^-1"), ("f", "d*e*f^-1"), ("i", "g*h*i^-1")):
    q = eliminate(q, gen, parse_word(via, p.generators))
    print(f"after eliminating {gen}:", q)

# The driver picks its own order, so its route may differ from the one above.
res = simplify(p, "both")
out = res.presentation
print()
print("simplified:", out)
print(f"total length {total_length(p)} -> {total_length(out)} in {res.cycles} cycles")
print("abelianization:", abelian_invariants(out))
print()
print("transformation log:")
print(format_log(res.log, p.generators), end="")

