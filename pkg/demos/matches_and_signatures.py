"""The two primitives behind a replacement pass.

A relator is only defined up to rotation and inversion, so we store its
canonical form.  A pattern P of length l can shorten a target T when they
share a cyclic subword longer than l/2; the signature filter rules out most
pairs that cannot.

    python demos/matches_and_signatures.py
"""
from tietze import canonical_form
from tietze.search import apply_replacement, find_useful_match
from tietze.signatures import cyclic_signature, pattern_signatures, prefilter
from tietze.textio import parse_word

names = tuple("abegh")


def word(text):
    return parse_word(text, names)


def show(w):
    return "".join(names[abs(s) - 1] if s > 0 else names[abs(s) - 1].upper() for s in w)


r = word("b*a*b*e*g*h^-1")
print("babegH canonical form:", show(canonical_form(r)))

pattern, target = canonical_form(word("e*b*a*b*e*g^-1")), canonical_form(r)
m = find_useful_match(pattern, target)
print(f"pattern {show(pattern)} target {show(target)}")
print(f"  shared subword {show(m.substring(target))} of length {m.v_length},"
      f" pattern inverted: {m.pattern_inverted}")
print("  replacement:", show(apply_replacement(pattern, target, m)))

print()
print("target signature bits:", sorted(cyclic_signature(target).positions))
for k, s in enumerate(pattern_signatures(pattern)):
    print(f"  pattern window {k}: bits {sorted(s.positions)}")
print("prefilter lets the pair through:", prefilter(pattern, target))

other = canonical_form(word("h*h*h*a*a"))
print(f"prefilter on {show(pattern)} vs {show(other)}:", prefilter(pattern, other),
      "| real match:", find_useful_match(pattern, other) is not None)
