"""Round-tripping automorphisms through the involution normal form.

Every automorphism in the group generated by the three quadratic involutions
and the affine stabilizer factors uniquely as a reduced involution word times
a signed permutation.  The factorization is recovered greedily: at each step
exactly one involution strictly lowers the top component degree.
"""

import random
from fractions import Fraction

from charcubic import (GroupWord, affine_stabilizer, dehn_twist,
                       horowitz_decompose, is_automorphism, sign_character,
                       word_to_map, word_tokens)

params = (Fraction(1, 2), -1, 2)

tx = dehn_twist("X", params)
print("twist X =", tx)
word, tail = horowitz_decompose(tx, params)
print("decomposes as:", GroupWord(word, tail), "| tokens:", word_tokens(GroupWord(word, tail)))
print()

rng = random.Random(2024)
for trial in range(4):
    n = rng.randint(2, 6)
    letters = []
    while len(letters) < n:
        c = rng.choice(("tau1", "tau2", "tau3"))
        if letters and letters[-1] == c:
            continue
        letters.append(c)
    tail = rng.choice(affine_stabilizer(params))
    f = word_to_map(tuple(letters), params) @ tail.to_poly_map()
    print("word", " ".join(letters), "* tail", tail)
    print("  map degree:", f.degree(),
          "| preserves member:", is_automorphism(f, params),
          "| sign character:", sign_character(tuple(letters), params))
    got_word, got_tail = horowitz_decompose(f, params)
    assert got_word == tuple(letters) and got_tail == tail
    print("  recovered exactly:", " ".join(got_word), "* tail", got_tail)
    print()

# maps outside the group fail loudly instead of looping
from charcubic import parse_poly_map

bad = parse_poly_map("x + 1; y; z")
try:
    horowitz_decompose(bad, params)
except ValueError as exc:
    print("non-member rejected:", exc)
