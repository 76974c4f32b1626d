# Synchronizing inside a regular constraint.
#
# Three ternary two-state constraints admit polynomial algorithms on weakly
# acyclic inputs; the other nine stay NP-complete.  The classifier tells
# which is which, up to renaming of letters.

# %%
import itertools

import numpy as np

from waasync import (
    SemiAutomaton,
    classify_constraint,
    dispatch_solve,
    format_word,
    reference_pdfa,
    rename_letters,
    solve_generic,
)
from waasync.generate import random_waa
from waasync.languages import PSPACE_LANGUAGES

# %% The classification table.
for name in PSPACE_LANGUAGES:
    label = classify_constraint(reference_pdfa(name))
    print(f"{name:16s} general: {label.general_complexity:16s} weakly acyclic: {label.waa_complexity}")

# %% Renamed letters give the same label.
B = rename_letters(reference_pdfa("(a+b)*c"), {"a": "c", "b": "a", "c": "b"}, order="abc")
print("\n(c+a)*b ->", classify_constraint(B).as_dict())

# %% Two small examples.
W2 = SemiAutomaton("abc", [[1, 0, 0], [1, 1, 2], [2, 2, 2]])
W3 = SemiAutomaton("abc", [[0, 0, 1], [1, 1, 2], [2, 2, 2]])
for A, tag in ((W2, "W2"), (W3, "W3")):
    for name in ("(a+b)*c", "(a+b)*ca*", "(a+b)*cc*"):
        r = dispatch_solve(reference_pdfa(name), A)
        word = "-" if r.witness is None else format_word(r.witness)
        print(f"{tag} {name:10s} {'yes' if r.decision else 'no ':3s} {word:6s} via {r.method}")

# %% The polynomial route and the exhaustive product search always agree.
rng = np.random.default_rng(1)
agree = total = 0
for _ in range(300):
    A = random_waa(int(rng.integers(1, 9)), 3, rng)
    for name in ("(a+b)*c", "(a+b)*ca*", "(a+b)*cc*"):
        for perm in itertools.permutations("abc"):
            B = rename_letters(reference_pdfa(name), dict(zip("abc", perm)), order="abc")
            agree += dispatch_solve(B, A).decision == (solve_generic(B, A) is not None)
            total += 1
print(f"\npolynomial vs exhaustive: {agree}/{total} agree")
