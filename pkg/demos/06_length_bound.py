# How long can a shortest constrained reset word be?
#
# The often-quoted estimate |P| * n(n-1)/2 counts the letters that shrink the
# image of Q, but forgets the stretch after the last shrink, where the word
# may still have to walk the constraint automaton to an accepting state.
# Adding |P| - 1 fixes it.

# %%
import numpy as np

from waasync import ConstraintPdfa, SemiAutomaton, format_word, shortest_bound, solve_generic, witness_length_bound
from waasync.generate import random_pdfa, random_waa

# %% Smallest counterexamples.
one = SemiAutomaton("ab", [[0, 0]])
only_a = ConstraintPdfa("ab", [[1, None], [None, None]], 0, [1])
print("n=1:", format_word(solve_generic(only_a, one)), "vs estimate", shortest_bound(one, only_a))

A = SemiAutomaton("ab", [[1, 0], [1, 1]])
b_ab_star = ConstraintPdfa("ab", [[None, 1], [0, None]], 0, [1])
w = solve_generic(b_ab_star, A)
print("n=2:", format_word(w), "length", len(w), "vs estimate", shortest_bound(A, b_ab_star),
      "and corrected", witness_length_bound(A, b_ab_star))

# %% On random instances: how often is the estimate exceeded, and by how much?
rng = np.random.default_rng(3)
over = exact = 0
for _ in range(3000):
    A = random_waa(int(rng.integers(1, 9)), int(rng.integers(1, 4)), rng)
    B = random_pdfa(int(rng.integers(1, 4)), tuple(A.alphabet), rng)
    w = solve_generic(B, A)
    if w is None:
        continue
    over += len(w) > shortest_bound(A, B)
    assert len(w) <= witness_length_bound(A, B)
    exact += len(w) == witness_length_bound(A, B)
print(f"estimate exceeded {over} times; corrected bound never exceeded, attained {exact} times")
