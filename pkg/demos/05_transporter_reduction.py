# Moving a set S into a target T, rewritten as constrained synchronization.
#
# Two fresh letters guard the ends of the word: the first kills everything
# outside S, the last kills everything inside T.  A fresh sink collects the
# dead states, so the new automaton synchronizes inside "first Σ* last"
# exactly when some word maps S into T.

# %%
import numpy as np

from waasync import SemiAutomaton, format_word, reduce_transporter, set_transporter_search, solve_generic
from waasync.formats import format_pdfa, format_semi_automaton
from waasync.generate import random_state_set, random_waa

chain = SemiAutomaton("ab", [[1, 0], [2, 2], [2, 2]])
A2, B = reduce_transporter(chain, [0], [2])
print(format_semi_automaton(A2))
print(format_pdfa(B))
print("witness:", format_word(solve_generic(B, A2)))

# %% Agreement with direct search on random weakly acyclic inputs.
rng = np.random.default_rng(2)
agree = 0
for _ in range(500):
    A = random_waa(int(rng.integers(1, 8)), 2, rng)
    S = random_state_set(A.n, rng, nonempty=True)
    T = random_state_set(A.n, rng, nonempty=True)
    A2, B = reduce_transporter(A, S, T)
    agree += (solve_generic(B, A2) is not None) == (set_transporter_search(A, S, T) is not None)
print(f"reduction agrees with search on {agree}/500 instances")
