# Mapping sets of states into targets.
#
# For weakly acyclic automata the question "can Q be pushed into T?" only
# depends on which sinks are reachable, so it needs no search at all.

# %%
import numpy as np

from waasync import (
    SemiAutomaton,
    format_word,
    reachable_maximal_from,
    set_transporter_search,
    set_transporter_unary_waa,
    sync_from_subset_search,
    sync_into_subset,
)
from waasync.generate import random_state_set, random_waa

chain = SemiAutomaton("ab", [[1, 0], [2, 2], [2, 2]])

# %% Sinks reachable from Q decide everything.
print("reachable sinks:", list(reachable_maximal_from(chain, None)))
for T in ([2], [1, 2], [1], [0, 1, 2]):
    w = sync_into_subset(chain, None, T)
    print(f"into {T}:", "no" if w is None else repr(format_word(w)))

# %% Arbitrary sources need search (the general problems are hard).
print("synchronize {0, 1}:", format_word(sync_from_subset_search(chain, [0, 1])))
print("transport {0} into {2}:", format_word(set_transporter_search(chain, [0], [2])))

# %% One letter is easy again: only a^0 .. a^(n-1) need testing.
path = SemiAutomaton("a", [[1], [2], [2]])
print("unary {0} -> {1}:", format_word(set_transporter_unary_waa(path, [0], [1])))

# %% Cross-check the sink criterion against the exhaustive search.
rng = np.random.default_rng(0)
agree = 0
for _ in range(1000):
    A = random_waa(int(rng.integers(1, 9)), 3, rng)
    T = random_state_set(A.n, rng)
    fast = sync_into_subset(A, None, T) is not None
    slow = set_transporter_search(A, None, T) is not None
    agree += fast == slow
print(f"sink criterion agrees with search on {agree}/1000 instances")
