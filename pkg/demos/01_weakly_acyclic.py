# Weakly acyclic automata: recognition, sinks and reset words.
#
# Run with:  python3 demos/01_weakly_acyclic.py

# %%
from waasync import (
    SemiAutomaton,
    build_synchronizing_word,
    check_weakly_acyclic,
    format_word,
    image,
    maximal_states,
    synchronizing_state,
)
from waasync.generate import random_waa

# %% A three-state chain: 0 -a-> 1 -a,b-> 2, and 2 is a sink.
chain = SemiAutomaton("ab", [[1, 0], [2, 2], [2, 2]])
cert = check_weakly_acyclic(chain)
print("topological order:", cert.order)
print("sinks:", list(maximal_states(cert)))

# %% The only sink is reachable from everywhere, so the automaton synchronizes.
print("synchronizing state:", synchronizing_state(cert))
w = build_synchronizing_word(cert)
print("reset word:", format_word(w), "-> image", list(image(chain, None, w)))

# %% A two-cycle is not weakly acyclic; the check returns the cycle as evidence.
flip = SemiAutomaton("a", [[1], [0]])
print("two-cycle:", check_weakly_acyclic(flip))

# %% Random weakly acyclic automata: how often do they synchronize?
hits = 0
for seed in range(2000):
    A = random_waa(8, 3, seed)
    hits += synchronizing_state(A) is not None
print(f"{hits} of 2000 random 8-state ternary WAAs synchronize")

# %% Reset words from the greedy construction stay below (n-1)^2 letters.
longest = 0
for seed in range(2000):
    A = random_waa(8, 3, seed)
    w = build_synchronizing_word(A)
    if w is not None:
        longest = max(longest, len(w))
print("longest greedy reset word:", longest, "(limit", (8 - 1) ** 2, ")")
