# SAT formulas as constrained synchronization instances.
#
# Each clause becomes a strand of states; a letter matching a literal of the
# clause lets the strand escape to the sink.  A synchronizing word of the
# right shape therefore spells out a satisfying assignment.

# %%
from waasync import CnfFormula, format_word, image, reduce_sat, solve_generic
from waasync.hardness import REDUCTION_CASES, assignment_to_word, brute_force_sat, word_to_assignment

# %% An unsatisfiable formula gives a no-instance for every language.
phi = CnfFormula(2, [(1, 2), (1, -2), (-1,), (1, 2)])
print("satisfiable:", brute_force_sat(phi) is not None)
for name in REDUCTION_CASES:
    A, B = reduce_sat(phi, name)
    print(f"  {name:16s} {A.n:2d} states -> {'yes' if solve_generic(B, A) else 'no'}")

# %% A satisfiable one: encode, solve, decode.
psi = CnfFormula(3, [(1, -2), (2, 3), (-1, -3)])
model = brute_force_sat(psi)
print("\nmodel:", model)
for name, case in REDUCTION_CASES.items():
    A, B = reduce_sat(psi, case)
    encoded = assignment_to_word(psi, case, model)
    found = solve_generic(B, A)
    print(f"  {name:16s} encoded {format_word(encoded):8s} found {format_word(found):8s}"
          f" decoded {word_to_assignment(psi, case, found)}")

# %% The strand layout of the first construction, one row per clause.
A, _ = reduce_sat(psi, "a(b+c)*")
print("\nstates:", " ".join(A.names))
print("after the reset letter:", sorted(A.names[q] for q in image(A, None, "a")))
