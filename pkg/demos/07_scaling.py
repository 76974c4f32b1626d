# Deciding synchronizability of a weakly acyclic automaton in linear time.

# %%
import time

from waasync import check_weakly_acyclic, synchronizing_state
from waasync.generate import random_synchronizing_waa

for n in (12_500, 25_000, 50_000, 100_000, 200_000):
    A = random_synchronizing_waa(n, 3, 0)
    t0 = time.perf_counter()
    cert = check_weakly_acyclic(A)
    t1 = time.perf_counter()
    s = synchronizing_state(cert)
    t2 = time.perf_counter()
    print(f"n={n:7d}  order {1000 * (t1 - t0):7.1f} ms  sink check {1000 * (t2 - t1):6.1f} ms  state {s}")
