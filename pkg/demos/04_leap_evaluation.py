"""
Skipping runs of 1's
====================

From an anchor c(n1) = 3 n1 the next nontrivial step is the least multiple,
above n1, of a prime factor of 2 n1 - 1. Leaping there directly visits only
the prime steps.
"""

import time

from rowlandgen import FamilySpec, generate_fast
from rowlandgen.leap import naive_nontrivial

rowland = FamilySpec.rowland()
for n_max in (10**4, 10**5, 10**6):
    t0 = time.perf_counter()
    naive, final = naive_nontrivial(rowland, n_max)
    t1 = time.perf_counter()
    fast = generate_fast(rowland, n_max)
    t2 = time.perf_counter()
    assert fast.nontrivial == naive and fast.final_state == final
    print(f"n_max={n_max}: naive {t1 - t0:.3f}s, leap {t2 - t1:.5f}s, {fast.iterations} iterations")

# Far beyond naive reach
fast = generate_fast(rowland, 10**15)
print("a(10^15) =", fast.final_state.value, "after", fast.iterations, "iterations")
print("largest prime step:", max(h for _, h in fast.nontrivial))
