"""
The Rowland sequence and its prime differences
==============================================

a(1) = 7, a(n) = a(n-1) + gcd(n, a(n-1)). Every difference is 1 or a prime.
"""

from rowlandgen import FamilySpec, generate, verify_one_or_prime
from rowlandgen.analysis import anchor_averages

rowland = FamilySpec.rowland()

# First terms and the differences they produce
for out in generate(rowland, 24):
    marker = "  <- prime" if out.delta > 1 else ""
    print(f"a({out.n}) = {out.value}  (+{out.delta}){marker}")

# Scan a million steps; nothing but 1's and primes
report = verify_one_or_prime(rowland, 10**6)
print(report.status, report.ones_count, "ones,", report.prime_steps_count, "primes")
print("records:", [r.value for r in report.records])

# Whenever a(n) = 3n the average step (a(n) - 7) / n sits just under 3
anchors = anchor_averages(10**6)
print(len(anchors), "indices with a(n) = 3n; last:", anchors[-1][0], float(anchors[-1][1]))
