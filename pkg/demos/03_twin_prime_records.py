"""
Record differences and twin primes
==================================

The parity-alternating variants feed n or n-2 into gcd (or s) depending on
the parity of n. Their record differences above 3 appear to be upper members
of twin prime pairs.
"""

from rowlandgen import FamilySpec, Kind, coincidence_check, twin_conjecture_report

for kind in (Kind.PARITY_GCD_C, Kind.PARITY_GCD_L, Kind.PARITY_S_C, Kind.PARITY_S_L):
    rep = twin_conjecture_report(FamilySpec.parity(kind), 100_000)
    print(kind.value, rep.status)
    print("   ", [(r.value, r.is_twin_upper) for r in rep.records])
    for d in rep.discrepancies:
        print(f"    published {d.published} (prime={d.published_is_prime}) vs computed {d.computed}")

# Do the gcd and s variants share their records from 313 on?
cc = coincidence_check(100_000)
print("gcd tail:", cc.gcd_tail)
print("s tail:  ", cc.s_tail)
print("first divergence:", cc.first_divergence)
