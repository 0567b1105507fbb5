"""
Seeded generators: the 3m and 2m families
=========================================

Any seed c(m-1) = t with p = gcd(m, t) prime and t + p = 3m (or 2m, m >= 4)
starts a generator whose differences are again 1 or prime.
"""

from rowlandgen import FamilySpec, cp_family, distinct_generator_primes, verify_one_or_prime
from rowlandgen.errors import SeedError

# c_P(P-1) = 2P gives first difference P
for P in (5, 11, 101):
    f = cp_family(P)
    rep = verify_one_or_prime(f, 10**4)
    print(f"c_{P}: first record {rep.records[0].value} at n={rep.records[0].n}; {rep.status}")

# Seeds are validated up front
for m, t in [(6, 15), (4, 7), (8, 8)]:
    try:
        FamilySpec.three_n(m, t)
        print((m, t), "accepted")
    except SeedError as exc:
        print((m, t), "rejected:", exc.code)

print(verify_one_or_prime(FamilySpec.two_n(9, 15), 10**5).status)

# Primes whose c_P generator is not already a tail of an earlier one
print(distinct_generator_primes(12))
