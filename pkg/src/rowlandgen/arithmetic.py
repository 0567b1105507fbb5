"""Exact integer number theory: gcd, primality, prime factors, s(m, n).

Values are plain Python ints. The sequence engines cap magnitude at
``U64_MAX`` by default and raise :class:`ValueOverflow` past it; pass
``limit=None`` to :func:`checked_add` for unbounded arithmetic.
"""

from __future__ import annotations

from math import gcd, isqrt

from .errors import DomainError, ValueOverflow

U64_MAX = (1 << 64) - 1

# Deterministic for every n below the first strong pseudoprime to all twelve
# bases (well above the 64-bit range).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 318_665_857_834_031_151_167_461
# Extra bases used beyond the deterministic bound (probable-prime territory).
_MR_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_TRIAL_CUTOFF = 1 << 12
# mod-30 wheel: offsets from a multiple of 30 that are coprime to 30
_WHEEL30 = (1, 7, 11, 13, 17, 19, 23, 29)


def gcd_nat(a: int, b: int) -> int:
    """gcd with the conventions gcd(0, b) = b and gcd(0, 0) = 0."""
    if a < 0 or b < 0:
        raise DomainError(f"gcd_nat expects nonnegative arguments, got {a}, {b}")
    return gcd(a, b)


def checked_add(a: int, b: int, limit: int | None = U64_MAX) -> int:
    total = a + b
    if limit is not None and total > limit:
        raise ValueOverflow(f"{a} + {b} exceeds {limit}")
    return total


def _mr_round(n: int, d: int, r: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set; exact for all 64-bit inputs."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _SMALL_PRIMES[-1] ** 2:
        return True
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_BOUND:
        bases = _MR_BASES + _MR_EXTRA_BASES
    return all(_mr_round(n, d, r, a) for a in bases)


def _wheel_candidates(limit: int):
    yield from (2, 3, 5)
    base = 0
    while True:
        for off in _WHEEL30:
            q = base + off
            if q > limit:
                return
            if q > 1:
                yield q
        base += 30


def _brent(n: int) -> int:
    """Return a nontrivial factor of composite odd n (Pollard-rho, Brent)."""
    # Deterministic schedule: c = 1, 2, 3, ... restarting on failure.
    for c in range(1, 1 << 20):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"pollard rho failed on {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; factorize(1) == {}."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    limit = min(_TRIAL_CUTOFF, isqrt(n))
    for q in _wheel_candidates(limit):
        if q * q > n:
            break
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
    if n == 1:
        return factors
    stack = [n]
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_prime(x):
            factors[x] = factors.get(x, 0) + 1
            continue
        d = _brent(x)
        stack.extend((d, x // d))
    return dict(sorted(factors.items()))


def prime_divisors(n: int) -> list[int]:
    """Distinct primes dividing n, ascending."""
    return list(factorize(n))


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise DomainError(f"smallest_prime_factor needs n >= 2, got {n}")
    for q in _wheel_candidates(min(_TRIAL_CUTOFF, isqrt(n))):
        if n % q == 0:
            return q
    if is_prime(n):
        return n
    return min(factorize(n))


def largest_prime_factor(n: int) -> int:
    if n < 2:
        raise DomainError(f"largest_prime_factor needs n >= 2, got {n}")
    return max(factorize(n))


def s_value(m: int, n: int) -> int:
    """1 if m and n are coprime, else the largest prime dividing gcd(m, n).

    Zero arguments follow the gcd convention: s(0, n) is the largest prime
    factor of n for n >= 2 and 1 for n in {0, 1}.
    """
    g = gcd_nat(m, n)
    if g < 2:
        return 1
    return largest_prime_factor(g)


def is_twin_upper(p: int) -> bool:
    """True iff p and p - 2 are both prime."""
    return p >= 5 and is_prime(p) and is_prime(p - 2)
