"""Run-skipping evaluation of the 3m and 2m gcd families.

From an anchor c(n1) = 3*n1 every following step is a 1 until the first
n > n1 sharing a factor with 2*n1 - 1, because during the run
c(n-1) = 2*n1 + n - 1 and so gcd(n, c(n-1)) = gcd(n, 2*n1 - 1). The next
nontrivial index is therefore the least multiple, above n1, of some prime
divisor of 2*n1 - 1. The 2m family works the same way with n1 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arithmetic import prime_divisors
from .errors import InvalidAnchor, NoLeap
from .generators import FamilySpec, Kind, SequenceState, iter_steps, step


@dataclass(frozen=True)
class Anchor:
    n1: int
    value: int


@dataclass(frozen=True)
class LeapStep:
    from_: Anchor
    to: Anchor
    h: int
    ones_skipped: int


def _next_hit(n1: int, d: int) -> int:
    return min((n1 // q + 1) * q for q in prime_divisors(d))


def leap_step_3n(anchor: Anchor) -> LeapStep:
    n1, value = anchor.n1, anchor.value
    if n1 < 2 or value != 3 * n1:
        raise InvalidAnchor(f"c({n1}) = {value} is not a 3n anchor")
    d = 2 * n1 - 1
    n2 = _next_hit(n1, d)
    h = gcd(n2, d)
    ones = n2 - n1 - 1
    return LeapStep(anchor, Anchor(n2, value + ones + h), h, ones)


def leap_step_2n(anchor: Anchor) -> LeapStep:
    n1, value = anchor.n1, anchor.value
    if n1 < 4 or value != 2 * n1:
        raise InvalidAnchor(f"c({n1}) = {value} is not a 2n anchor")
    d = n1 - 1
    if d == 1:
        raise NoLeap(f"n1 - 1 = 1 at n1={n1}")  # pragma: no cover
    n2 = _next_hit(n1, d)
    h = gcd(n2, d)
    ones = n2 - n1 - 1
    return LeapStep(anchor, Anchor(n2, value + ones + h), h, ones)


@dataclass
class FastRun:
    """Result of :func:`generate_fast`.

    ``nontrivial`` holds (n, delta) for every step with delta > 1, whether
    it came from a leap or from naive bootstrap/fallback stepping.
    """

    family: FamilySpec
    n_max: int
    nontrivial: list[tuple[int, int]] = field(default_factory=list)
    leaps: list[LeapStep] = field(default_factory=list)
    naive_steps: int = 0
    leap_iterations: int = 0
    final_state: SequenceState | None = None

    @property
    def iterations(self) -> int:
        return self.naive_steps + self.leap_iterations


def _leap_rule(kind: Kind):
    if kind in (Kind.ROWLAND_CLASSIC, Kind.THREE_N):
        return 3, 2, leap_step_3n
    if kind is Kind.TWO_N:
        return 2, 4, leap_step_2n
    raise ValueError(f"{kind.value} has no leap rule")


def generate_fast(family: FamilySpec, n_max: int) -> FastRun:
    """Evaluate ``family`` up to ``n_max`` by leaping over runs of 1's.

    Naive steps are used until the first anchor, after a NO_LEAP, and after
    any leap that fails to land on an anchor again.
    """
    ratio, min_n, leap = _leap_rule(family.kind)
    run = FastRun(family, n_max)
    n, c = family.initial_state()
    if n_max <= n:
        raise ValueError(f"n_max={n_max} must exceed start index {n}")
    while n < n_max:
        if n >= min_n and c == ratio * n:
            try:
                ls = leap(Anchor(n, c))
            except NoLeap:  # pragma: no cover
                ls = None
            if ls is not None:
                run.leap_iterations += 1
                if ls.to.n1 > n_max:
                    c += n_max - n
                    n = n_max
                    break
                run.leaps.append(ls)
                run.nontrivial.append((ls.to.n1, ls.h))
                n, c = ls.to.n1, ls.to.value
                continue
        out = step(SequenceState(n, c), family, limit=None)
        run.naive_steps += 1
        if out.delta > 1:
            run.nontrivial.append((out.n, out.delta))
        n, c = out.n, out.value
    run.final_state = SequenceState(n, c)
    return run


def naive_nontrivial(
    family: FamilySpec, n_max: int
) -> tuple[list[tuple[int, int]], SequenceState]:
    """Delta > 1 subsequence and final state from plain stepping (the oracle)."""
    hits = []
    state = family.initial_state()
    for out in iter_steps(family, n_max, limit=None):
        if out.delta > 1:
            hits.append((out.n, out.delta))
        state = SequenceState(out.n, out.value)
    return hits, state


def linear_next_hit(n1: int, d: int) -> tuple[int, int]:
    """Oracle: scan n = n1+1, n1+2, ... for the first gcd(n, d) > 1."""
    n = n1 + 1
    while gcd(n, d) == 1:
        n += 1
    return n, gcd(n, d)
