"""Verification, record extraction and the derived reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arithmetic import U64_MAX, is_prime, is_twin_upper
from .errors import InsufficientRange, SearchExhausted
from .generators import (
    PARITY_KINDS,
    THEOREM_KINDS,
    FamilySpec,
    Generator,
    Kind,
    SequenceState,
    cp_family,
    iter_steps,
)

# Fixed report wording; downstream tooling matches on these strings.
THEOREM_VERIFIED = "theorem verified on range"
THEOREM_VIOLATED = "theorem violated on range"
CONJECTURE_CONSISTENT = "conjecture consistent with range"
CONJECTURE_CONTRADICTED = "conjecture contradicted on range"

# Record lists as originally published (OEIS A166945, A167495 and the s variant).
# Some entries are misprints; see compare_with_published.
PUBLISHED_RECORDS: dict[Kind, tuple[int, ...]] = {
    Kind.PARITY_GCD_C: (7, 13, 43, 139, 313, 661, 1321, 2659, 5459, 10891, 22039),
    Kind.PARITY_GCD_L: (5, 13, 31, 61, 139, 283, 571, 1353, 2911, 4651, 9343, 19141),
    Kind.PARITY_S_C: (7, 13, 31, 61, 151, 313, 661, 1321, 2659, 5459, 10891, 22039),
}


@dataclass(frozen=True)
class RecordEvent:
    n: int
    value: int
    is_prime_value: bool
    is_twin_upper: bool

    @classmethod
    def tag(cls, n: int, value: int) -> RecordEvent:
        return cls(n, value, is_prime(value), is_twin_upper(value))


@dataclass
class VerificationReport:
    family: FamilySpec
    n_scanned: int
    ones_count: int
    prime_steps_count: int
    first_violation: tuple[int, int] | None
    records: list[RecordEvent]
    final_state: SequenceState

    @property
    def steps(self) -> int:
        return self.final_state.n - self.family.start_index

    @property
    def status(self) -> str:
        theorem = self.family.kind in THEOREM_KINDS
        if self.first_violation is None:
            return THEOREM_VERIFIED if theorem else CONJECTURE_CONSISTENT
        return THEOREM_VIOLATED if theorem else CONJECTURE_CONTRADICTED

    def to_dict(self) -> dict:
        return {
            "family": self.family.kind.value,
            "params": self.family.params,
            "n_scanned": self.n_scanned,
            "ones_count": self.ones_count,
            "prime_steps_count": self.prime_steps_count,
            "first_violation": (
                None
                if self.first_violation is None
                else {"n": self.first_violation[0], "delta": self.first_violation[1]}
            ),
            "records": [r.value for r in self.records],
            "final_state": {"n": self.final_state.n, "value": self.final_state.value},
            "status": self.status,
        }


def verify_one_or_prime(
    family: FamilySpec, n_max: int, limit: int | None = U64_MAX
) -> VerificationReport:
    """Scan every step up to n_max and classify each difference.

    Differences that are neither 1 nor prime are not counted; only the first
    of them is kept. Records use threshold 3.
    """
    ones = primes = 0
    violation = None
    best = 0
    recs: list[RecordEvent] = []
    state = family.initial_state()
    # Non-1 differences repeat a lot (the parity families); cache primality.
    seen: dict[int, bool] = {}
    for n, c, d, _ in iter_steps(family, n_max, limit=limit):
        if d == 1:
            ones += 1
        else:
            ok = seen.get(d)
            if ok is None:
                ok = seen[d] = is_prime(d)
            if ok:
                primes += 1
            elif violation is None:
                violation = (n, d)
        if d > best:
            best = d
            if d > 3:
                recs.append(RecordEvent.tag(n, d))
        state = SequenceState(n, c)
    return VerificationReport(
        family, state.n - family.start_index, ones, primes, violation, recs, state
    )


def records(
    family: FamilySpec,
    n_max: int,
    threshold: int = 3,
    limit: int | None = U64_MAX,
) -> list[RecordEvent]:
    """Differences exceeding every earlier difference, kept when > threshold.

    The first difference of a run is always a record.
    """
    best = 0
    out = []
    for n, _, d, _ in iter_steps(family, n_max, limit=limit):
        if d > best:
            best = d
            if d > threshold:
                out.append(RecordEvent.tag(n, d))
    return out


def records_until(
    family: FamilySpec, count: int, threshold: int = 3, n_cap: int = 10**7
) -> list[RecordEvent]:
    """First ``count`` records, generating only as far as needed."""
    best = 0
    out: list[RecordEvent] = []
    for n, _, d, _ in iter_steps(family, n_cap):
        if d > best:
            best = d
            if d > threshold:
                out.append(RecordEvent.tag(n, d))
                if len(out) == count:
                    return out
    raise InsufficientRange(f"only {len(out)} records below n={n_cap}")


def average_delta(family: FamilySpec, n_max: int) -> Fraction:
    """(c(n_max) - start value) / n_max, exactly."""
    if n_max <= family.start_index:
        raise ValueError(f"n_max must exceed {family.start_index}")
    final = Generator(family).advance_to(n_max)
    return Fraction(final.value - family.start_value, n_max)


def anchor_averages(n_max: int) -> list[tuple[int, Fraction]]:
    """(n, average_delta) at every n in [3, n_max] with a(n) = 3n."""
    out = []
    for n, c, _, _ in iter_steps(FamilySpec.rowland(), n_max):
        if n >= 3 and c == 3 * n:
            out.append((n, Fraction(c - 7, n)))
    return out


def _primes_above(p: int, bound: int):
    q = p + 1
    while q < bound:
        if is_prime(q):
            yield q
        q += 1


def distinct_generator_primes(count: int, n_probe: int = 10**5) -> list[int]:
    """Primes P whose c_P generator differs from all earlier chosen ones.

    P_1 = 2; P_{k+1} is the least prime P > P_k with c_{P_i}(P - 1) != 2P for
    every i <= k. Each earlier generator is advanced incrementally, never
    recomputed.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    chosen = [2]
    gens = [Generator(cp_family(2), limit=None)]
    while len(chosen) < count:
        for P in _primes_above(chosen[-1], n_probe):
            if all(g.advance_to(P - 1).value != 2 * P for g in gens):
                chosen.append(P)
                gens.append(Generator(cp_family(P), limit=None))
                break
        else:
            raise SearchExhausted(
                f"no prime after {chosen[-1]} qualifies below {n_probe}"
            )
    return chosen


@dataclass
class CoincidenceReport:
    gcd_records: list[int]
    s_records: list[int]
    pivot: int
    gcd_tail: list[int] = field(default_factory=list)
    s_tail: list[int] = field(default_factory=list)
    first_divergence: tuple[int, int | None, int | None] | None = None

    @property
    def coincide(self) -> bool:
        return self.first_divergence is None


def coincidence_check(n_max: int, pivot: int = 313) -> CoincidenceReport:
    """Compare the gcd and s record lists of the "c" parity families from
    ``pivot`` onward.

    Tails are truncated to the shorter one, so a divergence is a genuine
    mismatch in values, reported as (position in tail, gcd value, s value).
    """
    g = [r.value for r in records(FamilySpec.parity(Kind.PARITY_GCD_C), n_max)]
    s = [r.value for r in records(FamilySpec.parity(Kind.PARITY_S_C), n_max)]
    if pivot not in g or pivot not in s:
        raise InsufficientRange(f"{pivot} not reached in both record lists by {n_max}")
    gt = g[g.index(pivot):]
    st = s[s.index(pivot):]
    report = CoincidenceReport(g, s, pivot, gt, st)
    for i, (a, b) in enumerate(zip(gt, st)):
        if a != b:
            report.first_divergence = (i, a, b)
            break
    return report


@dataclass
class Discrepancy:
    position: int
    published: int | None
    computed: int | None
    published_is_prime: bool | None


def compare_with_published(
    computed: list[int], published: tuple[int, ...] | list[int]
) -> list[Discrepancy]:
    """Positionwise differences over the published list's length."""
    out = []
    for i, pub in enumerate(published):
        got = computed[i] if i < len(computed) else None
        if got != pub:
            out.append(Discrepancy(i, pub, got, is_prime(pub)))
    return out


@dataclass
class TwinReport:
    family: FamilySpec
    n_max: int
    records: list[RecordEvent]
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def non_twin(self) -> list[RecordEvent]:
        return [r for r in self.records if not r.is_twin_upper]

    @property
    def holds_on_range(self) -> bool:
        return not self.non_twin

    @property
    def status(self) -> str:
        return CONJECTURE_CONSISTENT if self.holds_on_range else CONJECTURE_CONTRADICTED

    def to_dict(self) -> dict:
        return {
            "family": self.family.kind.value,
            "n_max": self.n_max,
            "records": [
                {"n": r.n, "value": r.value, "prime": r.is_prime_value,
                 "twin_upper": r.is_twin_upper}
                for r in self.records
            ],
            "status": self.status,
            "discrepancies_vs_published": [
                {"position": d.position, "published": d.published,
                 "computed": d.computed, "published_is_prime": d.published_is_prime}
                for d in self.discrepancies
            ],
        }


def twin_conjecture_report(family: FamilySpec, n_max: int) -> TwinReport:
    if family.kind not in PARITY_KINDS:
        raise ValueError(f"{family.kind.value} is not a parity family")
    recs = records(family, n_max)
    report = TwinReport(family, n_max, recs)
    published = PUBLISHED_RECORDS.get(family.kind)
    if published is not None:
        # Only slots the scan reached can be compared.
        computed = [r.value for r in recs]
        report.discrepancies = compare_with_published(
            computed, published[: len(computed)]
        )
    return report
