"""Rowland-type gcd recurrences as deterministic, resumable generators.

Every family has the form ``c(n) = c(n-1) + f(k, c(n-1))`` where ``f`` is
either gcd or :func:`~rowlandgen.arithmetic.s_value` and ``k`` is ``n`` or
``n - 2`` depending on the family and the parity of ``n``. Indices are
1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, NamedTuple

from .arithmetic import U64_MAX, gcd_nat, is_prime, s_value
from .errors import SeedError, ValueOverflow


class Kind(enum.Enum):
    ROWLAND_CLASSIC = "rowland"
    THREE_N = "three-n"
    TWO_N = "two-n"
    PARITY_GCD_C = "parity-gcd-c"
    PARITY_GCD_L = "parity-gcd-l"
    PARITY_S_C = "parity-s-c"
    PARITY_S_L = "parity-s-l"


PARITY_KINDS = frozenset(
    {Kind.PARITY_GCD_C, Kind.PARITY_GCD_L, Kind.PARITY_S_C, Kind.PARITY_S_L}
)
THEOREM_KINDS = frozenset({Kind.ROWLAND_CLASSIC, Kind.THREE_N, Kind.TWO_N})
_S_KINDS = frozenset({Kind.PARITY_S_C, Kind.PARITY_S_L})
# "C" kinds feed n on even steps, "L" kinds on odd steps.
_EVEN_FEEDS_N = frozenset({Kind.PARITY_GCD_C, Kind.PARITY_S_C})


@dataclass(frozen=True)
class FamilySpec:
    """Closed description of one recurrence: enough to regenerate it exactly.

    Build instances with the classmethods (``rowland``, ``three_n``,
    ``two_n``, ``parity``) or :func:`cp_family`; they validate seeds.
    """

    kind: Kind
    start_index: int
    start_value: int
    m: int | None = None
    t: int | None = None
    p: int | None = field(default=None, compare=False)

    @classmethod
    def rowland(cls) -> FamilySpec:
        return cls(Kind.ROWLAND_CLASSIC, 1, 7)

    @classmethod
    def three_n(cls, m: int, t: int) -> FamilySpec:
        p = validate_seed_3n(m, t)
        return cls(Kind.THREE_N, m - 1, t, m, t, p)

    @classmethod
    def two_n(cls, m: int, t: int) -> FamilySpec:
        p = validate_seed_2n(m, t)
        return cls(Kind.TWO_N, m - 1, t, m, t, p)

    @classmethod
    def parity(cls, kind: Kind | str) -> FamilySpec:
        kind = Kind(kind)
        if kind not in PARITY_KINDS:
            raise ValueError(f"{kind.value} is not a parity family")
        return cls(kind, 1, 2)

    @property
    def params(self) -> dict:
        if self.kind in (Kind.THREE_N, Kind.TWO_N):
            return {"m": self.m, "t": self.t}
        return {}

    def initial_state(self) -> SequenceState:
        return SequenceState(self.start_index, self.start_value)


class SequenceState(NamedTuple):
    n: int
    value: int


class StepOutput(NamedTuple):
    n: int
    value: int
    delta: int
    gcd_arg: int


def _check_prime_gcd(m: int, t: int) -> int:
    p = gcd_nat(m, t)
    if not is_prime(p):
        raise SeedError(f"gcd({m}, {t}) = {p} is not prime", "NOT_PRIME_GCD")
    return p


def validate_seed_3n(m: int, t: int) -> int:
    """Check a seed c(m-1) = t for the 3m family and return p = gcd(m, t)."""
    if m < 2:
        raise SeedError(f"three-n seeds need m >= 2, got {m}", "M_TOO_SMALL")
    if t < 1:
        raise SeedError(f"need t >= 1, got {t}", "SEED_MISMATCH")
    p = _check_prime_gcd(m, t)
    if t + p != 3 * m:
        raise SeedError(f"t + p = {t + p} but 3m = {3 * m}", "SEED_MISMATCH")
    return p


def validate_seed_2n(m: int, t: int) -> int:
    """Check a seed c(m-1) = t for the 2m family and return p = gcd(m, t).

    A coprime pair is reported as SEED_MISMATCH (it is not a seed of this
    family at all); a composite gcd as NOT_PRIME_GCD.
    """
    if m < 4:
        raise SeedError(f"two-n seeds need m >= 4, got {m}", "M_TOO_SMALL")
    if t < 1:
        raise SeedError(f"need t >= 1, got {t}", "SEED_MISMATCH")
    p = gcd_nat(m, t)
    if p == 1:
        raise SeedError(f"gcd({m}, {t}) = 1", "SEED_MISMATCH")
    if not is_prime(p):
        raise SeedError(f"gcd({m}, {t}) = {p} is not prime", "NOT_PRIME_GCD")
    if t + p != 2 * m:
        raise SeedError(f"t + p = {t + p} but 2m = {2 * m}", "SEED_MISMATCH")
    return p


def cp_family(P: int) -> FamilySpec:
    """The 3m family seeded by c_P(P-1) = 2P; its first difference is P."""
    if not is_prime(P):
        raise SeedError(f"{P} is not prime", "NOT_PRIME")
    return FamilySpec.three_n(P, 2 * P)


def gcd_argument(kind: Kind, n: int) -> int:
    """First argument of gcd / s when computing the term with index n."""
    if kind in PARITY_KINDS:
        feeds_n = (n % 2 == 0) == (kind in _EVEN_FEEDS_N)
        return n if feeds_n else n - 2
    return n


def step(
    state: SequenceState, family: FamilySpec, limit: int | None = U64_MAX
) -> StepOutput:
    n = state.n + 1
    arg = gcd_argument(family.kind, n)
    if family.kind in _S_KINDS:
        delta = s_value(arg, state.value)
    else:
        delta = gcd_nat(arg, state.value)
    value = state.value + delta
    if limit is not None and value > limit:
        raise ValueOverflow(f"c({n}) exceeds {limit}", index=n)
    return StepOutput(n, value, delta, arg)


def iter_steps(
    family: FamilySpec,
    n_max: int,
    state: SequenceState | None = None,
    limit: int | None = U64_MAX,
) -> Iterator[StepOutput]:
    """Yield StepOutput for every index in (state.n, n_max].

    Same semantics as repeated :func:`step` calls, with the dispatch hoisted
    out of the loop.
    """
    if state is None:
        state = family.initial_state()
    kind = family.kind
    n, c = state
    is_s = kind in _S_KINDS
    f = s_value if is_s else gcd
    if kind in PARITY_KINDS:
        even_feeds_n = kind in _EVEN_FEEDS_N
        for n in range(n + 1, n_max + 1):
            arg = n if ((n & 1) == 0) == even_feeds_n else n - 2
            d = f(arg, c)
            c += d
            if limit is not None and c > limit:
                raise ValueOverflow(f"c({n}) exceeds {limit}", index=n)
            yield StepOutput(n, c, d, arg)
    else:
        for n in range(n + 1, n_max + 1):
            d = gcd(n, c)
            c += d
            if limit is not None and c > limit:
                raise ValueOverflow(f"c({n}) exceeds {limit}", index=n)
            yield StepOutput(n, c, d, n)


def generate(
    family: FamilySpec,
    n_max: int,
    state: SequenceState | None = None,
    limit: int | None = U64_MAX,
) -> Iterator[StepOutput]:
    if n_max <= family.start_index:
        raise ValueError(
            f"n_max={n_max} must exceed start index {family.start_index}"
        )
    return iter_steps(family, n_max, state, limit)


def values(family: FamilySpec, n_max: int) -> list[int]:
    return [out.value for out in iter_steps(family, n_max)]


class Generator:
    """Stateful, resumable run of one family.

    >>> g = Generator(FamilySpec.rowland())
    >>> [o.value for o in g.advance(5)]
    [8, 9, 10, 15]
    >>> g.state
    SequenceState(n=5, value=15)
    """

    def __init__(
        self,
        family: FamilySpec,
        state: SequenceState | None = None,
        limit: int | None = U64_MAX,
    ):
        self.family = family
        self.state = family.initial_state() if state is None else state
        self.limit = limit

    def advance(self, n_max: int) -> Iterator[StepOutput]:
        for out in iter_steps(self.family, n_max, self.state, self.limit):
            self.state = SequenceState(out.n, out.value)
            yield out

    def advance_to(self, n_max: int) -> SequenceState:
        for _ in self.advance(n_max):
            pass
        return self.state

    def checkpoint(self) -> dict:
        return checkpoint_record(self.family, self.state)

    @classmethod
    def from_checkpoint(cls, record: dict, limit: int | None = U64_MAX) -> Generator:
        family, state = load_checkpoint(record)
        return cls(family, state, limit)


def family_from_params(kind: Kind | str, params: dict | None = None) -> FamilySpec:
    kind = Kind(kind)
    params = params or {}
    if kind is Kind.ROWLAND_CLASSIC:
        return FamilySpec.rowland()
    if kind is Kind.THREE_N:
        return FamilySpec.three_n(int(params["m"]), int(params["t"]))
    if kind is Kind.TWO_N:
        return FamilySpec.two_n(int(params["m"]), int(params["t"]))
    return FamilySpec.parity(kind)


def checkpoint_record(family: FamilySpec, state: SequenceState) -> dict:
    """The (kind, params, n, value) resume tuple as a JSON-ready dict."""
    return {
        "kind": family.kind.value,
        "params": family.params,
        "n": state.n,
        "value": state.value,
    }


def load_checkpoint(record: dict) -> tuple[FamilySpec, SequenceState]:
    family = family_from_params(record["kind"], record.get("params"))
    return family, SequenceState(int(record["n"]), int(record["value"]))
