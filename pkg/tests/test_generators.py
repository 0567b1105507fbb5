import pytest

from rowlandgen.arithmetic import is_prime
from rowlandgen.errors import SeedError, ValueOverflow
from rowlandgen.generators import (
    FamilySpec,
    Generator,
    Kind,
    SequenceState,
    checkpoint_record,
    cp_family,
    generate,
    iter_steps,
    load_checkpoint,
    step,
    validate_seed_2n,
    validate_seed_3n,
    values,
)

from oracles import naive_sequence

ALL_FAMILIES = [
    FamilySpec.rowland(),
    cp_family(2),
    cp_family(7),
    FamilySpec.three_n(6, 15),
    FamilySpec.two_n(4, 6),
    FamilySpec.two_n(9, 15),
] + [FamilySpec.parity(k) for k in Kind if k.value.startswith("parity")]


def oracle_rows(family, n_max):
    kind = family.kind.value
    return naive_sequence(kind, n_max, family.start_index, family.start_value)


@pytest.mark.parametrize("m,t,p", [(5, 10, 5), (2, 4, 2), (6, 15, 3)])
def test_validate_seed_3n(m, t, p):
    assert validate_seed_3n(m, t) == p


@pytest.mark.parametrize(
    "m,t,code",
    [(4, 7, "NOT_PRIME_GCD"), (4, 8, "NOT_PRIME_GCD"), (5, 5, "SEED_MISMATCH"), (1, 2, "M_TOO_SMALL")],
)
def test_validate_seed_3n_rejects(m, t, code):
    with pytest.raises(SeedError) as exc:
        validate_seed_3n(m, t)
    assert exc.value.code == code


@pytest.mark.parametrize("m,t,p", [(4, 6, 2), (9, 15, 3)])
def test_validate_seed_2n(m, t, p):
    assert validate_seed_2n(m, t) == p


@pytest.mark.parametrize(
    "m,t,code",
    [(4, 7, "SEED_MISMATCH"), (3, 4, "M_TOO_SMALL"), (8, 12, "NOT_PRIME_GCD"), (6, 8, "SEED_MISMATCH")],
)
def test_validate_seed_2n_rejects(m, t, code):
    with pytest.raises(SeedError) as exc:
        validate_seed_2n(m, t)
    assert exc.value.code == code


def test_cp_family():
    f = cp_family(2)
    assert (f.kind, f.m, f.t, f.start_index, f.start_value) == (Kind.THREE_N, 2, 4, 1, 4)
    f = cp_family(7)
    assert (f.start_index, f.start_value) == (6, 14)
    first = next(iter_steps(cp_family(5), 5))
    assert (first.n, first.value, first.delta) == (5, 15, 5)
    with pytest.raises(SeedError) as exc:
        cp_family(9)
    assert exc.value.code == "NOT_PRIME"


@pytest.mark.parametrize(
    "family,state,expected",
    [
        (FamilySpec.rowland(), (4, 10), (5, 15, 5, 5)),
        (FamilySpec.parity(Kind.PARITY_GCD_C), (4, 6), (5, 9, 3, 3)),
        (FamilySpec.parity(Kind.PARITY_GCD_L), (1, 2), (2, 4, 2, 0)),
        (FamilySpec.parity(Kind.PARITY_S_C), (8, 14), (9, 21, 7, 7)),
    ],
)
def test_step_examples(family, state, expected):
    assert tuple(step(SequenceState(*state), family)) == expected


def test_generate_examples():
    assert values(FamilySpec.rowland(), 5) == [8, 9, 10, 15]
    assert values(cp_family(2), 3) == [6, 9]
    assert values(cp_family(2), 4) == [6, 9, 10]
    deltas = [o.delta for o in generate(FamilySpec.two_n(4, 6), 10)]
    assert deltas == [2, 1, 3, 1, 1, 1, 5]
    s_c = [2] + values(FamilySpec.parity(Kind.PARITY_S_C), 9)
    assert s_c == [2, 4, 5, 6, 9, 12, 13, 14, 21]


def test_generate_requires_progress():
    with pytest.raises(ValueError):
        list(generate(FamilySpec.rowland(), 1))


@pytest.mark.parametrize("family", ALL_FAMILIES, ids=lambda f: f"{f.kind.value}{f.params}")
def test_iter_steps_matches_oracle_and_step(family):
    rows = oracle_rows(family, 3000)
    fast = [(o.n, o.value, o.delta) for o in iter_steps(family, 3000)]
    assert fast == rows
    state = family.initial_state()
    for expected in rows[:500]:
        out = step(state, family)
        assert (out.n, out.value, out.delta) == expected
        state = SequenceState(out.n, out.value)


@pytest.mark.parametrize("family", ALL_FAMILIES, ids=lambda f: f"{f.kind.value}{f.params}")
def test_monotone_and_value_at_least_n(family):
    prev = family.start_value
    for o in iter_steps(family, 20000):
        assert o.delta >= 1 and o.value == prev + o.delta
        assert o.value >= o.n
        prev = o.value


def test_determinism():
    f = FamilySpec.parity(Kind.PARITY_S_L)
    assert list(generate(f, 5000)) == list(generate(f, 5000))


def test_one_or_prime_theorem_families():
    for f in [FamilySpec.rowland(), cp_family(7), FamilySpec.three_n(6, 15), FamilySpec.two_n(9, 15)]:
        seen = set()
        for o in iter_steps(f, 10**5):
            if o.delta > 1 and o.delta not in seen:
                assert is_prime(o.delta), (f, o)
                seen.add(o.delta)


def test_parity_s_deltas_prime_or_one():
    for kind in (Kind.PARITY_S_C, Kind.PARITY_S_L):
        for o in iter_steps(FamilySpec.parity(kind), 20000):
            assert o.delta == 1 or is_prime(o.delta)


def test_cp2_coincides_with_rowland():
    a = values(FamilySpec.rowland(), 10**5)[1:]  # indices 3..
    c = values(cp_family(2), 10**5)[1:]
    assert a == c


def test_three_n_bound_rowland():
    for o in iter_steps(FamilySpec.rowland(), 10**5):
        if o.n >= 3:
            assert o.value <= 3 * o.n


def test_resume_equals_uninterrupted():
    f = FamilySpec.parity(Kind.PARITY_GCD_L)
    full = list(generate(f, 4000))
    g = Generator(f)
    first = list(g.advance(1234))
    record = g.checkpoint()
    assert record == {"kind": "parity-gcd-l", "params": {}, "n": 1234, "value": first[-1].value}
    resumed = Generator.from_checkpoint(record)
    assert first + list(resumed.advance(4000)) == full


def test_checkpoint_roundtrip_with_params():
    f = FamilySpec.two_n(9, 15)
    rec = checkpoint_record(f, SequenceState(20, 40))
    fam, state = load_checkpoint(rec)
    assert fam == f and state == SequenceState(20, 40)


def test_overflow_is_signalled_with_index():
    f = FamilySpec.rowland()
    start = SequenceState(10, 2**64 - 3)
    with pytest.raises(ValueOverflow) as exc:
        list(iter_steps(f, 100, start))
    assert exc.value.index is not None and exc.value.index > 10
    # unbounded engine carries on
    outs = list(iter_steps(f, 100, start, limit=None))
    assert outs[-1].value > 2**64
