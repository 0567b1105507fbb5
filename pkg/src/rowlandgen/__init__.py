"""Rowland-type prime-generating gcd recurrences and their twin-prime records."""

from .arithmetic import (
    U64_MAX,
    factorize,
    gcd_nat,
    is_prime,
    is_twin_upper,
    largest_prime_factor,
    s_value,
    smallest_prime_factor,
)
from .generators import (
    FamilySpec,
    Generator,
    Kind,
    SequenceState,
    StepOutput,
    cp_family,
    generate,
    step,
    validate_seed_2n,
    validate_seed_3n,
)
from .analysis import (
    RecordEvent,
    VerificationReport,
    average_delta,
    coincidence_check,
    distinct_generator_primes,
    records,
    twin_conjecture_report,
    verify_one_or_prime,
)
from .leap import Anchor, LeapStep, generate_fast, leap_step_2n, leap_step_3n

__version__ = "0.1.0"
