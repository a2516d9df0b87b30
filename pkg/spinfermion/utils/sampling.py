"""Seeded random rational inputs for property checks."""

import random
from fractions import Fraction
from typing import List, Tuple

from spinfermion.core.applications import FieldVector
from spinfermion.core.uodm import UodmVector


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random, bound: int = 9, max_denominator: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_denominator))


def random_rationals(rng: random.Random, count: int) -> List[Fraction]:
    return [random_rational(rng) for _ in range(count)]


def random_uodm_vector(rng: random.Random, L: int) -> UodmVector:
    return UodmVector(L, tuple(random_rationals(rng, 2 ** L - 1)))


def random_field(rng: random.Random) -> FieldVector:
    """Non-zero rational field vector."""
    while True:
        bx, by, bz = random_rationals(rng, 3)
        if bx or by or bz:
            return FieldVector(bx, by, bz)


def random_energies(rng: random.Random, L: int) -> Tuple[Fraction, ...]:
    return tuple(random_rationals(rng, L))
