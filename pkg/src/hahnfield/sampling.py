"""Seeded random generators for exponents, coefficients and series.

Shared by the structure checker, the embedding verifier and the test
suite. Everything is driven by a caller-supplied ``random.Random`` so
identical seeds reproduce identical data; magnitudes are kept small so
that exact arithmetic stays fast and exponent collisions actually occur.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coefficients import Coefficient, CoefficientField
from .exponents import Exponent, ExponentGroup
from .series import FiniteSeries

_DENOMS = (1, 1, 2, 2, 3, 4, 6)


def exponent_sample(rng: random.Random, group: ExponentGroup, span: int = 8) -> Exponent:
    if group.kind == "z":
        return group.element(rng.randint(-span, span))
    if group.kind == "q":
        return group.element(Fraction(rng.randint(-span, span), rng.choice(_DENOMS)))
    comps = tuple(
        Fraction(rng.randint(-span // 2, span // 2), rng.choice((1, 2)))
        for _ in range(group.rank)
    )
    return group.element(comps)


def coefficient_sample(
    rng: random.Random, field: CoefficientField, nonzero: bool = False
) -> Coefficient:
    while True:
        if field.kind == "q":
            c = field.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        else:
            c = field.element(rng.randint(0, field.p - 1))
        if c or not nonzero:
            return c


def series_sample(
    rng: random.Random,
    group: ExponentGroup,
    field: CoefficientField,
    max_terms: int = 4,
    min_terms: int = 0,
    span: int = 8,
) -> FiniteSeries:
    n = rng.randint(min_terms, max_terms)
    exponents = set()
    while len(exponents) < n:
        exponents.add(exponent_sample(rng, group, span))
    terms = [(e, coefficient_sample(rng, field, nonzero=True)) for e in sorted(exponents)]
    return FiniteSeries(group, field, tuple(terms))


def rng_for(seed: int, label: str) -> random.Random:
    # string seeding is hash-seed independent (sha512 based), so reports
    # replay bit-identically across interpreter runs
    return random.Random(f"{seed}:{label}")
