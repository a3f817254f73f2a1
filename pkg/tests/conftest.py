"""Shared fixtures: family records and deterministic RNG."""

import random

import pytest

from wpsurf.families import CASES, all_family_records, family_record


@pytest.fixture(scope="session")
def records():
    return {rec.case: rec for rec in all_family_records()}


@pytest.fixture(scope="session")
def cases():
    return CASES


@pytest.fixture()
def rng():
    return random.Random(20260813)


@pytest.fixture(scope="session")
def basic():
    return lambda case: family_record(case).basic_polynomial


@pytest.fixture(scope="session")
def generic():
    return lambda case: family_record(case).generic_polynomial
