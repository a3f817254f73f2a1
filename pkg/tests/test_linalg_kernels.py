"""Exact integer elimination kernels: pure backend vs compiled twin."""

import random
import subprocess
import sys
from math import gcd

import pytest
import sympy

from wpsurf._kernels import backend_name, pure
from wpsurf.jacobian import IntEchelon, clear_denominators

try:
    from wpsurf._kernels import _celim
except ImportError:  # pragma: no cover - compiled twin optional
    _celim = None

BACKENDS = [pure] + ([_celim] if _celim is not None else [])


def _random_matrix(rng, rows, cols, lo=-9, hi=9, density=0.7):
    return [
        [rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]


def test_backend_name_is_known():
    assert backend_name() in {"pure", "c"}


def test_compiled_backend_is_available():
    # the distribution ships the compiled kernel; auto selection must find it
    assert _celim is not None
    assert backend_name() == "c"


def test_env_override_selects_pure_backend():
    out = subprocess.run(
        [sys.executable, "-c",
         "from wpsurf._kernels import backend_name; print(backend_name())"],
        capture_output=True, text=True,
        env={"WPSURF_KERNEL": "pure", "PATH": "/usr/bin:/bin"},
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "pure"


def test_env_override_rejects_unknown_value():
    out = subprocess.run(
        [sys.executable, "-c", "import wpsurf._kernels"],
        capture_output=True, text=True,
        env={"WPSURF_KERNEL": "fast", "PATH": "/usr/bin:/bin"},
    )
    assert out.returncode != 0
    assert "WPSURF_KERNEL" in out.stderr


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.BACKEND)
def test_normalize_divides_by_gcd(impl):
    rng = random.Random(1)
    for _ in range(200):
        row = [rng.randint(-40, 40) * rng.choice([1, 2, 6]) for _ in range(8)]
        expect = list(row)
        g = 0
        for v in expect:
            g = gcd(g, v)
        if g > 1:
            expect = [v // g for v in expect]
        got = list(row)
        impl.normalize(got)
        assert got == expect
    z = [0, 0, 0]
    impl.normalize(z)
    assert z == [0, 0, 0]


def test_backends_agree_on_normalize_and_reduce():
    if _celim is None:
        pytest.skip("compiled kernel not built")
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(2, 10)
        row1 = [rng.randint(-50, 50) for _ in range(n)]
        row2 = list(row1)
        assert pure.normalize(row1) == _celim.normalize(row2)
        # build a small echelon and reduce a fresh row against it with both
        ech = IntEchelon(n)
        for _ in range(rng.randint(1, n)):
            ech.insert([rng.randint(-9, 9) for _ in range(n)])
        target = [rng.randint(-9, 9) for _ in range(n)]
        a = pure.reduce_against(list(target), ech.pivot_cols, ech.rows)
        b = _celim.reduce_against(list(target), ech.pivot_cols, ech.rows)
        assert a == b


def test_reduce_zeroes_pivot_columns():
    rng = random.Random(3)
    for impl in BACKENDS:
        for _ in range(50):
            n = rng.randint(3, 9)
            ech = IntEchelon(n)
            for _ in range(n):
                ech.insert([rng.randint(-9, 9) for _ in range(n)])
            row = impl.reduce_against(
                [rng.randint(-9, 9) for _ in range(n)], ech.pivot_cols, ech.rows
            )
            for c in ech.pivot_cols:
                assert row[c] == 0


@pytest.mark.parametrize("trial", range(30))
def test_echelon_rank_matches_sympy(trial):
    rng = random.Random(100 + trial)
    rows, cols = rng.randint(1, 8), rng.randint(1, 10)
    M = _random_matrix(rng, rows, cols)
    ech = IntEchelon(cols)
    for r in M:
        ech.insert(list(r))
    assert ech.rank == sympy.Matrix(M).rank()


def test_membership_detects_dependent_rows():
    rng = random.Random(4)
    for _ in range(20):
        cols = rng.randint(3, 8)
        ech = IntEchelon(cols)
        basis = [_random_matrix(rng, 1, cols)[0] for _ in range(3)]
        for r in basis:
            ech.insert(list(r))
        combo = [
            3 * a - 2 * b + c for a, b, c in zip(basis[0], basis[1], basis[2])
        ]
        assert ech.is_member(combo)
        ech2 = IntEchelon(cols)
        assert ech2.insert(list(combo)) is None or ech.rank >= 1


def test_clear_denominators_primitive_and_proportional():
    from fractions import Fraction

    row = [Fraction(1, 2), Fraction(-2, 3), Fraction(0), Fraction(5)]
    out = clear_denominators(row)
    assert out == [3, -4, 0, 30]
    g = 0
    for v in out:
        g = gcd(g, v)
    assert g == 1
    assert clear_denominators([]) == []
