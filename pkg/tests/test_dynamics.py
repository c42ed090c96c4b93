"""Orbits and censuses of the regular-constructor map on GF(2) matrices."""

import random

import pytest

from conftest import all_regular_gf2_matrices, random_regular_gf2
from seqmat import (
    GF2,
    Matrix,
    census,
    gfp,
    is_regular,
    load_orbit_seed,
    orbit,
    phi,
    regularize,
    trajectory,
)
from seqmat.errors import GuardError, PreconditionError


def test_phi_identity():
    I = Matrix.identity(4, GF2)
    assert phi(I) == I


def test_phi_of_worked_constructor():
    dM = Matrix.of(GF2, [[1, 1, 1], [1, 1, 1], [0, 1, 1]])
    # seq_matrix is [[1,1,1],[1,0,0],[1,0,1]]; forcing the diagonal gives:
    assert phi(dM) == Matrix.of(GF2, [[1, 1, 1], [1, 1, 0], [1, 0, 1]])


def test_phi_inverts_regularize_exhaustive_3x3():
    for M in all_regular_gf2_matrices(3):
        assert phi(regularize(M)) == M


def test_phi_preconditions():
    with pytest.raises(PreconditionError):
        phi(Matrix.of(GF2, [[0, 0], [0, 1]]))
    with pytest.raises(PreconditionError):
        phi(Matrix.identity(2, gfp(3)))


def test_regularize_permutes_regular_matrices():
    for n in (2, 3, 4):
        domain = {M.rows for M in all_regular_gf2_matrices(n)}
        image = {regularize(Matrix(GF2, rows)).rows for rows in domain}
        assert image == domain


# -- orbits -------------------------------------------------------------------


def test_orbit_identity_is_fixed():
    report = orbit(Matrix.identity(5, GF2))
    assert report.cycle_length == 1


def test_orbit_minimality_and_recurrence():
    rng = random.Random(15)
    for _ in range(20):
        M = random_regular_gf2(rng, 4)
        report = orbit(M)
        walk = trajectory(M, report.cycle_length)
        assert walk[-1] == M
        assert all(step != M for step in walk[1:-1])


def test_orbit_detects_max_iter():
    seed = load_orbit_seed()
    with pytest.raises(GuardError):
        orbit(seed, 100)


def test_orbit_preconditions():
    with pytest.raises(PreconditionError):
        orbit(Matrix.of(GF2, [[0, 1], [1, 1]]))
    with pytest.raises(PreconditionError):
        orbit(Matrix.identity(2, GF2), 0)


def test_orbit_pure_cycle_verification_random_n10():
    rng = random.Random(16)
    for _ in range(10):
        M = random_regular_gf2(rng, 10)
        plain = orbit(M)
        verified = orbit(M, verify_pure_cycle=True)
        assert plain.cycle_length == verified.cycle_length


def test_bundled_seed_matrix_shape():
    seed = load_orbit_seed()
    assert seed.n == 10
    assert seed.field == GF2
    assert is_regular(seed)


def test_bundled_seed_cycle_length():
    assert orbit(load_orbit_seed()).cycle_length == 13122


# -- trajectories ----------------------------------------------------------------


def test_trajectory_identity():
    I = Matrix.identity(3, GF2)
    assert trajectory(I, 3) == [I, I, I, I]


def test_trajectory_zero_steps():
    M = Matrix.of(GF2, [[1, 1], [0, 1]])
    assert trajectory(M, 0) == [M]


def test_trajectory_one_step_is_regularize():
    dM = Matrix.of(GF2, [[1, 1, 1], [1, 1, 1], [0, 1, 1]])
    assert trajectory(dM, 1) == [dM, regularize(dM)]


def test_trajectory_preconditions():
    with pytest.raises(PreconditionError):
        trajectory(Matrix.of(GF2, [[0]]), 1)
    with pytest.raises(PreconditionError):
        trajectory(Matrix.identity(2, GF2), -1)


# -- census ------------------------------------------------------------------------


def test_census_n1():
    report = census(1)
    assert report.histogram == {1: 1}
    assert report.max_cycle_length == 1


def test_census_n2_against_brute_force():
    # Independent walk: iterate the entrywise constructor over all four
    # regular 2x2 matrices.
    lengths = {}
    for M in all_regular_gf2_matrices(2):
        cur = regularize(M)
        steps = 1
        while cur != M:
            cur = regularize(cur)
            steps += 1
        lengths[steps] = lengths.get(steps, 0) + 1
    report = census(2)
    assert report.histogram == lengths
    assert report.matrix_count == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_census_conservation(n):
    report = census(n)
    assert report.matrix_count == 1 << (n * n - n)
    for length, count in report.histogram.items():
        assert count % length == 0  # whole cycles only


def test_census_max_4x4():
    assert census(4).max_cycle_length == 18


def test_census_lengths_match_orbits():
    report = census(3)
    for M in all_regular_gf2_matrices(3):
        assert orbit(M).cycle_length in report.histogram


def test_census_guards():
    with pytest.raises(PreconditionError):
        census(0)
    with pytest.raises(GuardError):
        census(6)
    # force overrides the guard; use a size that is actually feasible
    assert census(3, force=True) == census(3)


@pytest.mark.slow
def test_census_n5_guard_boundary():
    report = census(5)
    assert report.matrix_count == 1 << 20
    for length, count in report.histogram.items():
        assert count % length == 0
