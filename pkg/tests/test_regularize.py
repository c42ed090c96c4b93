"""Regular constructors: the GF(2) procedure and its general-diagonal form."""

import random

import pytest

from conftest import GF7, all_gf2_matrices, all_regular_gf2_matrices, random_matrix
from seqmat import (
    GF2,
    RATIONAL,
    Matrix,
    Vector,
    gfp,
    is_regular,
    is_similar,
    pack_gf2_rows,
    regularize,
    regularize_general,
    regularize_packed,
    regularize_trace,
    seq_matrix,
    unpack_gf2_rows,
)
from seqmat.errors import PreconditionError

GF5 = gfp(5)


def test_worked_example_with_intermediates():
    M = Matrix.of(GF2, [[0, 1, 1], [1, 1, 0], [1, 0, 1]])
    dM = regularize(M)
    assert dM == Matrix.of(GF2, [[1, 1, 1], [1, 1, 1], [0, 1, 1]])
    trace = regularize_trace(M)
    assert trace[0] == Matrix.of(GF2, [[1, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert trace[1] == Matrix.of(GF2, [[1, 1, 1], [1, 1, 1], [0, 1, 1]])
    assert trace[-1] == dM
    assert seq_matrix(dM) == Matrix.of(GF2, [[1, 1, 1], [1, 0, 0], [1, 0, 1]])
    assert is_similar(seq_matrix(dM), M)


def test_identity_is_fixed_point():
    I = Matrix.identity(6, GF2)
    assert regularize(I) == I


def test_exhaustive_3x3_postconditions():
    # Every one of the 512 matrices yields a regular constructor whose
    # in-place matrix agrees off the diagonal.
    ones = Vector.of(GF2, [1, 1, 1])
    for M in all_gf2_matrices(3):
        dM = regularize(M)
        assert is_regular(dM)
        assert is_similar(seq_matrix(dM), M)
        assert regularize_general(M, ones) == dM
        assert regularize_trace(M)[-1] == dM


def test_random_larger_sizes():
    rng = random.Random(55)
    for _ in range(1000):
        n = rng.randint(4, 10)
        M = random_matrix(rng, GF2, n)
        dM = regularize(M)
        assert is_regular(dM)
        assert is_similar(seq_matrix(dM), M)


@pytest.mark.parametrize("n", [3, 4])
def test_injective_on_regular_matrices(n):
    images = {regularize(M).rows for M in all_regular_gf2_matrices(n)}
    assert len(images) == 1 << (n * n - n)


def test_packed_variant_matches_entrywise_trace():
    rng = random.Random(66)
    for _ in range(100):
        n = rng.randint(1, 9)
        M = random_matrix(rng, GF2, n)
        packed = regularize_packed(pack_gf2_rows(M), n)
        assert unpack_gf2_rows(packed, n) == regularize_trace(M)[-1]


def test_requires_gf2():
    with pytest.raises(PreconditionError):
        regularize(Matrix.identity(2, GF7))
    with pytest.raises(PreconditionError):
        regularize_trace(Matrix.identity(2, RATIONAL))


# -- general diagonal ------------------------------------------------------------


def test_general_identity_diag_contract():
    D = regularize_general(Matrix.identity(3, GF5), Vector.of(GF5, [2, 3, 4]))
    assert D == Matrix.of(GF5, [[2, 0, 0], [0, 3, 0], [0, 0, 4]])


def test_general_random_gf7():
    rng = random.Random(77)
    for _ in range(200):
        n = 4
        M = random_matrix(rng, GF7, n)
        units = Vector.of(GF7, [rng.randrange(1, 7) for _ in range(n)])
        D = regularize_general(M, units)
        for i in range(n):
            assert D.rows[i][i] == units[i]
        assert is_similar(seq_matrix(D), M)


def test_general_random_rationals():
    from fractions import Fraction

    rng = random.Random(78)
    for _ in range(50):
        n = rng.randint(1, 5)
        M = random_matrix(rng, RATIONAL, n)
        units = Vector.of(
            RATIONAL,
            [Fraction(rng.randint(1, 5), rng.randint(1, 5)) for _ in range(n)],
        )
        D = regularize_general(M, units)
        for i in range(n):
            assert D.rows[i][i] == units[i]
        assert is_similar(seq_matrix(D), M)


def test_general_validation():
    M = Matrix.identity(2, GF5)
    with pytest.raises(PreconditionError):
        regularize_general(M, Vector.of(GF5, [1, 0]))
    with pytest.raises(PreconditionError):
        regularize_general(M, Vector.of(GF5, [1, 1, 1]))
    with pytest.raises(PreconditionError):
        regularize_general(M, Vector.of(GF7, [1, 1]))
