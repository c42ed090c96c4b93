"""Shared helpers: deterministic random matrices and vectors per field."""

from __future__ import annotations

import random
from fractions import Fraction

from seqmat import GF2, RATIONAL, FieldSpec, Matrix, Vector, gfp

GF7 = gfp(7)

#: The three fields the randomized suites cycle through.
FIELDS = (GF2, GF7, RATIONAL)


def random_value(rng: random.Random, field: FieldSpec):
    if field.modulus is not None:
        return rng.randrange(field.modulus)
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_matrix(rng: random.Random, field: FieldSpec, n: int) -> Matrix:
    return Matrix.of(
        field, [[random_value(rng, field) for _ in range(n)] for _ in range(n)]
    )


def random_vector(rng: random.Random, field: FieldSpec, n: int) -> Vector:
    return Vector.of(field, [random_value(rng, field) for _ in range(n)])


def random_regular_gf2(rng: random.Random, n: int) -> Matrix:
    rows = [[rng.randrange(2) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
    return Matrix.of(GF2, rows)


def all_gf2_matrices(n: int):
    """Every n x n GF(2) matrix, row-major lexicographic."""
    total_bits = n * n
    for code in range(1 << total_bits):
        rows = [
            [(code >> (i * n + j)) & 1 for j in range(n)] for i in range(n)
        ]
        yield Matrix.of(GF2, rows)


def all_regular_gf2_matrices(n: int):
    """Every regular n x n GF(2) matrix."""
    off = n * n - n
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    for code in range(1 << off):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for b, (i, j) in enumerate(positions):
            rows[i][j] = (code >> b) & 1
        yield Matrix.of(GF2, rows)
