"""Shared fixtures: known worked examples and a session enumeration cache."""

import functools

import pytest

from costas_cubes.core import CostasCube, Permutation
from costas_cubes.enumeration import enumerate_costas_arrays, enumerate_costas_cubes
from costas_cubes.gf import field_new

# Every extension field the suite instantiates, keyed by q.
EXTENSION_MODULI = {
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 0, 1, 1)),
    9: (3, 2, (1, 0, 1)),
    16: (2, 4, (1, 0, 0, 1, 1)),
    25: (5, 2, (1, 1, 1)),
    27: (3, 3, (1, 0, 2, 1)),
    32: (2, 5, (1, 0, 1, 0, 0, 1)),
    49: (7, 2, (1, 0, 1)),
    64: (2, 6, (1, 1, 0, 0, 0, 0, 1)),
    81: (3, 4, (2, 1, 0, 0, 1)),
    121: (11, 2, (1, 0, 1)),
    125: (5, 3, (1, 1, 0, 1)),
    243: (3, 5, (1, 2, 0, 0, 0, 1)),
    1024: (2, 10, (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1)),
    2187: (3, 7, (2, 0, 1, 0, 0, 0, 0, 1)),
    16384: (2, 14, (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1)),
}
PRIME_FIELDS = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 12289)


@functools.lru_cache(maxsize=1)
def instantiated_fields() -> tuple:
    fields = [field_new(p, 1) for p in PRIME_FIELDS]
    fields.extend(field_new(p, m, mod) for p, m, mod in EXTENSION_MODULI.values())
    fields.append(field_new(2, 4, (1, 1, 0, 0, 1)))  # second GF(16) representation
    return tuple(fields)

# Order-6 reference cube and its projections.
ORDER6_TRIPLES = [(1, 6, 4), (2, 4, 6), (3, 1, 2), (4, 3, 1), (5, 2, 5), (6, 5, 3)]
ORDER6_A = (3, 5, 4, 2, 6, 1)
ORDER6_B = (4, 3, 6, 1, 5, 2)
ORDER6_C = (3, 1, 5, 6, 2, 4)

# Order-6 cube whose projection set is a single array class of size 4.
SMALL_SD_TRIPLES = [(1, 2, 4), (2, 4, 1), (3, 5, 6), (4, 1, 2), (5, 6, 3), (6, 3, 5)]
SMALL_SD_MEMBERS = {
    (2, 4, 5, 1, 6, 3),
    (3, 6, 1, 5, 4, 2),
    (4, 1, 6, 2, 3, 5),
    (5, 3, 2, 6, 1, 4),
}

# Order-14 cube over GF(16) with modulus 1+x^3+x^4, phi=x, rho=1+x^2+x^3,
# psi=x+x^2+x^3.
GF16_J = (3, 6, 1, 12, 10, 2, 7, 9, 8, 5, 11, 4, 13, 14)
GF16_K = (7, 14, 2, 13, 10, 4, 12, 11, 1, 5, 6, 8, 3, 9)
GF16_A = (3, 6, 1, 12, 10, 2, 7, 9, 8, 5, 11, 4, 13, 14)
GF16_B = (9, 3, 13, 6, 10, 11, 1, 12, 14, 5, 8, 7, 4, 2)
GF16_C = (8, 1, 13, 2, 5, 11, 3, 4, 14, 10, 9, 7, 12, 6)

# Order-11 cube over GF(13) with phi=11, psi=6.
P13_J = (7, 4, 2, 3, 11, 5, 9, 8, 10, 1, 6)
P13_K = (6, 11, 2, 4, 3, 7, 1, 9, 10, 8, 5)
P13_A = (10, 3, 4, 2, 6, 11, 1, 8, 7, 9, 5)
P13_B = (7, 3, 5, 4, 11, 1, 6, 10, 8, 9, 2)
P13_C = (9, 2, 11, 3, 6, 7, 5, 1, 8, 10, 4)

# Order-24 cubes D and E over GF(27) with modulus 1+2x^2+x^3, phi=2+2x.
# The published Projection B row of D misprints its final entry as 12;
# the triple table forces 22 (as printed, the row repeats 12 and is not
# a permutation), so the corrected row is frozen here.
GF27_J = (6, 2, 4, 7, 20, 21, 3, 8, 18, 15, 14, 12, 5, 23, 17, 24, 10, 19, 9, 13, 1, 16, 11, 22)
GF27_D_K = (21, 2, 7, 3, 13, 1, 4, 8, 19, 17, 23, 12, 20, 11, 10, 22, 15, 9, 18, 5, 6, 24, 14, 16)
GF27_E_K = (16, 14, 24, 6, 5, 18, 9, 15, 22, 10, 11, 20, 12, 23, 17, 19, 8, 4, 1, 13, 3, 7, 2, 21)
GF27_D_A = (21, 2, 7, 3, 13, 1, 4, 8, 19, 17, 23, 12, 20, 11, 10, 22, 15, 9, 18, 5, 6, 24, 14, 16)
GF27_D_B = (6, 2, 4, 7, 20, 21, 3, 8, 18, 15, 14, 12, 5, 23, 17, 24, 10, 19, 9, 13, 1, 16, 11, 22)
GF27_D_C = (21, 2, 7, 3, 13, 1, 4, 8, 19, 17, 23, 12, 20, 11, 10, 22, 15, 9, 18, 5, 6, 24, 14, 16)
GF27_E_A = GF27_D_A
GF27_E_B = (19, 23, 21, 18, 5, 4, 22, 17, 7, 10, 11, 13, 20, 2, 8, 1, 15, 6, 16, 12, 24, 9, 14, 3)
GF27_E_C = (9, 11, 1, 19, 20, 7, 16, 10, 3, 15, 14, 5, 13, 2, 8, 6, 17, 21, 24, 12, 22, 18, 23, 4)


def cube_from_jk(j_row, k_row) -> CostasCube:
    return CostasCube(tuple(zip(j_row, k_row)))


@pytest.fixture
def order6_cube() -> CostasCube:
    return CostasCube.from_triples(ORDER6_TRIPLES)


@pytest.fixture
def small_sd_cube() -> CostasCube:
    return CostasCube.from_triples(SMALL_SD_TRIPLES)


@functools.lru_cache(maxsize=None)
def costas_arrays(n: int) -> tuple[Permutation, ...]:
    return tuple(enumerate_costas_arrays(n))


@functools.lru_cache(maxsize=None)
def costas_cube_classes(n: int) -> tuple[CostasCube, ...]:
    return tuple(enumerate_costas_cubes(n, costas_arrays(n)))
