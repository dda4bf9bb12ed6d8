import itertools

import pytest
from hypothesis import given, strategies as st

from costas_cubes.core import CostasCube, Permutation, is_costas, is_costas_cube, projections
from costas_cubes.symmetry import (
    CUBE_ROTATIONS,
    CUBE_SYMMETRIES,
    PLANAR_IDENTITY,
    PLANAR_SYMMETRIES,
    ROTATION_180,
    VERTICAL_REFLECTION,
    AxisSymmetry,
    apply_cube,
    apply_planar,
    array_class_size,
    canonical_array,
    canonical_cube,
    cube_orbit,
    projection_set,
)

from conftest import (
    ORDER6_A,
    SMALL_SD_MEMBERS,
    costas_arrays,
    costas_cube_classes,
)

perms_up_to_7 = st.integers(1, 7).flatmap(
    lambda n: st.permutations(tuple(range(1, n + 1)))
)


def test_group_sizes():
    assert len(set(PLANAR_SYMMETRIES)) == 8
    assert len(set(CUBE_SYMMETRIES)) == 48
    assert len(set(CUBE_ROTATIONS)) == 24


def test_cube_group_laws():
    ident = AxisSymmetry((0, 1, 2), (False, False, False))
    assert ident.is_rotation
    coords, n = (1, 2, 3), 5
    elements = set(CUBE_SYMMETRIES)
    for f in CUBE_SYMMETRIES:
        assert f.compose(f.inverse()) == ident
        assert f.inverse() in elements
        for g in CUBE_SYMMETRIES:
            fg = f.compose(g)
            assert fg in elements
            assert fg.apply_coords(coords, n) == f.apply_coords(g.apply_coords(coords, n), n)


def test_rotation_subgroup_closed():
    rotations = set(CUBE_ROTATIONS)
    for f in CUBE_ROTATIONS:
        for g in CUBE_ROTATIONS:
            assert f.compose(g) in rotations


def test_apply_planar_examples():
    p = Permutation(ORDER6_A)
    assert apply_planar(PLANAR_IDENTITY, p) == p
    assert apply_planar(VERTICAL_REFLECTION, Permutation((2, 1))).values == (1, 2)
    orbit = {apply_planar(s, Permutation((2, 4, 5, 1, 6, 3))).values for s in PLANAR_SYMMETRIES}
    assert orbit == SMALL_SD_MEMBERS


def test_vertical_reflection_complements_values():
    p = Permutation((10, 3, 4, 2, 6, 11, 1, 8, 7, 9, 5))
    assert apply_planar(VERTICAL_REFLECTION, p).values == tuple(12 - v for v in p.values)


def test_rotation_180_reverses_and_complements():
    p = Permutation((2, 4, 5, 1, 6, 3))
    assert apply_planar(ROTATION_180, p).values == tuple(7 - v for v in reversed(p.values))


def _dense_apply_cube(sym, cube):
    """Transform the dense 0/1 cube coordinate by coordinate, re-project."""
    n = cube.order
    dense = [[[0] * n for _ in range(n)] for _ in range(n)]
    for t in cube.triples():
        i, j, k = sym.apply_coords(t, n)
        dense[i - 1][j - 1][k - 1] = 1
    rows = [None] * n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if dense[i][j][k]:
                    rows[i] = (j + 1, k + 1)
    return CostasCube(tuple(rows))


def test_apply_cube_examples(order6_cube):
    ident = AxisSymmetry((0, 1, 2), (False, False, False))
    assert apply_cube(ident, order6_cube) == order6_cube

    swap_ij = AxisSymmetry((1, 0, 2), (False, False, False))
    image = apply_cube(swap_ij, order6_cube)
    assert projections(image).a == projections(order6_cube).a.inverse()
    assert image == _dense_apply_cube(swap_ij, order6_cube)

    flip_k = AxisSymmetry((0, 1, 2), (False, False, True))
    one = CostasCube(((1, 1),))
    assert apply_cube(flip_k, one) == one


def test_apply_cube_matches_dense_oracle(order6_cube, small_sd_cube):
    for cube in (order6_cube, small_sd_cube):
        for s in CUBE_SYMMETRIES:
            assert apply_cube(s, cube) == _dense_apply_cube(s, cube)


def test_apply_cube_action_laws(order6_cube):
    for f in CUBE_SYMMETRIES:
        for g in CUBE_SYMMETRIES:
            assert apply_cube(f, apply_cube(g, order6_cube)) == apply_cube(f.compose(g), order6_cube)


@given(perms_up_to_7)
def test_canonical_array_orbit_constant_and_idempotent(vals):
    p = Permutation(tuple(vals))
    rep = canonical_array(p)
    assert canonical_array(rep) == rep
    for s in PLANAR_SYMMETRIES:
        assert canonical_array(apply_planar(s, p)) == rep
    assert rep.values == min(apply_planar(s, p).values for s in PLANAR_SYMMETRIES)


def test_canonical_array_examples():
    assert canonical_array(Permutation((2, 1))).values == (1, 2)
    order5_classes = {canonical_array(p).values for p in costas_arrays(5)}
    assert len(order5_classes) == 6


def test_array_class_size_examples():
    assert array_class_size(Permutation((2, 4, 5, 1, 6, 3))) == 4
    assert array_class_size(Permutation(ORDER6_A)) == 8
    assert array_class_size(Permutation((1, 3, 2))) in (4, 8)
    assert array_class_size(Permutation((2, 1))) == 2  # degenerate order


def test_class_size_4_iff_diagonal_symmetry():
    diagonal_reflections = [
        AxisSymmetry((1, 0), (False, False)),
        AxisSymmetry((1, 0), (True, True)),
    ]
    for p in costas_arrays(6):
        fixed = any(apply_planar(s, p) == p for s in diagonal_reflections)
        assert array_class_size(p) == (4 if fixed else 8)


def test_canonical_cube_orbit_constant(order6_cube):
    rep = canonical_cube(order6_cube)
    assert canonical_cube(rep) == rep
    for s in CUBE_SYMMETRIES:
        assert canonical_cube(apply_cube(s, order6_cube)) == rep
    one = CostasCube(((1, 1),))
    assert canonical_cube(one) == one


def test_cube_orbit_properties(order6_cube):
    orbit = cube_orbit(order6_cube)
    assert 48 % len(orbit) == 0
    assert CostasCube(((1, 1),)) in cube_orbit(CostasCube(((1, 1),)))
    assert len(cube_orbit(CostasCube(((1, 1),)))) == 1
    image = apply_cube(CUBE_SYMMETRIES[17], order6_cube)
    assert cube_orbit(image) == orbit


def test_projection_set_small_sd_cube(small_sd_cube):
    members = projection_set(small_sd_cube)
    assert {p.values for p in members} == SMALL_SD_MEMBERS
    assert projection_set(small_sd_cube, rotations_only=True) == members


def test_projection_set_rejects_non_costas():
    diag = CostasCube(tuple((i, i) for i in range(1, 5)))
    with pytest.raises(ValueError, match="Costas cube"):
        projection_set(diag)


def test_projection_set_rotations_match_full_group():
    for cube in costas_cube_classes(6)[:10]:
        assert projection_set(cube) == projection_set(cube, rotations_only=True)


def test_costas_invariance_under_symmetries():
    for n in (5, 6):
        for p in costas_arrays(n):
            assert all(is_costas(apply_planar(s, p)) for s in PLANAR_SYMMETRIES)
    for cube in costas_cube_classes(5):
        assert all(is_costas_cube(apply_cube(s, cube)) for s in CUBE_SYMMETRIES)
