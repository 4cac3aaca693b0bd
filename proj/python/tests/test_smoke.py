"""Smoke tests for the python bindings: exercise every exposed operation on
the small benchmark fields and check the published numbers."""

import math

import pytest

import isph


def pair_points(diagram):
    return sorted((p.birth, p.death) for p in diagram.pairs)


def test_fig1_diagrams_coincide():
    red, _ = isph.compute_pairs(isph.synth_case("fig1-red"))
    blue, _ = isph.compute_pairs(isph.synth_case("fig1-blue"))
    assert pair_points(red) == [(0.0, 4.0), (1.0, 2.0), (3.0, 4.0)]
    assert pair_points(red) == pair_points(blue)
    assert [p.essential for p in blue.pairs] == [True, False, False]


def test_isph_distinguishes_fig1_variants():
    blue_field = isph.synth_case("fig1-blue")
    blue_diagram, blue_trace = isph.compute_pairs(blue_field)
    chain = isph.build_isph(blue_field, blue_trace, blue_diagram)
    assert chain.parent == [None, 0, 1]
    assert chain.variant == "isph"

    red_field = isph.synth_case("fig1-red")
    red_diagram, red_trace = isph.compute_pairs(red_field)
    star = isph.build_isph(red_field, red_trace, red_diagram)
    assert star.parent == [None, 0, 0]

    regular = isph.build_regular_hierarchy(blue_trace, blue_diagram)
    assert regular.parent == [None, 0, 0]

    assert isph.ranks(chain) == [2, 1, 0]
    assert isph.vertex_stability(chain) == [2.0, 1.0, 1.0]
    assert isph.tree_edit_distance(star, chain) == pytest.approx(2.0)
    assert isph.wasserstein(red_diagram, blue_diagram, q=2.0) == 0.0


def test_interlevel_connectivity():
    blue = isph.synth_case("fig1-blue")
    _, trace = isph.compute_pairs(blue)
    assert isph.interlevel_connected(blue, trace, 2, 4, 1.0, 4.0)

    red = isph.synth_case("fig1-red")
    _, red_trace = isph.compute_pairs(red)
    assert not isph.interlevel_connected(red, red_trace, 0, 4, 1.0, 4.0)


def test_field_roundtrip(tmp_path):
    field = isph.synth_case("three-peaks", rows=12, cols=30)
    assert field.domain_kind == "grid-2d"
    assert field.dims == (12, 30)
    path = tmp_path / "field.vtk"
    isph.write_field(field, str(path))
    assert isph.load_field(str(path)) == field


def test_chain_field_and_order():
    field = isph.chain_field([3.0, 1.0, 2.0])
    assert isph.total_order(field) == [1, 2, 0]
    assert isph.negate(isph.negate(field)) == field
    assert field.neighbors(1) == [0, 2]
    with pytest.raises(Exception):
        isph.chain_field([1.0])


def test_distance_matrix_series():
    fields = [isph.synth_case(f"oscillate({t},4)", rows=8, cols=20) for t in range(5)]
    matrix = isph.distance_matrix(fields, measure="isph-ted")
    assert len(matrix) == 5
    for i in range(5):
        assert matrix[i][i] == 0.0
        for j in range(5):
            assert matrix[i][j] == matrix[j][i]
    assert matrix[0][4] == pytest.approx(0.0)

    wasserstein = isph.distance_matrix(fields, measure="wasserstein", q=2.0)
    assert wasserstein[0][1] >= 0.0


def test_superlevel_via_negation():
    diagram, _ = isph.compute_pairs(isph.negate(isph.synth_case("reeb-1")))
    points = [(-b, -d) for b, d in pair_points(diagram)]
    assert sorted(points, reverse=True) == [(6.0, 1.0), (5.0, 2.0), (4.0, 3.0)]


def test_persistence_and_grid_validation():
    diagram, _ = isph.compute_pairs(isph.chain_field([0.0, 1.0, 2.0, 3.0]))
    assert len(diagram) == 1
    assert isph.persistence(diagram.pairs[0]) == 3.0
    with pytest.raises(Exception):
        isph.grid_field([0.0, 1.0, 2.0], rows=2, cols=2)
