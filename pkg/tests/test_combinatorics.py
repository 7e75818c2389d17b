"""Unit tests for the lattice-path and tiling enumerators."""

import xml.etree.ElementTree as ET

import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncsym.combinatorics import (
    describe,
    enum_paths,
    enum_tilings,
    path_sign,
    path_to_tiling,
    path_weight,
    paths_svg,
    tiling_sign,
    tiling_to_path,
    tiling_weight,
    tilings_svg,
    weight_sum,
)
from truncsym.multipoly import MPoly
from truncsym.symfun import E, H


def test_bounded_run_paths_golden():
    # 3 East steps, 2 North steps, East runs capped at 2
    paths = enum_paths(3, 3, 2, model="E")
    assert len(paths) == 7
    all_words = {"".join(w) for w in _words(3, 2)}
    assert set(paths) == all_words - {"EEENN", "NEEEN", "NNEEE"}
    assert paths == sorted(paths)


def _words(easts, norths):
    import itertools

    for pos in itertools.combinations(range(easts + norths), norths):
        word = ["E"] * (easts + norths)
        for p in pos:
            word[p] = "N"
        yield word


def test_residue_run_paths_and_signs_golden():
    paths = enum_paths(3, 3, 2, model="H")
    assert paths == ["EEENN", "ENENE", "NEEEN", "NNEEE"]
    assert [path_sign(p, 2) for p in paths] == [-1, 1, -1, -1]


def test_path_weight_counts_easts_per_level():
    assert path_weight("NEEEN", 3) == (0, 3, 0)
    assert path_weight("EENEN", 3) == (2, 1, 0)
    with pytest.raises(ValueError):
        path_weight("EENEN", 4)  # wrong number of North steps
    with pytest.raises(ValueError):
        path_weight("EEXEN", 3)


def test_odd_truncation_makes_every_sign_positive():
    for s in (1, 3):
        for path in enum_paths(3, min(6, 3 * s), s, model="H"):
            assert path_sign(path, s) == 1


def test_tilings_golden():
    tilings = enum_tilings(3, 3, 2, model="H")
    assert tilings == ["ggrrr", "grrrg", "rgrgr", "rrrgg"]
    assert tiling_weight("rrgrg", 3) == (2, 1, 0)
    assert tiling_sign("rrrgg", 2) == -1


def test_paths_and_tilings_are_in_positional_bijection():
    for model in ("E", "H"):
        paths = enum_paths(3, 4, 2, model=model)
        tilings = enum_tilings(3, 4, 2, model=model)
        assert sorted(path_to_tiling(p) for p in paths) == tilings
        assert sorted(tiling_to_path(t) for t in tilings) == paths


@given(
    word=st.lists(st.sampled_from("EN"), min_size=0, max_size=8).map("".join),
    s=st.integers(1, 3),
)
def test_bijection_roundtrip_preserves_structure(word, s):
    """path -> tiling -> path is the identity and preserves weight and sign."""
    n = word.count("N") + 1
    tiling = path_to_tiling(word)
    assert tiling_to_path(tiling) == word
    assert tiling_weight(tiling, n) == path_weight(word, n)
    assert tiling_sign(tiling, s) == path_sign(word, s)


def test_weight_sums_reproduce_the_symmetric_families():
    for n in range(1, 4):
        for s in range(1, 4):
            for k in range(0, 2 * s + 2):
                for objects in ("paths", "tilings"):
                    assert weight_sum(n, k, s, model="E", objects=objects) == E(k, s, n)
                    assert weight_sum(n, k, s, model="H", objects=objects) == H(k, s, n)


def test_weight_sum_of_an_empty_family_is_zero():
    assert weight_sum(2, 5, 2, model="E") == MPoly.zero(2)
    assert enum_paths(2, 5, 2, model="E") == []


def test_model_and_input_validation():
    with pytest.raises(ValueError):
        enum_paths(2, 2, 2, model="X")
    with pytest.raises(ValueError):
        enum_tilings(0, 2, 2, model="E")
    with pytest.raises(ValueError):
        tiling_weight("rxg", 2)
    with pytest.raises(ValueError):
        weight_sum(2, 2, 2, model="E", objects="widgets")


def test_describe_lines():
    assert describe("EEENN", 3, 2, model="H") == "EEENN weight=x1^3 sign=-1"
    assert describe("NEEEN", 3, 2, model="E") == "NEEEN weight=x2^3"
    assert describe("ggrrr", 3, 2, model="H") == "ggrrr weight=x3^3 sign=-1"


def test_svg_output_is_well_formed():
    svg = paths_svg(3, 3, 2, model="H")
    assert svg.startswith("<svg")
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    text = ET.tostring(root, encoding="unicode")
    for path in enum_paths(3, 3, 2, model="H"):
        assert path in text
    tsvg = tilings_svg(3, 3, 2, model="H")
    ET.fromstring(tsvg)
    assert "ggrrr" in tsvg


def test_svg_is_deterministic():
    assert paths_svg(2, 2, 2, model="E") == paths_svg(2, 2, 2, model="E")
