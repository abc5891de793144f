import json
from pathlib import Path

import pytest

from finsplice import FIXTURES, PSEUDO_S1, build_pipeline, specialisation_preorder
from finsplice.io import (
    SpaceFormatError,
    complex_from_dict,
    complex_to_dict,
    dump_space,
    load_space,
    space_from_dict,
    space_to_dict,
)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_space_round_trip(name):
    space = FIXTURES[name]
    assert space_from_dict(space_to_dict(space)) == space


def test_space_file_round_trip(tmp_path):
    path = tmp_path / "space.json"
    dump_space(PSEUDO_S1, path)
    assert load_space(path) == PSEUDO_S1


def test_min_opens_input():
    space = space_from_dict(
        {
            "points": ["a", "b", "c", "d"],
            "min_opens": {"a": ["a"], "b": ["b"], "c": ["a", "b", "c"], "d": ["a", "b", "d"]},
        }
    )
    assert space == PSEUDO_S1


def test_leq_input_closes_the_relation():
    space = space_from_dict({"points": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})
    preorder = specialisation_preorder(space)
    assert preorder.leq("a", "c")


def test_rejects_multiple_bodies():
    with pytest.raises(SpaceFormatError):
        space_from_dict({"points": ["a"], "opens": [[], ["a"]], "leq": []})


def test_rejects_missing_body():
    with pytest.raises(SpaceFormatError):
        space_from_dict({"points": ["a"]})


def test_rejects_unknown_format():
    with pytest.raises(SpaceFormatError):
        space_from_dict({"format": "finsplice-space/99", "points": ["a"], "opens": [[], ["a"]]})


def test_rejects_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(SpaceFormatError):
        load_space(path)


def test_complex_round_trip():
    data = build_pipeline(FIXTURES["PSEUDO_S1_DUP"])
    for cc in (data.ambient_chain, data.relative_cochain):
        assert complex_from_dict(complex_to_dict(cc)) == cc


def test_complex_golden_file():
    golden_path = Path(__file__).parent / "golden" / "dup_relative_cochain.json"
    golden = json.loads(golden_path.read_text(encoding="utf-8"))
    data = build_pipeline(FIXTURES["PSEUDO_S1_DUP"])
    assert complex_to_dict(data.relative_cochain) == golden
