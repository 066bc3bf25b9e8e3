import pytest

from lietrees.errors import InfiniteEnumeration, ModelMismatch, UnknownGroupElement
from lietrees.groups import (
    TRIVIAL_GROUP,
    cyclic_group,
    free_group,
    model_from_json,
)


def test_trivial():
    g = TRIVIAL_GROUP
    assert g.identity() == 0
    assert g.multiply(0, 0) == 0
    assert g.order() == 1
    assert g.elements() == [0]


def test_cyclic_axioms():
    g = cyclic_group(6)
    els = g.elements()
    assert len(els) == 6
    for a in els:
        assert g.multiply(a, g.invert(a)) == 0
        for b in els:
            for c in els:
                assert g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))


def test_bad_table_rejected():
    with pytest.raises(ModelMismatch):
        model_from_json({"kind": "finite", "table": [[0, 1], [1, 1]], "inverse": [0, 1]})


def test_free_group_reduction():
    g = free_group(2)
    a = g.parse_element("ab")
    assert g.multiply(a, g.invert(a)) == ()
    assert g.multiply((1,), (-1,)) == ()
    assert g.format_element(g.parse_element("aBa")) == "aBa"
    with pytest.raises(UnknownGroupElement):
        g.parse_element("c")


def test_free_enumeration_needs_cap():
    g = free_group(1)
    with pytest.raises(InfiniteEnumeration):
        g.elements()
    with pytest.raises(InfiniteEnumeration):
        g.order()
    assert g.elements(1) == [(), (1,), (-1,)]
    # reduced words only: length-2 words never contain a cancelling pair
    assert all(len(w) <= 2 for w in g.elements(2))
    assert len(g.elements(2)) == 1 + 2 + 2


def test_finite_parse_format():
    g = cyclic_group(3)
    assert g.parse_element("2") == 2
    assert g.parse_element("") == 0
    assert g.format_element(2) == "2"
    with pytest.raises(UnknownGroupElement):
        g.parse_element("3")


def test_model_from_json_roundtrip(tmp_path):
    import json

    from lietrees.groups import load_model

    obj = {"kind": "finite", "table": [[0, 1], [1, 0]], "inverse": [0, 1]}
    p = tmp_path / "g.json"
    p.write_text(json.dumps(obj))
    g = load_model(p)
    assert g.order() == 2
    # inverse table may be inferred
    g2 = model_from_json({"kind": "finite", "table": [[0, 1], [1, 0]]})
    assert g2 == g
