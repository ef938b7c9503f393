from __future__ import annotations

import pytest

from piispan.core import Entity
from piispan.mapping import (
    DROP,
    LabelMap,
    MappingError,
    UnmappedLabelError,
    default_spy_map,
    label_map_from_dict,
    load_label_map,
    map_entities,
)

SPY_CLASSES = {"name", "email", "phone_num", "address", "id_num", "username", "url"}


def test_spy_map_is_total_over_taxonomy(taxonomy):
    spy = default_spy_map()
    spy.check_total(taxonomy.names)
    assert set(spy.target_schema.labels) <= SPY_CLASSES


@pytest.mark.parametrize(
    "label,target",
    [
        ("first_name", "name"),
        ("city", "address"),
        ("email", "email"),
        ("phone_number", "phone_num"),
        ("iban", "id_num"),
        ("username", "username"),
        ("date_of_birth", DROP),
        ("password", DROP),
        ("ip_address", DROP),
    ],
)
def test_spy_map_entries(label, target):
    assert default_spy_map().target(label) == target


def test_drop_and_merge_keep_highest_confidence():
    text = "4111111111111111"
    lm = label_map_from_dict({"targets": ["id_num"], "map": {"card_number": "id_num", "payment_card": "id_num", "cvv": None}})
    out = map_entities(
        [
            Entity.at(0, 16, "card_number", 0.9, text),
            Entity.at(0, 16, "payment_card", 0.95, text),
            Entity.at(0, 3, "cvv", 0.99, text),
        ],
        lm,
    )
    assert [(e.label, e.confidence) for e in out] == [("id_num", 0.95)]


def test_unmapped_label_fails():
    lm = LabelMap.identity(["email"])
    with pytest.raises(UnmappedLabelError) as info:
        map_entities([Entity.at(0, 1, "person")], lm)
    assert info.value.labels == ("person",)


def test_target_outside_schema_rejected():
    with pytest.raises(MappingError):
        label_map_from_dict({"targets": ["a"], "map": {"x": "b"}})
    with pytest.raises(MappingError):
        label_map_from_dict({"targets": ["a"], "map": {"x": "a"}, "extra": 1})


def test_check_total_on_load(tmp_path):
    path = tmp_path / "m.yaml"
    path.write_text("name: m\ntargets: [a]\nmap:\n  x: a\n  y: drop\n", encoding="utf-8")
    assert load_label_map(path, ["x", "y"]).target("y") == DROP
    with pytest.raises(UnmappedLabelError):
        load_label_map(path, ["x", "z"])


def test_identity_extension():
    lm = label_map_from_dict({"targets": ["a"], "map": {"x": "a"}}).extended_with_identity()
    assert lm.target("a") == "a" and lm.target("x") == "a"


def test_checksum_map_file(root, taxonomy):
    lm = load_label_map(root / "docs" / "maps" / "checksum_labels.yaml", taxonomy.names)
    assert set(lm.target_schema.labels) == {"card_number", "iban", "routing_number"}
    assert lm.target("iban") == "iban" and lm.target("payment_card") == DROP
