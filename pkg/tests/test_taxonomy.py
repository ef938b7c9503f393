from __future__ import annotations

from collections import Counter

import pytest

from piispan.taxonomy import GROUPS, LabelInfo, Taxonomy, TaxonomyError, UnknownLabelError


def test_inventory_size_and_group_counts(taxonomy):
    assert len(taxonomy) == 42
    counts = Counter(info.group for info in taxonomy)
    assert [counts[g] for g in GROUPS] == [6, 8, 7, 8, 4, 5, 4]


def test_names_are_unique_snake_case(taxonomy):
    names = taxonomy.names
    assert len(set(names)) == len(names)
    assert all(n == n.lower() and " " not in n for n in names)


@pytest.mark.parametrize(
    "child,parent",
    [
        ("first_name", "full_name"),
        ("full_name", "person"),
        ("city", "address"),
        ("iban", "bank_account"),
        ("card_number", "payment_card"),
        ("tax_number", "tax_id"),
        ("date_of_birth", "sensitive_date"),
        ("sensitive_account_id", "account_id"),
    ],
)
def test_parent_links(taxonomy, child, parent):
    assert taxonomy.lookup(child).parent == parent


def test_depth_at_most_two(taxonomy):
    assert max(len(taxonomy.ancestors(n)) for n in taxonomy.names) == 2
    assert taxonomy.ancestors("last_name") == ("full_name", "person")


def test_unknown_label():
    from piispan import builtin_taxonomy

    with pytest.raises(UnknownLabelError):
        builtin_taxonomy().lookup("favourite_colour")


def test_cycle_and_missing_parent_rejected():
    with pytest.raises(TaxonomyError):
        Taxonomy([LabelInfo("a", GROUPS[0], "b"), LabelInfo("b", GROUPS[0], "a")])
    with pytest.raises(TaxonomyError):
        Taxonomy([LabelInfo("a", GROUPS[0], "ghost")])
    with pytest.raises(TaxonomyError):
        Taxonomy([LabelInfo("a", GROUPS[0]), LabelInfo("a", GROUPS[0])])


def test_depth_three_rejected():
    g = GROUPS[0]
    with pytest.raises(TaxonomyError):
        Taxonomy([LabelInfo("a", g), LabelInfo("b", g, "a"), LabelInfo("c", g, "b"), LabelInfo("d", g, "c")])


def test_dump_load_roundtrip(taxonomy, tmp_path):
    path = tmp_path / "tax.jsonl"
    taxonomy.dump(path)
    assert Taxonomy.load(path) == taxonomy
    assert len(path.read_text(encoding="utf-8").splitlines()) == 42


def test_with_parents_is_a_copy(taxonomy):
    flat = taxonomy.with_parents({})
    assert all(info.parent is None for info in flat)
    assert taxonomy.lookup("city").parent == "address"
