import pytest

from pullup.engine import EngineOptions, restructure
from pullup.errors import ModelError
from pullup.metrics import (
    declaration_count,
    duplication_count,
    effectiveness,
    hierarchy_restriction_equal,
    max_inheritance_depth,
    snapshot,
)
from pullup.model import ClassModel

from conftest import build_model


def test_declaration_count_fixture_models(left_model, right_model):
    assert declaration_count(left_model) == 8
    assert declaration_count(right_model) == 7
    assert declaration_count(ClassModel()) == 0


def test_declaration_count_matches_incremental_counter(left_model):
    restructure(left_model, EngineOptions(multi_inheritance=True))
    assert declaration_count(left_model) == left_model.declared_property_count


def test_duplication_count_left_example(left_model):
    # exhaustive tally oracle: a and b duplicated once, c twice, d never
    tally = {}
    for e in left_model.entities():
        for k in e.prop_keys():
            tally[k] = tally.get(k, 0) + 1
    assert sum(n - 1 for n in tally.values() if n > 1) == 4
    assert duplication_count(left_model) == 4


def test_duplication_count_after_core_right_example(right_model):
    restructure(right_model, EngineOptions())
    assert duplication_count(right_model) == 1


def test_duplication_zero_after_extension(left_model, right_model):
    for m in (left_model, right_model):
        restructure(m, EngineOptions(multi_inheritance=True))
        assert duplication_count(m) == 0


def test_effectiveness():
    from pullup.metrics import MetricsSnapshot

    def _snap(dup):
        return MetricsSnapshot(0, 0, dup, 0, 0)

    assert effectiveness(_snap(4), _snap(0)) == 1.0
    assert effectiveness(_snap(4), _snap(2)) == 0.5
    assert effectiveness(_snap(0), _snap(0)) is None


def test_max_inheritance_depth():
    m = build_model(
        {"A": [], "B": [], "C": [], "D": []},
        edges=[("B", "A"), ("C", "B"), ("D", "A")],
    )
    assert max_inheritance_depth(m) == 2
    assert max_inheritance_depth(build_model({"X": ["x"]})) == 0


def test_snapshot_fields(left_model):
    snap = snapshot(left_model)
    assert snap.entity_count == 4
    assert snap.declaration_count == 8
    assert snap.duplication_count == 4
    assert snap.top_level_count == 4
    assert snap.max_inheritance_depth == 0


def test_hierarchy_restriction_holds_after_restructure(left_model):
    before = left_model.clone()
    restructure(left_model, EngineOptions(multi_inheritance=True))
    assert hierarchy_restriction_equal(before, left_model)


def test_hierarchy_restriction_detects_new_original_edge():
    before = build_model({"A": [], "B": []})
    after = before.clone()
    after.add_generalization(after.entity_id("B"), after.entity_id("A"))
    assert not hierarchy_restriction_equal(before, after)


def test_hierarchy_restriction_reflexive(left_model):
    assert hierarchy_restriction_equal(left_model, left_model)


def test_hierarchy_restriction_mismatched_ids():
    a = build_model({"A": []})
    b = build_model({"A": [], "B": []})
    with pytest.raises(ModelError):
        hierarchy_restriction_equal(a, b)


def test_metrics_leave_model_untouched(left_model):
    before = left_model.clone()
    snapshot(left_model)
    duplication_count(left_model)
    max_inheritance_depth(left_model)
    assert left_model == before
