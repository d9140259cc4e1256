import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pullup.engine import EngineOptions, restructure
from pullup.errors import (
    CycleError,
    DuplicateNameError,
    ModelSyntaxError,
    UnknownEntityError,
    UnknownTypeError,
)
from pullup.model import ClassModel, Origin, PropKey
from pullup.modelfile import load_model, save_model

from conftest import FIXTURES, build_model, left_example


def test_load_left_fixture():
    m = load_model((FIXTURES / "left.model").read_bytes())
    assert len(m) == 4
    assert m.declared_property_count == 8
    assert m.validate() == []
    assert m == left_example()


def test_load_unresolved_super():
    doc = "classmodel v1\ntype T\nentity A\n  super Missing\n"
    with pytest.raises(UnknownEntityError) as excinfo:
        load_model(doc)
    assert "line 4" in str(excinfo.value)
    assert "Missing" in str(excinfo.value)


def test_load_empty_entities_list():
    m = load_model("classmodel v1\ntype T\n")
    assert len(m) == 0
    assert m.validate() == []


def test_load_error_cases():
    with pytest.raises(ModelSyntaxError):
        load_model("not a model\n")
    with pytest.raises(ModelSyntaxError):
        load_model("classmodel v1\nfrobnicate X\n")
    with pytest.raises(ModelSyntaxError):
        load_model("classmodel v1\nprop a T\n")
    with pytest.raises(UnknownTypeError):
        load_model("classmodel v1\nentity A\n  prop a T\n")
    with pytest.raises(DuplicateNameError):
        load_model("classmodel v1\nentity A\nentity A\n")
    with pytest.raises(CycleError):
        load_model("classmodel v1\nentity A\n  super B\nentity B\n  super A\n")


def test_syntax_error_reports_line():
    with pytest.raises(ModelSyntaxError) as excinfo:
        load_model("classmodel v1\ntype T\ntype\n")
    assert excinfo.value.line == 3


def test_forward_super_reference():
    m = load_model("classmodel v1\nentity A\n  super B\nentity B\n")
    assert m.has_generalization(m.entity_id("A"), m.entity_id("B"))


def test_comments_and_blank_lines():
    doc = "# header comment\nclassmodel v1\n\ntype T  # the only type\nentity A\n"
    m = load_model(doc)
    assert m.has_type("T") and m.has_entity("A")


def test_round_trip_right_fixture():
    data = (FIXTURES / "right.model").read_bytes()
    m = load_model(data)
    assert load_model(save_model(m)) == m
    assert save_model(m) == data  # the fixture is already canonical


def test_two_saves_identical(left_model):
    assert save_model(left_model) == save_model(left_model)


def test_save_after_restructure_marks_synthesized(left_model):
    restructure(left_model, EngineOptions())
    text = save_model(left_model).decode()
    assert "entity NewClass1 synthesized" in text
    reloaded = load_model(save_model(left_model))
    nc = reloaded.entity(reloaded.entity_id("NewClass1"))
    assert nc.origin is Origin.SYNTHESIZED


names_st = st.from_regex(r"[a-zA-Z][a-zA-Z0-9_]{0,8}", fullmatch=True)


@st.composite
def models(draw):
    model = ClassModel()
    types = draw(st.lists(names_st, min_size=1, max_size=3, unique=True))
    for t in types:
        model.add_type(t)
    entity_names = draw(st.lists(names_st, min_size=0, max_size=6, unique=True))
    ids = []
    for name in entity_names:
        eid = model.add_entity(name)
        ids.append(eid)
        props = draw(st.lists(names_st, min_size=0, max_size=4, unique=True))
        for p in props:
            model.add_property(eid, PropKey(p, draw(st.sampled_from(types))))
    for i, sub in enumerate(ids):
        for sup in ids[:i]:  # only edges toward earlier entities: acyclic
            if draw(st.booleans()):
                model.add_generalization(sub, sup)
    return model


@settings(max_examples=150, deadline=None)
@given(models())
def test_round_trip_any_valid_model(model):
    data = save_model(model)
    reloaded = load_model(data)
    assert reloaded == model
    assert save_model(reloaded) == data
    assert reloaded.validate() == []
