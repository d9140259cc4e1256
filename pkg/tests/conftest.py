from pathlib import Path

import pytest

from pullup.model import ClassModel, PropKey

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def build_model(entities, edges=(), types=("T",)):
    """Build a model from {name: ["prop" or "prop:Type", ...]} plus
    (sub_name, super_name) edges. Bare prop names default to the first type.
    """
    model = ClassModel()
    for t in types:
        model.add_type(t)
    ids = {}
    for name, props in entities.items():
        eid = model.add_entity(name)
        ids[name] = eid
        for spec in props:
            pname, _, ptype = spec.partition(":")
            model.add_property(eid, PropKey(pname, ptype or types[0]))
    for sub, sup in edges:
        model.add_generalization(ids[sub], ids[sup])
    return model


def names(model, ids):
    return sorted(model.entity(i).name for i in ids)


def left_example():
    return build_model(
        {"A": ["a", "b"], "B": ["a", "c"], "C": ["b", "c"], "D": ["c", "d"]}
    )


def right_example():
    return build_model({"P": ["a", "b", "d"], "Q": ["a", "b"], "R": ["d", "e"]})


@pytest.fixture
def left_model():
    return left_example()


@pytest.fixture
def right_model():
    return right_example()
