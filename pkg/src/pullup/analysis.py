"""Read-only sharing analysis: which property keys are declared by which
entities, and the ranked candidate list that drives every restructuring rule.

Ranking order: larger owner sets first; among equal sizes, owner sets that
occur more often among the per-key pairs first; ties broken canonically by
sorted owner names, then by property key. Entries with equal owner sets are
then merged into one candidate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Mapping

from .model import ClassModel, PropKey


@dataclass(frozen=True)
class Candidate:
    """A maximal set of property keys shared by one set of owner entities."""

    keys: tuple[PropKey, ...]
    owners: frozenset[int]


def prop_type_set(model: ClassModel, eid: int) -> set[PropKey]:
    """The entity's own declared property keys (inherited ones excluded)."""
    return model.entity(eid).prop_keys()


def filter_by_properties(
    model: ClassModel, keys: Iterable[PropKey], entities: Iterable[int]
) -> set[int]:
    """Entities declaring every given key with the exact same type."""
    keys = list(keys)
    out = set()
    for eid in entities:
        own = prop_type_set(model, eid)
        if all(k in own for k in keys):
            out.add(eid)
    return out


def entity_set_frequency(
    pairs: Iterable[tuple[PropKey, frozenset[int]]],
) -> Mapping[frozenset[int], int]:
    """How often each exact owner set occurs among the (key, owners) pairs."""
    return Counter(frozenset(owners) for _, owners in pairs)


def common_props(model: ClassModel, classes: Iterable[int]) -> list[Candidate]:
    """Rank and collapse the shared-property candidates of ``classes``.

    Pure: the model is untouched and the result depends only on names and
    declarations, never on entity-list order or set iteration order.
    """
    ids = set(classes)
    owners_by_key: dict[PropKey, set[int]] = {}
    for eid in ids:
        for key in prop_type_set(model, eid):
            owners_by_key.setdefault(key, set()).add(eid)
    if not owners_by_key:
        return []

    freq = Counter(frozenset(o) for o in owners_by_key.values())
    canon: dict[frozenset[int], tuple[str, ...]] = {}
    items: list[tuple[PropKey, frozenset[int], tuple[str, ...]]] = []
    for key, owners in owners_by_key.items():
        fs = frozenset(owners)
        oc = canon.get(fs)
        if oc is None:
            oc = canon[fs] = tuple(sorted(model.entity(i).name for i in fs))
        items.append((key, fs, oc))

    items.sort(key=lambda it: (-len(it[1]), -freq[it[1]], it[2], it[0]))

    ranking = []
    for fs, group in groupby(items, key=lambda it: it[1]):
        keys = tuple(sorted(it[0] for it in group))
        ranking.append(Candidate(keys=keys, owners=fs))
    return ranking
