"""Model measurements: sizes, duplication, hierarchy shape, and the
before/after comparisons used to judge a restructuring run.

All functions are pure and leave the model untouched.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import ModelError
from .model import ClassModel, Origin, PropKey


@dataclass(frozen=True)
class MetricsSnapshot:
    entity_count: int
    declaration_count: int
    duplication_count: int
    top_level_count: int
    max_inheritance_depth: int


def declaration_count(model: ClassModel) -> int:
    """Total number of property declarations over all entities."""
    return sum(len(e.properties) for e in model.entities())


def key_owner_counts(model: ClassModel) -> Counter[PropKey]:
    """How many entities declare each distinct property key."""
    counts: Counter[PropKey] = Counter()
    for e in model.entities():
        counts.update(e.prop_keys())
    return counts


def duplicated_keys(model: ClassModel) -> set[PropKey]:
    """Keys declared by at least two entities."""
    return {k for k, n in key_owner_counts(model).items() if n > 1}


def duplication_count(model: ClassModel) -> int:
    """Sum over keys of (declaring entities - 1), floored at zero."""
    return sum(n - 1 for n in key_owner_counts(model).values() if n > 1)


def max_inheritance_depth(model: ClassModel) -> int:
    """Length of the longest generalization chain (0 for a flat model)."""
    depth: dict[int, int] = {}
    for eid in model.entity_ids():
        if eid in depth:
            continue
        stack = [eid]
        while stack:
            cur = stack[-1]
            parents = model.direct_superclasses(cur)
            pending = [p for p in parents if p not in depth]
            if pending:
                stack.extend(pending)
                continue
            depth[cur] = 1 + max((depth[p] for p in parents), default=-1)
            stack.pop()
    return max(depth.values(), default=0)


def snapshot(model: ClassModel) -> MetricsSnapshot:
    return MetricsSnapshot(
        entity_count=len(model),
        declaration_count=declaration_count(model),
        duplication_count=duplication_count(model),
        top_level_count=sum(1 for eid in model.entity_ids() if model.is_top_level(eid)),
        max_inheritance_depth=max_inheritance_depth(model),
    )


def effectiveness(before: MetricsSnapshot, after: MetricsSnapshot) -> Optional[float]:
    """Fraction of the input's duplication the run removed.

    ``None`` means the input had no duplication to remove.
    """
    if before.duplication_count == 0:
        return None
    removed = before.duplication_count - after.duplication_count
    return removed / before.duplication_count


def _original_specialization(model: ClassModel) -> dict[int, frozenset[int]]:
    originals = {
        e.id for e in model.entities() if e.origin is Origin.ORIGINAL
    }
    return {
        eid: frozenset(model.ancestors(eid) & originals) for eid in originals
    }


def hierarchy_restriction_equal(before: ClassModel, after: ClassModel) -> bool:
    """Is the transitive specialization relation over the original entities
    the same in both models?

    ``after`` must derive from ``before``: the original entity id sets have
    to match exactly.
    """
    rel_before = _original_specialization(before)
    rel_after = _original_specialization(after)
    if rel_before.keys() != rel_after.keys():
        raise ModelError("mismatched original entity id sets")
    return rel_before == rel_after
