"""The restructuring rules.

``apply_shared_superclass_rule`` covers the three core rules:

* rule 1 - the top candidate is shared by *all* given classes and a common
  superclass exists: move the keys into that superclass.
* rule 2 - a strict subset (>= 2) of a superclass's direct subclasses shares
  the keys: insert a new intermediate superclass below the old one.
* rule 3 - no superclass given (top-level classes): create a new common
  superclass for the sharing subset.

``exploit_multiple_inheritance`` is the optional final pass that removes all
remaining declared duplication by giving entities additional parents, reusing
synthesized top-level classes where possible.

Every application is atomic: preconditions are checked before the first
mutation, so a raised :class:`~pullup.errors.RuleError` leaves the model
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .analysis import common_props, prop_type_set
from .errors import RuleError
from .model import ClassModel, Origin, PropKey


class RuleKind(Enum):
    RULE1 = "rule1"
    RULE2 = "rule2"
    RULE3 = "rule3"
    MULTI_INHERIT_REUSE = "multi-inherit-reuse"
    MULTI_INHERIT_NEW = "multi-inherit-new"


@dataclass(frozen=True)
class RuleApplication:
    """Audit record of one successful rule firing."""

    rule: RuleKind
    keys: tuple[PropKey, ...]
    sources: frozenset[int]
    target: int
    created: Optional[int] = None


def pull_up_props(
    model: ClassModel,
    keys: Iterable[PropKey],
    sources: Iterable[int],
    target: int,
) -> None:
    """Move ``keys`` from every source entity onto ``target``.

    Preconditions: every source declares every key, the target declares none
    of the key names, and the target is not itself a source.
    """
    keys = list(keys)
    source_ids = set(sources)
    if target in source_ids:
        raise RuleError(
            f"pull-up target {model.entity(target).name} is among the sources"
        )
    target_names = model.entity(target).prop_names()
    for key in keys:
        if key.prop_name in target_names:
            raise RuleError(
                f"target {model.entity(target).name} already declares "
                f"property {key.prop_name}"
            )
    for sid in source_ids:
        own = prop_type_set(model, sid)
        for key in keys:
            if key not in own:
                raise RuleError(
                    f"source {model.entity(sid).name} does not declare "
                    f"({key.prop_name}, {key.type_name})"
                )
    for key in keys:
        model.add_property(target, key)
        for sid in sorted(source_ids):
            model.delete_property(sid, key.prop_name)


def apply_shared_superclass_rule(
    model: ClassModel,
    super_id: Optional[int],
    classes: Iterable[int],
    min_subclasses: int = 2,
) -> Optional[RuleApplication]:
    """Try the top-ranked candidate among ``classes``; report what fired.

    With ``super_id`` set, ``classes`` must be exactly its direct subclasses
    (rules 1 and 2); with ``super_id`` absent they are the top-level classes
    (rule 3). Returns ``None`` when no rule applies.

    ``min_subclasses`` guards rule 1: the shared keys are only hoisted into
    the existing superclass when at least that many subclasses carry them.
    Value 1 restores the hoist-from-an-only-child behavior.
    """
    if min_subclasses < 1:
        raise RuleError("min_subclasses must be >= 1")
    class_ids = frozenset(classes)
    if super_id is not None:
        if class_ids != model.direct_subclasses(super_id):
            raise RuleError(
                f"classes are not the direct subclasses of "
                f"{model.entity(super_id).name}"
            )
    else:
        for eid in class_ids:
            model.entity(eid)
    if not class_ids:
        return None

    ranking = common_props(model, class_ids)
    if not ranking:
        return None
    candidate = ranking[0]
    keys, owners = candidate.keys, candidate.owners

    if super_id is not None and owners == class_ids and len(class_ids) >= min_subclasses:
        pull_up_props(model, keys, owners, super_id)
        return RuleApplication(RuleKind.RULE1, keys, owners, super_id)

    if len(owners) <= 1:
        return None

    nc = model.create_entity()
    pull_up_props(model, keys, owners, nc)
    for sid in sorted(owners):
        if super_id is not None and model.has_generalization(sid, super_id):
            model.delete_generalization(sid, super_id)
        model.add_generalization(sid, nc)
    if super_id is not None:
        model.add_generalization(nc, super_id)
        return RuleApplication(RuleKind.RULE2, keys, owners, nc, created=nc)
    return RuleApplication(RuleKind.RULE3, keys, owners, nc, created=nc)


def exploit_multiple_inheritance(
    model: ClassModel, on_apply=None
) -> list[RuleApplication]:
    """Remove all remaining declared duplication in one pass.

    Candidates are computed once over all entities and processed in ranking
    order until the first one owned by a single entity. Per candidate, owners
    that no longer declare all keys are dropped against the live model; a
    candidate with fewer than two remaining owners is skipped. A top-level
    synthesized owner is reused as the common superclass when one exists,
    otherwise a new entity is created.

    ``on_apply``, when given, is called with each application right after it
    mutated the model.
    """
    applications: list[RuleApplication] = []
    for candidate in common_props(model, model.entity_ids()):
        if len(candidate.owners) <= 1:
            break
        owners = {
            oid
            for oid in candidate.owners
            if all(k in prop_type_set(model, oid) for k in candidate.keys)
        }
        if len(owners) < 2:
            continue

        reusable = [
            oid
            for oid in owners
            if model.is_top_level(oid)
            and model.entity(oid).origin is Origin.SYNTHESIZED
        ]
        if reusable:
            target = min(reusable, key=lambda oid: model.entity(oid).name)
            others = sorted(owners - {target})
            for key in candidate.keys:
                for oid in others:
                    model.delete_property(oid, key.prop_name)
            for oid in others:
                if not model.has_generalization(oid, target):
                    model.add_generalization(oid, target)
            app = RuleApplication(
                RuleKind.MULTI_INHERIT_REUSE,
                candidate.keys,
                frozenset(others),
                target,
            )
            applications.append(app)
            if on_apply is not None:
                on_apply(app)
        else:
            nc = model.create_entity()
            for key in candidate.keys:
                model.add_property(nc, key)
            for oid in sorted(owners):
                for key in candidate.keys:
                    model.delete_property(oid, key.prop_name)
                model.add_generalization(oid, nc)
            app = RuleApplication(
                RuleKind.MULTI_INHERIT_NEW,
                candidate.keys,
                frozenset(owners),
                nc,
                created=nc,
            )
            applications.append(app)
            if on_apply is not None:
                on_apply(app)
    return applications
