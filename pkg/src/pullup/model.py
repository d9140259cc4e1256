"""In-memory class-model representation.

A :class:`ClassModel` holds named types, an ordered list of entities (classes
with declared properties), and a set of generalization edges forming a DAG.
All mutations validate their preconditions and leave the model untouched on
failure; :meth:`ClassModel.validate` re-checks every invariant from the data
itself and reports violations as strings.
"""

from __future__ import annotations

import copy
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .errors import (
    CycleError,
    DuplicateNameError,
    GeneralizationError,
    PropertyNotFoundError,
    UnknownEntityError,
    UnknownTypeError,
)

# Names double as tokens in the text model format, so no whitespace and no
# comment character.
_NAME_RE = re.compile(r"[^\s#]+")


def _check_name(name: str, what: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.fullmatch(name):
        raise DuplicateNameError(f"invalid {what} name: {name!r}")
    return name


@dataclass(frozen=True)
class TypeRef:
    """A named type a property declaration can reference."""

    name: str


@dataclass(frozen=True, order=True)
class PropKey:
    """The (property-name, type-name) identity of a property declaration."""

    prop_name: str
    type_name: str


@dataclass
class PropertyDecl:
    """A property declared by exactly one entity."""

    prop_name: str
    type_name: str

    def key(self) -> PropKey:
        return PropKey(self.prop_name, self.type_name)


class Origin(Enum):
    ORIGINAL = "original"
    SYNTHESIZED = "synthesized"


@dataclass
class Entity:
    """A class: a name, its declared properties, and an origin marker."""

    id: int
    name: str
    properties: list[PropertyDecl] = field(default_factory=list)
    origin: Origin = Origin.ORIGINAL

    def prop_names(self) -> set[str]:
        return {p.prop_name for p in self.properties}

    def prop_keys(self) -> set[PropKey]:
        return {p.key() for p in self.properties}


class ClassModel:
    """Root container of types, entities, and generalization edges.

    Entities keep insertion order (synthesized ones are appended), which is
    the canonical iteration order everywhere. Mutation is single-writer; the
    object is a plain value with no internal locking.
    """

    def __init__(self) -> None:
        self._types: dict[str, TypeRef] = {}
        self._entities: dict[int, Entity] = {}
        self._order: list[int] = []
        self._by_name: dict[str, int] = {}
        self._edges: set[tuple[int, int]] = set()  # (specific, general)
        self._parents: dict[int, set[int]] = {}
        self._children: dict[int, set[int]] = {}
        self._next_id = 1
        self._newclass_cursor = 1
        self._decl_count = 0

    # -- types ------------------------------------------------------------

    def add_type(self, name: str) -> TypeRef:
        _check_name(name, "type")
        if name in self._types:
            raise DuplicateNameError(f"duplicate type name {name}")
        ref = TypeRef(name)
        self._types[name] = ref
        return ref

    def has_type(self, name: str) -> bool:
        return name in self._types

    def type_names(self) -> list[str]:
        return sorted(self._types)

    # -- entities ---------------------------------------------------------

    def add_entity(self, name: str, origin: Origin = Origin.ORIGINAL) -> int:
        _check_name(name, "entity")
        if name in self._by_name:
            raise DuplicateNameError(f"duplicate entity name {name}")
        eid = self._next_id
        self._next_id += 1
        self._entities[eid] = Entity(id=eid, name=name, origin=origin)
        self._order.append(eid)
        self._by_name[name] = eid
        return eid

    def create_entity(self) -> int:
        """Add a fresh synthesized, top-level, property-less entity.

        The name is ``NewClass<k>`` with the smallest positive ``k`` that is
        still free. Names are never released, so the cursor only moves up.
        """
        k = self._newclass_cursor
        while f"NewClass{k}" in self._by_name:
            k += 1
        self._newclass_cursor = k
        return self.add_entity(f"NewClass{k}", Origin.SYNTHESIZED)

    def entity(self, eid: int) -> Entity:
        try:
            return self._entities[eid]
        except KeyError:
            raise UnknownEntityError(f"unknown entity id {eid}") from None

    def entity_id(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownEntityError(f"unknown entity name {name}") from None

    def has_entity(self, name: str) -> bool:
        return name in self._by_name

    def entity_ids(self) -> list[int]:
        return list(self._order)

    def entities(self) -> Iterator[Entity]:
        for eid in self._order:
            yield self._entities[eid]

    def __len__(self) -> int:
        return len(self._order)

    # -- properties -------------------------------------------------------

    @property
    def declared_property_count(self) -> int:
        """Running total of property declarations (kept incrementally)."""
        return self._decl_count

    def add_property(self, eid: int, key: PropKey) -> None:
        e = self.entity(eid)
        _check_name(key.prop_name, "property")
        if key.type_name not in self._types:
            raise UnknownTypeError(
                f"unknown type {key.type_name} for property {key.prop_name} "
                f"in entity {e.name}"
            )
        if any(p.prop_name == key.prop_name for p in e.properties):
            raise DuplicateNameError(
                f"entity {e.name} already declares property {key.prop_name}"
            )
        e.properties.append(PropertyDecl(key.prop_name, key.type_name))
        self._decl_count += 1

    def delete_property(self, eid: int, prop_name: str) -> None:
        e = self.entity(eid)
        for i, p in enumerate(e.properties):
            if p.prop_name == prop_name:
                del e.properties[i]
                self._decl_count -= 1
                return
        raise PropertyNotFoundError(
            f"entity {e.name} declares no property {prop_name}"
        )

    # -- generalizations --------------------------------------------------

    def add_generalization(self, sub: int, sup: int) -> None:
        e_sub, e_sup = self.entity(sub), self.entity(sup)
        if sub == sup:
            raise GeneralizationError(f"self-generalization {e_sub.name}")
        if (sub, sup) in self._edges:
            raise GeneralizationError(
                f"duplicate generalization {e_sub.name} -> {e_sup.name}"
            )
        if sub in self.ancestors(sup):
            raise CycleError(
                f"generalization {e_sub.name} -> {e_sup.name} would create a cycle"
            )
        self._edges.add((sub, sup))
        self._parents.setdefault(sub, set()).add(sup)
        self._children.setdefault(sup, set()).add(sub)

    def delete_generalization(self, sub: int, sup: int) -> None:
        if (sub, sup) not in self._edges:
            raise GeneralizationError(
                f"no generalization {self.entity(sub).name} -> {self.entity(sup).name}"
            )
        self._edges.remove((sub, sup))
        self._parents[sub].discard(sup)
        self._children[sup].discard(sub)

    def has_generalization(self, sub: int, sup: int) -> bool:
        return (sub, sup) in self._edges

    def generalizations(self) -> set[tuple[int, int]]:
        return set(self._edges)

    def direct_subclasses(self, eid: int) -> set[int]:
        self.entity(eid)
        return set(self._children.get(eid, ()))

    def direct_superclasses(self, eid: int) -> set[int]:
        self.entity(eid)
        return set(self._parents.get(eid, ()))

    def is_top_level(self, eid: int) -> bool:
        self.entity(eid)
        return not self._parents.get(eid)

    def ancestors(self, eid: int) -> set[int]:
        """All transitive superclasses of ``eid`` (not including itself)."""
        self.entity(eid)
        seen: set[int] = set()
        stack = list(self._parents.get(eid, ()))
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            stack.extend(self._parents.get(cur, ()))
        return seen

    def flattened_props(self, eid: int) -> set[PropKey]:
        """Own plus all transitively inherited property keys."""
        keys = self.entity(eid).prop_keys()
        for anc in self.ancestors(eid):
            keys |= self._entities[anc].prop_keys()
        return keys

    # -- integrity --------------------------------------------------------

    def validate(self) -> list[str]:
        """Re-check every model invariant; return violation descriptions."""
        violations: list[str] = []
        seen_names: set[str] = set()
        for e in self.entities():
            if not _NAME_RE.fullmatch(e.name or ""):
                violations.append(f"invalid entity name {e.name!r}")
            if e.name in seen_names:
                violations.append(f"duplicate entity name {e.name}")
            seen_names.add(e.name)
            pnames: set[str] = set()
            for p in e.properties:
                if p.prop_name in pnames:
                    violations.append(
                        f"duplicate property name {p.prop_name} in entity {e.name}"
                    )
                pnames.add(p.prop_name)
                if p.type_name not in self._types:
                    violations.append(
                        f"unknown type {p.type_name} in entity {e.name} "
                        f"property {p.prop_name}"
                    )
        for sub, sup in sorted(self._edges):
            if sub not in self._entities or sup not in self._entities:
                violations.append(f"generalization references unknown entity ({sub} -> {sup})")
            elif sub == sup:
                violations.append(f"self-generalization {self._entities[sub].name}")
        cycle = self._cycle_members()
        if cycle:
            names = ", ".join(sorted(self._entities[i].name for i in cycle))
            violations.append(f"generalization cycle through {names}")
        return violations

    def _cycle_members(self) -> set[int]:
        # Kahn's algorithm over the specific->general digraph; whatever
        # cannot be peeled off lies on or behind a directed cycle.
        indeg = {eid: 0 for eid in self._entities}
        for sub, sup in self._edges:
            if sub in indeg and sup in indeg and sub != sup:
                indeg[sup] += 1
        queue = [eid for eid, d in indeg.items() if d == 0]
        remaining = set(indeg)
        while queue:
            cur = queue.pop()
            remaining.discard(cur)
            for sup in self._parents.get(cur, ()):
                if sup in remaining:
                    indeg[sup] -= 1
                    if indeg[sup] == 0:
                        queue.append(sup)
        return remaining

    # -- value semantics --------------------------------------------------

    def clone(self) -> "ClassModel":
        return copy.deepcopy(self)

    def _structure(self):
        return (
            frozenset(self._types),
            tuple(
                (e.name, e.origin, tuple((p.prop_name, p.type_name) for p in e.properties))
                for e in self.entities()
            ),
            frozenset(
                (self._entities[sub].name, self._entities[sup].name)
                for sub, sup in self._edges
            ),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassModel):
            return NotImplemented
        return self._structure() == other._structure()

    def __repr__(self) -> str:
        return (
            f"<ClassModel {len(self._order)} entities, "
            f"{self._decl_count} properties, {len(self._edges)} generalizations>"
        )
