"""The versioned plain-text model format.

A document looks like::

    classmodel v1
    type T
    entity A
      prop a T
      prop b T
    entity NewClass1 synthesized
      prop c T
    entity B
      super NewClass1

Blank lines and ``#`` comments are allowed. Names are whitespace-free tokens.
``save_model`` emits the canonical form: types sorted by name, entities in
model order, properties in declaration order, superclasses sorted by name.
Loading a saved model yields an equal model; saving a loaded canonical
document yields identical bytes.
"""

from __future__ import annotations

from .errors import ModelError, ModelSyntaxError
from .model import ClassModel, Origin, PropKey

FORMAT_VERSION = 1
_HEADER = f"classmodel v{FORMAT_VERSION}"


def save_model(model: ClassModel) -> bytes:
    """Serialize ``model`` into canonical document bytes."""
    lines = [_HEADER]
    for t in model.type_names():
        lines.append(f"type {t}")
    for e in model.entities():
        marker = " synthesized" if e.origin is Origin.SYNTHESIZED else ""
        lines.append(f"entity {e.name}{marker}")
        for p in e.properties:
            lines.append(f"  prop {p.prop_name} {p.type_name}")
        supers = sorted(
            model.entity(sup).name for sup in model.direct_superclasses(e.id)
        )
        for name in supers:
            lines.append(f"  super {name}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def load_model(data: bytes | str) -> ClassModel:
    """Parse document bytes into a validated :class:`ClassModel`.

    Errors carry the 1-based line number of the offending directive. Forward
    references in ``super`` lines are allowed; everything else must be
    declared before use.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ModelSyntaxError(f"not valid UTF-8: {exc}") from None
    else:
        text = data

    model = ClassModel()
    current: int | None = None
    pending_supers: list[tuple[int, str, int]] = []  # (entity id, super name, line)
    saw_header = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != _HEADER:
                raise ModelSyntaxError(
                    f"line {lineno}: expected header {_HEADER!r}, got {line!r}",
                    line=lineno,
                )
            saw_header = True
            continue
        tokens = line.split()
        directive = tokens[0]
        try:
            if directive == "type":
                if len(tokens) != 2:
                    raise ModelSyntaxError("type needs exactly one name", line=lineno)
                model.add_type(tokens[1])
            elif directive == "entity":
                if len(tokens) == 2:
                    origin = Origin.ORIGINAL
                elif len(tokens) == 3 and tokens[2] == "synthesized":
                    origin = Origin.SYNTHESIZED
                else:
                    raise ModelSyntaxError(
                        "entity needs a name and optional 'synthesized'",
                        line=lineno,
                    )
                current = model.add_entity(tokens[1], origin)
            elif directive == "prop":
                if current is None:
                    raise ModelSyntaxError("prop before any entity", line=lineno)
                if len(tokens) != 3:
                    raise ModelSyntaxError(
                        "prop needs a name and a type", line=lineno
                    )
                model.add_property(current, PropKey(tokens[1], tokens[2]))
            elif directive == "super":
                if current is None:
                    raise ModelSyntaxError("super before any entity", line=lineno)
                if len(tokens) != 2:
                    raise ModelSyntaxError(
                        "super needs exactly one entity name", line=lineno
                    )
                pending_supers.append((current, tokens[1], lineno))
            else:
                raise ModelSyntaxError(
                    f"unknown directive {directive!r}", line=lineno
                )
        except ModelSyntaxError:
            raise
        except ModelError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None

    if not saw_header:
        raise ModelSyntaxError(f"empty document, expected header {_HEADER!r}")

    for sub, super_name, lineno in pending_supers:
        try:
            model.add_generalization(sub, model.entity_id(super_name))
        except ModelError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return model
