"""Formal contexts: object×attribute incidence tables and their derivation operators.

A context is a triple of objects, binary attributes and an incidence
relation. The two derivation operators map object sets to the attributes
shared by all of them (``alpha``) and attribute sets to the objects owning
all of them (``beta``); their compositions are closure operators, which is
what concept enumeration is built on.

The incidence is stored twice as packed bit-vectors (one attribute mask
per object row, one object mask per attribute column), so both operators
are word-parallel intersections of Python integers. Objects and attributes
are canonically kept in lexicographic order regardless of input order;
two presentations of the same table therefore compare equal and produce
identical downstream structures.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import IO, Iterable, Iterator, TypeAlias

from .errors import (
    CapacityExceeded,
    DuplicateName,
    EmptyContext,
    InvalidSet,
    MalformedTable,
    UnknownAttribute,
    UnknownObject,
)

# Index sets are always interpreted relative to exactly one context.
ObjectSet: TypeAlias = "frozenset[int]"
AttributeSet: TypeAlias = "frozenset[int]"

# Soft capacity limit on either dimension, set by index-width considerations.
MAX_DIMENSION = 64_000

# Cell truthiness for tabular input (trimmed, case-insensitive).
_TRUE_CELLS = {"x", "1", "true"}
_FALSE_CELLS = {"", "0", "false"}


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(indices: Iterable[int], size: int, what: str) -> int:
    mask = 0
    for i in indices:
        if not 0 <= int(i) < size:
            raise InvalidSet(f"{what} index {i} out of range [0, {size})")
        mask |= 1 << int(i)
    return mask


def _checked_names(names: Iterable[str], what: str) -> list[str]:
    out = []
    seen = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise MalformedTable(f"{what} names must be non-empty strings, got {name!r}")
        if name in seen:
            raise DuplicateName(f"duplicate {what} name {name!r}")
        seen.add(name)
        out.append(name)
    return out


class FormalContext:
    """Immutable formal context over named objects and attributes.

    ``incidence`` is a row-major boolean matrix aligned with the *given*
    object/attribute order; the constructor canonicalizes both axes to
    lexicographic order.
    """

    __slots__ = ("objects", "attributes", "_rows", "_cols", "_obj_index", "_attr_index")

    def __init__(
        self,
        objects: Iterable[str],
        attributes: Iterable[str],
        incidence: Iterable[Iterable[bool]],
    ):
        obj_names = _checked_names(objects, "object")
        attr_names = _checked_names(attributes, "attribute")
        if not obj_names:
            raise EmptyContext("context has no objects")
        if not attr_names:
            raise EmptyContext("context has no attributes")
        if len(obj_names) > MAX_DIMENSION or len(attr_names) > MAX_DIMENSION:
            raise CapacityExceeded(f"context dimensions exceed {MAX_DIMENSION}")

        matrix = [list(row) for row in incidence]
        if len(matrix) != len(obj_names):
            raise MalformedTable(f"expected {len(obj_names)} incidence rows, got {len(matrix)}")
        for name, row in zip(obj_names, matrix):
            if len(row) != len(attr_names):
                raise MalformedTable(
                    f"row {name!r} has {len(row)} cells, expected {len(attr_names)}"
                )

        obj_order = sorted(range(len(obj_names)), key=obj_names.__getitem__)
        attr_order = sorted(range(len(attr_names)), key=attr_names.__getitem__)
        self.objects: tuple[str, ...] = tuple(obj_names[i] for i in obj_order)
        self.attributes: tuple[str, ...] = tuple(attr_names[j] for j in attr_order)

        rows = []
        for i in obj_order:
            mask = 0
            src = matrix[i]
            for j, sj in enumerate(attr_order):
                if src[sj]:
                    mask |= 1 << j
            rows.append(mask)
        cols = []
        for j in range(len(self.attributes)):
            jbit = 1 << j
            mask = 0
            for i, row in enumerate(rows):
                if row & jbit:
                    mask |= 1 << i
            cols.append(mask)
        self._rows: tuple[int, ...] = tuple(rows)
        self._cols: tuple[int, ...] = tuple(cols)
        self._obj_index = {name: i for i, name in enumerate(self.objects)}
        self._attr_index = {name: j for j, name in enumerate(self.attributes)}

    # -- basic accessors ---------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def incidence_count(self) -> int:
        return sum(row.bit_count() for row in self._rows)

    def object_index(self, name: str) -> int:
        try:
            return self._obj_index[name]
        except KeyError:
            raise UnknownObject(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attr_index[name]
        except KeyError:
            raise UnknownAttribute(f"unknown attribute {name!r}") from None

    def object_names(self, objs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.objects[i] for i in sorted(objs))

    def attribute_names(self, attrs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.attributes[j] for j in sorted(attrs))

    def pairs(self) -> Iterator[tuple[str, str]]:
        """Yield every (object name, attribute name) incidence pair."""
        for i, row in enumerate(self._rows):
            for j in bits(row):
                yield self.objects[i], self.attributes[j]

    # -- derivation operators ----------------------------------------------

    def alpha(self, objs: Iterable[int]) -> AttributeSet:
        """Attributes shared by every object in ``objs``; alpha(∅) = all attributes."""
        mask = self._alpha_mask(self._object_mask(objs))
        return frozenset(bits(mask))

    def beta(self, attrs: Iterable[int]) -> ObjectSet:
        """Objects owning every attribute in ``attrs``; beta(∅) = all objects."""
        mask = self._beta_mask(self._attribute_mask(attrs))
        return frozenset(bits(mask))

    def closure_attributes(self, attrs: Iterable[int]) -> AttributeSet:
        """alpha(beta(attrs)): the smallest closed attribute set containing ``attrs``."""
        mask = self._alpha_mask(self._beta_mask(self._attribute_mask(attrs)))
        return frozenset(bits(mask))

    def closure_objects(self, objs: Iterable[int]) -> ObjectSet:
        """beta(alpha(objs)): the smallest closed object set containing ``objs``."""
        mask = self._beta_mask(self._alpha_mask(self._object_mask(objs)))
        return frozenset(bits(mask))

    # -- mask-level operators (package internal, hot paths) -----------------

    @property
    def all_objects_mask(self) -> int:
        return (1 << len(self.objects)) - 1

    @property
    def all_attributes_mask(self) -> int:
        return (1 << len(self.attributes)) - 1

    def _object_mask(self, objs: Iterable[int]) -> int:
        return _mask_of(objs, len(self.objects), "object")

    def _attribute_mask(self, attrs: Iterable[int]) -> int:
        return _mask_of(attrs, len(self.attributes), "attribute")

    def _alpha_mask(self, extent: int) -> int:
        intent = self.all_attributes_mask
        rows = self._rows
        while extent:
            low = extent & -extent
            intent &= rows[low.bit_length() - 1]
            if not intent:
                break
            extent ^= low
        return intent

    def _beta_mask(self, intent: int) -> int:
        extent = self.all_objects_mask
        cols = self._cols
        while intent:
            low = intent & -intent
            extent &= cols[low.bit_length() - 1]
            if not extent:
                break
            intent ^= low
        return extent

    # -- serialization and equality ------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "objects": list(self.objects),
            "attributes": list(self.attributes),
            "incidence": [sorted(bits(row)) for row in self._rows],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.attributes == other.attributes
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self._rows))

    def __repr__(self) -> str:
        return (
            f"FormalContext({len(self.objects)} objects, {len(self.attributes)} attributes, "
            f"{self.incidence_count} incidences)"
        )


def _parse_cell(cell: str, row_name: str) -> bool:
    value = cell.strip().casefold()
    if value in _TRUE_CELLS:
        return True
    if value in _FALSE_CELLS:
        return False
    raise MalformedTable(f"unrecognized cell {cell!r} in row {row_name!r}")


def _parse_csv(text: str) -> FormalContext:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise EmptyContext("empty table")
    header = rows[0]
    attributes = header[1:]  # the corner cell is a label slot, ignored
    if not attributes:
        raise EmptyContext("header declares no attributes")
    objects = []
    matrix = []
    for row in rows[1:]:
        if len(row) != len(header):
            raise MalformedTable(
                f"row {row[0]!r} has {len(row) - 1} cells, expected {len(attributes)}"
            )
        objects.append(row[0])
        matrix.append([_parse_cell(cell, row[0]) for cell in row[1:]])
    return FormalContext(objects, attributes, matrix)


def _parse_json(text: str) -> FormalContext:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedTable(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedTable("top-level JSON value must be an object")
    try:
        objects = data["objects"]
        attributes = data["attributes"]
        incidence = data["incidence"]
    except (KeyError, TypeError):
        raise MalformedTable("JSON context needs 'objects', 'attributes', 'incidence'") from None
    if not isinstance(objects, list) or not isinstance(attributes, list):
        raise MalformedTable("'objects' and 'attributes' must be lists")
    if not isinstance(incidence, list) or len(incidence) != len(objects):
        raise MalformedTable("'incidence' must list one attribute-index row per object")
    matrix = []
    for name, owned in zip(objects, incidence):
        row = [False] * len(attributes)
        if not isinstance(owned, list):
            raise MalformedTable(f"incidence row for {name!r} must be a list of indices")
        for j in owned:
            if not isinstance(j, int) or not 0 <= j < len(attributes):
                raise MalformedTable(f"attribute index {j!r} out of range in row {name!r}")
            row[j] = True
        matrix.append(row)
    return FormalContext(objects, attributes, matrix)


def parse_context(source: str | IO[str], format: str = "csv") -> FormalContext:
    """Parse a context from CSV or JSON text (or a readable text stream)."""
    text = source if isinstance(source, str) else source.read()
    if format == "csv":
        return _parse_csv(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unsupported context format {format!r}")


def load_context(path: str | Path) -> FormalContext:
    """Load a context file, picking the format from the file suffix."""
    path = Path(path)
    fmt = "json" if path.suffix.lower() == ".json" else "csv"
    return parse_context(path.read_text(encoding="utf-8"), fmt)
