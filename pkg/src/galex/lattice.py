"""Concept enumeration and the canonical concept lattice.

Enumeration uses Close-by-One over the lexicographic attribute order:
each closed attribute set is generated exactly once, with polynomial
delay and no candidate storage. Cover edges (the transitive reduction of
the concept order) are recovered per concept as the minimal closures of
its intent extended by one attribute, which avoids any all-pairs
reduction step.

Concept ids are canonical: concepts are sorted by extent size descending
(ties broken by lexicographically smaller intent) and numbered upward
from the bottom, so the bottom concept is id 0 and the top concept is the
last id. Equal contexts yield bit-identical serializations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .context import AttributeSet, FormalContext, ObjectSet, bits
from .errors import CapacityExceeded, MalformedTable, UnknownConcept

DEFAULT_CONCEPT_CEILING = 10_000_000


@dataclass(frozen=True)
class FormalConcept:
    """A maximal (extent, intent) pair with its canonical lattice id."""

    id: int
    extent: ObjectSet
    intent: AttributeSet
    extent_mask: int = field(repr=False)
    intent_mask: int = field(repr=False)


@dataclass(frozen=True)
class ReducedLabeling:
    """Per-concept introduced attributes/objects (each name appears exactly once)."""

    attributes: Mapping[int, tuple[str, ...]]
    objects: Mapping[int, tuple[str, ...]]


def _enumerate_masks(ctx: FormalContext, max_concepts: int) -> list[tuple[int, int]]:
    """All closed (extent_mask, intent_mask) pairs in canonical id order."""
    cols = ctx._cols
    rows = ctx._rows
    n_attrs = len(cols)
    full_attrs = ctx.all_attributes_mask
    full_objs = ctx.all_objects_mask

    def alpha(extent: int) -> int:
        intent = full_attrs
        while extent:
            low = extent & -extent
            intent &= rows[low.bit_length() - 1]
            if not intent:
                break
            extent ^= low
        return intent

    found: list[tuple[int, int]] = []
    stack = [(full_objs, alpha(full_objs), 0)]
    while stack:
        extent, intent, start = stack.pop()
        found.append((extent, intent))
        if len(found) > max_concepts:
            raise CapacityExceeded(f"concept count exceeds ceiling {max_concepts}")
        children = []
        for a in range(start, n_attrs):
            abit = 1 << a
            if intent & abit:
                continue
            new_extent = extent & cols[a]
            new_intent = alpha(new_extent)
            # canonicity: the closure must add no attribute before a
            if (new_intent ^ intent) & (abit - 1):
                continue
            children.append((new_extent, new_intent, a + 1))
        stack.extend(reversed(children))

    found.sort(key=lambda p: (-p[0].bit_count(), tuple(bits(p[1]))))
    found.reverse()  # number from the bottom: id 0 = bottom, last id = top
    return found


def enumerate_concepts(
    ctx: FormalContext, max_concepts: int = DEFAULT_CONCEPT_CEILING
) -> list[FormalConcept]:
    """Every formal concept of the context, exactly once, in canonical id order."""
    return [
        FormalConcept(cid, frozenset(bits(e)), frozenset(bits(i)), e, i)
        for cid, (e, i) in enumerate(_enumerate_masks(ctx, max_concepts))
    ]


class ConceptLattice:
    """The set of all formal concepts of a context with its cover relation.

    Built through :func:`build_lattice`; immutable afterwards, so any
    number of readers may query it concurrently.
    """

    def __init__(self, ctx: FormalContext, concepts: list[FormalConcept]):
        self.context = ctx
        self.concepts: tuple[FormalConcept, ...] = tuple(concepts)
        self._by_intent = {c.intent_mask: c.id for c in concepts}
        self._by_extent = {c.extent_mask: c.id for c in concepts}
        self.top: int = self._by_extent[ctx.all_objects_mask]
        self.bottom: int = self._by_intent[ctx.all_attributes_mask]

        self._upper, self._lower = self._compute_covers()
        self.covers: tuple[tuple[int, int], ...] = tuple(
            sorted((lo, hi) for hi, lows in enumerate(self._lower) for lo in lows)
        )

        # introducers: AC(a) is the concept with extent beta({a}),
        # OC(o) the concept with intent alpha({o}); both are dict lookups.
        self.attribute_introducer: dict[str, int] = {
            name: self._by_extent[ctx._cols[j]] for j, name in enumerate(ctx.attributes)
        }
        self.object_introducer: dict[str, int] = {
            name: self._by_intent[ctx._rows[i]] for i, name in enumerate(ctx.objects)
        }
        intro_attrs: list[list[str]] = [[] for _ in concepts]
        intro_objs: list[list[str]] = [[] for _ in concepts]
        for name in ctx.attributes:
            intro_attrs[self.attribute_introducer[name]].append(name)
        for name in ctx.objects:
            intro_objs[self.object_introducer[name]].append(name)
        self._intro_attrs = tuple(tuple(names) for names in intro_attrs)
        self._intro_objs = tuple(tuple(names) for names in intro_objs)

    def _compute_covers(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        ctx = self.context
        cols = ctx._cols
        n_attrs = len(cols)
        upper: list[list[int]] = [[] for _ in self.concepts]
        lower: list[list[int]] = [[] for _ in self.concepts]
        for c in self.concepts:
            extent, intent = c.extent_mask, c.intent_mask
            candidates = set()
            for a in range(n_attrs):
                if intent & (1 << a):
                    continue
                candidates.add(ctx._alpha_mask(extent & cols[a]))
            # lower covers = minimal closed strict supersets of the intent;
            # scanning by size means any non-minimal candidate has a kept subset
            kept: list[int] = []
            for cand in sorted(candidates, key=int.bit_count):
                if not any(prev & cand == prev for prev in kept):
                    kept.append(cand)
            for cand in kept:
                lo = self._by_intent[cand]
                lower[c.id].append(lo)
                upper[lo].append(c.id)
        return (
            [tuple(sorted(ids)) for ids in upper],
            [tuple(sorted(ids)) for ids in lower],
        )

    # -- order queries -------------------------------------------------------

    def _check(self, cid: int) -> FormalConcept:
        if not isinstance(cid, int) or not 0 <= cid < len(self.concepts):
            raise UnknownConcept(f"no concept with id {cid!r}")
        return self.concepts[cid]

    def leq(self, c1: int, c2: int) -> bool:
        """True iff concept c1 is below-or-equal c2 (extent inclusion)."""
        e1 = self._check(c1).extent_mask
        e2 = self._check(c2).extent_mask
        return e1 & e2 == e1

    def join(self, cs: Iterable[int]) -> int:
        """Lowest upper bound; its intent is the intersection of the intents."""
        ids = list(cs)
        if not ids:
            raise ValueError("join of an empty concept set")
        intent = self.context.all_attributes_mask
        for cid in ids:
            intent &= self._check(cid).intent_mask
        return self._by_intent[intent]

    def meet(self, cs: Iterable[int]) -> int:
        """Greatest lower bound; its extent is the intersection of the extents."""
        ids = list(cs)
        if not ids:
            raise ValueError("meet of an empty concept set")
        extent = self.context.all_objects_mask
        for cid in ids:
            extent &= self._check(cid).extent_mask
        return self._by_extent[extent]

    def attribute_concept(self, name: str) -> int:
        """Highest concept whose intent contains the attribute; extent = beta({a})."""
        try:
            return self.attribute_introducer[name]
        except KeyError:
            self.context.attribute_index(name)  # raises UnknownAttribute
            raise

    def object_concept(self, name: str) -> int:
        """Lowest concept whose extent contains the object; intent = alpha({o})."""
        try:
            return self.object_introducer[name]
        except KeyError:
            self.context.object_index(name)  # raises UnknownObject
            raise

    def neighbourhood(self, cid: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(upper covers, lower covers): the most similar concepts of ``cid``."""
        self._check(cid)
        return self._upper[cid], self._lower[cid]

    def upper_covers(self, cid: int) -> tuple[int, ...]:
        self._check(cid)
        return self._upper[cid]

    def lower_covers(self, cid: int) -> tuple[int, ...]:
        self._check(cid)
        return self._lower[cid]

    def is_chain(self, cs: Iterable[int]) -> bool:
        """True iff all given concepts are pairwise comparable."""
        masks = sorted((self._check(cid).extent_mask for cid in cs), key=int.bit_count)
        return all(a & b == a for a, b in zip(masks, masks[1:]))

    def reduced_labels(self) -> ReducedLabeling:
        """Introduced attributes/objects per concept (Fig.-style simplified labels)."""
        return ReducedLabeling(
            attributes={c.id: self._intro_attrs[c.id] for c in self.concepts},
            objects={c.id: self._intro_objs[c.id] for c in self.concepts},
        )

    def introduced_attributes(self, cid: int) -> tuple[str, ...]:
        self._check(cid)
        return self._intro_attrs[cid]

    def introduced_objects(self, cid: int) -> tuple[str, ...]:
        self._check(cid)
        return self._intro_objs[cid]

    def extent_names(self, cid: int) -> tuple[str, ...]:
        return self.context.object_names(self._check(cid).extent)

    def intent_names(self, cid: int) -> tuple[str, ...]:
        return self.context.attribute_names(self._check(cid).intent)

    def concept_by_extent(self, names: Iterable[str]) -> int:
        """Concept whose extent is exactly the given objects (UnknownConcept if none)."""
        mask = self.context._object_mask(self.context.object_index(n) for n in names)
        try:
            return self._by_extent[mask]
        except KeyError:
            raise UnknownConcept(f"no concept has extent {sorted(names)!r}") from None

    # -- serialization -------------------------------------------------------

    def concept_json(self, cid: int) -> dict:
        c = self._check(cid)
        return {
            "id": c.id,
            "extent": list(self.extent_names(cid)),
            "intent": list(self.intent_names(cid)),
            "introduced_attributes": list(self._intro_attrs[cid]),
            "introduced_objects": list(self._intro_objs[cid]),
        }

    def to_json_dict(self) -> dict:
        return {
            "concepts": [self.concept_json(c.id) for c in self.concepts],
            "covers": [[lo, hi] for lo, hi in self.covers],
            "top": self.top,
            "bottom": self.bottom,
        }

    def to_json_bytes(self) -> bytes:
        return canonical_json_bytes(self.to_json_dict())

    def __len__(self) -> int:
        return len(self.concepts)

    def __repr__(self) -> str:
        return f"ConceptLattice({len(self.concepts)} concepts, {len(self.covers)} covers)"


def build_lattice(
    ctx: FormalContext, max_concepts: int = DEFAULT_CONCEPT_CEILING
) -> ConceptLattice:
    """Build the canonical concept lattice of a context."""
    return ConceptLattice(ctx, enumerate_concepts(ctx, max_concepts))


def canonical_json_bytes(data: dict) -> bytes:
    """Deterministic JSON encoding used by all exports."""
    return (json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def lattice_from_json(data: dict) -> ConceptLattice:
    """Rebuild a lattice from its JSON export.

    The export carries enough to recover the context: the top extent is
    the object universe, the bottom intent the attribute universe, and
    each object's row is the intent of the concept introducing it.
    Rebuilding through :func:`build_lattice` reproduces the export
    byte-for-byte (canonicity).
    """
    try:
        concepts = {c["id"]: c for c in data["concepts"]}
        objects = list(concepts[data["top"]]["extent"])
        attributes = list(concepts[data["bottom"]]["intent"])
        rows = {}
        for c in concepts.values():
            for name in c["introduced_objects"]:
                rows[name] = set(c["intent"])
    except (KeyError, TypeError) as exc:
        raise MalformedTable(f"not a lattice export: {exc}") from None
    if sorted(rows) != sorted(objects):
        raise MalformedTable("introduced objects do not cover the top extent")
    matrix = [[a in rows[o] for a in attributes] for o in objects]
    return build_lattice(FormalContext(objects, attributes, matrix))
