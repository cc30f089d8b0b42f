"""Sub-hierarchies of a concept lattice: AOC/AC/OC posets and iceberg prunings.

All four views are computed by filtering an already-built lattice and
recomputing the transitive reduction on the retained concepts (pruning
can orphan transitive paths, so the original cover edges are not reused).
Concept ids are the lattice's, so cross-references stay stable between
views. These posets are generally not lattices: bounds may be missing,
and an empty poset is a legal value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidThreshold
from .lattice import ConceptLattice, canonical_json_bytes


class PosetKind(str, Enum):
    AOC = "AOC"
    AC = "AC"
    OC = "OC"
    ICEBERG = "ICEBERG"


@dataclass(frozen=True)
class ConceptPoset:
    """A subset of a lattice's concepts with the restricted (reduced) order."""

    lattice: ConceptLattice
    kind: PosetKind
    concept_ids: tuple[int, ...]
    order_edges: tuple[tuple[int, int], ...]
    min_extent: int | None = None

    def __len__(self) -> int:
        return len(self.concept_ids)

    def leq(self, c1: int, c2: int) -> bool:
        if c1 not in self.concept_ids or c2 not in self.concept_ids:
            return False
        return self.lattice.leq(c1, c2)

    def to_json_dict(self) -> dict:
        return {
            "concepts": [self.lattice.concept_json(cid) for cid in self.concept_ids],
            "covers": [[lo, hi] for lo, hi in self.order_edges],
            "kind": self.kind.value,
            "min_extent": self.min_extent,
        }

    def to_json_bytes(self) -> bytes:
        return canonical_json_bytes(self.to_json_dict())


def _restricted_reduction(lattice: ConceptLattice, ids: list[int]) -> tuple[tuple[int, int], ...]:
    """Transitive reduction of the lattice order restricted to ``ids``."""
    by_size = sorted(ids, key=lambda cid: lattice.concepts[cid].extent_mask.bit_count())
    edges = []
    for cid in ids:
        ext = lattice.concepts[cid].extent_mask
        size = ext.bit_count()
        kept: list[int] = []
        for other in by_size:
            oext = lattice.concepts[other].extent_mask
            if oext.bit_count() <= size or ext & oext != ext:
                continue
            # ascending size scan: non-minimal uppers are caught by a kept one below them
            if not any(
                lattice.concepts[k].extent_mask & oext == lattice.concepts[k].extent_mask
                for k in kept
            ):
                kept.append(other)
        edges.extend((cid, upper) for upper in kept)
    return tuple(sorted(edges))


def _filtered_poset(lattice: ConceptLattice, kind: PosetKind, ids: list[int],
                    min_extent: int | None = None) -> ConceptPoset:
    ids = sorted(ids)
    return ConceptPoset(
        lattice=lattice,
        kind=kind,
        concept_ids=tuple(ids),
        order_edges=_restricted_reduction(lattice, ids),
        min_extent=min_extent,
    )


def aoc_poset(lattice: ConceptLattice) -> ConceptPoset:
    """All introducer concepts (non-empty reduced label), restricted order."""
    ids = [
        c.id
        for c in lattice.concepts
        if lattice.introduced_attributes(c.id) or lattice.introduced_objects(c.id)
    ]
    return _filtered_poset(lattice, PosetKind.AOC, ids)


def ac_poset(lattice: ConceptLattice) -> ConceptPoset:
    """Only the concepts introducing at least one attribute."""
    ids = [c.id for c in lattice.concepts if lattice.introduced_attributes(c.id)]
    return _filtered_poset(lattice, PosetKind.AC, ids)


def oc_poset(lattice: ConceptLattice) -> ConceptPoset:
    """Only the concepts introducing at least one object."""
    ids = [c.id for c in lattice.concepts if lattice.introduced_objects(c.id)]
    return _filtered_poset(lattice, PosetKind.OC, ids)


def iceberg(lattice: ConceptLattice, min_extent: int) -> ConceptPoset:
    """Concepts whose extent has at least ``min_extent`` objects (an order filter)."""
    if not isinstance(min_extent, int) or min_extent < 1:
        raise InvalidThreshold(f"iceberg threshold must be a positive integer, got {min_extent!r}")
    ids = [c.id for c in lattice.concepts if c.extent_mask.bit_count() >= min_extent]
    return _filtered_poset(lattice, PosetKind.ICEBERG, ids, min_extent=min_extent)
