"""Variability facts read off a concept lattice.

Core and dead attributes come from the top/bottom reduced labels, binary
implications from the order between attribute-concepts, mutexes from
attribute-concepts meeting at the empty extent, and configuration
classification from closures. Every fact here is re-checkable directly
against the incidence table; the test suite does exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .context import AttributeSet, FormalContext
from .lattice import ConceptLattice, build_lattice


@dataclass(frozen=True, order=True)
class Implication:
    """Binary implication premise → conclusion (every owner of one owns the other).

    ``vacuous`` marks implications whose premise is owned by no object.
    """

    premise: str
    conclusion: str
    vacuous: bool = False


@dataclass(frozen=True, order=True)
class MutexPair:
    """Unordered attribute pair no object owns together (a1 < a2 lexicographically)."""

    a1: str
    a2: str
    vacuous: bool = False


class ConfigurationKind(str, Enum):
    VALID = "VALID"
    MAXIMAL_PARTIAL = "MAXIMAL_PARTIAL"
    PARTIAL = "PARTIAL"
    INVALID = "INVALID"


@dataclass(frozen=True)
class Classification:
    """Outcome of classifying an attribute set against a context.

    ``witness`` is the concept id backing the answer: the object-concept
    for VALID, the concept itself for MAXIMAL_PARTIAL, the closure's
    concept for PARTIAL, and None for INVALID.
    """

    kind: ConfigurationKind
    witness: int | None


@dataclass(frozen=True)
class VariabilityReport:
    core: tuple[str, ...]
    dead: tuple[str, ...]
    implications: tuple[Implication, ...]
    equivalence_groups: tuple[tuple[str, ...], ...]
    mutex: tuple[MutexPair, ...]
    specializations: tuple[tuple[str, str], ...]
    metrics: dict = field(compare=False)
    exhaustive: bool = False


def core_attributes(lattice: ConceptLattice) -> AttributeSet:
    """Attributes owned by every object (introduced in the top concept)."""
    ctx = lattice.context
    return frozenset(ctx.attribute_index(a) for a in lattice.introduced_attributes(lattice.top))


def dead_attributes(lattice: ConceptLattice) -> AttributeSet:
    """Attributes owned by no object (introduced in an empty-extent bottom)."""
    ctx = lattice.context
    if lattice.concepts[lattice.bottom].extent_mask:
        return frozenset()
    return frozenset(
        ctx.attribute_index(a) for a in lattice.introduced_attributes(lattice.bottom)
    )


def binary_implications(lattice: ConceptLattice) -> list[Implication]:
    """All implications a1 → a2 given by the order of their attribute-concepts.

    Sound and complete for the context: a1 → a2 is emitted iff every
    owner of a1 owns a2. A dead premise implies everything; those are
    included here and flagged vacuous.
    """
    ctx = lattice.context
    extents = {
        name: lattice.concepts[lattice.attribute_concept(name)].extent_mask
        for name in ctx.attributes
    }
    out = []
    for a1 in ctx.attributes:
        e1 = extents[a1]
        for a2 in ctx.attributes:
            if a1 != a2 and e1 & extents[a2] == e1:
                out.append(Implication(a1, a2, vacuous=not e1))
    return sorted(out)


def equivalence_groups(lattice: ConceptLattice) -> tuple[tuple[str, ...], ...]:
    """Partition of the attributes by shared introducer concept (double implications)."""
    groups: dict[int, list[str]] = {}
    for name in lattice.context.attributes:
        groups.setdefault(lattice.attribute_concept(name), []).append(name)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def mutex_pairs(lattice: ConceptLattice) -> list[MutexPair]:
    """Attribute pairs whose attribute-concepts meet at an empty extent.

    Pairs involving a dead attribute are vacuously mutex and flagged.
    """
    ctx = lattice.context
    names = ctx.attributes
    extents = [lattice.concepts[lattice.attribute_concept(a)].extent_mask for a in names]
    out = []
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if extents[i] & extents[j] == 0:
                out.append(MutexPair(names[i], names[j], vacuous=not (extents[i] and extents[j])))
    return sorted(out)


def specializations(lattice: ConceptLattice) -> list[tuple[str, str]]:
    """Ordered pairs (specializer, generalized): strict configuration inclusion."""
    ctx = lattice.context
    out = []
    for o1 in ctx.objects:
        r1 = ctx._rows[ctx.object_index(o1)]
        for o2 in ctx.objects:
            r2 = ctx._rows[ctx.object_index(o2)]
            if o1 != o2 and r1 != r2 and r1 & r2 == r2:
                out.append((o1, o2))
    return sorted(out)


def similarity(lattice: ConceptLattice, o1: str, o2: str) -> AttributeSet:
    """Attributes shared by both configurations: the intent of the objects' join."""
    j = lattice.join([lattice.object_concept(o1), lattice.object_concept(o2)])
    return lattice.concepts[j].intent


def classify_configuration(
    ctx: FormalContext, lattice: ConceptLattice, attrs: Iterable[int]
) -> Classification:
    """Classify an attribute set as VALID / MAXIMAL_PARTIAL / PARTIAL / INVALID.

    VALID: exactly some object's configuration. MAXIMAL_PARTIAL: a concept
    intent that is no object's configuration. PARTIAL: extendable to a
    valid configuration but not closed. INVALID: owned by no object, so no
    sequence of attribute additions reaches a valid configuration.
    """
    mask = ctx._attribute_mask(attrs)
    extent = ctx._beta_mask(mask)
    if not extent:
        return Classification(ConfigurationKind.INVALID, None)
    closure = ctx._alpha_mask(extent)
    cid = lattice._by_intent[closure]
    if closure != mask:
        return Classification(ConfigurationKind.PARTIAL, cid)
    if lattice.introduced_objects(cid):
        return Classification(ConfigurationKind.VALID, cid)
    return Classification(ConfigurationKind.MAXIMAL_PARTIAL, cid)


def report_from_lattice(lattice: ConceptLattice, exhaustive: bool = False) -> VariabilityReport:
    """Aggregate all extractions over an existing lattice.

    By default, implications inside one equivalence group are subsumed by
    the group, and vacuous implications/mutexes (dead attributes) are
    suppressed; ``exhaustive`` restores the full pairwise listings.
    """
    ctx = lattice.context
    groups = equivalence_groups(lattice)
    group_of = {name: i for i, group in enumerate(groups) for name in group}

    implications = binary_implications(lattice)
    mutexes = mutex_pairs(lattice)
    if not exhaustive:
        implications = [
            imp
            for imp in implications
            if not imp.vacuous and group_of[imp.premise] != group_of[imp.conclusion]
        ]
        mutexes = [m for m in mutexes if not m.vacuous]

    metrics = {
        "attribute_support": {
            a: lattice.concepts[lattice.attribute_concept(a)].extent_mask.bit_count()
            for a in ctx.attributes
        },
        "object_configuration_size": {
            o: lattice.concepts[lattice.object_concept(o)].intent_mask.bit_count()
            for o in ctx.objects
        },
    }
    return VariabilityReport(
        core=ctx.attribute_names(core_attributes(lattice)),
        dead=ctx.attribute_names(dead_attributes(lattice)),
        implications=tuple(implications),
        equivalence_groups=groups,
        mutex=tuple(mutexes),
        specializations=tuple(specializations(lattice)),
        metrics=metrics,
        exhaustive=exhaustive,
    )


def build_report(ctx: FormalContext, exhaustive: bool = False, **lattice_kwargs) -> VariabilityReport:
    """Build the lattice for a context and extract its variability report."""
    return report_from_lattice(build_lattice(ctx, **lattice_kwargs), exhaustive=exhaustive)


def report_json_dict(report: VariabilityReport) -> dict:
    def implication_json(imp: Implication) -> dict:
        d = {"premise": imp.premise, "conclusion": imp.conclusion}
        if imp.vacuous:
            d["vacuous"] = True
        return d

    def mutex_json(m: MutexPair) -> list:
        return [m.a1, m.a2, "vacuous"] if m.vacuous else [m.a1, m.a2]

    return {
        "core": list(report.core),
        "dead": list(report.dead),
        "implications": [implication_json(i) for i in report.implications],
        "equivalences": [list(g) for g in report.equivalence_groups],
        "mutex": [mutex_json(m) for m in report.mutex],
        "specializations": [list(p) for p in report.specializations],
        "metrics": report.metrics,
    }


def render_report_text(report: VariabilityReport) -> str:
    """Human-readable report rendering for the CLI."""
    lines = []
    lines.append("core attributes:    " + (", ".join(report.core) or "none"))
    lines.append("dead attributes:    " + (", ".join(report.dead) or "none"))

    multi = [g for g in report.equivalence_groups if len(g) > 1]
    lines.append("equivalence groups: " + ("; ".join("{" + ", ".join(g) + "}" for g in multi) or "none"))
    singleton_count = len(report.equivalence_groups) - len(multi)
    if singleton_count:
        lines.append(f"                    ({singleton_count} singleton groups not shown)")

    lines.append(f"implications ({len(report.implications)}):")
    for imp in report.implications:
        suffix = "   [vacuous]" if imp.vacuous else ""
        lines.append(f"  {imp.premise} -> {imp.conclusion}{suffix}")
    lines.append(f"mutex pairs ({len(report.mutex)}):")
    for m in report.mutex:
        suffix = "   [vacuous]" if m.vacuous else ""
        lines.append(f"  {m.a1} x {m.a2}{suffix}")
    lines.append(f"specializations ({len(report.specializations)}):")
    for o1, o2 in report.specializations:
        lines.append(f"  {o1} specializes {o2}")

    lines.append("attribute support:")
    for a, n in report.metrics["attribute_support"].items():
        lines.append(f"  {a}: {n}")
    lines.append("configuration sizes:")
    for o, n in report.metrics["object_configuration_size"].items():
        lines.append(f"  {o}: {n}")
    return "\n".join(lines) + "\n"
