"""DOT (Graphviz) export of lattices and posets.

Each concept is a 3-part record node (name / intent / extent), drawn
bottom-up with one arrow per cover edge, matching the usual Hasse
presentation of concept hierarchies. Reduced labels are the default;
``full_labels`` switches to complete intents/extents.
"""

from __future__ import annotations

from .lattice import ConceptLattice
from .subhierarchy import ConceptPoset

_RECORD_ESCAPES = str.maketrans(
    {c: "\\" + c for c in ('"', "{", "}", "|", "<", ">", "\\")}
)


def _field(names: tuple[str, ...]) -> str:
    return "\\n".join(name.translate(_RECORD_ESCAPES) for name in names)


def _node_lines(lattice: ConceptLattice, ids, full_labels: bool) -> list[str]:
    lines = []
    for cid in ids:
        if full_labels:
            intent = lattice.intent_names(cid)
            extent = lattice.extent_names(cid)
        else:
            intent = lattice.introduced_attributes(cid)
            extent = lattice.introduced_objects(cid)
        lines.append(f'  c{cid} [label="{{C{cid}|{_field(intent)}|{_field(extent)}}}"];')
    return lines


def _render(name: str, lattice: ConceptLattice, ids, edges, full_labels: bool,
            graph_attrs: list[str] | None = None) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=record];"]
    lines.extend(graph_attrs or [])
    lines.extend(_node_lines(lattice, ids, full_labels))
    lines.extend(f"  c{lo} -> c{hi};" for lo, hi in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_dot(lattice: ConceptLattice, full_labels: bool = False) -> str:
    ids = [c.id for c in lattice.concepts]
    return _render("lattice", lattice, ids, lattice.covers, full_labels)


def poset_to_dot(poset: ConceptPoset, full_labels: bool = False) -> str:
    label = poset.kind.value
    if poset.min_extent is not None:
        label += f" min_extent={poset.min_extent}"
    attrs = [f'  label="{label}";']
    return _render("poset", poset.lattice, poset.concept_ids, poset.order_edges,
                   full_labels, attrs)
