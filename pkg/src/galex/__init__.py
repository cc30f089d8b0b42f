"""galex: concept-lattice construction and variability analysis.

Turns object×attribute tables into canonical concept lattices and
answers variability queries over them: core/dead attributes, binary
implications, mutexes, configuration classification and conceptual
navigation. Ships a CLI (``galex``) and an HTTP service for the
interactive explorer.
"""

from .context import AttributeSet, FormalContext, ObjectSet, load_context, parse_context
from .errors import (
    CapacityExceeded,
    DuplicateName,
    EmptyContext,
    GalexError,
    InvalidSet,
    InvalidThreshold,
    MalformedTable,
    NotAdjacent,
    UnknownAttribute,
    UnknownConcept,
    UnknownObject,
    UnknownSession,
)
from .lattice import (
    DEFAULT_CONCEPT_CEILING,
    ConceptLattice,
    FormalConcept,
    ReducedLabeling,
    build_lattice,
    enumerate_concepts,
    lattice_from_json,
)
from .navigation import Move, MoveDirection, NavigationSession, start_session
from .subhierarchy import ConceptPoset, PosetKind, ac_poset, aoc_poset, iceberg, oc_poset
from .variability import (
    Classification,
    ConfigurationKind,
    Implication,
    MutexPair,
    VariabilityReport,
    binary_implications,
    build_report,
    classify_configuration,
    core_attributes,
    dead_attributes,
    equivalence_groups,
    mutex_pairs,
    report_from_lattice,
    similarity,
    specializations,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeSet",
    "CapacityExceeded",
    "Classification",
    "ConceptLattice",
    "ConceptPoset",
    "ConfigurationKind",
    "DEFAULT_CONCEPT_CEILING",
    "DuplicateName",
    "EmptyContext",
    "FormalConcept",
    "FormalContext",
    "GalexError",
    "Implication",
    "InvalidSet",
    "InvalidThreshold",
    "MalformedTable",
    "Move",
    "MoveDirection",
    "MutexPair",
    "NavigationSession",
    "NotAdjacent",
    "ObjectSet",
    "PosetKind",
    "ReducedLabeling",
    "UnknownAttribute",
    "UnknownConcept",
    "UnknownObject",
    "UnknownSession",
    "VariabilityReport",
    "ac_poset",
    "aoc_poset",
    "binary_implications",
    "build_lattice",
    "build_report",
    "classify_configuration",
    "core_attributes",
    "dead_attributes",
    "enumerate_concepts",
    "equivalence_groups",
    "iceberg",
    "lattice_from_json",
    "load_context",
    "mutex_pairs",
    "oc_poset",
    "parse_context",
    "report_from_lattice",
    "similarity",
    "specializations",
    "start_session",
]
