from __future__ import annotations

import pytest

from galex import build_lattice
from galex.datasets import kdm_path, load_kdm

# Frozen facts of the bundled data-modelling-tools table.
KDM_ROWS = {
    "Astah": {"OS:Windows", "OS:Mac", "OS:Linux", "DM:Conceptual"},
    "Erwin-DM": {"OS:Windows", "DM:Conceptual", "DM:Physical", "DM:Logical"},
    "ER-Studio": {"OS:Windows", "DM:Conceptual", "DM:Physical", "DM:Logical", "DM:ETL"},
    "Magic-Draw": {
        "OS:Windows", "OS:Mac", "OS:Linux", "DM:Conceptual", "DM:Physical", "DM:Logical",
    },
    "MySQL-Workbench": {"OS:Windows", "OS:Mac", "OS:Linux", "DM:Physical"},
}

ALL_OBJECTS = frozenset(KDM_ROWS)
ALL_ATTRIBUTES = frozenset().union(*KDM_ROWS.values())

# The ten concepts, as (extent, intent) name pairs (hand-derived from the table).
KDM_CONCEPTS = {
    (frozenset(ALL_OBJECTS), frozenset({"OS:Windows"})),
    (
        frozenset({"Astah", "ER-Studio", "Erwin-DM", "Magic-Draw"}),
        frozenset({"OS:Windows", "DM:Conceptual"}),
    ),
    (
        frozenset({"ER-Studio", "Erwin-DM", "Magic-Draw", "MySQL-Workbench"}),
        frozenset({"OS:Windows", "DM:Physical"}),
    ),
    (
        frozenset({"Astah", "Magic-Draw", "MySQL-Workbench"}),
        frozenset({"OS:Windows", "OS:Mac", "OS:Linux"}),
    ),
    (
        frozenset({"ER-Studio", "Erwin-DM", "Magic-Draw"}),
        frozenset({"OS:Windows", "DM:Conceptual", "DM:Physical", "DM:Logical"}),
    ),
    (frozenset({"Astah", "Magic-Draw"}), frozenset(KDM_ROWS["Astah"])),
    (frozenset({"Magic-Draw", "MySQL-Workbench"}), frozenset(KDM_ROWS["MySQL-Workbench"])),
    (frozenset({"ER-Studio"}), frozenset(KDM_ROWS["ER-Studio"])),
    (frozenset({"Magic-Draw"}), frozenset(KDM_ROWS["Magic-Draw"])),
    (frozenset(), frozenset(ALL_ATTRIBUTES)),
}


@pytest.fixture(scope="session")
def kdm_csv_path():
    return kdm_path()


@pytest.fixture(scope="session")
def kdm():
    return load_kdm()


@pytest.fixture(scope="session")
def kdm_lattice(kdm):
    return build_lattice(kdm)


def concept_of(lattice, extent_names) -> int:
    """Resolve a concept id by its exact extent (figure numbering is not relied on)."""
    return lattice.concept_by_extent(extent_names)
