"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
are produced (pytest captures stdout otherwise).
"""

from __future__ import annotations

import functools
import random
import time
from itertools import combinations

import pytest

from conftest import KDM_CONCEPTS, concept_of
from galex import (
    FormalContext,
    MoveDirection,
    NotAdjacent,
    binary_implications,
    build_lattice,
    build_report,
    classify_configuration,
    core_attributes,
    dead_attributes,
    enumerate_concepts,
    parse_context,
    start_session,
)
from galex.subhierarchy import ac_poset, aoc_poset, iceberg, oc_poset
from oracles import TableOracle, contranominal, random_context


def criterion(cid: str, description: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"{cid} FAIL - {description}")
                raise
            print(f"{cid} PASS - {description}")

        return run

    return wrap


@criterion("A1", "bundled table reproduces: 10 concepts, the documented concept, empty bottom, < 1 s")
def test_a1_kdm_reproduction(kdm_csv_path):
    started = time.perf_counter()
    ctx = parse_context(kdm_csv_path.read_text(encoding="utf-8"), "csv")
    lattice = build_lattice(ctx)
    elapsed = time.perf_counter() - started

    assert len(lattice) == 10
    pairs = {
        (frozenset(lattice.extent_names(c.id)), frozenset(lattice.intent_names(c.id)))
        for c in lattice.concepts
    }
    assert pairs == KDM_CONCEPTS
    assert (
        frozenset({"Erwin-DM", "ER-Studio", "Magic-Draw"}),
        frozenset({"OS:Windows", "DM:Conceptual", "DM:Physical", "DM:Logical"}),
    ) in pairs
    assert lattice.concepts[lattice.bottom].extent == frozenset()
    assert elapsed < 1.0, f"build took {elapsed:.3f}s"


@criterion("A2", "introducers: Physical's extent is its 4 owners, Astah's intent is its 4 attributes")
def test_a2_introducers(kdm_lattice):
    lat = kdm_lattice
    physical = lat.attribute_concept("DM:Physical")
    assert set(lat.extent_names(physical)) == {
        "Erwin-DM", "ER-Studio", "Magic-Draw", "MySQL-Workbench",
    }
    astah = lat.object_concept("Astah")
    assert set(lat.intent_names(astah)) == {
        "OS:Windows", "OS:Mac", "OS:Linux", "DM:Conceptual",
    }


@criterion("A3", "implications equal the column-inclusion oracle (fixture + 500 random contexts)")
def test_a3_implications(kdm_lattice):
    extracted = {(i.premise, i.conclusion) for i in binary_implications(kdm_lattice)}
    assert extracted == TableOracle.of(kdm_lattice.context).implications()
    assert ("DM:Logical", "DM:Conceptual") in extracted
    assert ("OS:Mac", "OS:Linux") in extracted and ("OS:Linux", "OS:Mac") in extracted

    rng = random.Random(20240817)
    mismatches = 0
    for _ in range(500):
        ctx = random_context(rng, max_objects=12, max_attributes=12)
        got = {(i.premise, i.conclusion) for i in binary_implications(build_lattice(ctx))}
        if got != TableOracle.of(ctx).implications():
            mismatches += 1
    assert mismatches == 0


@criterion("A4", "mutex set under default flags is exactly {Linux x ETL, Mac x ETL}")
def test_a4_mutex(kdm):
    report = build_report(kdm)
    assert {(m.a1, m.a2) for m in report.mutex} == {
        ("DM:ETL", "OS:Linux"),
        ("DM:ETL", "OS:Mac"),
    }


@criterion("A5", "core = {OS:Windows}, dead = none; an all-false column becomes dead")
def test_a5_core_dead(kdm, kdm_lattice):
    ctx = kdm
    assert ctx.attribute_names(core_attributes(kdm_lattice)) == ("OS:Windows",)
    assert dead_attributes(kdm_lattice) == frozenset()

    rows = [set(ctx.attribute_names(ctx.alpha([i]))) for i in range(ctx.n_objects)]
    extended = FormalContext(
        ctx.objects,
        list(ctx.attributes) + ["DM:Graph"],
        [[a in row for a in list(ctx.attributes) + ["DM:Graph"]] for row in rows],
    )
    lat = build_lattice(extended)
    assert extended.attribute_names(dead_attributes(lat)) == ("DM:Graph",)
    assert extended.attribute_names(core_attributes(lat)) == ("OS:Windows",)


@criterion("A6", "bounds: the documented joins/meets land on the right concepts")
def test_a6_bounds(kdm_lattice):
    lat = kdm_lattice
    magic_only = concept_of(lat, {"Magic-Draw"})
    er_only = concept_of(lat, {"ER-Studio"})
    assert lat.join([magic_only, er_only]) == lat.attribute_concept("DM:Logical")

    astah_intro = lat.object_concept("Astah")
    erwin_intro = lat.object_concept("Erwin-DM")
    assert lat.meet([astah_intro, erwin_intro]) == lat.object_concept("Magic-Draw")

    maclinux_intro = lat.attribute_concept("OS:Mac")
    etl_intro = lat.attribute_concept("DM:ETL")
    met = lat.meet([maclinux_intro, etl_intro])
    assert met == lat.bottom
    assert lat.concepts[met].extent == frozenset()


@criterion("A7", "sub-hierarchies: AOC=9, AC=6, OC=5, iceberg(3)=5 and upward-closed")
def test_a7_subhierarchies(kdm_lattice):
    lat = kdm_lattice
    assert len(aoc_poset(lat)) == 9
    assert len(ac_poset(lat)) == 6
    assert len(oc_poset(lat)) == 5

    oracle = TableOracle.of(lat.context).introducer_extents()
    expected_aoc = {e for e, (attrs, objs) in oracle.items() if attrs or objs}
    assert {frozenset(lat.extent_names(c)) for c in aoc_poset(lat).concept_ids} == expected_aoc
    assert {frozenset(lat.extent_names(c)) for c in ac_poset(lat).concept_ids} == {
        e for e, (attrs, _) in oracle.items() if attrs
    }
    assert {frozenset(lat.extent_names(c)) for c in oc_poset(lat).concept_ids} == {
        e for e, (_, objs) in oracle.items() if objs
    }

    berg = iceberg(lat, 3)
    assert len(berg) == 5
    assert {frozenset(lat.extent_names(c)) for c in berg.concept_ids} == {
        e for e, _ in oracle.items() if len(e) >= 3
    }
    retained = set(berg.concept_ids)
    for cid in retained:
        for other in lat.concepts:
            if lat.leq(cid, other.id):
                assert other.id in retained


@criterion("A8", "navigation at Astah's concept: exactly the two documented minimal moves")
def test_a8_navigation(kdm_lattice):
    lat = kdm_lattice
    session = start_session(lat, lat.object_concept("Astah"))
    ups = [m for m in session.available_moves() if m.direction is MoveDirection.UP]
    assert len(ups) == 2
    deltas = {(m.attributes_removed, m.objects_gained) for m in ups}
    assert deltas == {
        (("DM:Conceptual",), ("MySQL-Workbench",)),
        (("OS:Linux", "OS:Mac"), ("ER-Studio", "Erwin-DM")),
    }
    with pytest.raises(NotAdjacent):
        session.apply_move(lat.top)  # super-concept, but not a direct one


@criterion("A9", "closure laws hold on 1000 random contexts with zero violations")
def test_a9_closure_laws():
    rng = random.Random(4711)
    violations = 0

    def sample_set(upper: int) -> frozenset:
        return frozenset(i for i in range(upper) if rng.random() < 0.4)

    for _ in range(1000):
        ctx = random_context(rng, max_objects=12, max_attributes=12)
        n_obj, n_attr = ctx.n_objects, ctx.n_attributes
        for _ in range(6):
            attrs = sample_set(n_attr)
            objs = sample_set(n_obj)
            attrs2 = attrs | sample_set(n_attr)
            objs2 = objs | sample_set(n_obj)

            closed = ctx.closure_attributes(attrs)
            oclosed = ctx.closure_objects(objs)
            if not attrs <= closed or not objs <= oclosed:
                violations += 1  # extensivity
            if ctx.closure_attributes(closed) != closed or ctx.closure_objects(oclosed) != oclosed:
                violations += 1  # idempotence
            if not ctx.closure_attributes(attrs) <= ctx.closure_attributes(attrs2):
                violations += 1  # monotonicity
            if not ctx.alpha(objs2) <= ctx.alpha(objs) or not ctx.beta(attrs2) <= ctx.beta(attrs):
                violations += 1  # Galois antitonicity
            if (objs <= ctx.beta(attrs)) != (attrs <= ctx.alpha(objs)):
                violations += 1  # adjunction
    assert violations == 0


def _shuffled_contranominal(n: int, rng: random.Random) -> FormalContext:
    objects = [f"o{i:02d}" for i in range(n)]
    attributes = [f"a{j:02d}" for j in range(n)]
    rng.shuffle(objects)
    rng.shuffle(attributes)
    matrix = [[o[1:] != a[1:] for a in attributes] for o in objects]
    return FormalContext(objects, attributes, matrix)


@criterion("A10", "contranominal scale: 2^n concepts (n=4..14), canonical bytes, n=14 in < 5 s")
def test_a10_canonicity_and_scale():
    for n in range(4, 15):
        assert len(enumerate_concepts(contranominal(n))) == 2**n

    rng = random.Random(97)
    for n in (4, 6, 8):
        base = build_lattice(contranominal(n)).to_json_bytes()
        for _ in range(3):
            assert build_lattice(_shuffled_contranominal(n, rng)).to_json_bytes() == base

    started = time.perf_counter()
    lattice = build_lattice(contranominal(14))
    elapsed = time.perf_counter() - started
    assert len(lattice) == 16_384
    assert elapsed < 5.0, f"n=14 build took {elapsed:.3f}s"


@criterion("A11", "classification: the three documented cases plus all 2^7 subsets vs oracle")
def test_a11_classification(kdm, kdm_lattice):
    def attrs_of(names):
        return frozenset(kdm.attribute_index(n) for n in names)

    assert (
        classify_configuration(kdm, kdm_lattice, attrs_of({"OS:Linux", "DM:ETL"})).kind.value
        == "INVALID"
    )
    partial = classify_configuration(kdm, kdm_lattice, attrs_of({"OS:Windows", "OS:Mac"}))
    assert partial.kind.value == "PARTIAL"
    assert kdm_lattice.intent_names(partial.witness) == ("OS:Linux", "OS:Mac", "OS:Windows")
    maximal = classify_configuration(
        kdm, kdm_lattice, attrs_of({"OS:Windows", "OS:Mac", "OS:Linux"})
    )
    assert maximal.kind.value == "MAXIMAL_PARTIAL"

    oracle = TableOracle.of(kdm)
    for r in range(kdm.n_attributes + 1):
        for subset in combinations(kdm.attributes, r):
            got = classify_configuration(kdm, kdm_lattice, attrs_of(subset))
            assert got.kind.value == oracle.classify(subset), subset
