"""Acceptance criteria, one test each. A summary line per criterion is
printed at the end of the pytest run."""

import json
import time

import pytest

from centlat.catalog import catalog_group
from centlat.cli import main
from centlat.isomorphism import is_isomorphic, verify_isomorphism
from centlat.lab import DISCLAIMER
from centlat.lattice import build_lattice
from centlat.subgroups import (all_subgroups, centralizer, centralizer_lattice_bits, generated_subgroup,
                               is_subgroup, subgroup_bits)

from oracles import naive_subgroups

SUITE_TIME_LIMIT = 300.0


@pytest.fixture(scope="module")
def suite_json(tmp_path_factory):
    out = tmp_path_factory.mktemp("suite") / "jobs1.json"
    start = time.perf_counter()
    code = main(["suite", "--format", "json", "--jobs", "1", "--out", str(out)])
    elapsed = time.perf_counter() - start
    return code, json.loads(out.read_text()), out.read_bytes(), elapsed


def _failures(doc, claim):
    bad = []
    for g in doc["groups"]:
        for c in g["checks"]:
            if c["claim"] == claim and not c["passed"]:
                bad.append((g["group"]["spec"], c))
    return bad


def _ran(doc, claim):
    return sum(1 for g in doc["groups"] for c in g["checks"] if c["claim"] == claim and not c["skipped"])


def test_01_theorem1_suite(suite_json, criterion):
    code, doc, _, elapsed = suite_json
    bad = _failures(doc, "theorem1")
    n = len(doc["groups"])
    ok = code == 0 and not bad and _ran(doc, "theorem1") == n and n > 150 and elapsed < SUITE_TIME_LIMIT
    criterion(1, "no two-interval decomposition of the centralizer lattice over the default catalog", ok,
              f"{n} groups, {len(bad)} failures, suite {elapsed:.1f} s < {SUITE_TIME_LIMIT:.0f} s")


def test_02_corollary2_suite(suite_json, criterion):
    _, doc, _, _ = suite_json
    bad = _failures(doc, "corollary2")
    ok = not bad and _ran(doc, "corollary2") == len(doc["groups"])
    criterion(2, "no breaking point in any centralizer lattice", ok, f"{len(bad)} failures")


def test_03_corollary3_suite(suite_json, default_catalog, criterion):
    _, doc, _, _ = suite_json
    bad = _failures(doc, "corollary3")
    direct = []
    for e in default_catalog:
        lat = build_lattice(centralizer_lattice_bits(e.group))
        is_chain = all(lat.down[i] | lat.up[i] == lat.all_nodes for i in range(len(lat)))
        if is_chain != e.group.is_abelian or (not e.group.is_abelian and len(lat) == 2):
            direct.append(e.spec)
    ok = not bad and not direct and _ran(doc, "corollary3") == len(doc["groups"])
    criterion(3, "centralizer lattice is a chain iff abelian, never exactly two nodes", ok,
              f"{len(bad)} report failures, {len(direct)} direct failures")


def test_04_open_problem_witnesses(capsys, criterion):
    s3, s4 = catalog_group("S3"), catalog_group("S4")
    a3 = sorted(s3.element_names[x] for x, p in enumerate(s3.permutations) if p in [(0, 1, 2), (1, 2, 0), (2, 0, 1)])
    v4 = sorted(s4.element_names[x] for x, p in enumerate(s4.permutations)
                if p in [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)])
    assert main(["search", "open-problem", "--max-order", "24", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    by_group = {c["group"]: c for c in doc["checks"]}
    s3_bps = [sorted(w["elements"]) for w in by_group.get("S3", {}).get("witnesses", [])]
    s4_bps = [sorted(w["elements"]) for w in by_group.get("S4", {}).get("witnesses", [])]
    assert main(["search", "open-problem", "--max-order", "24"]) == 0
    text = capsys.readouterr().out
    s3_line = [line for line in text.splitlines() if "A3" in line]
    ok = s3_bps == [a3] and s4_bps == [v4] and bool(s3_line)
    criterion(4, "open-problem search finds S3 with breaking point A3 and S4 with V4", ok,
              f"S3 -> {s3_bps}, S4 -> {s4_bps}")


def test_05_capability_at_desk_scale(capsys, criterion):
    catalog = ["--max-order", "128", "--format", "json"]
    results = {}
    for target in ("Q8", "Q16", "D4"):
        code = main(["search", "capability", "--target", target, *catalog])
        (report,) = json.loads(capsys.readouterr().out)["checks"]
        results[target] = (code, report)
    q_ok = all(results[t][0] == 0 and results[t][1]["witnesses"] == [] and results[t][1]["passed"]
               for t in ("Q8", "Q16"))
    d4_hits = [w["group"] for w in results["D4"][1]["witnesses"]]
    disclaimers = all(r["details"]["disclaimer"] == DISCLAIMER for _, r in results.values())
    searched = results["Q8"][1]["details"]["max_order"]
    ok = q_ok and "D8" in d4_hits and disclaimers and searched == 128
    criterion(5, "no central quotient is Q8 or Q16 up to order 128; D4 control hits D8", ok,
              f"Q8/Q16 hits 0, D4 hits {len(d4_hits)} incl. D8={'D8' in d4_hits}")


def test_06_oracle_equivalence(default_catalog, criterion):
    mismatches = []
    checked = 0
    for e in default_catalog:
        g = e.group
        if g.order > 32:
            continue
        checked += 1
        fast = set(centralizer_lattice_bits(g))
        via_subgroups = {centralizer(g, h).bits for h in subgroup_bits(g)}
        if fast != via_subgroups:
            mismatches.append(e.spec)
    criterion(6, "meet-closure centralizer lattice equals centralizers of all subgroups (order <= 32)",
              not mismatches and checked > 60, f"{checked} groups, {len(mismatches)} mismatches")


def test_07_proof_mechanics(suite_json, default_catalog, criterion):
    _, doc, _, _ = suite_json
    n = len(doc["groups"])
    nonabelian = sum(1 for g in doc["groups"] if not g["group"]["abelian"])
    closure_bad = _failures(doc, "closure")
    union_bad = _failures(doc, "union-argument")
    atoms_bad = _failures(doc, "atoms-bound")
    ran = (_ran(doc, "closure") == n and _ran(doc, "union-argument") == n
           and _ran(doc, "atoms-bound") == nonabelian)
    atoms_k = [c["details"]["k"] for g in doc["groups"] for c in g["checks"] if c["claim"] == "atoms-bound"]
    ok = ran and not (closure_bad or union_bad or atoms_bad) and min(atoms_k) >= 3
    criterion(7, "double centralizer, intersection closure, two-subgroup union, k >= 3 atoms meeting in Z(G)", ok,
              f"{n} groups, {nonabelian} nonabelian, min k = {min(atoms_k)}")


def test_08_known_counts(criterion):
    expected = {"S3": 6, "Q8": 6, "D4": 10, "S4": 30}
    counts = {s: len(all_subgroups(catalog_group(s))) for s in expected}
    oracle_ok = all(
        {frozenset(h) for h in all_subgroups(catalog_group(s))} ==
        set(naive_subgroups(catalog_group(s).table, catalog_group(s).identity))
        for s in ("S3", "Q8", "D4"))
    s4 = catalog_group("S4")
    subs = {h.bits for h in all_subgroups(s4)}
    consistent = (all(is_subgroup(s4, b) for b in subs)
                  and all(a & b in subs and generated_subgroup(s4, a | b).bits in subs for a in subs for b in subs))
    ok = counts == expected and oracle_ok and consistent
    criterion(8, "|L(S3)|=6, |L(Q8)|=6, |L(D4)|=10, |L(S4)|=30", ok, f"{counts}")


def test_09_isomorphism_sanity(default_catalog, criterion):
    answers = (
        is_isomorphic(catalog_group("D3"), catalog_group("S3")),
        not is_isomorphic(catalog_group("Q8"), catalog_group("D4")),
        not is_isomorphic(catalog_group("C4"), catalog_group("C2 x C2")),
    )
    pairs = [("D3", "S3"), ("C2 x C3", "C6"), ("C2 x S3", "D6"), ("C2 x C2 x C2", "E2^3")]
    pairs += [(e.spec, e.spec) for e in default_catalog]
    witnesses_ok = True
    for a, b in pairs:
        g, h = catalog_group(a), catalog_group(b)
        ok, phi = is_isomorphic(g, h, witness=True)
        witnesses_ok &= ok and verify_isomorphism(g, h, phi)
    criterion(9, "D3~S3, Q8!~D4, C4!~C2xC2, every witness a verified isomorphism", all(answers) and witnesses_ok,
              f"{len(pairs)} witnesses verified")


def test_10_determinism(suite_json, tmp_path, criterion):
    _, _, jobs1, _ = suite_json
    out = tmp_path / "jobs8.json"
    code = main(["suite", "--format", "json", "--jobs", "8", "--out", str(out)])
    criterion(10, "suite JSON byte-identical for --jobs 1 and --jobs 8", code == 0 and out.read_bytes() == jobs1,
              f"{len(jobs1)} bytes")
