import json
import subprocess
import sys

import pytest

from centlat.catalog import catalog_group
from centlat.cli import main
from centlat.errors import InvalidGroupTable, NotAPermutation
from centlat.groupfile import load_group_file
from centlat.isomorphism import is_isomorphic
from centlat.lattice import breaking_points, build_lattice, interval_decompositions


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, doc, name="g.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return p


def test_generator_file(tmp_path):
    p = write(tmp_path, {"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]})
    g = load_group_file(p)
    assert g.order == 6 and is_isomorphic(g, catalog_group("S3"))


def test_cayley_file_roundtrip(tmp_path):
    q8 = catalog_group("Q8")
    p = write(tmp_path, {"order": 8, "table": q8.table, "names": q8.element_names})
    g = load_group_file(p)
    assert g.table == q8.table and g.element_names == q8.element_names


def test_cayley_file_bad_row(tmp_path):
    p = write(tmp_path, {"order": 3, "table": [[0, 1, 2], [1, 1, 0], [2, 0, 1]]})
    with pytest.raises(InvalidGroupTable, match=r"table\[1\]"):
        load_group_file(p)


def test_cayley_file_not_associative(tmp_path):
    # a Latin square with identity 0 that is not a group (the loop of order 5)
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    p = write(tmp_path, {"order": 5, "table": table})
    with pytest.raises(InvalidGroupTable, match=r"associativity fails at triple \(\d+, \d+, \d+\)"):
        load_group_file(p)


@pytest.mark.parametrize("doc,field", [
    ({"order": 2, "table": [[0, 1]]}, "table"),
    ({"order": 2, "table": [[0, 1], [1, 7]]}, r"table\[1\]\[1\]"),
    ({"order": 2, "table": [[0, 1], [1, 0]], "names": ["e"]}, "names"),
    ({"degree": "3", "generators": [[0, 1, 2]]}, "degree"),
    ({"degree": 3, "generators": [[0, 1, "x"]]}, r"generators\[0\]\[2\]"),
    ({"something": 1}, r"\$"),
])
def test_schema_errors_name_the_field(tmp_path, doc, field):
    with pytest.raises(InvalidGroupTable, match=field):
        load_group_file(write(tmp_path, doc))


def test_generator_file_duplicate_image(tmp_path):
    with pytest.raises(NotAPermutation, match=r"generators\[1\]"):
        load_group_file(write(tmp_path, {"degree": 3, "generators": [[1, 2, 0], [0, 0, 1]]}))


def test_file_spec_through_cli(tmp_path, capsys):
    p = write(tmp_path, {"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]})
    code, out, _ = run(capsys, "info", "--group", f"file:{p}")
    assert code == 0 and "order: 24" in out and "subgroup_count: 30" in out
    bad = write(tmp_path, {"order": 2, "table": [[0, 0], [1, 1]]}, "bad.json")
    code, _, err = run(capsys, "info", "--group", f"file:{bad}")
    assert code == 3 and "table[0]" in err


def test_lattice_text_s3(capsys):
    code, out, _ = run(capsys, "lattice", "--group", "S3", "--which", "normal-centralizers", "--format", "text")
    assert code == 0
    assert "3 nodes" in out
    bp = out.split("breaking points:")[1].split("decompositions")[0]
    assert "A3" in bp and "(0 1 2)" in bp


def test_lattice_dot_trivial(capsys):
    code, out, _ = run(capsys, "lattice", "--group", "C1", "--which", "subgroups", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and "rankdir=BT" in out
    assert out.count("[label=") == 1 and "->" not in out
    assert 'label="1:e"' in out


def test_lattice_dot_edges_go_upward(capsys):
    code, out, _ = run(capsys, "lattice", "--group", "S3", "--which", "subgroups", "--format", "dot")
    assert out.count("->") == 8
    assert "n0 -> n1;" in out and 'n5 [label="6:' in out


def test_lattice_json_q8(capsys):
    code, out, _ = run(capsys, "lattice", "--group", "Q8", "--which", "centralizers", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"tool_version", "group", "lattice", "checks"}
    assert doc["group"] == {"spec": "Q8", "order": 8, "abelian": False, "center_order": 2}
    lat = doc["lattice"]
    assert lat["size"] == 5 and lat["breaking_points"] == [] and lat["decompositions"] == []
    assert lat["chain"] == {"is_chain": False, "length": None}


@pytest.mark.parametrize("spec,which", [("C4", "subgroups"), ("S3", "normal-centralizers"),
                                        ("C6", "subgroups"), ("D4", "subgroups"), ("S4", "centralizers")])
def test_json_roundtrip(capsys, spec, which):
    _, out, _ = run(capsys, "lattice", "--group", spec, "--which", which, "--format", "json")
    lat = json.loads(out)["lattice"]
    rebuilt = build_lattice([sum(1 << m for m in n["members"]) for n in lat["nodes"]])
    assert breaking_points(rebuilt) == lat["breaking_points"]
    assert [list(p) for p in interval_decompositions(rebuilt)] == lat["decompositions"]


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "--group", "S4", "--claim", "theorem1")
    assert code == 0 and out.startswith("PASS theorem1 S4")
    code, out, _ = run(capsys, "check", "--group", "Q8", "--claim", "atoms-bound")
    assert code == 0 and "k: 3" in out
    code, _, err = run(capsys, "check", "--group", "C6", "--claim", "atoms-bound")
    assert code == 3 and "GroupIsAbelian" in err


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--group", "Q8", "--claim", "atoms-bound", "--format", "json")
    doc = json.loads(out)
    (check,) = doc["checks"]
    assert check["claim"] == "atoms-bound" and check["passed"] and check["details"]["k"] == 3
    assert check["elapsed_ms"] is None
    _, out, _ = run(capsys, "check", "--group", "Q8", "--claim", "theorem1", "--format", "json", "--timings")
    assert json.loads(out)["checks"][0]["elapsed_ms"] >= 0


def test_usage_and_input_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check", "--group", "S3", "--claim", "nonsense"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["search", "capability"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["check", "--group", "S3", "--claim", "theorem1", "--format", "dot"])
    assert info.value.code == 2
    capsys.readouterr()
    assert run(capsys, "lattice", "--group", "Q7")[0] == 3
    assert run(capsys, "lattice", "--group", "C2 x")[0] == 3


def test_cap_exit_code(capsys):
    assert run(capsys, "lattice", "--group", "S4", "--which", "subgroups", "--cap-subgroup-order", "10")[0] == 4
    assert run(capsys, "info", "--group", "S5", "--cap-order", "100")[0] == 4


def test_search_capability(capsys):
    code, out, _ = run(capsys, "search", "capability", "--target", "D4", "--max-order", "32")
    assert code == 0 and "D8" in out
    code, out, _ = run(capsys, "search", "capability", "--target", "Q8", "--max-order", "32")
    assert code == 0 and "hits: 0" in out and "not a proof" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "check", "--group", "S3", "--claim", "corollary2", "--format", "json",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["checks"][0]["passed"]


def test_outputs_are_byte_identical(capsys):
    for argv in (["lattice", "--group", "S4", "--which", "subgroups", "--format", "dot"],
                 ["lattice", "--group", "D6", "--which", "centralizers", "--format", "json"],
                 ["search", "open-problem", "--max-order", "16"]):
        first = run(capsys, *argv)[1]
        assert run(capsys, *argv)[1] == first


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "centlat.cli", "check", "--group", "S3", "--claim", "theorem1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "PASS" in res.stdout
