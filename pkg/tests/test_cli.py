import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cli_schema import RESULT_SCHEMA, parse_rendered_terms
from polya import (
    ColorSet,
    count_by_composition,
    count_distinct,
    cycle_index,
    enumerate_orbits,
    parse_group_spec,
    pattern_inventory,
)
from polya.cli import EXIT_LIMIT, EXIT_OK, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    assert code == EXIT_OK, err
    doc = json.loads(out)
    jsonschema.validate(doc, RESULT_SCHEMA)
    return doc, out


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--group", "cyclic:4", "--colors", "r,w,b"], "24\n"),
        (["count", "--group", "dihedral:4", "--colors", "r,w,b"], "21\n"),
        (["count", "--group", "trivial:4", "--num-colors", "3"], "81\n"),
        (["coeff", "--group", "cyclic:4", "--colors", "r,w,b", "--composition", "r=2,w=1,b=1"], "3\n"),
    ],
)
def test_golden_counts(argv, expected):
    code, out, err = call(*argv)
    assert (code, out, err) == (EXIT_OK, expected, "")


def test_golden_cycle_index():
    code, out, _ = call("cycle-index", "--group", "dihedral:4")
    assert code == EXIT_OK
    golden = "(1/8)·x1^4 + (3/8)·x2^2 + (1/4)·x1^2·x2 + (1/4)·x4"
    assert parse_rendered_terms(out.strip()) == parse_rendered_terms(golden)
    assert out == "(1/8)·x1^4 + (1/4)·x1^2·x2 + (3/8)·x2^2 + (1/4)·x4\n"


def test_inventory_text():
    code, out, _ = call("inventory", "--group", "cyclic:4", "--colors", "r,w,b")
    assert code == EXIT_OK
    assert out.startswith("r^4 + r^3·w + r^3·b + 2·r^2·w^2 + 3·r^2·w·b")
    assert out.count(" + ") == 14


def test_group_listing():
    code, out, _ = call("group", "--group", "gens:(1 2 3 4);(1 4)(2 3)@4")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 8 and "(1)(2)(3)(4)" in lines and "(1 3)(2)(4)" in lines


def test_orbits_text():
    code, out, _ = call("orbits", "--group", "cyclic:4", "--colors", "r,w")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[1] == "rrrw\t4\tr=3,w=1"


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--group", "cyclic:4", "--colors", "r,w,b"],
        ["count", "--group", "dihedral:5", "--num-colors", "2"],
        ["coeff", "--group", "cyclic:4", "--colors", "r,w,b", "--composition", "r=2,w=1,b=1"],
        ["cycle-index", "--group", "dihedral:4"],
        ["inventory", "--group", "dihedral:4", "--colors", "red,white,blue"],
        ["orbits", "--group", "cyclic:4", "--num-colors", "2"],
        ["group", "--group", "cyclic:3"],
    ],
)
def test_json_schema_and_round_trip(argv):
    doc, text = call_json(*argv)
    assert json.dumps(doc, indent=2, ensure_ascii=False) + "\n" == text
    assert doc["command"] == argv[0]
    assert call(*argv, "--format", "json")[1] == text


def test_json_matches_library():
    spec = "dihedral:4"
    g = parse_group_spec(spec)
    doc, _ = call_json("cycle-index", "--group", spec)
    assert doc["group"] == {"spec": spec, "order": 8, "degree": 4}
    from polya import Polynomial

    assert Polynomial.from_json(doc["result"]["polynomial"]) == cycle_index(g)

    colors = ColorSet.of("r,w,b")
    doc, _ = call_json("inventory", "--group", spec, "--colors", "r,w,b")
    assert Polynomial.from_json(doc["result"]["polynomial"]) == pattern_inventory(g, colors)

    doc, _ = call_json("count", "--group", spec, "--num-colors", "4")
    assert doc["result"]["count"] == count_distinct(g, 4)

    doc, _ = call_json("coeff", "--group", spec, "--colors", "r,w,b", "--composition", "r=2,w=2")
    assert doc["result"]["count"] == count_by_composition(g, colors, {"r": 2, "w": 2})

    doc, _ = call_json("orbits", "--group", spec, "--num-colors", "2")
    orbits = enumerate_orbits(g, 2)
    assert [o["size"] for o in doc["result"]["orbits"]] == [o.size for o in orbits]
    assert doc["result"]["orbits"][0] == {"representative": "c1-c1-c1-c1", "size": 1, "composition": {"c1": 4, "c2": 0}}


@pytest.mark.parametrize(
    "argv, code, fragment",
    [
        (["count", "--group", "cyclic:x", "--num-colors", "3"], EXIT_USAGE, "cyclic:x"),
        (["count", "--group", "gens:(1 5)@4", "--num-colors", "3"], EXIT_USAGE, "5"),
        (["count", "--group", "cyclic:4"], EXIT_USAGE, "--colors"),
        (["coeff", "--group", "cyclic:4", "--colors", "r,w,b"], EXIT_USAGE, "--composition"),
        (["coeff", "--group", "cyclic:4", "--colors", "r,w,b", "--composition", "r=2,g=2"], EXIT_USAGE, "'g'"),
        (["coeff", "--group", "cyclic:4", "--colors", "r,w,b", "--composition", "r=2,w"], EXIT_USAGE, "'w'"),
        (["coeff", "--group", "cyclic:4", "--colors", "r,w,b", "--composition", "r=3"], EXIT_USAGE, "degree"),
        (["count", "--group", "cyclic:4", "--colors", "r,r"], EXIT_USAGE, "duplicate"),
        (["inventory", "--group", "cyclic:4", "--num-colors", "3"], EXIT_USAGE, "--colors"),
        (["frobnicate", "--group", "cyclic:4"], EXIT_USAGE, "frobnicate"),
        (["count", "--group", "cyclic:4", "--num-colors", "0"], EXIT_USAGE, "0"),
        (["orbits", "--group", "cyclic:6", "--num-colors", "4", "--limit", "100"], EXIT_LIMIT, "limit"),
        (["count", "--group", "symmetric:6", "--num-colors", "2", "--max-order", "100"], EXIT_LIMIT, "max_order"),
        (["count", "--group", "symmetric:9", "--num-colors", "2"], EXIT_LIMIT, "cap"),
    ],
)
def test_errors(argv, code, fragment):
    got, out, err = call(*argv)
    assert got == code
    assert out == ""
    assert fragment in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polya", "count", "--group", "dihedral:4", "--colors", "r,w,b"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert (proc.returncode, proc.stdout) == (0, "21\n")
