import io
import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rank1stems import cli
from rank1stems.cli import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    JSON_SCHEMA,
    RepSyntaxError,
    answer_from_json,
    answer_to_json,
    parse_degrees,
    parse_expression,
    parse_rep,
    run,
)
from rank1stems.groups import GroupId, RepError, VirtualRep, W, delta, render_rep, sigma
from rank1stems.stems import stems

from .conftest import reps


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def table_of(text):
    rows = {}
    for line in text.splitlines():
        parts = line.split()
        if len(parts) == 2 and parts[0].lstrip("-").isdigit():
            rows[int(parts[0])] = parts[1]
    return rows


# -- parsing ------------------------------------------------------------------------


def test_parse_o2_expression():
    u = parse_rep("2*sigma(1) - sigma(3) + delta", "o2")
    assert u.mults == {sigma(1): 2, sigma(3): -1, delta: 1}


def test_parse_so3():
    assert parse_rep("W(5)", "so3").mults == {W(5): 1}


def test_parse_rejects_foreign_irreducible():
    with pytest.raises(RepError, match="not an irreducible"):
        parse_rep("z(2)", "so3")


@pytest.mark.parametrize("text", ["z(0)", "W(1)", "1", "trivial", "sigma(2) + 3"])
def test_parse_rejects_trivial(text):
    group = "so3" if text.startswith("W") else "o2" if "sigma" in text else "so2"
    with pytest.raises(RepError):
        parse_rep(text, group)


@pytest.mark.parametrize(
    "text, position",
    [("sigma(1) +", 10), ("sigma(1) $ z(2)", 9), ("foo(1)", 0), ("2*", 2), ("W(4)", 0), ("sigma 1", 6)],
)
def test_syntax_errors_report_position(text, position):
    with pytest.raises(RepSyntaxError) as info:
        parse_expression(text)
    assert info.value.position == position


def test_whitespace_and_zero():
    assert parse_rep("  - z( 1 )+z(2)", "so2") == parse_rep("-z(1)+z(2)", "so2")
    assert parse_rep("0", "o2") == VirtualRep.zero(GroupId.O2)


@given(st.sampled_from(list(GroupId)).flatmap(reps))
def test_render_parse_round_trip(u):
    assert parse_rep(render_rep(u), u.group) == u


def test_parse_degrees():
    assert parse_degrees("-3..3") == (-3, 3)
    for bad in ("3..-3", "1:2", ""):
        with pytest.raises(Exception):
            parse_degrees(bad)


# -- running ------------------------------------------------------------------------


def test_run_so2_minus_z1():
    code, out, _ = invoke("--group", "so2", "--rep", "-z(1)", "--degrees", "-3..3")
    assert code == EXIT_OK
    assert table_of(out) == {-3: "0", -2: "0", -1: "0", 0: "0", 1: "inf", 2: "0", 3: "inf"}


def test_run_o2_json():
    code, out, _ = invoke("--group", "o2", "--rep", "delta - sigma(1)", "--degrees", "0..4", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    dims = {row["degree"]: row["dim"] for row in doc["table"]}
    # degree 0 carries the dihedral cluster; the cyclic block alone is 0 there
    assert dims == {0: "inf", 1: 0, 2: "inf", 3: 0, 4: 0}
    cyclic = answer_from_json(doc).block("cyclic")
    assert [cyclic.query(k) for k in (0, 1, 3, 4)] == [0, 0, 0, 0]


def test_run_so3_blocks():
    code, out, _ = invoke("--group", "so3", "--rep", "W(5)", "--degrees", "0..2", "--blocks")
    assert code == EXIT_OK
    section = out.split("isolated:KleinD4:")[1].splitlines()
    assert section[1].strip() == "(empty)"
    for tag in ("SO3", "A5", "S4", "A4"):
        block = out.split(f"isolated:{tag}:")[1].splitlines()[1]
        assert "spot  degree    0" in block


def test_run_notes_for_sign_twisted_stalk():
    # sigma(1) - sigma(2): at t = 1 the fixed sphere has dimension 0 and an odd sign
    code, out, _ = invoke("--group", "o2", "--rep", "sigma(1) - sigma(2)")
    assert code == EXIT_OK
    assert "note: D_2" in out


def test_shift_flag():
    _, plain, _ = invoke("--group", "o2", "--rep", "2*delta - sigma(1)", "--degrees", "-10..10", "--format", "json")
    _, moved, _ = invoke(
        "--group", "o2", "--rep", "2*delta - sigma(1)", "--degrees", "-10..10", "--format", "json", "--shift", "3"
    )
    a = {r["degree"]: r["dim"] for r in json.loads(plain)["table"]}
    b = {r["degree"]: r["dim"] for r in json.loads(moved)["table"]}
    for n in range(-7, 11):
        assert b[n] == a[n - 3]


@pytest.mark.parametrize(
    "argv",
    [
        ("--group", "so3", "--rep", "z(2)"),
        ("--group", "o2", "--rep", "sigma(1) +"),
        ("--group", "xx", "--rep", "delta"),
        ("--group", "o2", "--rep", "delta", "--degrees", "4..1"),
        ("--rep", "delta",),
    ],
)
def test_usage_errors_exit_1(argv):
    code, _, _ = invoke(*argv)
    assert code == EXIT_USAGE


@pytest.mark.parametrize(
    "group, rep",
    [("so2", "-z(1) - z(2)"), ("o2", "2*delta - sigma(1)"), ("pin2", "delta - h(1)"), ("so3", "W(5)"), ("su2", "V(2)")],
)
def test_check_oracle_passes(group, rep):
    code, _, err = invoke("--group", group, "--rep", rep, "--degrees", "-8..12", "--check-oracle")
    assert code == EXIT_OK, err


def test_check_oracle_fault_injection(monkeypatch):
    real = cli.stems

    def broken(u):
        ans = real(u)
        return ans.shift(1)

    monkeypatch.setattr(cli, "stems", broken)
    code, _, err = invoke("--group", "o2", "--rep", "delta - sigma(1)", "--check-oracle")
    assert code == EXIT_FAILURE
    assert "oracle mismatch" in err


def test_json_round_trip():
    ans = stems(parse_rep("sigma(2) - 2*sigma(1)", "o2"))
    doc = answer_to_json(ans, (-5, 5))
    jsonschema.validate(doc, JSON_SCHEMA)
    assert answer_from_json(json.loads(json.dumps(doc))) == ans


def test_console_script_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "rank1stems.cli", "--group", "so2", "--rep", "0", "--degrees", "0..1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert table_of(proc.stdout) == {0: "1", 1: "inf"}
