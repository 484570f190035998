"""CLI surface: schemas, determinism, exit codes."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from octoforms.canonical import spin9_form
from octoforms.cli import main
from octoforms.exterior import Multivector
from octoforms.serialize import (
    multivector_from_json,
    multivector_to_csv,
    multivector_to_json,
    rational_str,
)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_rational_strings():
    assert rational_str(Fraction(-3, 4)) == "-3/4"
    assert rational_str(Fraction(8, 4)) == "2"
    assert rational_str(5) == "5"


def test_multivector_json_roundtrip():
    mv = Multivector.blade(16, [1, 2, 3, 4], 2) + Multivector.blade(
        16, [2, 3, 5, 9], Fraction(-7, 3)
    )
    obj = multivector_to_json(mv)
    assert obj["n"] == 16 and obj["grade"] == 4
    assert multivector_from_json(obj) == mv
    # blades sorted lexicographically
    assert obj["terms"][0]["blade"] == [1, 2, 3, 4]


def test_csv_format():
    mv = Multivector.blade(8, [1, 3], 4)
    csv = multivector_to_csv(mv)
    assert csv == "blade;coeff\n1-3;4\n"


def test_form_csv_has_702_rows():
    code, out, _ = run_cli("form", "--which", "spin9", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "blade;coeff"
    assert len(lines) == 703


def test_form_json_matches_library():
    code, out, _ = run_cli("form", "--which", "spin9", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert multivector_from_json(obj) == spin9_form()


def test_cli_byte_identical_runs():
    a = run_cli("charpoly", "--json")
    b = run_cli("charpoly", "--json")
    assert a == b
    a = run_cli("fields", "--m", "16", "--json", "--verify")
    b = run_cli("fields", "--m", "16", "--json", "--verify")
    assert a == b and a[0] == 0


def test_charpoly_json_shape():
    code, out, _ = run_cli("charpoly", "--json")
    rows = json.loads(out)["coefficients"]
    zeros = [r["tau"] for r in rows if r["zero"]]
    assert zeros == [1, 2, 3, 5, 6, 7, 9]
    assert [r["monomials"] for r in rows if not r["zero"]] == [702, 1]


def test_fields_json_triplets():
    code, out, _ = run_cli("fields", "--m", "16", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["sigma"] == 8 and obj["count"] == 8
    first = obj["fields"][0]
    assert all(len(t) == 3 and t[2] in (-1, 1) for t in first)
    assert len(first) == 16


def test_fields_128_note_surfaces():
    code, out, _ = run_cli("fields", "--m", "128", "--json")
    obj = json.loads(out)
    assert obj["notes"] and "L_e" in obj["notes"][0]


def test_hopf_json_and_exit_codes():
    point = ["3/5", "0", "0", "0", "0", "0", "0", "0", "4/5", "0", "0", "0", "0", "0", "0", "0"]
    code, out, _ = run_cli("hopf", "--json", "--point", *point)
    assert code == 0
    obj = json.loads(out)
    assert obj["lambda"][0] == "24/25"
    assert obj["lambda"][8] == "-7/25"
    assert obj["lambda"] == obj["inner_products"]
    # off-sphere point: invariant failure (exit 1)
    bad = ["1"] + ["0"] * 14 + ["1"]
    code, _, err = run_cli("hopf", "--point", *bad)
    assert code == 1 and "unit sphere" in err
    # malformed point: usage error (exit 2)
    code, _, err = run_cli("hopf", "--point", "1", "2")
    assert code == 2


def test_hopf_numerator_denominator_form():
    tokens = []
    for val in [Fraction(3, 5)] + [Fraction(0)] * 7 + [Fraction(4, 5)] + [Fraction(0)] * 7:
        tokens.extend([str(val.numerator), str(val.denominator)])
    code, out, _ = run_cli("hopf", "--json", "--point", *tokens)
    assert code == 0
    assert json.loads(out)["lambda"][0] == "24/25"


def test_clifford_subcommand():
    code, out, _ = run_cli("clifford", "--kind", "spin9", "--extend", "1", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["n"] == 32 and obj["m"] == 9 and obj["verified"]
    assert obj["matrices"][0][0][16] == "1"  # Q_0 = antidiag(Id, Id)


def test_clifford_structure_subcommand():
    code, out, _ = run_cli("clifford-structure", "--model", "eiii", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["model"]["ambient_dim"] == 32 and obj["model"]["lambda2_count"] == 45


def test_berger_subcommand_small():
    code, out, _ = run_cli("berger", "--samples", "2000", "--seed", "1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["samples"] == 2000 and float(obj["cosine_similarity"]) > 0.9


def test_unknown_command_exits_2():
    code, _, _ = run_cli("nope")
    assert code == 2


def test_unknown_flag_exits_2():
    code, _, _ = run_cli("form", "--which", "spin9", "--bogus")
    assert code == 2


def test_pontrjagin_subcommand():
    code, out, _ = run_cli("pontrjagin", "--json")
    obj = json.loads(out)
    assert code == 0
    rows = {r["class"]: r["coefficient"] for r in obj["manifold_classes"]}
    assert rows["p2(M)"] == "-45/2" and rows["p4(M)"] == "-13/256"
    assert rows["p1(M)"] == "0" and rows["p3(M)"] == "0"
