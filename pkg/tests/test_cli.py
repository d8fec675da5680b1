"""End-to-end CLI runs: JSON in, JSON out, and the exit code contract."""

import json

import pytest

from lienil.cli import main

GRING = {"type": "grassmann", "g": 2, "root_order": 1}


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_transitive_check_pass_and_fail(tmp_path, capsys):
    good = write(tmp_path, "good.json", {
        "ring": GRING,
        "matrix": {"n": 2, "entries": [["1", "-1"], ["-1", "1"]]}})
    code, doc = run(capsys, ["transitive", "check", good])
    assert code == 0 and doc == {"transitive": True}
    bad = write(tmp_path, "bad.json", {
        "ring": GRING,
        "matrix": {"n": 2, "entries": [["1", "1"], ["0", "1"]]}})
    code, doc = run(capsys, ["transitive", "check", bad])
    assert code == 1 and doc == {"transitive": False}


def test_transitive_build_factor_round_trip(tmp_path, capsys):
    src = write(tmp_path, "units.json", {"ring": GRING, "units": ["1", "-2"]})
    code, doc = run(capsys, ["transitive", "build", src])
    assert code == 0
    back = write(tmp_path, "mat.json", {"ring": GRING, "matrix": doc["matrix"]})
    code, doc2 = run(capsys, ["transitive", "factor", back])
    assert code == 0
    assert [c["coeffs"] for c in doc2["units"]] == [{"": "1"}, {"": "-2"}]


def test_blowup(tmp_path, capsys):
    src = write(tmp_path, "b.json", {
        "ring": GRING,
        "matrix": {"n": 2, "entries": [["1", "-1"], ["-1", "1"]]},
        "cuts": [1, 3]})
    code, doc = run(capsys, ["transitive", "blowup", src])
    assert code == 0 and doc["matrix"]["n"] == 3


def test_sdet_and_charpoly(tmp_path, capsys):
    src = write(tmp_path, "m.json", {
        "ring": GRING,
        "matrix": {"n": 2, "entries": [
            ["1", {"coeffs": {"1": "1"}}],
            [{"coeffs": {"2": "1"}}, "2"]]}})
    code, doc = run(capsys, ["sdet", src])
    assert code == 0
    assert doc["sdet"]["coeffs"] == {"": "4"}
    code, doc = run(capsys, ["charpoly", src, "--k", "1"])
    assert code == 0 and len(doc["coeffs"]) == 3
    code, doc = run(capsys, ["rdet", src, "--k", "1"])
    assert code == 0 and doc["rdet"]["coeffs"] == {"": "4"}
    code, doc = run(capsys, ["ldet", src, "--k", "1"])
    assert code == 0 and doc["ldet"]["coeffs"] == {"": "4"}


def test_ch_check_exit_codes(tmp_path, capsys):
    src = write(tmp_path, "m.json", {
        "ring": GRING,
        "matrix": {"n": 2, "entries": [
            ["1", {"coeffs": {"1": "1"}}],
            [{"coeffs": {"2": "1"}}, "2"]]}})
    code, doc = run(capsys, ["ch-check", src, "--k", "2"])
    assert code == 0 and doc["zero"] is True
    # k = 1 fails over a noncommutative ring
    code, doc = run(capsys, ["ch-check", src, "--k", "1"])
    assert code == 1 and doc["zero"] is False


def test_membership_sample_conditions(tmp_path, capsys):
    spec = {"ring": GRING, "delta": "epsilon",
            "T": {"n": 2, "entries": [["1", "-1"], ["-1", "1"]]}}
    src = write(tmp_path, "spec.json", spec)
    code, doc = run(capsys, ["sample", src, "--seed", "5"])
    assert code == 0
    memb = write(tmp_path, "memb.json", {**spec, "matrix": doc["matrix"]})
    code, doc = run(capsys, ["membership", memb])
    assert code == 0 and doc["member"] is True
    non = write(tmp_path, "non.json", {**spec, "matrix": {
        "n": 2, "entries": [["1", "0"], ["0", "1"]]}})
    code, doc = run(capsys, ["membership", non])
    # the identity is even everywhere: diagonal OK but it is a member
    assert doc["member"] is True and code == 0
    odd_diag = write(tmp_path, "odd.json", {**spec, "matrix": {
        "n": 2, "entries": [[{"coeffs": {"1": "1"}}, "0"], ["0", "1"]]}})
    code, doc = run(capsys, ["membership", odd_diag])
    assert code == 1 and doc["member"] is False
    code, doc = run(capsys, ["conditions", src])
    assert code == 0 and doc["t_power_n_is_one"] is True


def test_embed_and_integrality(tmp_path, capsys):
    src = write(tmp_path, "e.json", {
        "ring": GRING, "delta": "epsilon",
        "element": {"coeffs": {"1": "1"}}})
    code, doc = run(capsys, ["embed", src, "--n", "2"])
    assert code == 0
    assert doc["matrix"]["entries"][0][1]["coeffs"] == {"1": "1"}
    assert doc["matrix"]["entries"][0][0]["coeffs"] == {}
    code, doc = run(capsys, ["integrality", src, "--n", "2", "--k", "2"])
    assert code == 0 and doc["right_holds"] and doc["left_holds"]


def test_example_command(capsys):
    code, doc = run(capsys, ["example", "5.2", "--n", "2", "--g", "2"])
    assert code == 0
    assert doc["spec"]["n"] == 2
    assert len(doc["shape"]) == 2 and doc["shape"][0][0]["dim"] == 2


def test_invalid_input_exit_code(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["sdet", missing]) == 2
    capsys.readouterr()
    bad = write(tmp_path, "bad.json", {"ring": {"type": "mystery"}})
    assert main(["sdet", bad]) == 2
    capsys.readouterr()


def test_cost_cap_exit_code(tmp_path, capsys):
    n = 6
    ident = [["1" if i == j else "0" for j in range(n)] for i in range(n)]
    src = write(tmp_path, "big.json", {
        "ring": GRING, "matrix": {"n": n, "entries": ident}})
    assert main(["sdet", src]) == 3
    capsys.readouterr()
