import json

import pytest

from hochster import scx
from hochster.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_betti_pentagon(capsys):
    code, data = run_json(capsys, "betti", "pentagon")
    assert code == 0
    assert data["betti"] == [1, 0, 0, 5, 5, 0, 0, 1]
    assert data["torsion"] == {}


def test_bigraded_square(capsys):
    _, data = run_json(capsys, "bigraded", "square")
    rows = {(tuple(r["J"]), r["d"]): r["rank"] for r in data["bigraded"]}
    assert rows == {((1, 3), 0): 1, ((2, 4), 0): 1, ((1, 2, 3, 4), 1): 1}


def test_info_flag9(capsys):
    _, data = run_json(capsys, "info", "flag9")
    assert data["flag"] is True and data["sphere"] is False
    assert data["f_vector"] == [9, 20, 11]


def test_info_report(capsys):
    _, data = run_json(capsys, "info", "zoo:O6", "--report")
    assert data["report"]["checks"]["gorenstein"] is True


@pytest.mark.parametrize("which,name,code", [
    ("gorenstein", "O6", 0),
    ("gorenstein", "flag9", 1),
    ("flag", "O6", 0),
    ("flag", "T4", 1),
    ("pairing", "I12", 0),
    ("generation", "flag9", 1),
    ("generation", "O6", 0),
])
def test_check_exit_codes(capsys, which, name, code):
    got, data = run_json(capsys, "check", which, name)
    assert got == code
    assert data["verdict"] is (code == 0)


def test_check_lbc(capsys):
    code, data = run_json(capsys, "check", "lbc", "I12")
    assert code == 0
    assert data["tight"] is True and data["edges"] == data["bound"] == 30


def test_generation_failure_lists_partitions(capsys):
    _, data = run_json(capsys, "check", "generation", "flag9")
    assert data["failing"] == list(range(1, 10))
    assert data["witness_partitions"] == []


def test_op_writes_file(tmp_path, capsys):
    out = tmp_path / "s.scx"
    code, _ = run(capsys, "op", "suspend", "square", "-o", str(out))
    assert code == 0
    K = scx.load(str(out))
    assert K.m == 6 and len(K.facets) == 8
    code, data = run_json(capsys, "betti", str(out))
    assert code == 0 and data["m"] == 6


def test_op_connect_sum_and_stellar(capsys):
    code, out = run(capsys, "op", "connect-sum", "O6", "O6", "--facets", "1,2,3", "1,2,3")
    assert code == 0 and out.startswith("m 9")
    code, out = run(capsys, "op", "stellar", "O6", "--simplex", "1,2")
    assert code == 0 and out.startswith("m 7")


def test_verify_thm4(capsys):
    code, data = run_json(capsys, "verify", "thm4", "T4", "T4")
    assert code == 0 and data["result"] == "PASS"
    assert data["direct"] == data["formula"]


def test_verify_thm5(capsys):
    code, data = run_json(capsys, "verify", "thm5", "join(T4,T4)", "--simplex", "1,5")
    assert code == 0 and data["result"] == "PASS"


def test_decompose_and_compare(capsys):
    _, data = run_json(capsys, "decompose", "B5")
    assert data["count"] == 2 and all(f["tetrahedron"] for f in data["factors"])
    _, data = run_json(capsys, "decompose", "I12")
    assert data["prime"] is True
    code, data = run_json(capsys, "compare", "O6", "O6")
    assert code == 0 and data["match"] is True


def test_jobs_do_not_change_output(capsys):
    _, one = run(capsys, "ring", "O6", "--json", "--jobs", "1")
    _, two = run(capsys, "ring", "O6", "--json", "--jobs", "2")
    assert one == two


def test_input_errors(capsys, tmp_path):
    assert main(["betti", str(tmp_path / "missing.scx")]) == 3
    assert main(["betti", "zoo:nosuch"]) == 3
    bad = tmp_path / "bad.scx"
    bad.write_text("m 3\n1 2 9\n")
    assert main(["betti", str(bad)]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["betti"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_text_output(capsys):
    code, out = run(capsys, "betti", "pentagon")
    assert code == 0 and "5" in out
    code, out = run(capsys, "ring", "square")
    assert code == 0 and out.strip()
