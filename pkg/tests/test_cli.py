import json

import pytest

from towerspread.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_info(capsys):
    code, out = run(capsys, "info", "--e", "1", "--m", "3")
    assert code == 0
    d = json.loads(out)
    assert d["modulus_hex"] == "61"
    assert d["D"] == 6
    assert d["theta0_exponent"] == 7
    assert d["circle_order"] == 9
    assert d["subfield_degrees"] == [1, 2, 3, 6]


def test_construct_verify_pipeline(tmp_path, capsys):
    path = tmp_path / "wc.json"
    code, _ = run(capsys, "construct", "--e", "1", "--chain", "3,1",
                  "--kind", "elliptic", "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert len(data["members"]) == 9
    assert data["kind"] == "elliptic"
    assert data["chain"] == [3, 1]

    code, out = run(capsys, "verify", "--in", str(path), "--mode", "exhaustive")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True and rep["covered"] == 27


def test_construct_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "construct", "--e", "1", "--chain", "9,3,1", "--zetas", "2",
        "--kind", "elliptic", "--out", str(a))
    run(capsys, "construct", "--e", "1", "--chain", "9,3,1", "--zetas", "2",
        "--kind", "elliptic", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_construct_chain_from_m(tmp_path, capsys):
    # --m alone uses the prime-factorization chain
    path = tmp_path / "s.json"
    code, _ = run(capsys, "construct", "--e", "1", "--m", "9", "--zetas", "1",
                  "--kind", "elliptic", "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text())["chain"] == [9, 3, 1]


def test_construct_to_stdout(capsys):
    code, out = run(capsys, "construct", "--e", "1", "--chain", "3,1",
                    "--kind", "symplectic", "--zetas", "1")
    assert code == 0
    data = json.loads(out)
    assert len(data["members"]) == 9
    assert all(len(m) == 3 for m in data["members"])


def test_verify_detects_corruption(tmp_path, capsys):
    path = tmp_path / "wc.json"
    run(capsys, "construct", "--e", "1", "--chain", "3,1",
        "--kind", "elliptic", "--out", str(path))
    data = json.loads(path.read_text())
    del data["members"][0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out = run(capsys, "verify", "--in", str(bad))
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_verify_does_not_mutate_input(tmp_path, capsys):
    path = tmp_path / "wc.json"
    run(capsys, "construct", "--e", "1", "--chain", "3,1",
        "--kind", "elliptic", "--out", str(path))
    before = path.read_bytes()
    run(capsys, "verify", "--in", str(path))
    assert path.read_bytes() == before


def test_restrict_pipeline(tmp_path, capsys):
    sym = tmp_path / "sym.json"
    ell = tmp_path / "ell.json"
    direct = tmp_path / "direct.json"
    run(capsys, "construct", "--e", "1", "--chain", "3,1", "--zetas", "1",
        "--kind", "symplectic", "--out", str(sym))
    code, _ = run(capsys, "restrict", "--in", str(sym), "--out", str(ell))
    assert code == 0
    run(capsys, "construct", "--e", "1", "--chain", "3,1",
        "--kind", "elliptic", "--out", str(direct))
    got = json.loads(ell.read_text())
    want = json.loads(direct.read_text())
    assert got["members"] == want["members"]
    assert got["kind"] == "elliptic"

    code, out = run(capsys, "verify", "--in", str(ell), "--mode", "exhaustive")
    assert code == 0 and json.loads(out)["pass"] is True


def test_classify(capsys):
    code, out = run(capsys, "classify", "--e", "1", "--chain", "9,3,1")
    assert code == 0
    d = json.loads(out)
    assert d["class_count"] == 2
    assert d["bound"] == {"num": 3, "den": 2}
    assert d["bound_satisfied"] is True


def test_parameter_errors_exit_2(capsys):
    code, _ = run(capsys, "construct", "--e", "1", "--m", "4",
                  "--kind", "elliptic")
    assert code == 2
    code, _ = run(capsys, "construct", "--e", "1", "--chain", "9,4,1",
                  "--zetas", "1", "--kind", "elliptic")
    assert code == 2
    code, _ = run(capsys, "construct", "--e", "1", "--chain", "3,1",
                  "--zetas", "1,2", "--kind", "elliptic")
    assert code == 2
    code, _ = run(capsys, "classify", "--e", "1")
    assert code == 2


def test_resource_errors_exit_3(capsys):
    code, _ = run(capsys, "classify", "--e", "1", "--chain", "21,7,1")
    assert code == 3  # D = 42 over the default cap


def test_max_degree_override(capsys):
    code, out = run(capsys, "classify", "--e", "1", "--chain", "21,7,1",
                    "--max-degree", "50")
    assert code == 0
    d = json.loads(out)
    assert d["tuple_count"] == 2 ** 7
    assert sum(c["orbit_size"] for c in d["classes"]) == 2 ** 7


def test_verify_report_to_file(tmp_path, capsys):
    path = tmp_path / "wc.json"
    rep_path = tmp_path / "report.json"
    run(capsys, "construct", "--e", "1", "--chain", "3,1",
        "--kind", "elliptic", "--out", str(path))
    code, out = run(capsys, "verify", "--in", str(path), "--out", str(rep_path))
    assert code == 0 and out == ""
    assert json.loads(rep_path.read_text())["pass"] is True
