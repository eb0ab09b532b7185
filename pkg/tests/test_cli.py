import json

import pytest

from qtors.cli import main


@pytest.fixture
def a3_file(tmp_path):
    f = tmp_path / "a3.quiver"
    f.write_text("vertices 3\narrow 1 2\narrow 2 3\n")
    return str(f)


@pytest.fixture
def wild_file(tmp_path):
    f = tmp_path / "wild.quiver"
    f.write_text("vertices 3\narrow 1 2 *2\narrow 2 3\n")
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys, a3_file):
    code, out, _ = run(capsys, "classify", a3_file)
    assert code == 0
    data = json.loads(out)
    assert data["class"] == {"tag": "Dynkin", "type": "A3"}


def test_forms_with_euler(capsys, a3_file):
    code, out, _ = run(capsys, "forms", a3_file, "--dim", "1,1,1", "--dim", "1,0,0")
    assert code == 0
    data = json.loads(out)
    assert data["cartan"][2] == ["1", "1", "1"]
    assert data["euler"]["value"] == 1


def test_enumerate(capsys, a3_file):
    code, out, _ = run(capsys, "enumerate", a3_file)
    assert code == 0
    assert json.loads(out)["count"] == 14


def test_poset_json_and_dot(capsys, a3_file):
    code, out, _ = run(capsys, "poset", a3_file, "--out", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["elements"]) == 14
    code, out, _ = run(capsys, "poset", a3_file, "--out", "dot")
    assert code == 0
    assert out.startswith("digraph hasse {")
    assert out.count("->") == len(data["hasse"])


def test_check_lattice_dynkin(capsys, a3_file):
    code, out, _ = run(capsys, "check-lattice", a3_file)
    assert code == 0
    data = json.loads(out)
    assert data["theorem_decision"] is True
    assert data["agreement"] is True
    assert data["enumerated"]["elements"] == 14


def test_check_lattice_wild_never_enumerates(capsys, wild_file):
    code, out, _ = run(capsys, "check-lattice", wild_file)
    assert code == 0
    data = json.loads(out)
    assert data["theorem_decision"] is False
    assert data["enumerated"] is None
    assert data["certificate"]["reason"] == "witness subquiver"


def test_kronecker(capsys):
    code, out, _ = run(capsys, "kronecker", "--n", "2", "--depth", "4")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["dims_preprojective"][0] == [0, 1]


def test_witness_with_tower(capsys):
    code, out, _ = run(capsys, "witness", "--abc", "2,1,0", "--tower", "3")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["case"] == "i"
    assert data["dim_n"] == [3, 2, 2]
    assert data["nonff"]["gen_results"] == [False, False]


def test_witness_from_file(capsys, wild_file):
    code, out, _ = run(capsys, "witness", wild_file)
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_euler_scan(capsys):
    code, out, _ = run(capsys, "euler-scan", "--amax", "3", "--bmax", "2", "--cmax", "2")
    assert code == 0
    data = json.loads(out)
    assert data["points"] == 2 * 2 * 3
    assert data["ok"] is True and not data["mismatches"]


def test_deterministic_output(capsys, a3_file):
    _, first, _ = run(capsys, "enumerate", a3_file)
    _, second, _ = run(capsys, "enumerate", a3_file)
    assert first == second
    _, p1, _ = run(capsys, "poset", a3_file, "--out", "dot")
    _, p2, _ = run(capsys, "poset", a3_file, "--out", "dot")
    assert p1 == p2


class TestExitCodes:
    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "classify", str(tmp_path / "absent.quiver"))
        assert code == 2
        assert "absent.quiver" in err

    def test_bad_dsl_is_usage_error(self, capsys, tmp_path):
        f = tmp_path / "bad.quiver"
        f.write_text("vertices two\n")
        code, _, err = run(capsys, "classify", str(f))
        assert code == 2
        assert "line 1" in err

    def test_bad_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2

    def test_witness_needs_input(self, capsys):
        code, _, err = run(capsys, "witness")
        assert code == 2
        assert "abc" in err

    def test_malformed_abc(self, capsys):
        code, _, err = run(capsys, "witness", "--abc", "2;1;0")
        assert code == 2
