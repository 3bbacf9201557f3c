import csv
import io
import json

import pytest

from matchfield.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_weights_text(capsys):
    code, out, _ = run(capsys, "weights", "--n", "4", "--ell", "3")
    assert code == 0 and "(0,0,0,0,2,1,3,1,2,1,6,4,3,3)" in out


def test_weights_n3_all(capsys):
    code, out, _ = run(capsys, "weights", "--n", "3", "--ell", "all", "--json")
    data = json.loads(out)
    ws = [[w["weight"] for w in d["weights"]] for d in data]
    assert code == 0 and ws[:3] == [[0, 0, 0, 2, 1, 1], [0, 0, 0, 1, 1, 2], [0, 0, 0, 1, 2, 1]]


def test_ideal(capsys):
    code, out, _ = run(capsys, "ideal", "--n", "4", "--ell", "3", "--grassmannian", "2")
    assert code == 0 and "P12*P43 - P13*P42" in out


def test_certify_all(capsys):
    code, out, _ = run(capsys, "certify", "--n", "4", "--ell", "all")
    assert code == 0 and out.count("certified") == 5


def test_tableau_actions(capsys):
    tab = '{"n": 6, "columns": [[5, 1, 6], [4]]}'
    code, out, _ = run(capsys, "tableau", "normalize", "--n", "6", "--ell", "3", "--tableau", tab, "--json")
    data = json.loads(out)
    assert code == 0 and data["tableau"]["columns"] == [[4, 1, 6], [5]] and data["type"] == "3C"
    code, out, _ = run(capsys, "tableau", "invert", "--n", "6", "--ell", "3", "--tableau", '{"n": 6, "columns": [[1, 4, 6], [3]]}')
    assert code == 0 and "4,1,6 | 3" in out and "3D" in out


def test_tableau_from_file(capsys, tmp_path):
    p = tmp_path / "t.json"
    p.write_text('{"n": 6, "columns": [[2, 1, 5, 6], [1]]}')
    code, out, _ = run(capsys, "tableau", "classify", "--n", "6", "--ell", "1", "--tableau", f"@{p}")
    assert code == 0 and "type 3D" in out


def test_tableau_not_in_basis_exit_2(capsys):
    code, _, _ = run(capsys, "tableau", "map", "--n", "5", "--ell", "0", "--tableau", '{"n": 5, "columns": [[2, 3], [1, 4]]}')
    assert code == 2


def test_polytope(capsys):
    code, out, _ = run(capsys, "polytope", "--n", "3", "--ell", "0", "--fvector")
    assert code == 0 and out.strip() == "(6,13,13,6)"
    code, out, _ = run(capsys, "polytope", "isomorphic", "--n", "4", "--ell1", "2", "--ell2", "3", "--json")
    assert code == 0 and json.loads(out)["isomorphic"] is True


def test_polytope_facets_and_json(capsys):
    code, out, _ = run(capsys, "polytope", "--n", "4", "--ell", "0", "--facets")
    assert code == 0 and out.count("<=") == 12
    code, out, _ = run(capsys, "--format", "json", "polytope", "--n", "3", "--ell", "1")
    data = json.loads(out)
    assert data["n_facets"] == 6 and len(data["points"]) == 6


def test_reproduce_targets(capsys):
    for target in ["example-2-2", "example-2-3", "section-4-examples"]:
        code, out, _ = run(capsys, "reproduce", target)
        assert code == 0, out


def test_csv_output(capsys):
    code, out, _ = run(capsys, "polytope", "--n", "3", "--ell", "all", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][0] == "n" and len(rows) == 5


def test_output_file(capsys, tmp_path):
    p = tmp_path / "out.json"
    code, out, _ = run(capsys, "weights", "--n", "3", "--ell", "1", "--json", "--output", str(p))
    assert code == 0 and out == ""
    assert [w["weight"] for w in json.loads(p.read_text())["weights"]] == [0, 0, 0, 1, 1, 2]


def test_deterministic(capsys):
    args = ("ideal", "--n", "4", "--ell", "all", "--json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


@pytest.mark.parametrize("argv", [
    ["reproduce", "table-2"],
    ["weights", "--n", "3", "--ell", "7"],
    ["weights", "--n", "1"],
    ["weights", "--n", "3", "--ell", "x"],
    ["polytope", "isomorphic", "--n", "4", "--ell1", "1"],
    ["tableau", "classify", "--n", "4", "--ell", "all", "--tableau", '{"n": 4, "columns": [[1], [2]]}'],
    ["tableau", "classify", "--n", "4", "--ell", "1", "--tableau", "not json"],
    ["nosuch"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 64
