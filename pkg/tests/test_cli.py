"""Command-line interface: frozen outputs, exit codes, format round-trips."""

import json

import pytest

from holant import BinarySignature, dumps_graph, dumps_grid, k4, k33, to_incidence_grid
from holant.cli import (
    EXIT_DIMENSION,
    EXIT_FAILURE,
    EXIT_FINITE_GROUP,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_SIZE_GUARD,
    main,
)


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.json"
    path.write_text(dumps_graph(k4()))
    return str(path)


@pytest.fixture
def k33_file(tmp_path):
    path = tmp_path / "k33.json"
    path.write_text(dumps_graph(k33()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_graph(capsys, k4_file):
    code, out, _ = run(capsys, "eval", "--graph", k4_file, "--sig", "0,1,1,1")
    assert code == EXIT_OK
    assert out.strip() == "5"
    code, out, _ = run(capsys, "eval", "--graph", k4_file, "--sig", "1,1,1,1")
    assert out.strip() == "16"


def test_eval_k33_vertex_covers(capsys, k33_file):
    code, out, _ = run(capsys, "eval", "--graph", k33_file, "--sig", "0,1,1,1")
    assert code == EXIT_OK and out.strip() == "15"


def test_eval_grid(capsys, tmp_path):
    grid = to_incidence_grid(k4(), BinarySignature(1, 2, 3, 4))
    path = tmp_path / "grid.json"
    path.write_text(dumps_grid(grid))
    code, out, _ = run(capsys, "eval", "--grid", str(path))
    assert code == EXIT_OK
    assert out.strip() == "9310"


def test_eval_json_format(capsys, k4_file):
    code, out, _ = run(
        capsys, "eval", "--graph", k4_file, "--sig", "0,1,1,1", "--format", "json"
    )
    assert code == EXIT_OK
    assert json.loads(out) == {"value": "5"}


def test_eval_requires_exactly_one_input(capsys, k4_file):
    code, _, err = run(capsys, "eval", "--sig", "1,1,1,1")
    assert code == EXIT_PARSE and "error" in err


def test_eval_float_backend(capsys, k4_file):
    code, out, _ = run(
        capsys, "eval", "--graph", k4_file, "--sig", "0,1,1,1", "--backend", "float"
    )
    assert code == EXIT_OK
    assert complex(out.strip().strip("()")) == pytest.approx(5 + 0j)


def test_backend_env_var(capsys, k4_file, monkeypatch):
    monkeypatch.setenv("HOLANT_BACKEND", "float")
    code, out, _ = run(capsys, "eval", "--graph", k4_file, "--sig", "0,1,1,1")
    assert code == EXIT_OK
    assert "j" in out or "." in out
    monkeypatch.setenv("HOLANT_BACKEND", "bogus")
    code, _, err = run(capsys, "eval", "--graph", k4_file, "--sig", "0,1,1,1")
    assert code == EXIT_PARSE


def test_parse_error_exit_codes(capsys, k4_file, tmp_path):
    code, _, _ = run(capsys, "eval", "--graph", "/no/such/file", "--sig", "1,1,1,1")
    assert code == EXIT_PARSE
    code, _, _ = run(capsys, "eval", "--graph", k4_file, "--sig", "1,bogus,1,1")
    assert code == EXIT_PARSE
    code, _, _ = run(capsys, "classify", "--sig", "1,2")
    assert code == EXIT_PARSE
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, "eval", "--graph", str(bad), "--sig", "1,1,1,1")
    assert code == EXIT_PARSE


def test_size_guard_exit_code(capsys, tmp_path):
    import random

    from holant import random_3_regular

    path = tmp_path / "big.json"
    path.write_text(dumps_graph(random_3_regular(random.Random(1), 28)))
    code, _, err = run(capsys, "eval", "--graph", str(path), "--sig", "1,2,3,4")
    assert code == EXIT_SIZE_GUARD and "size guard" in err


def test_classify_human_output(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "1,2,3,4")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "classes: none" in lines
    assert "general: #P-hard" in lines
    assert "planar: #P-hard" in lines
    assert any("diagonal-ratio-not-root-of-unity" in l for l in lines)
    assert any("[1, 0, 0, 0]" in l for l in lines)


def test_classify_tractable_point(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "0,0,0,0")
    assert code == EXIT_OK
    assert "classes: 1, 2, 3, 4, 5" in out
    assert "general: P" in out and "planar: P" in out


def test_classify_planar_only_point(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "2,1,1,2")
    assert code == EXIT_OK
    assert "classes: 5" in out
    assert "general: #P-hard" in out
    assert "planar: P" in out
    assert "MikeThesis" in out


def test_classify_json_round_trip(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "1,2,3,4", "--format", "json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["general"] == "#P-hard"
    assert obj["witness"]["kind"] == "diagonal-ratio-not-root-of-unity"
    assert obj["witness"]["certificate"][1][1] == "3/2"


def test_gadget_matrix_frozen(capsys):
    code, out, _ = run(
        capsys, "gadget", "--name", "gadget:main:binary:0:110", "--sig", "1,2,3,5"
    )
    assert code == EXIT_OK
    assert out.splitlines() == [
        "[1, 4, 6, 20]",
        "[3, 10, 18, 50]",
        "[3, 12, 15, 50]",
        "[9, 30, 45, 125]",
    ]


def test_gadget_charpoly(capsys):
    code, out, _ = run(
        capsys, "gadget", "--name", "m4", "--sig", "1,2,3,4", "--action", "charpoly"
    )
    assert code == EXIT_OK
    assert out.strip() == "-85, -850, -1880, 384"


def test_gadget_anti_product(capsys):
    code, out, _ = run(capsys, "gadget", "--anti", "m4", "m5", "--sig", "1,2,3,4")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "[1, 0, 0, 0]",
        "[0, 3/2, 0, 0]",
        "[0, 0, 2/3, 0]",
        "[0, 0, 0, 1]",
    ]


def test_gadget_anti_order(capsys):
    code, out, _ = run(
        capsys,
        "gadget", "--anti", "m4", "m5", "--sig", "1,2,3,4", "--action", "order",
    )
    assert code == EXIT_OK
    assert out.strip() == "order: infinite (diagonal ratio is not a root of unity)"


def test_gadget_expr(capsys):
    code, out, _ = run(capsys, "gadget", "--expr", "prod(B2,B3)", "--sig", "1,2,3,4")
    assert code == EXIT_OK
    assert out.splitlines() == ["[1, 0, 0, 3]", "[2, 0, 0, 4]"]


def test_gadget_action_anti_needs_pair(capsys):
    code, _, err = run(
        capsys, "gadget", "--name", "m4", "--sig", "1,2,3,4", "--action", "anti"
    )
    assert code == EXIT_PARSE and "--anti" in err


def test_gadget_unknown_name(capsys):
    code, _, _ = run(capsys, "gadget", "--name", "gadget:nope", "--sig", "1,2,3,4")
    assert code == EXIT_PARSE


def test_gadget_dimension_mismatch(capsys):
    # m4 is 4x4, m1 is 2x4; the anti product cannot be formed
    code, _, _ = run(capsys, "gadget", "--anti", "m4", "m1", "--sig", "1,2,3,4")
    assert code == EXIT_DIMENSION


def test_gadget_file(capsys, tmp_path):
    spec = {
        "name": "custom:edge",
        "vertices": 1,
        "edges": [],
        "leading": [["in", 0]],
        "trailing": [0],
    }
    path = tmp_path / "gadget.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(
        capsys, "gadget", "--gadget-file", str(path), "--sig", "1,2,3,4"
    )
    assert code == EXIT_OK
    assert out.splitlines() == ["[1, 2]", "[3, 4]"]


def test_interpolate_demo(capsys, k4_file):
    code, out, _ = run(
        capsys,
        "interpolate-demo", "--graph", k4_file, "--sig", "1,2,3,4",
        "--x", "5", "--y", "7",
    )
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "interpolated: 118500" in lines
    assert "direct: 118500" in lines
    assert "equal: yes" in lines
    trace = json.loads(lines[-1].removeprefix("trace: "))
    assert trace["target_evaluated_directly"] is False
    assert trace["coefficients"] == ["1825", "770", "85"]


def test_interpolate_demo_degenerate_exit(capsys, k4_file):
    code, _, err = run(
        capsys,
        "interpolate-demo", "--graph", k4_file, "--sig", "1,1,1,1",
        "--x", "5", "--y", "7",
    )
    assert code == EXIT_FINITE_GROUP and "singular" in err


def test_solve_routes(capsys, k4_file):
    code, out, _ = run(capsys, "solve", "--graph", k4_file, "--sig", "1,1,1,1")
    assert code == EXIT_OK
    assert "route: degenerate" in out
    assert "value: 16" in out
    code, out, _ = run(capsys, "solve", "--graph", k4_file, "--sig", "1,2,3,4")
    assert code == EXIT_OK
    assert "route: brute-force" in out
    assert "value: 9310" in out


def test_solve_size_guard(capsys, tmp_path):
    import random

    from holant import random_3_regular

    path = tmp_path / "big.json"
    path.write_text(dumps_graph(random_3_regular(random.Random(2), 28)))
    code, out, _ = run(capsys, "solve", "--graph", str(path), "--sig", "2,1,1,2")
    assert code == EXIT_SIZE_GUARD
    assert "value: none" in out
    assert "planar instances are tractable" in out


def test_solve_json(capsys, k4_file):
    code, out, _ = run(
        capsys, "solve", "--graph", k4_file, "--sig", "1,1,1,-1", "--format", "json"
    )
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["route"] == "affine"
    assert obj["value"] == "-4"


def test_outputs_are_deterministic(capsys, k4_file):
    argv = ["classify", "--sig", "1,2,3,4", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    argv = [
        "interpolate-demo", "--graph", k4_file, "--sig", "1,2,3,4",
        "--x", "5", "--y", "7",
    ]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
