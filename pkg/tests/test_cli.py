import json

import pytest

from avoidance import cli
from avoidance.graphs import complete_graph, cycle_graph, triangle_plus_edge


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_graph6(capsys):
    code, out, _ = run(capsys, "gen", "--family", "K4")
    assert code == 0 and out == "C~\n"


def test_gen_product_json(capsys):
    code, out, _ = run(capsys, "gen", "--family", "K3+e", "--family", "P2",
                       "--op", "cartesian", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["order"] == 12 and len(obj["edges"]) == 20


def test_parse_graph_spec_shorthands():
    assert cli.parse_graph_spec("K3,3").size == 9
    assert cli.parse_graph_spec("K3,3-e").size == 8
    assert cli.parse_graph_spec("K6-M").size == 12
    assert cli.parse_graph_spec("grid2x2").order == 9
    assert cli.parse_graph_spec("fig1:7") == cycle_graph(5)
    assert cli.parse_graph_spec("octahedron").order == 6
    assert cli.parse_graph_spec("K3+e") == triangle_plus_edge()
    with pytest.raises(ValueError):
        cli.parse_graph_spec("wat")


def test_check_auto(capsys):
    code, out, _ = run(capsys, "check-auto", "--family", "C4")
    obj = json.loads(out)
    assert code == 0 and obj["in_auto"] and len(obj["witness"]) == 4
    code, out, _ = run(capsys, "check-auto", "--family", "K3+e")
    obj = json.loads(out)
    assert obj["in_auto"] is False and obj["witness"] is None


def test_solve_symm_nonmember_line(capsys):
    code, out, _ = run(capsys, "solve-symm", "--family", "K4")
    obj = json.loads(out)
    assert code == 0 and obj["outcome"] == "NonMember"
    assert obj["certificate"]["type"] == "breaking-line"
    assert len(obj["certificate"]["moves"]) % 2 == 1


def test_solve_symm_budget_exit_code(capsys):
    code, out, _ = run(capsys, "solve-symm", "--family", "K5", "--budget-nodes", "3")
    obj = json.loads(out)
    assert code == 2 and obj["outcome"] == "BudgetExceeded"


def test_solve_avoid(capsys):
    code, out, _ = run(capsys, "solve-avoid", "--family", "K3",
                       "--forbidden-family", "P2")
    obj = json.loads(out)
    assert code == 0 and obj["outcome"] == "ALoses"


def test_malformed_graph6_is_usage_error(capsys):
    code, out, err = run(capsys, "solve-symm", "--graph6", "!!!bad!!!")
    assert code == 1 and "byte" in err


def test_mutually_exclusive_inputs_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["solve-symm", "--family", "K4", "--graph6", "C~"])
    assert exc.value.code == 1


def test_classify_census_deterministic(capsys):
    code, out1, _ = run(capsys, "classify-census", "--max-order", "4")
    assert code == 0
    code, out2, _ = run(capsys, "classify-census", "--max-order", "4")
    assert out1 == out2
    records = [json.loads(line) for line in out1.strip().split("\n")]
    assert len(records) == 11
    for rec in records:
        assert set(rec) == {"graph6", "in_auto", "in_symm", "witness", "line"}
        if rec["in_auto"]:
            assert rec["in_symm"] is True and rec["witness"] is not None


def test_reduce_r_roundtrip(capsys):
    code, out, _ = run(capsys, "reduce-r", "--family", "C4")
    from avoidance import graph6
    g = graph6.decode(out.strip())
    assert (g.order, g.size) == (20, 20)


def test_gi2par_solve(capsys):
    code, out, _ = run(capsys, "gi2par", "--g0", "C5", "--g1", "C5", "--solve")
    obj = json.loads(out)
    assert code == 0
    assert len(obj["beta"]) == 10
    assert sorted(obj["isomorphism"]) == list(range(5))


def test_verify_pass_and_violation_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--strategy", "kn-p2", "--n", "4",
                       "--adversary", "exhaustive", "--property", "never-loses")
    assert code == 0 and json.loads(out)["passed"]
    # a deliberately impossible bound: K4 symmetry cannot break by round 0
    code, out, _ = run(capsys, "verify", "--strategy", "kn-breaker", "--n", "4",
                       "--adversary", "exhaustive", "--property", "broken-by",
                       "--round", "1")
    assert code == 3 and not json.loads(out)["passed"]


def test_verify_replay(tmp_path, capsys):
    from avoidance.game import apply_move, new_game
    state = new_game(complete_graph(3), cli.parse_graph_spec("P2"))
    for mv in ((0, 1), (1, 2), (0, 2)):
        state = apply_move(state, mv)
    path = tmp_path / "transcript.json"
    path.write_text(json.dumps(state.transcript()))
    code, out, _ = run(capsys, "verify", "--replay", str(path))
    assert code == 0 and json.loads(out)["match"]

    tampered = state.transcript()
    tampered["status"] = "Drawn"
    path.write_text(json.dumps(tampered))
    code, out, _ = run(capsys, "verify", "--replay", str(path))
    assert code == 3


def test_gen_deterministic_bytes(capsys):
    args = ["gen", "--family", "K3,3", "--family", "C4", "--op", "categorical",
            "--format", "json"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
