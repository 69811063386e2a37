import json
import threading
import urllib.error
import urllib.request

import pytest

from avoidance.server import make_server


@pytest.fixture(scope="module")
def service():
    httpd = make_server(0)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{httpd.server_address[1]}"

    def request(method, path, body=None):
        data = json.dumps(body).encode() if body is not None else None
        req = urllib.request.Request(base + path, data=data, method=method,
                                     headers={"Content-Type": "application/json"})
        try:
            with urllib.request.urlopen(req) as resp:
                raw = resp.read()
                return resp.status, json.loads(raw) if raw else None
        except urllib.error.HTTPError as exc:
            return exc.code, json.loads(exc.read() or b"{}")

    yield request
    httpd.shutdown()
    httpd.server_close()


def test_families_catalog(service):
    status, obj = service("GET", "/api/families")
    assert status == 200
    names = {f["name"] for f in obj["families"]}
    assert "K6" in names and "cartesianK3eP2" in names
    assert set(obj["engines"]) == {"optimal", "automorphism", "kn-p2", "breaker"}


def test_automorphism_session_keeps_symmetry(service):
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "C4"}, "forbidden": None,
        "human_side": "A", "engine": "automorphism"})
    assert status == 201
    gid = obj["id"]
    status, obj = service("POST", f"/api/games/{gid}/moves", {"edge": [0, 1]})
    assert status == 200
    assert obj["engine_move"] is not None
    assert obj["state"]["red_blue_isomorphic"] is True
    status, obj = service("POST", f"/api/games/{gid}/moves", {"edge": [1, 2]})
    assert status == 200
    assert obj["state"]["red_blue_isomorphic"] is True
    assert obj["state"]["status"] == "Drawn"


def test_engine_replies_match_library_strategy(service):
    """No divergence between transport and core: replay the session moves
    through the library strategy and compare replies."""
    from avoidance.graphs import cycle_graph
    from avoidance.strategies import automorphism_strategy
    from avoidance import morphisms
    from avoidance.game import apply_move, new_game

    board = cycle_graph(6)
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "C6"}, "human_side": "A", "engine": "automorphism"})
    gid = obj["id"]
    witness = morphisms.find_fixed_edge_free_involution(board)
    strat = automorphism_strategy(board, witness)
    state = new_game(board)
    for human_move in ((0, 1), (2, 3), (4, 5)):
        status, obj = service("POST", f"/api/games/{gid}/moves",
                              {"edge": list(human_move)})
        assert status == 200
        state = apply_move(state, human_move)
        expected = strat(state)
        assert tuple(obj["engine_move"]) == expected
        state = apply_move(state, expected)


def test_sim_losing_line(service):
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "K6"}, "forbidden": {"family": "K3"},
        "human_side": "A", "engine": "optimal"})
    assert status == 201
    gid = obj["id"]
    moves = [[0, 1], [0, 2], [1, 2]]  # walk straight into a red triangle
    final = None
    for mv in moves:
        status, obj = service("POST", f"/api/games/{gid}/moves", {"edge": mv})
        if status == 409:
            continue  # engine took that edge already; pick another below
        assert status == 200
        final = obj
        if obj["state"]["status"] != "InProgress":
            break
    assert final is not None


def test_illegal_and_unknown(service):
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "C4"}, "human_side": "A", "engine": "automorphism"})
    gid = obj["id"]
    status, obj = service("POST", f"/api/games/{gid}/moves", {"edge": [0, 2]})
    assert status == 409  # not an edge of C4
    status, obj = service("POST", f"/api/games/{gid}/moves", {"edge": [0, 1]})
    assert status == 200
    status, obj = service("POST", f"/api/games/{gid}/moves", {"edge": [0, 1]})
    assert status == 409  # already colored
    status, _ = service("GET", "/api/games/none-such")
    assert status == 404
    status, _ = service("DELETE", f"/api/games/{gid}")
    assert status == 204
    status, _ = service("GET", f"/api/games/{gid}")
    assert status == 404


def test_engine_validation_422(service):
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "K8"}, "human_side": "A", "engine": "optimal"})
    assert status == 422
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "K3+e"}, "human_side": "A", "engine": "automorphism"})
    assert status == 422  # no fixed-edge-free involution on K3+e
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "C4"}, "human_side": "B", "engine": "kn-p2"})
    assert status == 422


def test_breaker_engine_moves_first(service):
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "K4"}, "human_side": "B", "engine": "breaker"})
    assert status == 201
    state = obj["state"]
    assert state["moves"] == [[0, 1]]  # engine is A and has already opened
    assert state["to_move"] == "B"


def test_transcript_replays_through_cli(service, tmp_path):
    from avoidance import cli
    status, obj = service("POST", "/api/games", {
        "graph": {"family": "C4"}, "human_side": "A", "engine": "automorphism"})
    gid = obj["id"]
    service("POST", f"/api/games/{gid}/moves", {"edge": [0, 1]})
    status, transcript = service("GET", f"/api/games/{gid}/transcript")
    assert status == 200
    path = tmp_path / "t.json"
    path.write_text(json.dumps(transcript))
    assert cli.main(["verify", "--replay", str(path)]) == 0


def test_bad_json_body(service):
    status, obj = service("POST", "/api/games", {"graph": "not-an-object"})
    assert status == 400
