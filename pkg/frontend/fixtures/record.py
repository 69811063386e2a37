"""Record the contract fixtures by driving a live game service.

Re-run after engine changes:  python3 fixtures/record.py
The files are committed; the contract tests replay them against a freshly
started service and fail on any divergence.
"""

import json
import pathlib
import threading
import urllib.error
import urllib.request

from avoidance.server import make_server

HERE = pathlib.Path(__file__).parent

httpd = make_server(0)
threading.Thread(target=httpd.serve_forever, daemon=True).start()
BASE = f"http://127.0.0.1:{httpd.server_address[1]}"


def request(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(BASE + path, data=data, method=method,
                                 headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req) as resp:
            raw = resp.read()
            return resp.status, json.loads(raw) if raw else None
    except urllib.error.HTTPError as exc:
        return exc.code, json.loads(exc.read() or b"{}")


def record(name, create, human_moves, stop_on_end=True):
    status, created = request("POST", "/api/games", create)
    assert status == 201, created
    gid = created["id"]
    steps = []
    for mv in human_moves:
        code, obj = request("POST", f"/api/games/{gid}/moves", {"edge": list(mv)})
        steps.append({"edge": list(mv), "http_status": code, "response": obj})
        if stop_on_end and code == 200 and obj["state"]["status"] != "InProgress":
            break
    _, transcript = request("GET", f"/api/games/{gid}/transcript")
    fixture = {"name": name, "create": create, "created": created,
               "steps": steps, "transcript": transcript}
    out = HERE / f"{name}.json"
    out.write_text(json.dumps(fixture, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out} ({len(steps)} steps, final {transcript['status']})")


# 1. SIM: the human walks into a loss against the optimal engine
status, probe = request("POST", "/api/games", {
    "graph": {"family": "K6"}, "forbidden": {"family": "K3"},
    "human_side": "A", "engine": "optimal"})
gid = probe["id"]
moves = []
state = probe["state"]
while state["status"] == "InProgress":
    taken = {tuple(e) for e in state["red"]} | {tuple(e) for e in state["blue"]}
    mv = next(tuple(e) for e in state["edges"] if tuple(e) not in taken)
    code, obj = request("POST", f"/api/games/{gid}/moves", {"edge": list(mv)})
    assert code == 200
    moves.append(mv)
    state = obj["state"]
request("DELETE", f"/api/games/{gid}")
record("sim_loss_line", {
    "graph": {"family": "K6"}, "forbidden": {"family": "K3"},
    "human_side": "A", "engine": "optimal"}, moves)

# 2. the C4 mirror demo: symmetry flag stays on, game ends drawn
record("c4_automorphism_demo", {
    "graph": {"family": "C4"}, "forbidden": None,
    "human_side": "A", "engine": "automorphism"}, [(0, 1), (1, 2)])

# 3. illegal moves are rejected with 409 and change nothing
record("illegal_move_rejection", {
    "graph": {"family": "C4"}, "forbidden": None,
    "human_side": "A", "engine": "automorphism"},
    [(0, 1), (0, 1), (0, 2), (1, 2)], stop_on_end=False)

httpd.shutdown()
