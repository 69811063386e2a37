"""JSON-over-HTTP game service: create avoidance-game sessions, submit human
moves, receive engine replies.

A deliberately small demo/verification surface: sessions live in memory under
an LRU cap, each session's moves are serialized by a lock, and every reply is
computed synchronously by the chosen engine strategy.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from collections import OrderedDict
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import graph6, solver, strategies
from .game import (GameState, IllegalMoveError, Status, StrategyFault,
                   apply_move, new_game, red_blue_isomorphic)
from .graphs import (FamilySpec, Graph, make_family)

MAX_SESSIONS = 256
OPTIMAL_EDGE_LIMIT = 15

ENGINES = ("optimal", "automorphism", "kn-p2", "breaker")


class ServiceError(Exception):
    def __init__(self, status: int, reason: str):
        super().__init__(reason)
        self.status = status
        self.reason = reason


FAMILY_CATALOG = [
    {"name": "K4", "spec": "K4", "description": "complete graph on 4 vertices"},
    {"name": "K5", "spec": "K5", "description": "complete graph on 5 vertices"},
    {"name": "K6", "spec": "K6", "description": "complete graph on 6 vertices (SIM board)"},
    {"name": "C4", "spec": "C4", "description": "4-cycle"},
    {"name": "C6", "spec": "C6", "description": "6-cycle"},
    {"name": "P4", "spec": "P4", "description": "path of length 4"},
    {"name": "Q3", "spec": "Q3", "description": "3-dimensional cube"},
    {"name": "K3,3", "spec": "K3,3", "description": "complete bipartite 3+3"},
    {"name": "K3+e", "spec": "K3+e", "description": "triangle with a pendant edge"},
    {"name": "octahedron", "spec": "octahedron", "description": "octahedron"},
    {"name": "cartesianK3eP2", "spec": "cartesianK3eP2",
     "description": "cartesian product counterexample board", "layout": {"type": "grid", "rows": 4, "cols": 3}},
    {"name": "lexiP2K3e", "spec": "lexiP2K3e",
     "description": "lexicographic product counterexample board", "layout": {"type": "grid", "rows": 3, "cols": 4}},
    {"name": "categoricalK3eK3e", "spec": "categoricalK3eK3e",
     "description": "categorical product counterexample board", "layout": {"type": "grid", "rows": 4, "cols": 4}},
    {"name": "K3 (forbidden)", "spec": "K3", "description": "triangle, the SIM forbidden graph"},
    {"name": "P2 (forbidden)", "spec": "P2", "description": "path of length 2"},
    {"name": "P1 (forbidden)", "spec": "P1", "description": "single edge"},
]


def parse_board_ref(ref) -> Graph:
    """{"family": name} or {"graph6": text} -> Graph."""
    if not isinstance(ref, dict):
        raise ServiceError(400, "graph reference must be an object")
    if "graph6" in ref:
        try:
            return graph6.decode(str(ref["graph6"]))
        except ValueError as exc:
            raise ServiceError(422, f"bad graph6: {exc}") from None
    if "family" in ref:
        from .cli import parse_graph_spec
        try:
            return parse_graph_spec(str(ref["family"]))
        except ValueError as exc:
            raise ServiceError(422, f"bad family: {exc}") from None
    raise ServiceError(400, "graph reference needs 'family' or 'graph6'")


class Session:
    def __init__(self, sid: str, state: GameState, engine_side: str, engine_name: str, strategy):
        self.id = sid
        self.state = state
        self.engine_side = engine_side
        self.engine_name = engine_name
        self.strategy = strategy
        self.created_at = time.time()
        self.lock = threading.Lock()

    def state_obj(self) -> dict:
        st = self.state
        return {
            "graph6": graph6.encode(st.board),
            "forbidden": graph6.encode(st.forbidden) if st.forbidden else None,
            "order": st.board.order,
            "edges": [list(e) for e in st.board.edge_list],
            "red": sorted(list(e) for e in st.red),
            "blue": sorted(list(e) for e in st.blue),
            "moves": [list(e) for e in st.history],
            "status": st.status,
            "to_move": st.to_move() if st.status == Status.IN_PROGRESS else None,
            "red_blue_isomorphic": red_blue_isomorphic(st),
            "losing_copy": [list(e) for e in st.losing_copy],
            "engine_side": self.engine_side,
            "engine": self.engine_name,
        }


def _build_engine(board: Graph, forbidden, engine: str, engine_side: str):
    if engine == "optimal":
        if board.size > OPTIMAL_EDGE_LIMIT:
            raise ServiceError(422, f"optimal engine limited to boards with <= {OPTIMAL_EDGE_LIMIT} edges")
        return solver.optimal_strategy(board, forbidden)
    if engine == "automorphism":
        if engine_side != "B":
            raise ServiceError(422, "automorphism engine plays B; choose human_side A")
        from . import morphisms
        witness = morphisms.find_fixed_edge_free_involution(board)
        if witness is None:
            raise ServiceError(422, "board has no fixed-edge-free involution")
        return strategies.automorphism_strategy(board, witness)
    if engine == "kn-p2":
        if engine_side != "B":
            raise ServiceError(422, "kn-p2 engine plays B; choose human_side A")
        n = board.order
        if board.size != n * (n - 1) // 2 or n < 3:
            raise ServiceError(422, "kn-p2 engine needs a complete board K_n, n >= 3")
        if forbidden is None or forbidden.strip_isolated() != make_family(FamilySpec.path(2)):
            raise ServiceError(422, "kn-p2 engine needs forbidden P2")
        return strategies.kn_p2_defender(n)
    if engine == "breaker":
        if engine_side != "A":
            raise ServiceError(422, "breaker engines play A; choose human_side B")
        for which in strategies.PRODUCT_BOARDS:
            if board == strategies.product_board(which):
                return strategies.product_breaker(which)
        n = board.order
        if board.size == n * (n - 1) // 2 and n >= 4:
            return strategies.kn_symmetry_breaker(n)
        raise ServiceError(422, "breaker engine needs K_n (n>=4) or a product counterexample board")
    raise ServiceError(422, f"unknown engine {engine!r}; pick one of {ENGINES}")


class GameService:
    def __init__(self):
        self.sessions: OrderedDict[str, Session] = OrderedDict()
        self.lock = threading.Lock()

    def create(self, payload: dict) -> Session:
        board = parse_board_ref(payload.get("graph"))
        forbidden_ref = payload.get("forbidden")
        forbidden = parse_board_ref(forbidden_ref) if forbidden_ref else None
        human_side = payload.get("human_side", "A")
        if human_side not in ("A", "B"):
            raise ServiceError(422, "human_side must be 'A' or 'B'")
        engine_side = "B" if human_side == "A" else "A"
        engine = payload.get("engine", "optimal")
        strategy = _build_engine(board, forbidden, engine, engine_side)
        try:
            state = new_game(board, forbidden)
        except ValueError as exc:
            raise ServiceError(422, str(exc)) from None
        session = Session(uuid.uuid4().hex, state, engine_side, engine, strategy)
        if engine_side == "A":
            _engine_turn(session)
        with self.lock:
            self.sessions[session.id] = session
            while len(self.sessions) > MAX_SESSIONS:
                self.sessions.popitem(last=False)
        return session

    def get(self, sid: str) -> Session:
        with self.lock:
            session = self.sessions.get(sid)
            if session is None:
                raise ServiceError(404, "unknown game id")
            self.sessions.move_to_end(sid)
            return session

    def delete(self, sid: str) -> None:
        with self.lock:
            if sid not in self.sessions:
                raise ServiceError(404, "unknown game id")
            del self.sessions[sid]

    def move(self, sid: str, payload: dict) -> dict:
        session = self.get(sid)
        move = payload.get("edge")
        if (not isinstance(move, (list, tuple)) or len(move) != 2
                or not all(isinstance(x, int) for x in move)):
            raise ServiceError(400, "body needs {'edge': [u, v]}")
        with session.lock:
            state = session.state
            if state.status != Status.IN_PROGRESS:
                raise ServiceError(409, f"game is over ({state.status})")
            if state.to_move() == session.engine_side:
                raise ServiceError(409, "engine to move")
            try:
                state = apply_move(state, tuple(move))
            except IllegalMoveError as exc:
                raise ServiceError(409, str(exc)) from None
            session.state = state
            human_move = state.history[-1]
            engine_move = None
            if state.status == Status.IN_PROGRESS and state.to_move() == session.engine_side:
                engine_move = _engine_turn(session)
            return {
                "human_move": list(human_move),
                "engine_move": list(engine_move) if engine_move else None,
                "state": session.state_obj(),
            }


def _engine_turn(session: Session):
    try:
        move = session.strategy(session.state)
    except StrategyFault as exc:
        raise ServiceError(409, f"engine strategy fault: {exc}") from None
    session.state = apply_move(session.state, move)
    return move


class _Handler(BaseHTTPRequestHandler):
    service: GameService = None  # set by serve()
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        import logging
        logging.getLogger("avoidance.server").debug(fmt, *args)

    def _send(self, status: int, obj=None):
        body = b"" if obj is None else json.dumps(obj, sort_keys=True).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        if body:
            self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            obj = json.loads(raw or b"{}")
        except json.JSONDecodeError as exc:
            raise ServiceError(400, f"bad JSON body: {exc}") from None
        if not isinstance(obj, dict):
            raise ServiceError(400, "body must be a JSON object")
        return obj

    def _route(self, method: str):
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        try:
            if parts[:2] == ["api", "families"] and method == "GET":
                return self._send(200, {"families": FAMILY_CATALOG, "engines": list(ENGINES)})
            if parts[:2] == ["api", "games"]:
                if len(parts) == 2 and method == "POST":
                    session = self.service.create(self._body())
                    return self._send(201, {"id": session.id, "state": session.state_obj()})
                if len(parts) == 3 and method == "GET":
                    session = self.service.get(parts[2])
                    return self._send(200, {"id": session.id, "state": session.state_obj()})
                if len(parts) == 3 and method == "DELETE":
                    self.service.delete(parts[2])
                    return self._send(204)
                if len(parts) == 4 and parts[3] == "moves" and method == "POST":
                    return self._send(200, self.service.move(parts[2], self._body()))
                if len(parts) == 4 and parts[3] == "transcript" and method == "GET":
                    session = self.service.get(parts[2])
                    return self._send(200, session.state.transcript())
            return self._send(404, {"error": "no such endpoint"})
        except ServiceError as exc:
            return self._send(exc.status, {"error": exc.reason})

    def do_GET(self):
        self._route("GET")

    def do_POST(self):
        self._route("POST")

    def do_DELETE(self):
        self._route("DELETE")

    def do_OPTIONS(self):
        # CORS preflight so a statically served UI can call the API
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()


def make_server(port: int = 0) -> ThreadingHTTPServer:
    handler = type("BoundHandler", (_Handler,), {"service": GameService()})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int) -> None:
    httpd = make_server(port)
    host, actual_port = httpd.server_address[:2]
    print(f"avoidance game service on http://{host}:{actual_port}", flush=True)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
