"""Scripted strategies for the avoidance and symmetry games.

The mirror strategy driven by a fixed-edge-free involution, the matching
defender for (K_n, P_2), the symmetry breaker on complete graphs, and the
symmetry breakers for the three product counterexamples.

The underlying case analyses are nondeterministic sketches; every choice here
is pinned by lexicographic tie-breaking on (min endpoint, max endpoint) so
playouts are reproducible.
"""

from __future__ import annotations

from .game import GameState, StrategyFault, Strategy
from .graphs import (Edge, Graph, cartesian, categorical, edge, lexicographic,
                     path_graph, triangle_plus_edge)
from . import morphisms


def _uncolored_at(state: GameState, center: int, avoid=()):
    taken = state.colored()
    for w in range(state.board.order):
        if w == center or w in avoid:
            continue
        e = edge(center, w)
        if e in state.board.edges and e not in taken:
            yield e


def _star_step(state: GameState, center: int, avoid=()) -> Edge:
    for e in _uncolored_at(state, center, avoid):
        return e
    raise StrategyFault(f"no uncolored edge left at vertex {center}")


# ---------------------------------------------------------------------------
# Automorphism-based mirror
# ---------------------------------------------------------------------------

def automorphism_strategy(board: Graph, perm) -> Strategy:
    """B mirrors A through the edge action of a fixed-edge-free involution.

    The edge set splits into pairs {e, e'}, so the reply is always available;
    after every B move the involution itself is a red/blue isomorphism.
    """
    perm = tuple(perm)
    report = morphisms.classify_involution(board, perm)
    if not report.involutory or report.fixed_edges:
        raise ValueError("permutation is not a fixed-edge-free involution of the board")

    def choose(state: GameState) -> Edge:
        if state.to_move() != "B" or not state.history:
            raise StrategyFault("mirror strategy must reply to an opponent move")
        reply = morphisms.apply_edge(perm, state.history[-1])
        if reply in state.colored():
            raise StrategyFault(f"mirror reply {reply} already colored")
        return reply

    return Strategy(name="automorphism-mirror", choose=choose)


# ---------------------------------------------------------------------------
# (K_n, P_2) defender
# ---------------------------------------------------------------------------

def _is_path(edges) -> bool:
    if not edges:
        return False
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if max(deg.values()) > 2 or len(edges) != len(deg) - 1:
        return False
    ends = [v for v, d in deg.items() if d == 1]
    if len(ends) != 2:
        return False
    # connectivity walk from one end
    adj: dict[int, list[int]] = {v: [] for v in deg}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {ends[0]}
    stack = [ends[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(deg)


def _is_matching(edges) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def kn_p2_defender(n: int) -> Strategy:
    """B's winning strategy in the avoidance game on K_n with forbidden P_2:
    keep the union of both colors a path while the red edges form a matching;
    when n is even and the board runs out of fresh vertices at round n/2, close
    the Hamiltonian cycle instead."""
    if n < 3:
        raise ValueError("defender needs n >= 3")

    def choose(state: GameState) -> Edge:
        board = state.board
        if board.order != n or board.size != n * (n - 1) // 2:
            raise StrategyFault("board is not the complete graph this defender was built for")
        if state.to_move() != "B":
            raise StrategyFault("kn-p2 defender plays B")
        if not _is_matching(state.red):
            raise StrategyFault("opponent already lost; defender should not be consulted")
        union = set(state.red) | set(state.blue)
        candidates = []
        for e in state.uncolored():
            if not _is_matching(state.blue | {e}):
                continue
            if _is_path(union | {e}):
                candidates.append(e)
        if candidates:
            return min(candidates)
        # exceptional case: n even, round n/2, every vertex already on the path
        i = len(state.red)
        if n % 2 == 0 and i == n // 2:
            deg: dict[int, int] = {}
            for u, v in union:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            ends = sorted(v for v, d in deg.items() if d == 1)
            if len(ends) == 2:
                e = edge(*ends)
                if e not in state.colored() and _is_matching(state.blue | {e}):
                    return e
        raise StrategyFault("no path-extending reply available")

    return Strategy(name=f"kn-p2-defender({n})", choose=choose)


# ---------------------------------------------------------------------------
# K_n symmetry breaker
# ---------------------------------------------------------------------------

def _blue_path(state: GameState):
    """(center, endpoints) of the blue 2-path after round 2, else None."""
    blue = sorted(state.blue)
    if len(blue) != 2:
        return None
    (a, b), (c, d) = blue
    shared = {a, b} & {c, d}
    if len(shared) != 1:
        return None
    q = shared.pop()
    ends = ({a, b} | {c, d}) - {q}
    return q, tuple(sorted(ends))


def kn_symmetry_breaker(n: int) -> Strategy:
    """A's strategy violating red/blue isomorphism on K_n by round n-1.

    Rounds 1-2 build two adjacent red edges with at least one adjacent to B's
    first edge, keeping the red center free of blue.  Round 3 classifies the
    position: complete a red triangle when blue cannot mirror one, otherwise
    race a star from the red center (capping the blue center first when it is
    still untouched by red).
    """
    if n < 4:
        raise ValueError("breaker needs n >= 4")

    def choose(state: GameState) -> Edge:
        if state.to_move() != "A":
            raise StrategyFault("breaker plays A")
        k = len(state.history)
        if k == 0:
            return (0, 1)
        a1 = state.history[0]
        if k == 2:
            b1 = state.history[1]
            shared = set(a1) & set(b1)
            if not shared:
                cands = [edge(u, v) for u in a1 for v in b1]
            else:
                t = (set(a1) - shared).pop()
                cands = [e for e in _uncolored_at(state, t)]
            cands = [e for e in cands if e not in state.colored()]
            if not cands:
                raise StrategyFault("no second move available")
            return min(cands)
        a2 = state.history[2]
        center = (set(a1) & set(a2)).pop()
        arms = tuple(sorted((set(a1) | set(a2)) - {center}))
        if k == 4:
            chord = edge(*arms)
            path = _blue_path(state)
            if path is not None:
                q, ends = path
                blue_chord = edge(*ends)
                if chord not in state.colored() and (blue_chord == chord or blue_chord in state.red):
                    return chord
                if not any(edge(q, w) in state.red for w in range(n) if w != q):
                    cap = edge(center, q)
                    if cap not in state.colored() and cap in state.board.edges:
                        return cap
        return _star_step(state, center)

    return Strategy(name=f"kn-symmetry-breaker({n})", choose=choose)


# ---------------------------------------------------------------------------
# Product counterexample breakers
# ---------------------------------------------------------------------------

PRODUCT_BOARDS = ("cartesianK3eP2", "lexiP2K3e", "categoricalK3eK3e")


def product_board(which: str) -> Graph:
    """The three product counterexample boards, in generator labeling."""
    k3e = triangle_plus_edge()
    if which == "cartesianK3eP2":
        return cartesian(k3e, path_graph(2))
    if which == "lexiP2K3e":
        return lexicographic(path_graph(2), k3e)
    if which == "categoricalK3eK3e":
        return categorical(k3e, k3e)
    raise ValueError(f"unknown product board {which!r}")


def _cartesian_breaker() -> Strategy:
    # vertex labels in cartesian(K3+e, P_2), pair (u, w) -> 3u + w
    v = 7        # (2,1): the unique vertex of degree 5
    v1, v2 = 1, 4  # (0,1) and (1,1): degree 4, adjacent to v and to each other

    def pendant_step(state: GameState) -> Edge:
        red_leaves = sorted(w for e in state.red for w in e
                            if v in e and w != v)
        pend = {w: False for w in red_leaves}
        for a, b in state.red:
            if v not in (a, b):
                for w in (a, b):
                    if w in pend:
                        pend[w] = True
        for leaf in red_leaves:
            if pend[leaf]:
                continue
            for e in _uncolored_at(state, leaf, avoid=(v,)):
                return e
        raise StrategyFault("no pendant move left")

    def choose(state: GameState) -> Edge:
        if state.to_move() != "A":
            raise StrategyFault("breaker plays A")
        k = len(state.history)
        if k == 0:
            return edge(v, v1)
        b1 = state.history[1]
        if v not in b1:
            # blue never capped v: race to the 5-star
            try:
                return _star_step(state, v)
            except StrategyFault:
                return pendant_step(state)
        if b1 != edge(v, v2):
            if k == 2:
                return edge(v, v2)
            if k == 4:
                chord = edge(v1, v2)
                if chord not in state.colored():
                    return chord  # red triangle v, v1, v2
            try:
                return _star_step(state, v)
            except StrategyFault:
                return pendant_step(state)
        # main line of the figure: fill the star at v, then attach a new edge
        # to every leaf of the red star
        if any(True for _ in _uncolored_at(state, v)):
            return _star_step(state, v)
        return pendant_step(state)

    return Strategy(name="product-breaker(cartesianK3eP2)", choose=choose)


def _lexi_breaker() -> Strategy:
    # vertex labels in P_2[K3+e], pair (i, j) -> 4i + j; middle copy is i=1
    v1, v2, v3 = 6, 4, 5   # degrees 11, 10, 10
    u4 = 3                 # pendant vertex of the first outer copy

    def choose(state: GameState) -> Edge:
        if state.to_move() != "A":
            raise StrategyFault("breaker plays A")
        k = len(state.history)
        if k == 0:
            return edge(v1, v2)
        b1 = state.history[1]
        if b1 != edge(v1, v3):
            if k == 2 and edge(v1, v3) not in state.colored():
                return edge(v1, v3)
            return _star_step(state, v1)
        if k == 2:
            return edge(v1, u4)
        b2 = state.history[3]
        if v1 in b2:
            return _star_step(state, v1)
        if v3 not in b2:
            return _star_step(state, v1)  # blue fell apart; keep the v1 race
        x = b2[0] if b2[1] == v3 else b2[1]
        if x in (v2, u4):
            if k == 4 and edge(u4, v2) not in state.colored():
                return edge(u4, v2)  # red triangle v1, v2, u4
            return _star_step(state, v1)
        if k == 4:
            return edge(v2, v3)
        b3 = state.history[5]
        if b3 == edge(x, v2):
            if k == 6 and edge(u4, v3) not in state.colored():
                return edge(u4, v3)  # red quadrilateral v1, v2, v3, u4
            return _star_step(state, v2)
        return _star_step(state, v2)  # race to K_{1,10} at v2

    return Strategy(name="product-breaker(lexiP2K3e)", choose=choose)


def _categorical_breaker() -> Strategy:
    v = 10  # (2,2): the unique vertex of degree 9

    def choose(state: GameState) -> Edge:
        if state.to_move() != "A":
            raise StrategyFault("breaker plays A")
        return _star_step(state, v)

    return Strategy(name="product-breaker(categoricalK3eK3e)", choose=choose)


def product_breaker(which: str) -> Strategy:
    if which == "cartesianK3eP2":
        return _cartesian_breaker()
    if which == "lexiP2K3e":
        return _lexi_breaker()
    if which == "categoricalK3eK3e":
        return _categorical_breaker()
    raise ValueError(f"unknown product breaker {which!r}")
