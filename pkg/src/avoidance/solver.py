"""Exhaustive adversarial search for the symmetry and avoidance games.

decide_symm answers whether the second player can keep the red and blue
subgraphs isomorphic after every one of the first floor(m/2) rounds;
solve_avoidance computes the optimal-play outcome of an avoidance game.
Both searches memoize on a canonical key of the 2-colored position: the
minimum of the (red, blue) bitmask pair over the board's automorphism group
acting on edge indices.  Red and blue are never interchanged (A moves first).

Budgets are first-class: exceeding the node budget yields an explicit
BudgetExceeded outcome, never a silently wrong answer.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graphs import Edge, Graph
from .game import (GameState, Status, Strategy, StrategyFault, apply_move,
                   edge_subgraph, new_game, red_blue_isomorphic)
from . import morphisms


class _BudgetExceeded(Exception):
    pass


MEMBER = "Member"
NON_MEMBER = "NonMember"
BUDGET_EXCEEDED = "BudgetExceeded"
A_LOSES = "ALoses"
B_LOSES = "BLoses"
DRAWN = "Drawn"

DEFAULT_NODE_BUDGET = 10 ** 8


@dataclass
class SolveStats:
    nodes: int = 0
    memo_hits: int = 0
    elapsed: float = 0.0


@dataclass
class SolveResult:
    outcome: str
    certificate: Optional[dict]
    stats: SolveStats


# ---------------------------------------------------------------------------
# Board context: edge indexing and position canonicalization
# ---------------------------------------------------------------------------

class BoardContext:
    """Edge indexing plus the board's automorphism group acting on edge
    bitmask positions."""

    def __init__(self, board: Graph):
        self.board = board
        self.edges = board.edge_list
        self.m = len(self.edges)
        self.eindex = {e: i for i, e in enumerate(self.edges)}
        self.full = (1 << self.m) - 1
        self._eperms = None
        self._canon = None

    @property
    def edge_perms(self) -> list[tuple[int, ...]]:
        if self._eperms is None:
            perms = set()
            for p in morphisms.enumerate_automorphisms(self.board):
                perms.add(tuple(self.eindex[morphisms.apply_edge(p, e)] for e in self.edges))
            self._eperms = sorted(perms)
        return self._eperms

    def mask_of(self, edges) -> int:
        mask = 0
        for e in edges:
            mask |= 1 << self.eindex[e]
        return mask

    def edges_of(self, mask: int) -> list[Edge]:
        return [self.edges[i] for i in _bits(mask)]

    def canon(self, red: int, blue: int) -> int:
        if self._canon is None:
            self._canon = self._build_canon()
        return self._canon(red, blue)

    def _build_canon(self):
        perms = self.edge_perms
        m = self.m
        if len(perms) == 1:
            return lambda red, blue: (red << m) | blue
        if len(perms) >= 24 and m <= 26:
            return self._build_canon_numpy(perms)

        def canon(red: int, blue: int) -> int:
            best = None
            for t in perms:
                rr = 0
                x = red
                while x:
                    low = x & -x
                    rr |= 1 << t[low.bit_length() - 1]
                    x ^= low
                bb = 0
                x = blue
                while x:
                    low = x & -x
                    bb |= 1 << t[low.bit_length() - 1]
                    x ^= low
                key = (rr << m) | bb
                if best is None or key < best:
                    best = key
            return best

        return canon

    def _build_canon_numpy(self, perms):
        # mask -> permuted mask, tabulated in two halves per automorphism
        m = self.m
        h = (m + 1) // 2
        lowmask = (1 << h) - 1
        naut = len(perms)
        tlo = np.zeros((naut, 1 << h), dtype=np.int64)
        thi = np.zeros((naut, 1 << (m - h)), dtype=np.int64)
        for ai, t in enumerate(perms):
            row = tlo[ai]
            for i in range(h):
                step = 1 << i
                row[step:2 * step] = row[:step] | (1 << t[i])
            row = thi[ai]
            for i in range(m - h):
                step = 1 << i
                row[step:2 * step] = row[:step] | (1 << t[h + i])

        def canon(red: int, blue: int) -> int:
            rr = tlo[:, red & lowmask] | thi[:, red >> h]
            bb = tlo[:, blue & lowmask] | thi[:, blue >> h]
            return int(((rr << m) | bb).min())

        return canon

    def stabilizer_orbit_reps(self, red: int, blue: int, free: int) -> list[int]:
        """One uncolored-edge index per orbit of the position's stabilizer."""
        stab = [t for t in self.edge_perms
                if _apply_eperm(t, red) == red and _apply_eperm(t, blue) == blue]
        if len(stab) == 1:
            return list(_bits(free))
        seen = 0
        reps = []
        for i in _bits(free):
            if (seen >> i) & 1:
                continue
            reps.append(i)
            for t in stab:
                seen |= 1 << t[i]
        return reps


def _apply_eperm(t, mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << t[low.bit_length() - 1]
        mask ^= low
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# decide_symm
# ---------------------------------------------------------------------------

def decide_symm(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET,
                time_budget: float | None = None,
                pruning: str = "none", memoize: bool = True) -> SolveResult:
    """Can B keep red and blue isomorphic after every round up to floor(m/2)?

    Minimax over (red, blue) positions; B wins a branch once the obligation
    rounds are exhausted.  The certificate is a full reply table for Member
    and a breaking line for NonMember.
    """
    start = time.monotonic()
    stats = SolveStats()
    m = g.size
    target = m // 2
    if target == 0:
        stats.elapsed = time.monotonic() - start
        return SolveResult(MEMBER, {"type": "strategy-table", "table": []}, stats)

    deadline = start + time_budget if time_budget is not None else None
    ctx = BoardContext(g)
    memo: dict[int, bool] = {}
    iso_keys: dict[int, object] = {}

    def subgraph_key(mask: int):
        got = iso_keys.get(mask)
        if got is None:
            got = morphisms.canonical_form(edge_subgraph(ctx.edges_of(mask)))
            iso_keys[mask] = got
        return got

    def iso(red: int, blue: int) -> bool:
        return subgraph_key(red) == subgraph_key(blue)

    def b_wins_a_to_move(red: int, blue: int) -> bool:
        stats.nodes += 1
        if stats.nodes > node_budget:
            raise _BudgetExceeded
        if deadline is not None and stats.nodes % 256 == 0 and time.monotonic() > deadline:
            raise _BudgetExceeded
        key = None
        if memoize:
            key = ctx.canon(red, blue) * 2
            got = memo.get(key)
            if got is not None:
                stats.memo_hits += 1
                return got
        free = ctx.full & ~(red | blue)
        moves = (ctx.stabilizer_orbit_reps(red, blue, free)
                 if pruning == "orbit" else _bits(free))
        result = True
        for i in moves:
            if not b_wins_b_to_move(red | (1 << i), blue):
                result = False
                break
        if key is not None:
            memo[key] = result
        return result

    def b_wins_b_to_move(red: int, blue: int) -> bool:
        stats.nodes += 1
        if stats.nodes > node_budget:
            raise _BudgetExceeded
        if deadline is not None and stats.nodes % 256 == 0 and time.monotonic() > deadline:
            raise _BudgetExceeded
        key = None
        if memoize:
            key = ctx.canon(red, blue) * 2 + 1
            got = memo.get(key)
            if got is not None:
                stats.memo_hits += 1
                return got
        free = ctx.full & ~(red | blue)
        nblue = _popcount(blue) + 1
        result = False
        for i in _bits(free):
            blue2 = blue | (1 << i)
            if iso(red, blue2) and (nblue == target or b_wins_a_to_move(red, blue2)):
                result = True
                break
        if key is not None:
            memo[key] = result
        return result

    try:
        member = b_wins_a_to_move(0, 0)
    except _BudgetExceeded:
        stats.elapsed = time.monotonic() - start
        return SolveResult(BUDGET_EXCEEDED, None, stats)

    if member:
        cert = {"type": "strategy-table", "table": _member_table(ctx, target, iso, b_wins_a_to_move)}
    else:
        cert = {"type": "breaking-line", "moves": _breaking_line(ctx, target, iso, b_wins_a_to_move, b_wins_b_to_move)}
    stats.elapsed = time.monotonic() - start
    return SolveResult(MEMBER if member else NON_MEMBER, cert, stats)


def _member_table(ctx: BoardContext, target, iso, b_wins_a_to_move) -> list[dict]:
    """Explicit reply book: every A continuation against B's winning strategy."""
    table = []
    seen = set()

    def walk(red: int, blue: int):
        if _popcount(blue) == target or (red, blue) in seen:
            return
        seen.add((red, blue))
        free = ctx.full & ~(red | blue)
        for i in _bits(free):
            red2 = red | (1 << i)
            nblue = _popcount(blue) + 1
            reply = None
            for j in _bits(ctx.full & ~(red2 | blue)):
                blue2 = blue | (1 << j)
                if iso(red2, blue2) and (nblue == target or b_wins_a_to_move(red2, blue2)):
                    reply = j
                    break
            assert reply is not None, "member table walk contradicts solve"
            table.append({
                "red": [list(e) for e in ctx.edges_of(red2)],
                "blue": [list(e) for e in ctx.edges_of(blue)],
                "reply": list(ctx.edges[reply]),
            })
            walk(red2, blue | (1 << reply))

    walk(0, 0)
    return table


def _breaking_line(ctx: BoardContext, target, iso, b_wins_a_to_move, b_wins_b_to_move) -> list[list[int]]:
    """One A line ending in a position where every B reply breaks isomorphism."""
    moves: list[list[int]] = []
    red = blue = 0
    while True:
        free = ctx.full & ~(red | blue)
        amove = None
        for i in _bits(free):
            if not b_wins_b_to_move(red | (1 << i), blue):
                amove = i
                break
        assert amove is not None, "breaking line walk contradicts solve"
        red |= 1 << amove
        moves.append(list(ctx.edges[amove]))
        nblue = _popcount(blue) + 1
        reply = None
        for j in _bits(ctx.full & ~(red | blue)):
            blue2 = blue | (1 << j)
            if iso(red, blue2):
                if nblue == target or not b_wins_a_to_move(red, blue2):
                    reply = j
                    break
        if reply is None:
            return moves  # trapped: no isomorphism-preserving reply exists
        blue |= 1 << reply
        moves.append(list(ctx.edges[reply]))


def replay_breaking_line(g: Graph, moves) -> bool:
    """Check a NonMember line: B's replies keep isomorphism, and the final
    position leaves no isomorphism-preserving reply."""
    state = new_game(g, None)
    for k, mv in enumerate(moves):
        state = apply_move(state, tuple(mv))
        if k % 2 == 1 and not red_blue_isomorphic(state):
            return False
    if len(moves) % 2 != 1:
        return False
    for e in state.uncolored():
        if red_blue_isomorphic(apply_move(state, e)):
            return False
    return True


def replay_member_table(g: Graph, table) -> bool:
    """Check a Member certificate against every A branch it covers."""
    target = g.size // 2
    book = {}
    for row in table:
        key = (frozenset(tuple(e) for e in row["red"]), frozenset(tuple(e) for e in row["blue"]))
        book[key] = tuple(row["reply"])

    def walk(state: GameState) -> bool:
        if len(state.blue) == target:
            return True
        for e in state.uncolored():
            after_a = apply_move(state, e)
            key = (frozenset(after_a.red), frozenset(after_a.blue))
            reply = book.get(key)
            if reply is None:
                return False
            after_b = apply_move(after_a, reply)
            if not red_blue_isomorphic(after_b):
                return False
            if not walk(after_b):
                return False
        return True

    return walk(new_game(g, None))


# ---------------------------------------------------------------------------
# solve_avoidance
# ---------------------------------------------------------------------------

def solve_avoidance(g: Graph, f: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET,
                    time_budget: float | None = None,
                    pruning: str = "none") -> SolveResult:
    """Optimal-play outcome of the avoidance game (G, F).

    Each player prefers opponent-loses over a draw over losing; a move that
    completes the mover's own monochromatic F is immediately losing but legal.
    """
    if f.size == 0:
        raise ValueError("forbidden graph must have at least one edge")
    start = time.monotonic()
    stats = SolveStats()
    deadline = start + time_budget if time_budget is not None else None
    ctx = BoardContext(g)
    n = g.order
    memo: dict[int, int] = {}
    red_adj = [0] * n
    blue_adj = [0] * n

    def value(red: int, blue: int, red_to_move: bool) -> int:
        stats.nodes += 1
        if stats.nodes > node_budget:
            raise _BudgetExceeded
        if deadline is not None and stats.nodes % 256 == 0 and time.monotonic() > deadline:
            raise _BudgetExceeded
        key = ctx.canon(red, blue)
        got = memo.get(key)
        if got is not None:
            stats.memo_hits += 1
            return got
        own_adj = red_adj if red_to_move else blue_adj
        free = ctx.full & ~(red | blue)
        last_edge = free.bit_count() == 1
        best = -2
        moves = (ctx.stabilizer_orbit_reps(red, blue, free)
                 if pruning == "orbit" else _bits(free))
        for i in moves:
            u, v = ctx.edges[i]
            own_adj[u] |= 1 << v
            own_adj[v] |= 1 << u
            loses = morphisms.embed_pattern(own_adj, f, (u, v)) is not None
            if loses:
                cand = -1
            elif last_edge:
                cand = 0
            elif red_to_move:
                cand = -value(red | (1 << i), blue, False)
            else:
                cand = -value(red, blue | (1 << i), True)
            own_adj[u] &= ~(1 << v)
            own_adj[v] &= ~(1 << u)
            if cand > best:
                best = cand
                if best == 1:
                    break
        memo[key] = best
        return best

    try:
        root = value(0, 0, True)
    except _BudgetExceeded:
        stats.elapsed = time.monotonic() - start
        return SolveResult(BUDGET_EXCEEDED, None, stats)
    stats.elapsed = time.monotonic() - start
    outcome = {1: B_LOSES, 0: DRAWN, -1: A_LOSES}[root]
    cert = {"type": "game-value", "first_player_value": root}
    return SolveResult(outcome, cert, stats)


def best_avoidance_reply(state: GameState, *, node_budget: int = DEFAULT_NODE_BUDGET) -> Edge:
    """Deterministic optimal move for the player to move in an avoidance game
    position; used by the interactive service's "optimal" engine.

    For a pure symmetry game (no forbidden graph) B replies to preserve the
    red/blue isomorphism when possible, A tries to destroy it.
    """
    if state.forbidden is None:
        return _best_symmetry_reply(state)
    ctx = BoardContext(state.board)
    n = state.board.order
    red_adj = [0] * n
    blue_adj = [0] * n
    for u, v in state.red:
        red_adj[u] |= 1 << v
        red_adj[v] |= 1 << u
    for u, v in state.blue:
        blue_adj[u] |= 1 << v
        blue_adj[v] |= 1 << u
    memo: dict = {}
    stats = SolveStats()

    def value(red: int, blue: int, red_to_move: bool) -> int:
        stats.nodes += 1
        if stats.nodes > node_budget:
            raise _BudgetExceeded
        key = (red, blue)
        got = memo.get(key)
        if got is not None:
            return got
        own_adj = red_adj if red_to_move else blue_adj
        free = ctx.full & ~(red | blue)
        last_edge = free.bit_count() == 1
        best = -2
        for i in _bits(free):
            u, v = ctx.edges[i]
            own_adj[u] |= 1 << v
            own_adj[v] |= 1 << u
            loses = morphisms.embed_pattern(own_adj, state.forbidden, (u, v)) is not None
            if loses:
                cand = -1
            elif last_edge:
                cand = 0
            elif red_to_move:
                cand = -value(red | (1 << i), blue, False)
            else:
                cand = -value(red, blue | (1 << i), True)
            own_adj[u] &= ~(1 << v)
            own_adj[v] &= ~(1 << u)
            if cand > best:
                best = cand
                if best == 1:
                    break
        memo[key] = best
        return best

    red_mask = ctx.mask_of(state.red)
    blue_mask = ctx.mask_of(state.blue)
    red_to_move = state.to_move() == "A"
    own_adj = red_adj if red_to_move else blue_adj
    free = ctx.full & ~(red_mask | blue_mask)
    best_val, best_edge = -2, None
    for i in _bits(free):
        u, v = ctx.edges[i]
        own_adj[u] |= 1 << v
        own_adj[v] |= 1 << u
        loses = morphisms.embed_pattern(own_adj, state.forbidden, (u, v)) is not None
        if loses:
            cand = -1
        elif free.bit_count() == 1:
            cand = 0
        elif red_to_move:
            cand = -value(red_mask | (1 << i), blue_mask, False)
        else:
            cand = -value(red_mask, blue_mask | (1 << i), True)
        own_adj[u] &= ~(1 << v)
        own_adj[v] &= ~(1 << u)
        if cand > best_val:
            best_val, best_edge = cand, ctx.edges[i]
    if best_edge is None:
        raise StrategyFault("no legal move available")
    return best_edge


def _best_symmetry_reply(state: GameState) -> Edge:
    if state.to_move() == "B":
        for e in state.uncolored():
            if red_blue_isomorphic(apply_move(state, e)):
                return e
    for e in state.uncolored():
        return e
    raise StrategyFault("no legal move available")


def optimal_strategy(board: Graph, forbidden: Optional[Graph],
                     node_budget: int = DEFAULT_NODE_BUDGET) -> Strategy:
    def choose(state: GameState) -> Edge:
        return best_avoidance_reply(state, node_budget=node_budget)
    return Strategy(name="optimal", choose=choose)


# ---------------------------------------------------------------------------
# Strategy verification harness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Exhaustive:
    prune: bool = False


@dataclass(frozen=True)
class RandomAdversary:
    count: int
    seed: int


@dataclass(frozen=True)
class NeverLoses:
    pass


@dataclass(frozen=True)
class SymmetricAfterBMoves:
    pass


@dataclass(frozen=True)
class SymmetryBrokenBy:
    round: int


@dataclass
class VerifyReport:
    passed: bool
    subject: str
    property: str
    branches: int = 0
    violations: list = field(default_factory=list)

    def summary(self) -> str:
        verdict = "pass" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.subject} / {self.property}: {verdict} [{self.branches} branches]"


_MAX_RECORDED_VIOLATIONS = 50


def verify_strategy(g: Graph, f: Optional[Graph], subject: Strategy, side: str,
                    adversary, prop) -> VerifyReport:
    """Play the subject strategy against exhaustive or random adversaries and
    check a property on every explored line.

    A StrategyFault raised by the subject is recorded as a violation, not a
    crash.  Exhaustive exploration of a SymmetryBrokenBy property stops each
    branch as soon as the symmetry is broken.
    """
    report = VerifyReport(passed=True, subject=subject.name, property=_prop_name(prop))
    lost_status = Status.A_LOST if side == "A" else Status.B_LOST
    ctx = BoardContext(g) if isinstance(adversary, Exhaustive) and adversary.prune else None

    def record(state: GameState, detail: str):
        report.passed = False
        if len(report.violations) < _MAX_RECORDED_VIOLATIONS:
            report.violations.append({"moves": [list(e) for e in state.history],
                                      "detail": detail})

    def check_after(state: GameState, mover: str):
        """Returns 'stop' to close the branch, 'violation', or None."""
        if isinstance(prop, NeverLoses):
            if state.status == lost_status and mover == side:
                return "violation"
            return None
        if isinstance(prop, SymmetricAfterBMoves):
            if mover == "B" and not red_blue_isomorphic(state):
                return "violation"
            return None
        if isinstance(prop, SymmetryBrokenBy):
            if mover == "B":
                if not red_blue_isomorphic(state):
                    return "stop"
                if state.round_number() >= prop.round:
                    return "violation"
            return None
        raise ValueError(f"unknown property {prop!r}")

    def adversary_moves(state: GameState):
        if ctx is not None:
            red = ctx.mask_of(state.red)
            blue = ctx.mask_of(state.blue)
            free = ctx.full & ~(red | blue)
            return [ctx.edges[i] for i in ctx.stabilizer_orbit_reps(red, blue, free)]
        return state.uncolored()

    def walk(state: GameState) -> None:
        if state.status != Status.IN_PROGRESS or not state.uncolored():
            report.branches += 1
            if isinstance(prop, SymmetryBrokenBy):
                record(state, f"game ended with symmetry intact through round {state.round_number()}")
            return
        if state.to_move() == side:
            try:
                mv = subject(state)
            except StrategyFault as exc:
                report.branches += 1
                record(state, f"strategy fault: {exc}")
                return
            nxt = apply_move(state, mv)
            verdict = check_after(nxt, side)
            if verdict == "violation":
                report.branches += 1
                record(nxt, "property violated after subject move")
                return
            if verdict == "stop":
                report.branches += 1
                return
            walk(nxt)
        else:
            for mv in adversary_moves(state):
                nxt = apply_move(state, mv)
                verdict = check_after(nxt, "A" if side == "B" else "B")
                if verdict == "violation":
                    report.branches += 1
                    record(nxt, "property violated after adversary move")
                    continue
                if verdict == "stop":
                    report.branches += 1
                    continue
                walk(nxt)

    def random_playouts(count: int, seed: int) -> None:
        rng = random.Random(seed)
        for _ in range(count):
            state = new_game(g, f)
            while state.status == Status.IN_PROGRESS and state.uncolored():
                if state.to_move() == side:
                    try:
                        mv = subject(state)
                    except StrategyFault as exc:
                        record(state, f"strategy fault: {exc}")
                        break
                else:
                    mv = rng.choice(state.uncolored())
                mover = state.to_move()
                state = apply_move(state, mv)
                verdict = check_after(state, mover)
                if verdict == "violation":
                    record(state, "property violated")
                    break
                if verdict == "stop":
                    break
            else:
                if isinstance(prop, SymmetryBrokenBy):
                    record(state, "playout ended with symmetry intact")
            report.branches += 1

    if isinstance(adversary, Exhaustive):
        walk(new_game(g, f))
    elif isinstance(adversary, RandomAdversary):
        random_playouts(adversary.count, adversary.seed)
    else:
        raise ValueError(f"unknown adversary {adversary!r}")
    return report


def _prop_name(prop) -> str:
    if isinstance(prop, NeverLoses):
        return "NeverLoses"
    if isinstance(prop, SymmetricAfterBMoves):
        return "SymmetricAfterBMoves"
    if isinstance(prop, SymmetryBrokenBy):
        return f"SymmetryBrokenBy({prop.round})"
    return str(prop)


# ---------------------------------------------------------------------------
# Census enumeration and classification
# ---------------------------------------------------------------------------

def enumerate_graphs(max_order: int, exact_size: Optional[int] = None,
                     connected_only: bool = False):
    """One representative per isomorphism class, deterministic order.

    Graphs with isolated vertices are skipped for n >= 2 (their class already
    appeared at the smaller order), so a full census up to order 5 yields the
    34 classes of 5-vertex graphs.
    """
    if not 1 <= max_order <= 8:
        raise ValueError("max_order must be between 1 and 8")
    seen = set()
    for n in range(1, max_order + 1):
        all_edges = list(itertools.combinations(range(n), 2))
        sizes = [exact_size] if exact_size is not None else range(len(all_edges) + 1)
        for size in sizes:
            if size is None or size > len(all_edges) or size < 0:
                continue
            for combo in itertools.combinations(all_edges, size):
                if n >= 2:
                    covered = set()
                    for u, v in combo:
                        covered.add(u)
                        covered.add(v)
                    if len(covered) < n:
                        continue
                g = Graph.build(n, combo)
                if connected_only and not g.is_connected():
                    continue
                key = morphisms.canonical_form(g)
                if key not in seen:
                    seen.add(key)
                    yield g


@dataclass
class Classification:
    in_auto: bool
    in_symm: object  # True / False / "BudgetExceeded"
    witness: Optional[tuple]
    symm: SolveResult


def classify(g: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET,
             time_budget: float | None = None) -> Classification:
    """AUTO membership (with witness) plus SYMM membership for one graph."""
    witness = morphisms.find_fixed_edge_free_involution(g)
    result = decide_symm(g, node_budget=node_budget, time_budget=time_budget)
    in_symm: object
    if result.outcome == BUDGET_EXCEEDED:
        in_symm = BUDGET_EXCEEDED
    else:
        in_symm = result.outcome == MEMBER
    if witness is not None and in_symm is False:
        raise AssertionError("witness found but solver denies membership; solver bug")
    return Classification(witness is not None, in_symm, witness, result)


def _popcount(x: int) -> int:
    return x.bit_count()
