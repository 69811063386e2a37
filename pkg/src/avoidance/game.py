"""Avoidance-game state machine.

Player A colors edges red, player B blue, strictly alternating with A first.
With a forbidden graph F, the player whose own color first contains a
subgraph copy of F loses; with no forbidden graph the game is a pure
symmetry game and simply runs until the board is full.

States are immutable; apply_move returns a new state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .graphs import Edge, Graph, edge
from . import morphisms


class GameError(Exception):
    pass


class IllegalMoveError(GameError):
    """The requested edge is out of range or already colored."""


class StrategyFault(GameError):
    """A scripted strategy was consulted outside the positions its contract
    covers.  Distinct from an illegal move: a fault is a test signal."""


class Status:
    IN_PROGRESS = "InProgress"
    A_LOST = "ALost"
    B_LOST = "BLost"
    DRAWN = "Drawn"


RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class GameState:
    board: Graph
    forbidden: Optional[Graph]
    red: frozenset[Edge]
    blue: frozenset[Edge]
    history: tuple[Edge, ...]
    status: str = Status.IN_PROGRESS
    losing_copy: tuple[Edge, ...] = ()

    def colored(self) -> frozenset[Edge]:
        return self.red | self.blue

    def uncolored(self) -> tuple[Edge, ...]:
        taken = self.colored()
        return tuple(e for e in self.board.edge_list if e not in taken)

    def to_move(self) -> str:
        return "A" if len(self.history) % 2 == 0 else "B"

    def round_number(self) -> int:
        """Completed rounds (a round is one A move plus one B move)."""
        return len(self.blue)

    def transcript(self) -> dict:
        from . import graph6
        return {
            "graph": graph6.encode(self.board),
            "forbidden": graph6.encode(self.forbidden) if self.forbidden else None,
            "moves": [list(e) for e in self.history],
            "status": self.status,
        }


def new_game(board: Graph, forbidden: Optional[Graph] = None) -> GameState:
    if forbidden is not None and forbidden.size == 0:
        raise ValueError("forbidden graph must have at least one edge")
    return GameState(board, forbidden, frozenset(), frozenset(), ())


def color_masks(board: Graph, edges) -> list[int]:
    masks = [0] * board.order
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def find_mono_copy(board: Graph, edges, forbidden: Graph, anchor: Edge | None = None):
    """Edges of a copy of the forbidden graph inside the given edge set, or
    None.  With an anchor, only copies through that edge are searched."""
    mapping = morphisms.embed_pattern(color_masks(board, edges), forbidden, anchor)
    if mapping is None:
        return None
    return tuple(sorted(
        edge(mapping[u], mapping[v]) for u, v in forbidden.edges
    ))


def apply_move(state: GameState, move: Edge) -> GameState:
    if state.status != Status.IN_PROGRESS:
        raise IllegalMoveError(f"game is over ({state.status})")
    move = edge(*move)
    if move not in state.board.edges:
        raise IllegalMoveError(f"{move} is not an edge of the board")
    if move in state.red or move in state.blue:
        raise IllegalMoveError(f"{move} is already colored")
    mover = state.to_move()
    if mover == "A":
        red, blue = state.red | {move}, state.blue
        own = red
    else:
        red, blue = state.red, state.blue | {move}
        own = blue
    history = state.history + (move,)
    status = Status.IN_PROGRESS
    losing_copy: tuple[Edge, ...] = ()
    if state.forbidden is not None:
        copy = find_mono_copy(state.board, own, state.forbidden, anchor=move)
        if copy is not None:
            status = Status.A_LOST if mover == "A" else Status.B_LOST
            losing_copy = copy
    if status == Status.IN_PROGRESS and len(history) == state.board.size:
        status = Status.DRAWN
    return GameState(state.board, state.forbidden, red, blue, history, status, losing_copy)


def contains_mono_copy(state: GameState, color: str) -> bool:
    """Does the red (or blue) subgraph contain a copy of the forbidden graph?"""
    if state.forbidden is None:
        raise ValueError("game has no forbidden graph")
    edges = state.red if color == RED else state.blue
    return find_mono_copy(state.board, edges, state.forbidden) is not None


def edge_subgraph(edges) -> Graph:
    """The abstract graph spanned by an edge set (non-isolated vertices only)."""
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    return Graph.build(len(verts), ((index[u], index[v]) for u, v in edges))


def red_blue_isomorphic(state: GameState) -> bool:
    """Are the red and blue edge-subgraphs isomorphic as graphs?"""
    if len(state.red) != len(state.blue):
        return False
    return morphisms.find_isomorphism(
        edge_subgraph(state.red), edge_subgraph(state.blue)) is not None


def replay_transcript(obj: dict) -> GameState:
    """Re-run a serialized transcript through the engine, validating every
    move; returns the final state."""
    from . import graph6
    board = graph6.decode(obj["graph"])
    forbidden = graph6.decode(obj["forbidden"]) if obj.get("forbidden") else None
    state = new_game(board, forbidden)
    for mv in obj.get("moves", []):
        state = apply_move(state, tuple(mv))
    return state


@dataclass(frozen=True)
class Strategy:
    """Deterministic map from the current state (board, forbidden, history)
    to the next edge."""

    name: str
    choose: Callable[[GameState], Edge] = field(repr=False)

    def __call__(self, state: GameState) -> Edge:
        move = edge(*self.choose(state))
        if move not in state.board.edges or move in state.colored():
            raise StrategyFault(f"{self.name} proposed unavailable edge {move}")
        return move
