/** Pure mapping from server responses to what the board shows.
 *
 * No rule evaluation happens here: edge colors come from the server's
 * red/blue lists, the banner from its status, the loss highlight from its
 * losing_copy, and the symmetry lamp from its red_blue_isomorphic flag,
 * which is only re-read after engine moves (the round checkpoints).
 */

import type { EdgePair, GameStateWire, MoveResponse, Side } from "./api.js";

export type EdgeVisual = "uncolored" | "red" | "blue";

export interface EdgeView {
  edge: EdgePair;
  visual: EdgeVisual;
  lastMove: boolean;
  losing: boolean;
}

export interface BoardViewModel {
  edges: EdgeView[];
  banner: string;
  /** null until the engine has moved at least once */
  symmetryIndicator: boolean | null;
  inputEnabled: boolean;
  finished: boolean;
}

function sameEdge(a: EdgePair, b: EdgePair): boolean {
  return (a[0] === b[0] && a[1] === b[1]) || (a[0] === b[1] && a[1] === b[0]);
}

function containsEdge(list: EdgePair[], e: EdgePair): boolean {
  return list.some((x) => sameEdge(x, e));
}

export function bannerText(state: GameStateWire, humanSide: Side): string {
  switch (state.status) {
    case "InProgress":
      return state.to_move === humanSide ? "Your move" : "Engine to move";
    case "Drawn":
      return "Drawn: board full, nobody completed the forbidden graph";
    case "ALost":
      return humanSide === "A" ? "You lose: red completed the forbidden graph"
                               : "You win: the engine completed the forbidden graph";
    case "BLost":
      return humanSide === "B" ? "You lose: blue completed the forbidden graph"
                               : "You win: the engine completed the forbidden graph";
  }
}

export function buildViewModel(
  state: GameStateWire,
  lastResponse: MoveResponse | null,
  humanSide: Side,
  previousSymmetry: boolean | null,
): BoardViewModel {
  const lastMoves: EdgePair[] = [];
  if (lastResponse) {
    lastMoves.push(lastResponse.human_move);
    if (lastResponse.engine_move) lastMoves.push(lastResponse.engine_move);
  }
  const edges: EdgeView[] = state.edges.map((e) => ({
    edge: e,
    visual: containsEdge(state.red, e) ? "red"
      : containsEdge(state.blue, e) ? "blue" : "uncolored",
    lastMove: containsEdge(lastMoves, e),
    losing: containsEdge(state.losing_copy, e),
  }));
  const engineMoved = lastResponse?.engine_move != null;
  const symmetryIndicator = engineMoved ? state.red_blue_isomorphic : previousSymmetry;
  return {
    edges,
    banner: bannerText(state, humanSide),
    symmetryIndicator,
    inputEnabled: state.status === "InProgress" && state.to_move === humanSide,
    finished: state.status !== "InProgress",
  };
}
