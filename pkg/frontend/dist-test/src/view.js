"use strict";
/** Pure mapping from server responses to what the board shows.
 *
 * No rule evaluation happens here: edge colors come from the server's
 * red/blue lists, the banner from its status, the loss highlight from its
 * losing_copy, and the symmetry lamp from its red_blue_isomorphic flag,
 * which is only re-read after engine moves (the round checkpoints).
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.bannerText = bannerText;
exports.buildViewModel = buildViewModel;
function sameEdge(a, b) {
    return (a[0] === b[0] && a[1] === b[1]) || (a[0] === b[1] && a[1] === b[0]);
}
function containsEdge(list, e) {
    return list.some((x) => sameEdge(x, e));
}
function bannerText(state, humanSide) {
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
function buildViewModel(state, lastResponse, humanSide, previousSymmetry) {
    const lastMoves = [];
    if (lastResponse) {
        lastMoves.push(lastResponse.human_move);
        if (lastResponse.engine_move)
            lastMoves.push(lastResponse.engine_move);
    }
    const edges = state.edges.map((e) => ({
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
//# sourceMappingURL=view.js.map