"use strict";
/** UI-expectation side of the contract: feed the recorded server responses
 * through the pure view layer and check what the board would show. */
var __createBinding = (this && this.__createBinding) || (Object.create ? (function(o, m, k, k2) {
    if (k2 === undefined) k2 = k;
    var desc = Object.getOwnPropertyDescriptor(m, k);
    if (!desc || ("get" in desc ? !m.__esModule : desc.writable || desc.configurable)) {
      desc = { enumerable: true, get: function() { return m[k]; } };
    }
    Object.defineProperty(o, k2, desc);
}) : (function(o, m, k, k2) {
    if (k2 === undefined) k2 = k;
    o[k2] = m[k];
}));
var __setModuleDefault = (this && this.__setModuleDefault) || (Object.create ? (function(o, v) {
    Object.defineProperty(o, "default", { enumerable: true, value: v });
}) : function(o, v) {
    o["default"] = v;
});
var __importStar = (this && this.__importStar) || function (mod) {
    if (mod && mod.__esModule) return mod;
    var result = {};
    if (mod != null) for (var k in mod) if (k !== "default" && Object.prototype.hasOwnProperty.call(mod, k)) __createBinding(result, mod, k);
    __setModuleDefault(result, mod);
    return result;
};
var __importDefault = (this && this.__importDefault) || function (mod) {
    return (mod && mod.__esModule) ? mod : { "default": mod };
};
Object.defineProperty(exports, "__esModule", { value: true });
const node_test_1 = require("node:test");
const strict_1 = __importDefault(require("node:assert/strict"));
const fs = __importStar(require("node:fs"));
const path = __importStar(require("node:path"));
const view_js_1 = require("../src/view.js");
const layout_js_1 = require("../src/layout.js");
const graph6_js_1 = require("../src/graph6.js");
const FIXTURES = path.join(__dirname, "..", "..", "fixtures");
function load(name) {
    return JSON.parse(fs.readFileSync(path.join(FIXTURES, `${name}.json`), "utf-8"));
}
function okSteps(fx) {
    return fx.steps.filter((s) => s.http_status === 200)
        .map((s) => s.response);
}
(0, node_test_1.test)("sim loss: banner reads as a loss and the forbidden copy is highlighted", () => {
    const fx = load("sim_loss_line");
    const steps = okSteps(fx);
    let symmetry = null;
    let model = (0, view_js_1.buildViewModel)(fx.created.state, null, "A", symmetry);
    strict_1.default.equal(model.banner, "Your move");
    strict_1.default.equal(model.inputEnabled, true);
    for (const resp of steps) {
        model = (0, view_js_1.buildViewModel)(resp.state, resp, "A", symmetry);
        symmetry = model.symmetryIndicator;
    }
    strict_1.default.equal(model.finished, true);
    strict_1.default.match(model.banner, /You lose/);
    const losing = model.edges.filter((e) => e.losing);
    strict_1.default.equal(losing.length, 3); // the completed triangle
    strict_1.default.ok(losing.every((e) => e.visual === "red")); // it is the human's color
    strict_1.default.equal(model.inputEnabled, false);
});
(0, node_test_1.test)("c4 mirror demo: the symmetry lamp stays on after every engine move", () => {
    const fx = load("c4_automorphism_demo");
    let symmetry = null;
    for (const resp of okSteps(fx)) {
        const model = (0, view_js_1.buildViewModel)(resp.state, resp, "A", symmetry);
        symmetry = model.symmetryIndicator;
        if (resp.engine_move) {
            strict_1.default.equal(model.symmetryIndicator, true);
            const last = model.edges.filter((e) => e.lastMove);
            strict_1.default.equal(last.length, 2); // human move + engine reply
        }
    }
    const finalResp = okSteps(fx).at(-1);
    strict_1.default.equal(finalResp.state.status, "Drawn");
    strict_1.default.equal((0, view_js_1.bannerText)(finalResp.state, "A"), "Drawn: board full, nobody completed the forbidden graph");
});
(0, node_test_1.test)("rejected moves carry an error and no state", () => {
    const fx = load("illegal_move_rejection");
    for (const step of fx.steps) {
        if (step.http_status === 409) {
            strict_1.default.ok("error" in step.response && typeof step.response.error === "string");
            strict_1.default.ok(!("state" in step.response)); // nothing for the UI to redraw
        }
    }
    // the moves list only ever grows through accepted moves
    const accepted = okSteps(fx);
    strict_1.default.equal(accepted.at(-1).state.moves.length, 2 * accepted.length);
});
(0, node_test_1.test)("view colors come from the server lists verbatim", () => {
    const fx = load("sim_loss_line");
    const resp = okSteps(fx)[1];
    const model = (0, view_js_1.buildViewModel)(resp.state, resp, "A", null);
    const reds = model.edges.filter((e) => e.visual === "red").map((e) => e.edge);
    strict_1.default.deepEqual(reds, resp.state.red);
    const blues = model.edges.filter((e) => e.visual === "blue").map((e) => e.edge);
    strict_1.default.deepEqual(blues, resp.state.blue);
});
(0, node_test_1.test)("circular layout spreads distinct points on a circle", () => {
    const pts = (0, layout_js_1.circularLayout)(6, 520, 520);
    strict_1.default.equal(pts.length, 6);
    const seen = new Set(pts.map((p) => `${Math.round(p.x)},${Math.round(p.y)}`));
    strict_1.default.equal(seen.size, 6);
    const r = Math.hypot(pts[0].x - 260, pts[0].y - 260);
    for (const p of pts) {
        strict_1.default.ok(Math.abs(Math.hypot(p.x - 260, p.y - 260) - r) < 1e-6);
    }
});
(0, node_test_1.test)("grid layout is row-major like the service's pair encoding", () => {
    const pts = (0, layout_js_1.gridLayout)(4, 3, 520, 520);
    strict_1.default.equal(pts.length, 12);
    // vertex v = u1*3 + u2: same row means same y, same column same x
    strict_1.default.equal(pts[0].y, pts[2].y);
    strict_1.default.equal(pts[0].x, pts[3].x);
    strict_1.default.ok(pts[0].y < pts[3].y);
    strict_1.default.ok(pts[0].x < pts[1].x);
});
(0, node_test_1.test)("layoutFor falls back to a circle when the hint does not fit", () => {
    const pts = (0, layout_js_1.layoutFor)(5, { type: "grid", rows: 4, cols: 3 }, 520, 520);
    strict_1.default.equal(pts.length, 5);
});
(0, node_test_1.test)("graph6 decoder agrees with the service's edge lists", () => {
    for (const name of ["sim_loss_line", "c4_automorphism_demo"]) {
        const fx = load(name);
        const decoded = (0, graph6_js_1.decodeGraph6)(fx.created.state.graph6);
        strict_1.default.equal(decoded.order, fx.created.state.order);
        strict_1.default.deepEqual(decoded.edges, fx.created.state.edges);
        if (fx.created.state.forbidden) {
            const f = (0, graph6_js_1.decodeGraph6)(fx.created.state.forbidden);
            strict_1.default.ok(f.edges.length > 0);
        }
    }
});
//# sourceMappingURL=view.test.js.map