"use strict";
/** Live contract tests: start the Python service, replay the recorded
 * fixture sessions against it, and round-trip exported transcripts through
 * the command-line replayer. */
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
const node_child_process_1 = require("node:child_process");
const fs = __importStar(require("node:fs"));
const os = __importStar(require("node:os"));
const path = __importStar(require("node:path"));
const api_js_1 = require("../src/api.js");
const FIXTURES = path.join(__dirname, "..", "..", "fixtures");
let proc;
let api;
(0, node_test_1.before)(async () => {
    proc = (0, node_child_process_1.spawn)("python3", ["-m", "avoidance.cli", "serve", "--port", "0"], { stdio: ["ignore", "pipe", "inherit"] });
    const base = await new Promise((resolve, reject) => {
        const timer = setTimeout(() => reject(new Error("service did not start")), 15000);
        proc.stdout.on("data", (chunk) => {
            const m = chunk.toString().match(/http:\/\/[\d.]+:(\d+)/);
            if (m) {
                clearTimeout(timer);
                resolve(`http://127.0.0.1:${m[1]}`);
            }
        });
        proc.on("exit", (code) => reject(new Error(`service exited early (${code})`)));
    });
    api = new api_js_1.GameApi(base);
});
(0, node_test_1.after)(() => {
    proc.kill();
});
function load(name) {
    return JSON.parse(fs.readFileSync(path.join(FIXTURES, `${name}.json`), "utf-8"));
}
async function replayFixture(fx) {
    const created = await api.createGame(fx.create);
    strict_1.default.deepEqual(created.state, fx.created.state, `${fx.name}: initial state diverged`);
    for (const [i, step] of fx.steps.entries()) {
        if (step.http_status === 200) {
            const want = step.response;
            const got = await api.move(created.id, step.edge);
            strict_1.default.equal(got.state.status, want.state.status, `${fx.name} step ${i}: status`);
            strict_1.default.equal(got.state.red_blue_isomorphic, want.state.red_blue_isomorphic, `${fx.name} step ${i}: symmetry flag`);
            strict_1.default.deepEqual(got.engine_move, want.engine_move, `${fx.name} step ${i}: engine reply`);
            strict_1.default.deepEqual(got.state.losing_copy, want.state.losing_copy, `${fx.name} step ${i}: loss highlight`);
            strict_1.default.deepEqual(got.state.red, want.state.red);
            strict_1.default.deepEqual(got.state.blue, want.state.blue);
        }
        else {
            const beforeState = (await api.getGame(created.id)).state;
            await strict_1.default.rejects(api.move(created.id, step.edge), (err) => {
                strict_1.default.ok(err instanceof api_js_1.ApiError);
                strict_1.default.equal(err.status, step.http_status, `${fx.name} step ${i}: code`);
                return true;
            });
            const afterState = (await api.getGame(created.id)).state;
            strict_1.default.deepEqual(afterState, beforeState, `${fx.name} step ${i}: rejected move changed state`);
        }
    }
    return created.id;
}
async function transcriptRoundTrip(fx, id) {
    const transcript = await api.transcript(id);
    strict_1.default.deepEqual(transcript, fx.transcript, `${fx.name}: transcript diverged`);
    const file = path.join(fs.mkdtempSync(path.join(os.tmpdir(), "avoid-")), "t.json");
    fs.writeFileSync(file, JSON.stringify(transcript));
    const code = await new Promise((resolve) => {
        (0, node_child_process_1.execFile)("python3", ["-m", "avoidance.cli", "verify", "--replay", file], (error) => resolve(error && typeof error.code === "number" ? error.code : 0));
    });
    strict_1.default.equal(code, 0, `${fx.name}: verify --replay rejected the transcript`);
}
(0, node_test_1.test)("sim loss line replays with matching statuses and highlights", async () => {
    const fx = load("sim_loss_line");
    const id = await replayFixture(fx);
    strict_1.default.equal(fx.transcript.status, "ALost");
    await transcriptRoundTrip(fx, id);
});
(0, node_test_1.test)("c4 automorphism demo keeps the server symmetry flag on", async () => {
    const fx = load("c4_automorphism_demo");
    const id = await replayFixture(fx);
    for (const step of fx.steps) {
        if (step.http_status === 200) {
            strict_1.default.equal(step.response.state.red_blue_isomorphic, true);
        }
    }
    await transcriptRoundTrip(fx, id);
});
(0, node_test_1.test)("illegal moves are rejected without touching the session", async () => {
    const fx = load("illegal_move_rejection");
    strict_1.default.ok(fx.steps.some((s) => s.http_status === 409));
    const id = await replayFixture(fx);
    await transcriptRoundTrip(fx, id);
});
(0, node_test_1.test)("mid-game transcript replays to the same in-progress state", async () => {
    const fx = load("c4_automorphism_demo");
    const created = await api.createGame(fx.create);
    await api.move(created.id, fx.steps[0].edge);
    const transcript = await api.transcript(created.id);
    strict_1.default.equal(transcript.status, "InProgress");
    strict_1.default.equal(transcript.moves.length, 2);
    const file = path.join(fs.mkdtempSync(path.join(os.tmpdir(), "avoid-")), "mid.json");
    fs.writeFileSync(file, JSON.stringify(transcript));
    const code = await new Promise((resolve) => {
        (0, node_child_process_1.execFile)("python3", ["-m", "avoidance.cli", "verify", "--replay", file], (error) => resolve(error && typeof error.code === "number" ? error.code : 0));
    });
    strict_1.default.equal(code, 0);
});
(0, node_test_1.test)("fresh game exports an empty-move transcript", async () => {
    const created = await api.createGame({
        graph: { family: "C4" }, forbidden: null, human_side: "A",
        engine: "automorphism",
    });
    const transcript = await api.transcript(created.id);
    strict_1.default.deepEqual(transcript.moves, []);
    strict_1.default.equal(transcript.status, "InProgress");
});
(0, node_test_1.test)("unstartable configurations surface as API errors", async () => {
    await strict_1.default.rejects(api.createGame({
        graph: { family: "K8" }, forbidden: null, human_side: "A", engine: "optimal",
    }), (err) => err instanceof api_js_1.ApiError && err.status === 422);
    await strict_1.default.rejects(api.createGame({
        graph: { graph6: "!!bad!!" }, forbidden: null, human_side: "A", engine: "optimal",
    }), (err) => err instanceof api_js_1.ApiError && err.status === 422);
});
//# sourceMappingURL=contract.test.js.map