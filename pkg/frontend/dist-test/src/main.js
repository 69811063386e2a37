"use strict";
/** App wiring: the new-game form, the click-to-move loop with a single
 * in-flight request, and transcript export. */
Object.defineProperty(exports, "__esModule", { value: true });
const api_js_1 = require("./api.js");
const board_js_1 = require("./board.js");
const layout_js_1 = require("./layout.js");
const view_js_1 = require("./view.js");
// same-origin by default; ?api=http://127.0.0.1:8070 points a statically
// served copy at a service running elsewhere
const api = new api_js_1.GameApi(new URLSearchParams(window.location.search).get("api") ?? "");
let session = null;
let catalog = [];
const $ = (id) => {
    const el = document.getElementById(id);
    if (!el)
        throw new Error(`missing element #${id}`);
    return el;
};
function layoutHintFor(spec) {
    return catalog.find((f) => f.spec === spec)?.layout;
}
function refresh() {
    if (!session)
        return;
    const model = (0, view_js_1.buildViewModel)(session.state, session.lastResponse, session.humanSide, session.symmetry);
    session.symmetry = model.symmetryIndicator;
    (0, board_js_1.renderBoard)($("board"), session.positions, model, {
        onEdgeClick: (edge) => void submitMove(edge),
    });
    $("banner").textContent = model.banner;
    $("banner").dataset.state = session.state.status;
    const lamp = $("symmetry");
    if (model.symmetryIndicator === null) {
        lamp.textContent = "symmetry: -";
        lamp.dataset.on = "unknown";
    }
    else {
        lamp.textContent = model.symmetryIndicator
            ? "red and blue isomorphic" : "symmetry broken";
        lamp.dataset.on = String(model.symmetryIndicator);
    }
    $("export").disabled = false;
}
async function submitMove(edge) {
    if (!session || session.busy)
        return;
    session.busy = true;
    try {
        const resp = await api.move(session.id, edge);
        session.state = resp.state;
        session.lastResponse = resp;
        refresh();
    }
    catch (err) {
        if (err instanceof api_js_1.ApiError && err.status === 409) {
            (0, board_js_1.shake)($("board-wrap"));
            setMessage(`rejected: ${err.reason}`);
        }
        else {
            setMessage(String(err));
        }
    }
    finally {
        session.busy = false;
    }
}
function setMessage(text) {
    $("message").textContent = text;
}
function boardRef(kind, family, pasted) {
    return kind === "graph6" ? { graph6: pasted.trim() } : { family };
}
async function startGame() {
    setMessage("");
    const boardKind = $("board-kind").value;
    const family = $("board-family").value;
    const pasted = $("board-graph6").value;
    const forbiddenSel = $("forbidden-family").value;
    const humanSide = $("human-side").value;
    const engine = $("engine").value;
    try {
        const created = await api.createGame({
            graph: boardRef(boardKind, family, pasted),
            forbidden: forbiddenSel === "none" ? null : { family: forbiddenSel },
            human_side: humanSide,
            engine,
        });
        const hint = boardKind === "graph6" ? undefined : layoutHintFor(family);
        session = {
            id: created.id,
            humanSide,
            state: created.state,
            lastResponse: null,
            symmetry: null,
            positions: (0, layout_js_1.layoutFor)(created.state.order, hint, 520, 520),
            busy: false,
        };
        (0, board_js_1.renderThumbnail)($("thumb"), created.state.forbidden);
        refresh();
    }
    catch (err) {
        if (err instanceof api_js_1.ApiError) {
            setMessage(`cannot start: ${err.reason}`); // 422 surfaced inline
        }
        else {
            setMessage(String(err));
        }
    }
}
async function exportTranscript() {
    if (!session)
        return;
    const transcript = await api.transcript(session.id);
    const blob = new Blob([JSON.stringify(transcript, null, 2)], { type: "application/json" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = `avoidance-${session.id.slice(0, 8)}.json`;
    a.click();
    URL.revokeObjectURL(a.href);
}
async function init() {
    const data = await api.families();
    catalog = data.families;
    const boardSelect = $("board-family");
    const forbiddenSelect = $("forbidden-family");
    for (const entry of catalog) {
        const opt = document.createElement("option");
        opt.value = entry.spec;
        opt.textContent = `${entry.name} - ${entry.description}`;
        boardSelect.appendChild(opt);
        const fopt = opt.cloneNode(true);
        forbiddenSelect.appendChild(fopt);
    }
    const engineSelect = $("engine");
    for (const engine of data.engines) {
        const opt = document.createElement("option");
        opt.value = engine;
        opt.textContent = engine;
        engineSelect.appendChild(opt);
    }
    $("board-kind").addEventListener("change", (ev) => {
        const kind = ev.target.value;
        $("board-family").style.display = kind === "family" ? "" : "none";
        $("board-graph6").style.display = kind === "graph6" ? "" : "none";
    });
    $("start").addEventListener("click", () => void startGame());
    $("export").addEventListener("click", () => void exportTranscript());
}
void init();
//# sourceMappingURL=main.js.map