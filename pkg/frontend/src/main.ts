/** App wiring: the new-game form, the click-to-move loop with a single
 * in-flight request, and transcript export. */

import { ApiError, GameApi } from "./api.js";
import type { EdgePair, FamilyEntry, GameStateWire, LayoutHint, MoveResponse, Side } from "./api.js";
import { renderBoard, renderThumbnail, shake } from "./board.js";
import { layoutFor } from "./layout.js";
import type { Point } from "./layout.js";
import { buildViewModel } from "./view.js";

// same-origin by default; ?api=http://127.0.0.1:8070 points a statically
// served copy at a service running elsewhere
const api = new GameApi(
  new URLSearchParams(window.location.search).get("api") ?? "");

interface SessionUI {
  id: string;
  humanSide: Side;
  state: GameStateWire;
  lastResponse: MoveResponse | null;
  symmetry: boolean | null;
  positions: Point[];
  busy: boolean;
}

let session: SessionUI | null = null;
let catalog: FamilyEntry[] = [];

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

function layoutHintFor(spec: string): LayoutHint | undefined {
  return catalog.find((f) => f.spec === spec)?.layout;
}

function refresh(): void {
  if (!session) return;
  const model = buildViewModel(session.state, session.lastResponse,
                               session.humanSide, session.symmetry);
  session.symmetry = model.symmetryIndicator;
  renderBoard($("board") as unknown as SVGSVGElement, session.positions, model, {
    onEdgeClick: (edge) => void submitMove(edge),
  });
  $("banner").textContent = model.banner;
  $("banner").dataset.state = session.state.status;
  const lamp = $("symmetry");
  if (model.symmetryIndicator === null) {
    lamp.textContent = "symmetry: -";
    lamp.dataset.on = "unknown";
  } else {
    lamp.textContent = model.symmetryIndicator
      ? "red and blue isomorphic" : "symmetry broken";
    lamp.dataset.on = String(model.symmetryIndicator);
  }
  ($("export") as HTMLButtonElement).disabled = false;
}

async function submitMove(edge: EdgePair): Promise<void> {
  if (!session || session.busy) return;
  session.busy = true;
  try {
    const resp = await api.move(session.id, edge);
    session.state = resp.state;
    session.lastResponse = resp;
    refresh();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      shake($("board-wrap"));
      setMessage(`rejected: ${err.reason}`);
    } else {
      setMessage(String(err));
    }
  } finally {
    session.busy = false;
  }
}

function setMessage(text: string): void {
  $("message").textContent = text;
}

function boardRef(kind: string, family: string, pasted: string) {
  return kind === "graph6" ? { graph6: pasted.trim() } : { family };
}

async function startGame(): Promise<void> {
  setMessage("");
  const boardKind = ($("board-kind") as HTMLSelectElement).value;
  const family = ($("board-family") as HTMLSelectElement).value;
  const pasted = ($("board-graph6") as HTMLInputElement).value;
  const forbiddenSel = ($("forbidden-family") as HTMLSelectElement).value;
  const humanSide = ($("human-side") as HTMLSelectElement).value as Side;
  const engine = ($("engine") as HTMLSelectElement).value;
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
      positions: layoutFor(created.state.order, hint, 520, 520),
      busy: false,
    };
    renderThumbnail($("thumb") as unknown as SVGSVGElement, created.state.forbidden);
    refresh();
  } catch (err) {
    if (err instanceof ApiError) {
      setMessage(`cannot start: ${err.reason}`);  // 422 surfaced inline
    } else {
      setMessage(String(err));
    }
  }
}

async function exportTranscript(): Promise<void> {
  if (!session) return;
  const transcript = await api.transcript(session.id);
  const blob = new Blob([JSON.stringify(transcript, null, 2)],
                        { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = `avoidance-${session.id.slice(0, 8)}.json`;
  a.click();
  URL.revokeObjectURL(a.href);
}

async function init(): Promise<void> {
  const data = await api.families();
  catalog = data.families;
  const boardSelect = $("board-family") as HTMLSelectElement;
  const forbiddenSelect = $("forbidden-family") as HTMLSelectElement;
  for (const entry of catalog) {
    const opt = document.createElement("option");
    opt.value = entry.spec;
    opt.textContent = `${entry.name} - ${entry.description}`;
    boardSelect.appendChild(opt);
    const fopt = opt.cloneNode(true) as HTMLOptionElement;
    forbiddenSelect.appendChild(fopt);
  }
  const engineSelect = $("engine") as HTMLSelectElement;
  for (const engine of data.engines) {
    const opt = document.createElement("option");
    opt.value = engine;
    opt.textContent = engine;
    engineSelect.appendChild(opt);
  }
  ($("board-kind") as HTMLSelectElement).addEventListener("change", (ev) => {
    const kind = (ev.target as HTMLSelectElement).value;
    $("board-family").style.display = kind === "family" ? "" : "none";
    $("board-graph6").style.display = kind === "graph6" ? "" : "none";
  });
  $("start").addEventListener("click", () => void startGame());
  $("export").addEventListener("click", () => void exportTranscript());
}

void init();
