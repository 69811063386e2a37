"use strict";
/** SVG board rendering: vertices, clickable edges, last-move and loss
 * highlights. The only DOM-producing module besides main. */
Object.defineProperty(exports, "__esModule", { value: true });
exports.renderBoard = renderBoard;
exports.renderThumbnail = renderThumbnail;
exports.shake = shake;
const graph6_js_1 = require("./graph6.js");
const layout_js_1 = require("./layout.js");
const SVG_NS = "http://www.w3.org/2000/svg";
function renderBoard(svg, positions, model, callbacks) {
    svg.innerHTML = "";
    const width = svg.viewBox.baseVal.width || 520;
    for (const ev of model.edges) {
        const [u, v] = ev.edge;
        const line = document.createElementNS(SVG_NS, "line");
        line.setAttribute("x1", String(positions[u].x));
        line.setAttribute("y1", String(positions[u].y));
        line.setAttribute("x2", String(positions[v].x));
        line.setAttribute("y2", String(positions[v].y));
        line.classList.add("edge", ev.visual);
        if (ev.lastMove)
            line.classList.add("last-move");
        if (ev.losing)
            line.classList.add("losing");
        line.dataset.edge = `${u},${v}`;
        svg.appendChild(line);
        if (ev.visual === "uncolored" && model.inputEnabled) {
            // wide invisible twin so thin edges are easy to hit
            const hit = document.createElementNS(SVG_NS, "line");
            hit.setAttribute("x1", String(positions[u].x));
            hit.setAttribute("y1", String(positions[u].y));
            hit.setAttribute("x2", String(positions[v].x));
            hit.setAttribute("y2", String(positions[v].y));
            hit.classList.add("edge-hit");
            hit.addEventListener("click", () => callbacks.onEdgeClick([u, v]));
            svg.appendChild(hit);
        }
    }
    positions.forEach((p, v) => {
        const circle = document.createElementNS(SVG_NS, "circle");
        circle.setAttribute("cx", String(p.x));
        circle.setAttribute("cy", String(p.y));
        circle.setAttribute("r", width > 400 ? "9" : "7");
        circle.classList.add("vertex");
        svg.appendChild(circle);
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("x", String(p.x));
        label.setAttribute("y", String(p.y + 3.5));
        label.classList.add("vertex-label");
        label.textContent = String(v);
        svg.appendChild(label);
    });
}
/** Small static drawing of the forbidden graph. */
function renderThumbnail(svg, graph6Text) {
    svg.innerHTML = "";
    if (!graph6Text) {
        const note = document.createElementNS(SVG_NS, "text");
        note.setAttribute("x", "50");
        note.setAttribute("y", "55");
        note.classList.add("thumb-note");
        note.textContent = "none";
        svg.appendChild(note);
        return;
    }
    const g = (0, graph6_js_1.decodeGraph6)(graph6Text);
    const pts = (0, layout_js_1.circularLayout)(g.order, 100, 100);
    for (const [u, v] of g.edges) {
        const line = document.createElementNS(SVG_NS, "line");
        line.setAttribute("x1", String(pts[u].x));
        line.setAttribute("y1", String(pts[u].y));
        line.setAttribute("x2", String(pts[v].x));
        line.setAttribute("y2", String(pts[v].y));
        line.classList.add("thumb-edge");
        svg.appendChild(line);
    }
    for (const p of pts) {
        const c = document.createElementNS(SVG_NS, "circle");
        c.setAttribute("cx", String(p.x));
        c.setAttribute("cy", String(p.y));
        c.setAttribute("r", "4");
        c.classList.add("thumb-vertex");
        svg.appendChild(c);
    }
}
function shake(el) {
    el.classList.remove("shake");
    void el.offsetWidth; // restart the animation
    el.classList.add("shake");
}
//# sourceMappingURL=board.js.map