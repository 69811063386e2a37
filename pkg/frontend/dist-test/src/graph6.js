"use strict";
/** Minimal graph6 decoder for presentation (forbidden-graph thumbnails).
 * Handles the single-byte order prefix (n <= 62), which covers every board
 * and forbidden graph the service offers.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.decodeGraph6 = decodeGraph6;
function decodeGraph6(text) {
    const s = text.trim().replace(/^>>graph6<</, "").trim();
    if (!s)
        throw new Error("empty graph6 string");
    const order = s.charCodeAt(0) - 63;
    if (order < 0 || order > 62)
        throw new Error(`unsupported graph6 order byte '${s[0]}'`);
    const bits = [];
    for (let i = 1; i < s.length; i++) {
        const val = s.charCodeAt(i) - 63;
        if (val < 0 || val > 63)
            throw new Error(`bad graph6 byte at ${i}`);
        for (let shift = 5; shift >= 0; shift--)
            bits.push((val >> shift) & 1);
    }
    const edges = [];
    let k = 0;
    for (let j = 1; j < order; j++) {
        for (let i = 0; i < j; i++, k++) {
            if (bits[k])
                edges.push([i, j]);
        }
    }
    edges.sort((a, b) => a[0] - b[0] || a[1] - b[1]); // match the service's ordering
    return { order, edges };
}
//# sourceMappingURL=graph6.js.map