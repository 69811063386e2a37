/** Vertex placement. Circular by default; factor-grid for product boards so
 * their two coordinates read off the drawing. Pure functions, unit-tested
 * without a DOM.
 */

import type { LayoutHint } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export function circularLayout(order: number, width: number, height: number): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) / 2 - 28;
  const pts: Point[] = [];
  for (let v = 0; v < order; v++) {
    const angle = (2 * Math.PI * v) / Math.max(order, 1) - Math.PI / 2;
    pts.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return pts;
}

/** Row-major grid: vertex v sits at (row floor(v/cols), col v mod cols),
 * matching the service's pair encoding u1*n2 + u2. */
export function gridLayout(rows: number, cols: number, width: number, height: number): Point[] {
  const mx = 40;
  const stepX = cols > 1 ? (width - 2 * mx) / (cols - 1) : 0;
  const stepY = rows > 1 ? (height - 2 * mx) / (rows - 1) : 0;
  const pts: Point[] = [];
  for (let v = 0; v < rows * cols; v++) {
    const row = Math.floor(v / cols);
    const col = v % cols;
    pts.push({
      x: mx + col * stepX + (cols === 1 ? (width - 2 * mx) / 2 : 0),
      y: mx + row * stepY + (rows === 1 ? (height - 2 * mx) / 2 : 0),
    });
  }
  return pts;
}

export function layoutFor(order: number, hint: LayoutHint | undefined,
                          width: number, height: number): Point[] {
  if (hint && hint.type === "grid" && hint.rows && hint.cols
      && hint.rows * hint.cols === order) {
    return gridLayout(hint.rows, hint.cols, width, height);
  }
  return circularLayout(order, width, height);
}
