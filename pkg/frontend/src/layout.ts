/**
 * Small force-directed layout with pinned positions.
 *
 * Vertices that already have a position keep it as their starting
 * point and drift only slightly, so a human can track vertices across
 * mutations; vertices new to the layout are seeded on a circle and
 * settle around their neighbors.
 */

import type { DiagramDocument } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface LayoutOptions {
  width: number;
  height: number;
  /** Spring rest length between adjacent vertices. */
  linkDistance: number;
  /** Iterations of the relaxation loop. */
  iterations: number;
  /** Per-step damping applied to pinned (pre-existing) vertices. */
  pinStrength: number;
}

export const DEFAULT_OPTIONS: LayoutOptions = {
  width: 640,
  height: 480,
  linkDistance: 110,
  iterations: 150,
  pinStrength: 0.85,
};

/**
 * Compute positions for every vertex of `doc`, reusing `previous` for
 * vertices that already have one.  Returns a new map; `previous` is
 * not modified.
 */
export function layout(
  doc: DiagramDocument,
  previous: Map<string, Point>,
  options: Partial<LayoutOptions> = {},
): Map<string, Point> {
  const opt = { ...DEFAULT_OPTIONS, ...options };
  const ids = doc.vertices.map((v) => v.id);
  const pinned = new Set<string>();
  const pos = new Map<string, Point>();
  const cx = opt.width / 2;
  const cy = opt.height / 2;
  ids.forEach((id, i) => {
    const prev = previous.get(id);
    if (prev !== undefined) {
      pos.set(id, { ...prev });
      pinned.add(id);
    } else {
      const angle = (2 * Math.PI * i) / ids.length;
      pos.set(id, {
        x: cx + 0.35 * opt.width * Math.cos(angle),
        y: cy + 0.35 * opt.height * Math.sin(angle),
      });
    }
  });

  const edges = doc.edges.map((e) => [e.tail, e.head] as const);
  const repulsion = opt.linkDistance * opt.linkDistance;

  for (let step = 0; step < opt.iterations; step++) {
    const force = new Map<string, Point>(ids.map((id) => [id, { x: 0, y: 0 }]));
    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        const a = pos.get(ids[i])!;
        const b = pos.get(ids[j])!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          dx = Math.random() - 0.5;
          dy = Math.random() - 0.5;
          d2 = dx * dx + dy * dy;
        }
        const f = repulsion / d2;
        const fa = force.get(ids[i])!;
        const fb = force.get(ids[j])!;
        fa.x += dx * f * 0.01;
        fa.y += dy * f * 0.01;
        fb.x -= dx * f * 0.01;
        fb.y -= dy * f * 0.01;
      }
    }
    for (const [tail, head] of edges) {
      const a = pos.get(tail);
      const b = pos.get(head);
      if (a === undefined || b === undefined) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1e-3);
      const f = (dist - opt.linkDistance) / dist;
      const fa = force.get(tail)!;
      const fb = force.get(head)!;
      fa.x += dx * f * 0.05;
      fa.y += dy * f * 0.05;
      fb.x -= dx * f * 0.05;
      fb.y -= dy * f * 0.05;
    }
    const cool = 1 - step / opt.iterations;
    for (const id of ids) {
      const p = pos.get(id)!;
      const f = force.get(id)!;
      const damp = pinned.has(id) ? (1 - opt.pinStrength) * cool : cool;
      p.x += f.x * damp;
      p.y += f.y * damp;
      p.x = Math.min(Math.max(p.x, 20), opt.width - 20);
      p.y = Math.min(Math.max(p.y, 20), opt.height - 20);
    }
  }
  return pos;
}
