/** SVG rendering of a diagram document with click-to-mutate vertices. */

import type { Point } from "./layout.js";
import type { DiagramDocument } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const RADIUS = 16;

export interface RenderCallbacks {
  onVertexClick: (id: string) => void;
}

export function render(
  svg: SVGSVGElement,
  doc: DiagramDocument,
  positions: Map<string, Point>,
  callbacks: RenderCallbacks,
): void {
  svg.replaceChildren();
  ensureArrowMarker(svg);

  for (const edge of doc.edges) {
    const a = positions.get(edge.tail);
    const b = positions.get(edge.head);
    if (a === undefined || b === undefined) continue;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1e-3);
    const ux = dx / dist;
    const uy = dy / dist;
    const x1 = a.x + ux * RADIUS;
    const y1 = a.y + uy * RADIUS;
    const x2 = b.x - ux * (RADIUS + 6);
    const y2 = b.y - uy * (RADIUS + 6);

    // weight 4 is displayed as a double arrow: two parallel strokes
    const offsets = edge.weight === 4 ? [-2.2, 2.2] : [0];
    for (const off of offsets) {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(x1 - uy * off));
      line.setAttribute("y1", String(y1 + ux * off));
      line.setAttribute("x2", String(x2 - uy * off));
      line.setAttribute("y2", String(y2 + ux * off));
      line.setAttribute("stroke", "#444");
      line.setAttribute("stroke-width", "1.6");
      line.setAttribute("marker-end", "url(#arrow)");
      svg.appendChild(line);
    }
    if (edge.weight !== 1) {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String((a.x + b.x) / 2 + uy * 10));
      label.setAttribute("y", String((a.y + b.y) / 2 - ux * 10));
      label.setAttribute("class", "edge-weight");
      label.textContent = String(edge.weight);
      svg.appendChild(label);
    }
  }

  for (const vertex of doc.vertices) {
    const p = positions.get(vertex.id);
    if (p === undefined) continue;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "vertex");
    group.addEventListener("click", () => callbacks.onVertexClick(vertex.id));
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    circle.setAttribute("r", String(RADIUS));
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(p.x));
    text.setAttribute("y", String(p.y + 4));
    text.setAttribute("text-anchor", "middle");
    text.textContent = vertex.label ?? vertex.id;
    group.append(circle, text);
    svg.appendChild(group);
  }
}

function ensureArrowMarker(svg: SVGSVGElement): void {
  const defs = document.createElementNS(SVG_NS, "defs");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrow");
  marker.setAttribute("viewBox", "0 0 10 10");
  marker.setAttribute("refX", "9");
  marker.setAttribute("refY", "5");
  marker.setAttribute("markerWidth", "7");
  marker.setAttribute("markerHeight", "7");
  marker.setAttribute("orient", "auto-start-reverse");
  const path = document.createElementNS(SVG_NS, "path");
  path.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
  path.setAttribute("fill", "#444");
  marker.appendChild(path);
  defs.appendChild(marker);
  svg.appendChild(defs);
}
