/** Wire types shared with the diagmut HTTP service (`/v1`). */

export interface Vertex {
  id: string;
  label?: string;
}

export interface Edge {
  tail: string;
  head: string;
  weight: number;
}

export interface DiagramDocument {
  format_version: number;
  vertices: Vertex[];
  edges: Edge[];
}

export interface FamilyParams {
  n: number | null;
  m: number | null;
  stars: unknown[] | null;
}

export interface Classification {
  type: string | null;
  rank: number | null;
  family: string | null;
  params: FamilyParams | null;
  width: number | null;
  display: string;
}

export interface Violation {
  code: string;
  message: string;
}

export interface ValidateResponse {
  violations: Violation[];
}

export interface MutateResponse {
  diagram: DiagramDocument;
}

export interface OrbitResponse {
  size: number;
  exhausted: boolean;
  census: Record<string, number>;
}

export interface HealthResponse {
  status: string;
}

/** Stable deep clone of a document (documents are plain JSON). */
export function cloneDocument(doc: DiagramDocument): DiagramDocument {
  return structuredClone(doc);
}

/**
 * Canonical serialization matching the service: sorted keys, two-space
 * indent, trailing newline.  Used for byte-stable save and for exact
 * document comparison in the replay invariant.
 */
export function serializeDocument(doc: DiagramDocument): string {
  return stableStringify(doc, 0) + "\n";
}

export function documentsEqual(a: DiagramDocument, b: DiagramDocument): boolean {
  return serializeDocument(a) === serializeDocument(b);
}

function stableStringify(value: unknown, indent: number): string {
  const pad = "  ".repeat(indent);
  const inner = "  ".repeat(indent + 1);
  if (Array.isArray(value)) {
    if (value.length === 0) return "[]";
    const rows = value.map((v) => inner + stableStringify(v, indent + 1));
    return "[\n" + rows.join(",\n") + "\n" + pad + "]";
  }
  if (value !== null && typeof value === "object") {
    const entries = Object.entries(value as Record<string, unknown>).sort(
      ([a], [b]) => (a < b ? -1 : a > b ? 1 : 0),
    );
    if (entries.length === 0) return "{}";
    const rows = entries.map(
      ([k, v]) => `${inner}${JSON.stringify(k)}: ${stableStringify(v, indent + 1)}`,
    );
    return "{\n" + rows.join(",\n") + "\n" + pad + "}";
  }
  return JSON.stringify(value);
}
