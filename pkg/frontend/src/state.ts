/**
 * Explorer session state.
 *
 * All mathematics lives server-side: every mutation goes through the
 * HTTP service and the displayed classification is always a fresh
 * `/v1/classify` of the displayed document.  The state keeps the base
 * document plus the clicked-vertex history, so any session can be
 * replayed server-side and compared against the displayed document.
 */

import { ApiClient, ApiError } from "./api.js";
import {
  Classification,
  DiagramDocument,
  Violation,
  cloneDocument,
  documentsEqual,
  serializeDocument,
} from "./types.js";

export interface HistoryEntry {
  /** Document as displayed before the click. */
  document: DiagramDocument;
  /** Vertex id that was mutated to leave this document. */
  vertex: string;
}

export type Banner =
  | { kind: "error"; message: string }
  | { kind: "violations"; violations: Violation[] };

export interface ExplorerState {
  /** Document the session started from (load target or initial seed). */
  base: DiagramDocument;
  /** Currently displayed document. */
  current: DiagramDocument;
  /** Clicks applied to `base`, oldest first. */
  history: HistoryEntry[];
  /** Classification of `current`, fresh from the service. */
  classification: Classification;
  /** vertex id -> pinned 2D position, preserved across mutations. */
  layout: Map<string, { x: number; y: number }>;
  /** Last non-blocking error, if any; cleared by the next success. */
  banner: Banner | null;
}

function bannerFrom(err: unknown): Banner {
  if (err instanceof ApiError) {
    const d = err.detail;
    if (d !== null && typeof d === "object" && "violations" in d) {
      return { kind: "violations", violations: (d as { violations: Violation[] }).violations };
    }
    return { kind: "error", message: err.message };
  }
  return { kind: "error", message: err instanceof Error ? err.message : String(err) };
}

export async function createState(
  api: ApiClient,
  document: DiagramDocument,
): Promise<ExplorerState> {
  const classification = await api.classify(document);
  return {
    base: cloneDocument(document),
    current: cloneDocument(document),
    history: [],
    classification,
    layout: new Map(),
    banner: null,
  };
}

/**
 * Mutate the displayed document at `vertex`.  On service failure the
 * state is returned unchanged except for the banner.
 */
export async function onVertexClick(
  api: ApiClient,
  state: ExplorerState,
  vertex: string,
): Promise<ExplorerState> {
  let mutated: DiagramDocument;
  let classification: Classification;
  try {
    mutated = (await api.mutate(state.current, vertex)).diagram;
    classification = await api.classify(mutated);
  } catch (err) {
    return { ...state, banner: bannerFrom(err) };
  }
  return {
    ...state,
    current: mutated,
    history: [...state.history, { document: state.current, vertex }],
    classification,
    banner: null,
  };
}

/**
 * Pop the last click.  Restores the recorded document exactly (no
 * re-mutation) and re-fetches its classification.  No-op on empty
 * history.
 */
export async function undo(api: ApiClient, state: ExplorerState): Promise<ExplorerState> {
  const entry = state.history[state.history.length - 1];
  if (entry === undefined) return state;
  let classification: Classification;
  try {
    classification = await api.classify(entry.document);
  } catch (err) {
    return { ...state, banner: bannerFrom(err) };
  }
  return {
    ...state,
    current: cloneDocument(entry.document),
    history: state.history.slice(0, -1),
    classification,
    banner: null,
  };
}

/**
 * Start a new session from `document` after validating it with the
 * service.  An invalid document leaves the state unchanged and raises
 * a violations banner.
 */
export async function load(
  api: ApiClient,
  state: ExplorerState,
  document: DiagramDocument,
): Promise<ExplorerState> {
  try {
    const res = await api.validate(document);
    if (res.violations.length > 0) {
      return { ...state, banner: { kind: "violations", violations: res.violations } };
    }
  } catch (err) {
    return { ...state, banner: bannerFrom(err) };
  }
  const fresh = await createState(api, document);
  return { ...fresh, layout: state.layout };
}

/** Byte-stable serialization of the displayed document. */
export function save(state: ExplorerState): string {
  return serializeDocument(state.current);
}

/**
 * Replay invariant: re-apply the recorded vertex sequence to the base
 * document server-side and compare against the displayed document.
 */
export async function replayMatches(api: ApiClient, state: ExplorerState): Promise<boolean> {
  let doc = state.base;
  for (const entry of state.history) {
    doc = (await api.mutate(doc, entry.vertex)).diagram;
  }
  return documentsEqual(doc, state.current);
}
