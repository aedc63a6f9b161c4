/** Browser entry point wiring state, layout and rendering together. */

import { ApiClient } from "./api.js";
import { DEFAULT_OPTIONS, layout } from "./layout.js";
import { render } from "./render.js";
import {
  ExplorerState,
  createState,
  load,
  onVertexClick,
  save,
  undo,
} from "./state.js";
import type { DiagramDocument } from "./types.js";

const DEFAULT_BASE_URL = "http://127.0.0.1:8757";

/** Oriented triangle: a tiny valid starting diagram. */
const INITIAL_DOCUMENT: DiagramDocument = {
  format_version: 1,
  vertices: [{ id: "0" }, { id: "1" }, { id: "2" }],
  edges: [
    { tail: "0", head: "1", weight: 1 },
    { tail: "1", head: "2", weight: 1 },
    { tail: "2", head: "0", weight: 1 },
  ],
};

class App {
  private state!: ExplorerState;
  private busy = false;
  private readonly queue: (() => Promise<void>)[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly svg: SVGSVGElement,
    private readonly classificationEl: HTMLElement,
    private readonly bannerEl: HTMLElement,
    private readonly historyEl: HTMLElement,
  ) {}

  async start(): Promise<void> {
    this.state = await createState(this.api, INITIAL_DOCUMENT);
    this.redraw();
  }

  /** One in-flight request per user action; later actions are queued. */
  private enqueue(action: () => Promise<void>): void {
    this.queue.push(action);
    if (!this.busy) void this.drain();
  }

  private async drain(): Promise<void> {
    this.busy = true;
    while (this.queue.length > 0) {
      const action = this.queue.shift()!;
      await action();
    }
    this.busy = false;
  }

  clickVertex(id: string): void {
    this.enqueue(async () => {
      this.state = await onVertexClick(this.api, this.state, id);
      this.redraw();
    });
  }

  undoClick(): void {
    this.enqueue(async () => {
      this.state = await undo(this.api, this.state);
      this.redraw();
    });
  }

  loadDocument(text: string): void {
    this.enqueue(async () => {
      let doc: DiagramDocument;
      try {
        doc = JSON.parse(text) as DiagramDocument;
      } catch (err) {
        this.state = {
          ...this.state,
          banner: { kind: "error", message: `invalid JSON: ${String(err)}` },
        };
        this.redraw();
        return;
      }
      this.state = await load(this.api, this.state, doc);
      this.redraw();
    });
  }

  saveDocument(): string {
    return save(this.state);
  }

  private redraw(): void {
    this.state.layout = layout(this.state.current, this.state.layout, {
      width: this.svg.clientWidth || DEFAULT_OPTIONS.width,
      height: this.svg.clientHeight || DEFAULT_OPTIONS.height,
    });
    render(this.svg, this.state.current, this.state.layout, {
      onVertexClick: (id) => this.clickVertex(id),
    });
    this.classificationEl.textContent = this.state.classification.display;
    this.historyEl.textContent =
      this.state.history.length === 0
        ? "no mutations yet"
        : "clicks: " + this.state.history.map((h) => h.vertex).join(" → ");
    if (this.state.banner === null) {
      this.bannerEl.hidden = true;
      this.bannerEl.textContent = "";
    } else {
      this.bannerEl.hidden = false;
      this.bannerEl.textContent =
        this.state.banner.kind === "error"
          ? this.state.banner.message
          : this.state.banner.violations.map((v) => `${v.code}: ${v.message}`).join("; ");
    }
  }
}

export function boot(): void {
  const svg = document.querySelector<SVGSVGElement>("#canvas")!;
  const app = new App(
    new ApiClient(
      new URLSearchParams(location.search).get("service") ?? DEFAULT_BASE_URL,
    ),
    svg,
    document.querySelector("#classification")!,
    document.querySelector("#banner")!,
    document.querySelector("#history")!,
  );
  document.querySelector("#undo")!.addEventListener("click", () => app.undoClick());
  document.querySelector("#load")!.addEventListener("click", () => {
    const text = document.querySelector<HTMLTextAreaElement>("#document-text")!.value;
    app.loadDocument(text);
  });
  document.querySelector("#save")!.addEventListener("click", () => {
    document.querySelector<HTMLTextAreaElement>("#document-text")!.value = app.saveDocument();
  });
  void app.start();
}

if (typeof window !== "undefined" && typeof document !== "undefined" && document.querySelector("#canvas") !== null) {
  boot();
}
