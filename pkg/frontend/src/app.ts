import { ApiError, Client } from "./api.js";
import { arrowsReconstructB, exchangeable } from "./quiver.js";
import { previewPanel, view } from "./render.js";
import type { HistoryStep, SeedJson } from "./types.js";

/** All mutable page state; the server is authoritative, this is a cache. */
interface AppState {
  id: string;
  seed: SeedJson;
  history: HistoryStep[];
  hoverK: number | null;
  preview: string;
  busy: boolean;
}

export class App {
  state: AppState | null = null;

  constructor(
    private client: Client,
    private root: HTMLElement,
    private status: HTMLElement,
  ) {}

  async start(cartan: string, word: number[]): Promise<void> {
    const created = await this.client.createSeed(cartan, word);
    this.state = {
      id: created.id,
      seed: created.seed,
      history: [],
      hoverK: null,
      preview: "",
      busy: false,
    };
    this.render();
  }

  toast(message: string): void {
    this.status.textContent = message;
    this.status.classList.add("show");
    setTimeout(() => this.status.classList.remove("show"), 2500);
  }

  private render(): void {
    const st = this.state;
    if (!st) return;
    if (!arrowsReconstructB(st.seed)) {
      // the rendering invariant broke; surface loudly instead of drawing lies
      this.toast("internal error: arrows no longer match the exchange matrix");
      return;
    }
    this.root.innerHTML = view(st.seed, st.history, st.hoverK) + st.preview;
    for (const el of Array.from(this.root.querySelectorAll("[data-k]"))) {
      const k = Number(el.getAttribute("data-k"));
      el.addEventListener("click", () => void this.clickVertex(k));
      el.addEventListener("mouseenter", () => void this.hoverVertex(k));
      el.addEventListener("mouseleave", () => this.clearPreview());
    }
  }

  async clickVertex(k: number): Promise<void> {
    const st = this.state;
    if (!st || st.busy) return;
    if (!exchangeable(st.seed).includes(k)) {
      // frozen vertices are inert; shake for feedback only
      const el = this.root.querySelector(`[data-k="${k}"]`);
      el?.classList.add("shake");
      setTimeout(() => el?.classList.remove("shake"), 400);
      return;
    }
    st.busy = true;
    try {
      const res = await this.client.mutate(st.id, k);
      st.seed = res.seed;
      st.history = [...st.history, { k, m_k: res.m_k, m_k_prime: res.m_k_prime }];
      st.preview = "";
      st.hoverK = null;
      this.render();
    } catch (err) {
      this.toast(err instanceof ApiError ? err.detail : String(err));
    } finally {
      st.busy = false;
    }
  }

  async hoverVertex(k: number): Promise<void> {
    const st = this.state;
    if (!st || !exchangeable(st.seed).includes(k)) return;
    st.hoverK = k;
    try {
      const res = await this.client.mutate(st.id, k, true);
      const ex = exchangeable(res.seed);
      const col = res.seed.B.map((row) => row[ex.indexOf(k)]);
      if (this.state?.hoverK === k) {
        st.preview = previewPanel(k, col, res.seed.D[k - 1]);
        this.render();
      }
    } catch {
      // dry-run preview is best effort; stay silent
    }
  }

  clearPreview(): void {
    const st = this.state;
    if (!st) return;
    st.hoverK = null;
    st.preview = "";
    this.render();
  }

  async undo(): Promise<void> {
    const st = this.state;
    if (!st || st.busy) return;
    st.busy = true;
    try {
      const res = await this.client.undo(st.id);
      st.seed = res.seed;
      st.history = res.history ?? st.history.slice(0, -1);
      st.preview = "";
      this.render();
    } catch (err) {
      this.toast(err instanceof ApiError ? err.detail : String(err));
    } finally {
      st.busy = false;
    }
  }
}
