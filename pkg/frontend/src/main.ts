import { Client } from "./api.js";
import { App } from "./app.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const base = (window as unknown as { QCK_BASE?: string }).QCK_BASE ?? "";
const app = new App(new Client(base), el("view"), el("status"));

async function boot(): Promise<void> {
  const cartan = el<HTMLSelectElement>("cartan").value;
  const word = el<HTMLInputElement>("word")
    .value.split(",")
    .map((x) => Number(x.trim()))
    .filter((x) => !Number.isNaN(x));
  try {
    await app.start(cartan, word);
  } catch (err) {
    app.toast(String(err));
  }
}

el("load").addEventListener("click", () => void boot());
el("undo").addEventListener("click", () => void app.undo());
void boot();
