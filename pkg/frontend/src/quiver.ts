import type { Arrow, SeedJson } from "./types.js";

/** 1-based exchangeable indices, in column order of the B matrix. */
export function exchangeable(seed: SeedJson): number[] {
  const frozen = new Set(seed.frozen);
  const out: number[] = [];
  for (let k = 1; k <= seed.L.length; k++) {
    if (!frozen.has(k)) out.push(k);
  }
  return out;
}

/**
 * Arrow bundles of the quiver attached to the exchange matrix.  A positive
 * entry b[i][k] (column of exchangeable k) gives b arrows i -> k; that
 * already covers every arrow whose target has a column.  Arrows into a
 * frozen vertex have no column of their own and only show up as negative
 * entries in the source's column, so those are emitted from b[f][k] < 0
 * with f frozen; emitting negatives for exchangeable rows too would count
 * each exchangeable pair twice.  Arrows between frozen vertices do not
 * exist by convention.
 */
export function arrowsFromB(seed: SeedJson): Arrow[] {
  const ex = exchangeable(seed);
  const frozen = new Set(seed.frozen);
  const out: Arrow[] = [];
  for (let row = 0; row < seed.B.length; row++) {
    for (let col = 0; col < ex.length; col++) {
      const b = seed.B[row][col];
      if (b > 0) out.push({ from: row + 1, to: ex[col], mult: b });
      else if (b < 0 && frozen.has(row + 1)) out.push({ from: ex[col], to: row + 1, mult: -b });
    }
  }
  out.sort((a, b) => a.from - b.from || a.to - b.to);
  return out;
}

/** Rebuild the exchange matrix from an arrow multiset (the defining rule). */
export function bFromArrows(arrows: Arrow[], rank: number, ex: number[]): number[][] {
  const count = new Map<string, number>();
  for (const a of arrows) {
    const key = `${a.from},${a.to}`;
    count.set(key, (count.get(key) ?? 0) + a.mult);
  }
  const get = (i: number, j: number) => count.get(`${i},${j}`) ?? 0;
  const out: number[][] = [];
  for (let i = 1; i <= rank; i++) {
    const row: number[] = [];
    for (const j of ex) row.push(get(i, j) - get(j, i));
    out.push(row);
  }
  return out;
}

/** The invariant the view maintains: drawn arrows reconstruct B exactly. */
export function arrowsReconstructB(seed: SeedJson): boolean {
  const rebuilt = bFromArrows(arrowsFromB(seed), seed.B.length, exchangeable(seed));
  return JSON.stringify(rebuilt) === JSON.stringify(seed.B);
}

export interface VertexPos {
  k: number;
  x: number;
  y: number;
  frozen: boolean;
}

/**
 * Deterministic layered layout: vertex s sits at column s, in the row of
 * its word letter, so successive occurrences of one letter line up.
 */
export function layout(seed: SeedJson, colGap = 110, rowGap = 90): VertexPos[] {
  const frozen = new Set(seed.frozen);
  const word = seed.word ?? seed.L.map((_, i) => i + 1);
  return word.map((letter, idx) => ({
    k: idx + 1,
    x: 70 + idx * colGap,
    y: 60 + (letter - 1) * rowGap,
    frozen: frozen.has(idx + 1),
  }));
}
