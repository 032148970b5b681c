export interface WeightJson {
  phi: number[];
  alpha: number[];
}

export interface SeedJson {
  cartan: { matrix: number[][] };
  word: number[] | null;
  L: number[][];
  B: number[][];
  D: WeightJson[];
  frozen: number[];
}

export interface SessionPayload {
  id: string;
  seed: SeedJson;
  history?: HistoryStep[];
}

export interface HistoryStep {
  k: number;
  m_k: number;
  m_k_prime: number;
}

export interface MutateResponse {
  seed: SeedJson;
  exchanged_variable: unknown;
  m_k: number;
  m_k_prime: number;
  dry_run: boolean;
}

/** One arrow bundle s -> t with its multiplicity. */
export interface Arrow {
  from: number;
  to: number;
  mult: number;
}
