/** Payload shapes exchanged with the pcmkit HTTP service. */

/** The most inconsistent triad of a matrix, with 1-based indices i < j < k. */
export interface WorstTriad {
  i: number;
  j: number;
  k: number;
  value: number;
}

/** One triad and its inconsistency level, as reported by the heat list. */
export interface TriadHeat {
  i: number;
  j: number;
  k: number;
  ii: number;
}

/** Response body of POST /api/analyze. */
export interface AnalyzeResponse {
  n: number;
  consistent: boolean;
  /** Peak triad inconsistency, null when n < 3. */
  kii: number | null;
  /** Chain-based inconsistency, null when n < 3. */
  chain_ii: number | null;
  lambda_max: number;
  ci: number;
  /** Consistency ratio, null when no random index is known for this n. */
  cr: number | null;
  ri: number | null;
  weights: number[];
  worst_triad: WorstTriad | null;
  triad_heat: TriadHeat[];
}

/** One single-cell repair proposal from POST /api/propose-repairs. */
export interface RepairCandidate {
  /** 1-based upper-triangle cell [i, j] with i < j. */
  cell: [number, number];
  old: number;
  new: number;
  projected_kii: number;
}

/** Response body of GET /api/generate. */
export interface GenerateResponse {
  n: number;
  entries: number[][];
}

/** Matrix document used for browser-local save and load. */
export interface MatrixDocument {
  n: number;
  entries: number[][];
  name?: string;
}
