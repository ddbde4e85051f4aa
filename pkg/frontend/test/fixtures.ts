import type { AnalyzeResponse, RepairCandidate } from '../src/types.js';

/**
 * Response bodies captured verbatim from a live pcmkit service. Tests pin
 * the UI against exactly what the backend sends, byte-level values included.
 */

/** The inconsistent 3x3 sample: a12 = a13 = a23 = 2. */
export const SAMPLE_ENTRIES = [
  [1, 2, 2],
  [0.5, 1, 2],
  [0.5, 0.5, 1],
];

/** The same sample after the top repair a13 = 4 has been applied. */
export const SAMPLE_FIXED_ENTRIES = [
  [1, 2, 4],
  [0.5, 1, 2],
  [0.25, 0.5, 1],
];

export const ANALYZE_SAMPLE: AnalyzeResponse = {
  n: 3,
  consistent: false,
  kii: 0.5,
  chain_ii: 0.5,
  lambda_max: 3.05362157588,
  ci: 0.0268107879394,
  cr: 0.0511168502181,
  ri: 0.5245,
  weights: [0.493385966737, 0.310813682607, 0.195800350656],
  worst_triad: { i: 1, j: 2, k: 3, value: 0.5 },
  triad_heat: [{ i: 1, j: 2, k: 3, ii: 0.5 }],
};

export const ANALYZE_SAMPLE_FIXED: AnalyzeResponse = {
  n: 3,
  consistent: true,
  kii: 0.0,
  chain_ii: 0.0,
  lambda_max: 3.0,
  ci: 0.0,
  cr: 0.0,
  ri: 0.5245,
  weights: [0.571428571429, 0.285714285714, 0.142857142857],
  worst_triad: { i: 1, j: 2, k: 3, value: 0.0 },
  triad_heat: [{ i: 1, j: 2, k: 3, ii: 0.0 }],
};

export const ANALYZE_ONES_3: AnalyzeResponse = {
  n: 3,
  consistent: true,
  kii: 0.0,
  chain_ii: 0.0,
  lambda_max: 3.0,
  ci: 0.0,
  cr: 0.0,
  ri: 0.5245,
  weights: [0.333333333333, 0.333333333333, 0.333333333333],
  worst_triad: { i: 1, j: 2, k: 3, value: 0.0 },
  triad_heat: [{ i: 1, j: 2, k: 3, ii: 0.0 }],
};

/** A 4x4 with a single contested corner: ones everywhere, a14 = 4. */
export const ANALYZE_CORNER_4: AnalyzeResponse = {
  n: 4,
  consistent: false,
  kii: 0.75,
  chain_ii: 0.75,
  lambda_max: 4.24922574638,
  ci: 0.0830752487944,
  cr: 0.0941896244835,
  ri: 0.882,
  weights: [0.343145750508, 0.242640687119, 0.242640687119, 0.171572875254],
  worst_triad: { i: 1, j: 2, k: 4, value: 0.75 },
  triad_heat: [
    { i: 1, j: 2, k: 3, ii: 0.0 },
    { i: 1, j: 2, k: 4, ii: 0.75 },
    { i: 1, j: 3, k: 4, ii: 0.75 },
    { i: 2, j: 3, k: 4, ii: 0.0 },
  ],
};

export const REPAIRS_SAMPLE: RepairCandidate[] = [
  { cell: [1, 3], old: 2.0, new: 4.0, projected_kii: 0.0 },
  { cell: [1, 2], old: 2.0, new: 1.0, projected_kii: 0.0 },
  { cell: [2, 3], old: 2.0, new: 1.0, projected_kii: 0.0 },
];

export const REPAIRS_CORNER_4: RepairCandidate[] = [
  { cell: [1, 4], old: 4.0, new: 1.0, projected_kii: 0.0 },
  { cell: [1, 2], old: 1.0, new: 4.0, projected_kii: 0.75 },
  { cell: [2, 4], old: 1.0, new: 4.0, projected_kii: 0.75 },
];
