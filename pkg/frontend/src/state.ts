import type { AnalyzeResponse, RepairCandidate } from './types.js';

/**
 * Immutable snapshot of the editor. Undo and redo swap whole GridState
 * values, so every field a user can observe lives here, including the last
 * analysis and the repair proposals derived from it.
 */
export interface GridState {
  readonly n: number;
  /**
   * Upper-triangle cell contents exactly as typed, row-major: (1,2), (1,3),
   * ..., (1,n), (2,3), ... Cells hold text, not numbers, so invalid input
   * stays visible while it is being corrected.
   */
  readonly upper: readonly string[];
  /** Latest analysis applied to this grid, or null before the first one. */
  readonly analysis: AnalyzeResponse | null;
  /** Repair proposals for the analysed matrix; null hides the panel. */
  readonly repairs: readonly RepairCandidate[] | null;
  /** True while the grid has edits the shown analysis does not reflect. */
  readonly pending: boolean;
}

export const MIN_SIZE = 3;
export const MAX_SIZE = 8;

export function upperLength(n: number): number {
  return (n * (n - 1)) / 2;
}

/** Position of 1-based upper-triangle cell (i, j), i < j, in GridState.upper. */
export function upperOffset(n: number, i: number, j: number): number {
  if (!(i >= 1 && i < j && j <= n)) {
    throw new RangeError(`cell (${i}, ${j}) is not in the upper triangle of a ${n}x${n} grid`);
  }
  return (i - 1) * n - ((i - 1) * i) / 2 + (j - i - 1);
}

export function allOnesState(n: number): GridState {
  return {
    n,
    upper: new Array<string>(upperLength(n)).fill('1'),
    analysis: null,
    repairs: null,
    pending: true,
  };
}

const FRACTION_PATTERN = /^([0-9]+(?:\.[0-9]+)?)\s*\/\s*([0-9]+(?:\.[0-9]+)?)$/;

/**
 * Parse one cell. Accepts positive decimal numbers and simple fractions such
 * as "1/3". Returns null for anything that must not reach the service:
 * empty text, zero, negatives, or non-numeric input.
 */
export function parseCell(text: string): number | null {
  const trimmed = text.trim();
  if (trimmed === '') {
    return null;
  }
  const fraction = FRACTION_PATTERN.exec(trimmed);
  let value: number;
  if (fraction) {
    value = Number(fraction[1]) / Number(fraction[2]);
  } else {
    value = Number(trimmed);
  }
  return Number.isFinite(value) && value > 0 ? value : null;
}

/** Text for the read-only lower-triangle mirror of an upper cell. */
export function reciprocalText(upperText: string): string {
  const value = parseCell(upperText);
  if (value === null) {
    return '';
  }
  if (value === 1) {
    return '1';
  }
  const trimmed = upperText.trim();
  const fraction = FRACTION_PATTERN.exec(trimmed);
  if (fraction) {
    // The reciprocal of "a/b" reads best as "b/a", or just "b" when a is 1.
    return Number(fraction[1]) === 1 ? fraction[2] : `${fraction[2]}/${fraction[1]}`;
  }
  return `1/${trimmed}`;
}

/** Displayed text of any cell: typed text above, "1" on, mirror below. */
export function cellText(state: GridState, i: number, j: number): string {
  if (i === j) {
    return '1';
  }
  if (i < j) {
    return state.upper[upperOffset(state.n, i, j)];
  }
  return reciprocalText(state.upper[upperOffset(state.n, j, i)]);
}

/**
 * Full matrix derived from the grid, or null while any cell is invalid.
 * Lower-triangle entries are the exact IEEE reciprocals of the upper ones,
 * so reciprocity holds to the last bit of what floating point can express.
 */
export function matrixFromState(state: GridState): number[][] | null {
  const { n, upper } = state;
  const matrix: number[][] = [];
  for (let i = 0; i < n; i++) {
    matrix.push(new Array<number>(n).fill(1));
  }
  for (let i = 1; i <= n; i++) {
    for (let j = i + 1; j <= n; j++) {
      const value = parseCell(upper[upperOffset(n, i, j)]);
      if (value === null) {
        return null;
      }
      matrix[i - 1][j - 1] = value;
      matrix[j - 1][i - 1] = 1 / value;
    }
  }
  return matrix;
}

/** True when the typed content of upper cell (i, j) fails validation. */
export function cellInvalid(state: GridState, i: number, j: number): boolean {
  return parseCell(state.upper[upperOffset(state.n, i, j)]) === null;
}

/** Grid state with one upper cell replaced; everything else untouched. */
export function withCell(state: GridState, i: number, j: number, text: string): GridState {
  const upper = state.upper.slice();
  upper[upperOffset(state.n, i, j)] = text;
  return { ...state, upper, pending: true };
}

/** Grid state loaded from matrix entries (row-major, 1 on the diagonal). */
export function stateFromEntries(entries: number[][]): GridState {
  const n = entries.length;
  const upper = new Array<string>(upperLength(n));
  for (let i = 1; i <= n; i++) {
    for (let j = i + 1; j <= n; j++) {
      upper[upperOffset(n, i, j)] = String(entries[i - 1][j - 1]);
    }
  }
  return { n, upper, analysis: null, repairs: null, pending: true };
}

/** Resized grid keeping overlapping cells; new cells start at "1". */
export function resizedState(state: GridState, n: number): GridState {
  const upper = new Array<string>(upperLength(n)).fill('1');
  const keep = Math.min(n, state.n);
  for (let i = 1; i <= keep; i++) {
    for (let j = i + 1; j <= keep; j++) {
      upper[upperOffset(n, i, j)] = state.upper[upperOffset(state.n, i, j)];
    }
  }
  return { n, upper, analysis: null, repairs: null, pending: true };
}

/** Acceptability cutoff for the peak triad inconsistency. */
export const ACCEPTABLE_KII = 1 / 3;

export type RepairStatus = 'green' | 'amber' | 'red';

/**
 * Traffic-light rating of a repair proposal: green at or below the
 * acceptability cutoff, red beyond twice the cutoff, amber in between.
 */
export function repairStatus(projectedKii: number): RepairStatus {
  if (projectedKii <= ACCEPTABLE_KII) {
    return 'green';
  }
  if (projectedKii <= 2 * ACCEPTABLE_KII) {
    return 'amber';
  }
  return 'red';
}

/**
 * The three upper-triangle cells of the worst triad, as [i, j] pairs, or an
 * empty list when the matrix is consistent and nothing deserves a highlight.
 */
export function worstTriadCells(analysis: AnalyzeResponse | null): Array<[number, number]> {
  if (!analysis || !analysis.worst_triad || analysis.worst_triad.value <= 0) {
    return [];
  }
  const { i, j, k } = analysis.worst_triad;
  return [
    [i, j],
    [i, k],
    [j, k],
  ];
}

/**
 * Heat intensity per upper-triangle cell: the highest inconsistency among
 * the triads the cell takes part in, keyed "i,j".
 */
export function cellHeat(analysis: AnalyzeResponse | null): Map<string, number> {
  const heat = new Map<string, number>();
  if (!analysis) {
    return heat;
  }
  const bump = (i: number, j: number, ii: number): void => {
    const key = `${i},${j}`;
    heat.set(key, Math.max(heat.get(key) ?? 0, ii));
  };
  for (const triad of analysis.triad_heat) {
    bump(triad.i, triad.j, triad.ii);
    bump(triad.i, triad.k, triad.ii);
    bump(triad.j, triad.k, triad.ii);
  }
  return heat;
}
