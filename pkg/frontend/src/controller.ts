import type { AnalysisApi } from './api.js';
import type { RepairCandidate } from './types.js';
import {
  GridState,
  MAX_SIZE,
  MIN_SIZE,
  allOnesState,
  matrixFromState,
  resizedState,
  stateFromEntries,
  withCell,
} from './state.js';

export const DEBOUNCE_MS = 150;

export interface ControllerOptions {
  api: AnalysisApi;
  /** Delay between the last keystroke and the analyze request. */
  debounceMs?: number;
  /** Called after every observable change; the view re-renders here. */
  onChange?: () => void;
}

/**
 * Single-owner state machine behind the grid. All mutations flow through
 * here; the view only reads `state` and calls the public methods.
 *
 * Concurrency model: at most one analyze outcome can ever be applied per
 * revision. Every mutation bumps `revision`; a response is applied only if
 * the revision it was requested under is still current. Late responses from
 * superseded requests are dropped on the floor, so the latest edit always
 * wins no matter how responses interleave.
 */
export class GridController {
  state: GridState;
  /** Message of the last failed request, cleared by the next success. */
  lastError: string | null = null;

  private readonly api: AnalysisApi;
  private readonly debounceMs: number;
  private readonly onChange: () => void;
  private readonly undoStack: GridState[] = [];
  private readonly redoStack: GridState[] = [];
  private revision = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(options: ControllerOptions) {
    this.api = options.api;
    this.debounceMs = options.debounceMs ?? DEBOUNCE_MS;
    this.onChange = options.onChange ?? ((): void => undefined);
    this.state = allOnesState(MIN_SIZE);
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  get canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  /** Replace one upper-triangle cell with what the user typed. */
  editCell(i: number, j: number, text: string): void {
    this.mutate(withCell(this.state, i, j, text));
    this.scheduleAnalyze();
  }

  /** Apply a repair proposal to its cell. Undo restores the old value. */
  applyRepair(candidate: RepairCandidate): void {
    const [i, j] = candidate.cell;
    this.mutate(withCell(this.state, i, j, String(candidate.new)));
    this.analyzeNow();
  }

  /** Load a full matrix, as from the generate endpoint or a saved file. */
  loadEntries(entries: number[][]): void {
    this.mutate(stateFromEntries(entries));
    this.analyzeNow();
  }

  /** Resize the grid, keeping the overlapping cells. */
  setSize(n: number): void {
    if (!(Number.isInteger(n) && n >= MIN_SIZE && n <= MAX_SIZE)) {
      throw new RangeError(`grid size must be an integer between ${MIN_SIZE} and ${MAX_SIZE}`);
    }
    if (n === this.state.n) {
      return;
    }
    this.mutate(resizedState(this.state, n));
    this.analyzeNow();
  }

  /**
   * Restore the previous state exactly as it was, indicators included. No
   * request is sent: the snapshot already carries its analysis.
   */
  undo(): boolean {
    if (this.undoStack.length === 0) {
      return false;
    }
    this.redoStack.push(this.state);
    this.state = this.undoStack.pop() as GridState;
    this.invalidateInFlight();
    this.notify();
    return true;
  }

  redo(): boolean {
    if (this.redoStack.length === 0) {
      return false;
    }
    this.undoStack.push(this.state);
    this.state = this.redoStack.pop() as GridState;
    this.invalidateInFlight();
    this.notify();
    return true;
  }

  /** Skip the debounce and analyze the current grid immediately. */
  analyzeNow(): void {
    this.cancelTimer();
    this.requestAnalyze();
  }

  private mutate(next: GridState): void {
    this.undoStack.push(this.state);
    this.redoStack.length = 0;
    this.state = next;
    this.invalidateInFlight();
    this.notify();
  }

  /** Supersede outstanding work: timers and in-flight responses. */
  private invalidateInFlight(): void {
    this.revision += 1;
    this.cancelTimer();
  }

  private cancelTimer(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  private scheduleAnalyze(): void {
    this.cancelTimer();
    if (matrixFromState(this.state) === null) {
      // Invalid cells never reach the service; the grid shows them inline.
      return;
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      this.requestAnalyze();
    }, this.debounceMs);
  }

  private requestAnalyze(): void {
    const matrix = matrixFromState(this.state);
    if (matrix === null) {
      return;
    }
    const revision = this.revision;
    this.api.analyze(matrix).then(
      (analysis) => {
        if (revision !== this.revision) {
          return; // Stale: the grid moved on while this was in flight.
        }
        this.lastError = null;
        // Old proposals describe an old grid; hide the panel until the
        // fresh ones arrive.
        this.state = { ...this.state, analysis, repairs: null, pending: false };
        this.notify();
        if (!analysis.consistent) {
          this.requestRepairs(revision, matrix);
        }
      },
      (error: unknown) => {
        if (revision !== this.revision) {
          return;
        }
        this.lastError = error instanceof Error ? error.message : String(error);
        this.notify();
      },
    );
  }

  private requestRepairs(revision: number, matrix: number[][]): void {
    this.api.proposeRepairs(matrix).then(
      (repairs) => {
        if (revision !== this.revision) {
          return;
        }
        this.state = { ...this.state, repairs };
        this.notify();
      },
      (error: unknown) => {
        if (revision !== this.revision) {
          return;
        }
        this.lastError = error instanceof Error ? error.message : String(error);
        this.notify();
      },
    );
  }

  private notify(): void {
    this.onChange();
  }
}
