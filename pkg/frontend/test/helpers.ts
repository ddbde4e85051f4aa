import type { AnalysisApi } from '../src/api.js';
import type { AnalyzeResponse, RepairCandidate } from '../src/types.js';

export interface Deferred<T> {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (reason: Error) => void;
}

export function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (reason: Error) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

/**
 * Scripted stand-in for the HTTP client. Each call records its payload and
 * parks a deferred the test settles by hand, so response order, delays and
 * failures are all under the test's control. Requests are indexed in call
 * order: analyzePending[0] is the first analyze the controller ever issued.
 */
export class FakeApi implements AnalysisApi {
  readonly analyzeCalls: number[][][] = [];
  readonly repairCalls: number[][][] = [];
  readonly analyzePending: Array<Deferred<AnalyzeResponse>> = [];
  readonly repairPending: Array<Deferred<RepairCandidate[]>> = [];

  analyze(entries: number[][]): Promise<AnalyzeResponse> {
    this.analyzeCalls.push(entries);
    const d = deferred<AnalyzeResponse>();
    this.analyzePending.push(d);
    return d.promise;
  }

  proposeRepairs(entries: number[][]): Promise<RepairCandidate[]> {
    this.repairCalls.push(entries);
    const d = deferred<RepairCandidate[]>();
    this.repairPending.push(d);
    return d.promise;
  }
}

/** Let already-settled promise callbacks run. */
export async function flushMicrotasks(): Promise<void> {
  for (let i = 0; i < 5; i++) {
    await Promise.resolve();
  }
}
