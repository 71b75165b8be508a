import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { DEBOUNCE_MS, LatestWins, debounce } from "../src/debounce.js";

function deferred<T>() {
  let resolve!: (value: T) => void;
  let reject!: (error: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("collapses a burst into one trailing call with the last value", () => {
    const calls: number[] = [];
    const run = debounce((value: number) => calls.push(value), DEBOUNCE_MS);
    run(1);
    run(2);
    run(3);
    vi.advanceTimersByTime(DEBOUNCE_MS - 1);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
  });

  it("fires separately for calls spaced past the interval", () => {
    const calls: number[] = [];
    const run = debounce((value: number) => calls.push(value), DEBOUNCE_MS);
    run(1);
    vi.advanceTimersByTime(DEBOUNCE_MS);
    run(2);
    vi.advanceTimersByTime(DEBOUNCE_MS);
    expect(calls).toEqual([1, 2]);
  });

  it("cancel suppresses the pending call", () => {
    const calls: number[] = [];
    const run = debounce((value: number) => calls.push(value), DEBOUNCE_MS);
    run(1);
    run.cancel();
    vi.advanceTimersByTime(DEBOUNCE_MS * 2);
    expect(calls).toEqual([]);
  });
});

describe("LatestWins", () => {
  it("keeps at most one request in flight and only the latest result lands", async () => {
    const pending: Array<{ arg: number; gate: ReturnType<typeof deferred<string>> }> = [];
    const applied: Array<[number, string]> = [];
    const failed: number[] = [];
    const runner = new LatestWins<number, string>(
      (arg) => {
        const gate = deferred<string>();
        pending.push({ arg, gate });
        return gate.promise;
      },
      (arg, result) => applied.push([arg, result]),
      (arg) => failed.push(arg),
    );

    runner.submit(1);
    runner.submit(2);
    runner.submit(3);
    expect(pending.map((entry) => entry.arg)).toEqual([1]);
    expect(runner.busy).toBe(true);

    pending[0].gate.resolve("first");
    await flush();
    // the first outcome was stale, so it never landed; 3 superseded 2
    expect(applied).toEqual([]);
    expect(pending.map((entry) => entry.arg)).toEqual([1, 3]);

    pending[1].gate.resolve("third");
    await flush();
    expect(applied).toEqual([[3, "third"]]);
    expect(failed).toEqual([]);
    expect(runner.busy).toBe(false);
  });

  it("reports a failure when the failed call is still the latest", async () => {
    const applied: string[] = [];
    const failures: Array<[number, unknown]> = [];
    const runner = new LatestWins<number, string>(
      () => Promise.reject(new Error("boom")),
      (_arg, result) => applied.push(result),
      (arg, error) => failures.push([arg, error]),
    );
    runner.submit(7);
    await flush();
    expect(applied).toEqual([]);
    expect(failures).toHaveLength(1);
    expect(failures[0][0]).toBe(7);
    expect(String(failures[0][1])).toContain("boom");
  });

  it("drops the failure of a superseded call", async () => {
    const gates: Array<ReturnType<typeof deferred<string>>> = [];
    const applied: string[] = [];
    const failures: unknown[] = [];
    const runner = new LatestWins<number, string>(
      () => {
        const gate = deferred<string>();
        gates.push(gate);
        return gate.promise;
      },
      (_arg, result) => applied.push(result),
      (_arg, error) => failures.push(error),
    );
    runner.submit(1);
    runner.submit(2);
    gates[0].reject(new Error("stale failure"));
    await flush();
    gates[1].resolve("fresh");
    await flush();
    expect(failures).toEqual([]);
    expect(applied).toEqual(["fresh"]);
  });
});
