/** Debounce interval for slider-driven allocation requests, in milliseconds. */
export const DEBOUNCE_MS = 150;

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
}

/** Trailing-edge debounce: a burst of calls runs `fn` once, with the last
arguments, `ms` after the burst ends. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
): Debounced<A> {
  let handle: ReturnType<typeof setTimeout> | undefined;
  const debounced = ((...args: A): void => {
    if (handle !== undefined) clearTimeout(handle);
    handle = setTimeout(() => {
      handle = undefined;
      fn(...args);
    }, ms);
  }) as Debounced<A>;
  debounced.cancel = () => {
    if (handle !== undefined) clearTimeout(handle);
    handle = undefined;
  };
  return debounced;
}

/**
 * Runs an async task with at most one call in flight.
 *
 * Submissions that arrive while a call is running are coalesced down to
 * the newest one; when the running call settles, its outcome is dropped
 * and the newest argument is sent instead. Only a call that was still
 * the latest when it settled reaches `apply` (or `fail`).
 */
export class LatestWins<A, R> {
  private inFlight = false;
  private queued: { arg: A } | null = null;

  constructor(
    private readonly task: (arg: A) => Promise<R>,
    private readonly apply: (arg: A, result: R) => void,
    private readonly fail: (arg: A, error: unknown) => void,
  ) {}

  get busy(): boolean {
    return this.inFlight;
  }

  submit(arg: A): void {
    if (this.inFlight) {
      this.queued = { arg };
      return;
    }
    void this.launch(arg);
  }

  private async launch(arg: A): Promise<void> {
    this.inFlight = true;
    let result: R | undefined;
    let error: unknown;
    let failed = false;
    try {
      result = await this.task(arg);
    } catch (exc) {
      error = exc;
      failed = true;
    }
    this.inFlight = false;
    const queued = this.queued;
    this.queued = null;
    if (queued !== null) {
      // a newer submission superseded this one; its outcome is stale
      void this.launch(queued.arg);
      return;
    }
    if (failed) this.fail(arg, error);
    else this.apply(arg, result as R);
  }
}
