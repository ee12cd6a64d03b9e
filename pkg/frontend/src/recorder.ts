/**
 * Fixed-cadence trajectory recording for one prompt.
 *
 * The recorder does not own a timer. Whatever drives the cadence (the app
 * uses setInterval, tests call tick directly) calls tick() every period;
 * the recorder notes where the pointer was resting at that moment. This
 * bounds the payload regardless of how fast the pointer moves, and makes
 * dwell time explicit: a pointer parked on one value for two seconds at
 * 50 Hz contributes about a hundred samples there.
 */

import type { WireSample } from './contract.js';

export interface RecordedSample {
  t: number;
  x: number;
  y: number;
}

export class TrajectoryRecorder {
  private readonly now: () => number;
  private startedAt = 0;
  private rest: { x: number; y: number } | null = null;
  private buffer: RecordedSample[] = [];
  private sealed = false;
  private committedAtMs: number | null = null;

  constructor(now: () => number) {
    this.now = now;
  }

  /** Begin recording; timestamps are milliseconds since this call. */
  start(): void {
    this.startedAt = this.now();
    this.rest = null;
    this.buffer = [];
    this.sealed = false;
    this.committedAtMs = null;
  }

  /** The pointer moved; remember where it is resting now. */
  pointerAt(x: number, y: number): void {
    if (!this.sealed) {
      this.rest = { x, y };
    }
  }

  /** One cadence period elapsed; sample the resting position if known. */
  tick(): void {
    if (this.sealed || this.rest === null) {
      return;
    }
    this.push(this.rest.x, this.rest.y);
  }

  /**
   * The commit click: record the click position as the final sample (so
   * even a click without any prior movement yields one sample) and seal
   * the buffer. Further pointer activity is ignored.
   */
  seal(x: number, y: number): void {
    if (this.sealed) {
      return;
    }
    this.push(x, y);
    this.committedAtMs = this.buffer[this.buffer.length - 1]!.t;
    this.sealed = true;
  }

  private push(x: number, y: number): void {
    const t = this.now() - this.startedAt;
    const last = this.buffer[this.buffer.length - 1];
    // clamp against clock jitter; the contract requires nondecreasing t
    this.buffer.push({ t: last !== undefined && t < last.t ? last.t : t, x, y });
  }

  get isSealed(): boolean {
    return this.sealed;
  }

  /** Commit-click time on the sample clock; null until sealed. */
  get committedAt(): number | null {
    return this.committedAtMs;
  }

  samples(): RecordedSample[] {
    return this.buffer.slice();
  }

  wireSamples(): WireSample[] {
    return this.buffer.map((s) => [s.t, s.x, s.y]);
  }
}
