/**
 * One rater's pass through the questionnaire: a prompt per colleague, in
 * roster order, each with its own sealed trajectory. The session owns the
 * recording buffer lifecycle so a prompt can never leak samples into the
 * next one.
 */

import type {
  ResponsesDocument,
  ScaleGeometry,
  WireResponse,
} from './contract.js';
import { ENCODING, FORMAT, VERSION, sameGeometry } from './contract.js';
import { TrajectoryRecorder } from './recorder.js';

export interface SessionConfig {
  roster: string[];
  rater: string;
  scaleMax: number;
  geometry: ScaleGeometry;
  cadenceHz: number;
  /** Sample clock, milliseconds. Injectable for deterministic tests. */
  now?: () => number;
  /** Wall clock for submitted_at ordering. Defaults to the sample clock. */
  wallClock?: () => number;
}

export class QuestionnaireSession {
  readonly roster: string[];
  readonly rater: string;
  readonly scaleMax: number;
  readonly geometry: ScaleGeometry;
  readonly cadenceHz: number;

  private readonly now: () => number;
  private readonly wallClock: () => number;
  private readonly queue: string[];
  private cursor = 0;
  private recorder: TrajectoryRecorder | null = null;
  private readonly records: WireResponse[] = [];

  constructor(config: SessionConfig) {
    if (config.roster.length < 2) {
      throw new Error('roster needs at least two members');
    }
    if (new Set(config.roster).size !== config.roster.length) {
      throw new Error('roster names must be unique');
    }
    if (!config.roster.includes(config.rater)) {
      throw new Error(`rater ${JSON.stringify(config.rater)} is not on the roster`);
    }
    if (!(config.scaleMax > 0)) {
      throw new Error(`scaleMax must be positive, got ${config.scaleMax}`);
    }
    if (!(config.cadenceHz > 0)) {
      throw new Error(`cadenceHz must be positive, got ${config.cadenceHz}`);
    }
    this.roster = config.roster.slice();
    this.rater = config.rater;
    this.scaleMax = config.scaleMax;
    this.geometry = config.geometry;
    this.cadenceHz = config.cadenceHz;
    this.now = config.now ?? (() => performance.now());
    this.wallClock = config.wallClock ?? this.now;
    // every colleague exactly once, in roster order, never the rater
    this.queue = this.roster.filter((name) => name !== this.rater);
  }

  get finished(): boolean {
    return this.cursor >= this.queue.length;
  }

  get promptCount(): number {
    return this.queue.length;
  }

  get completedCount(): number {
    return this.records.length;
  }

  /** The colleague currently being rated; null when the session is done. */
  currentRatee(): string | null {
    return this.finished ? null : this.queue[this.cursor]!;
  }

  /**
   * Show the current prompt and start its recording. Returns the active
   * recorder; calling again for the same prompt restarts its buffer.
   */
  beginPrompt(): TrajectoryRecorder {
    if (this.finished) {
      throw new Error('session is finished, no prompt to begin');
    }
    this.recorder = new TrajectoryRecorder(this.now);
    this.recorder.start();
    return this.recorder;
  }

  /**
   * Commit the current prompt at the clicked position. The committed value
   * must be the projected value at click time; the widget passes it in
   * along with the click coordinates that seal the buffer.
   */
  commit(value: number, clickX: number, clickY: number, geometry?: ScaleGeometry): void {
    if (this.recorder === null) {
      throw new Error('no active prompt; call beginPrompt first');
    }
    if (!(value >= 0 && value <= this.scaleMax)) {
      throw new Error(`committed value ${value} outside [0, ${this.scaleMax}]`);
    }
    const ratee = this.currentRatee();
    if (ratee === null) {
      throw new Error('session is finished');
    }
    this.recorder.seal(clickX, clickY);
    const effective = geometry ?? this.geometry;
    this.records.push({
      rater: this.rater,
      ratee,
      committed: value,
      submitted_at: this.wallClock(),
      committed_at: this.recorder.committedAt,
      geometry: sameGeometry(effective, this.geometry) ? null : effective,
      samples: this.recorder.wireSamples(),
    });
    this.recorder = null;
    this.cursor += 1;
  }

  /** Export what has been answered so far; valid at any point, even empty. */
  exportDocument(): ResponsesDocument {
    return {
      format: FORMAT,
      version: VERSION,
      encoding: ENCODING,
      scale_max: this.scaleMax,
      roster: this.roster.slice(),
      geometry: this.geometry,
      cadence_hz: this.cadenceHz,
      responses: this.records.map((r) => ({ ...r, samples: r.samples.slice() })),
    };
  }
}
