/**
 * Scripted questionnaire sessions, driven through the real session and
 * recorder APIs with a manual clock. Used by the tests and by the fixture
 * generator; everything here is deterministic, no Math.random and no wall
 * clock anywhere.
 */

import type { ResponsesDocument, ScaleGeometry } from './contract.js';
import { makeGeometry, serializeDocument } from './contract.js';
import { pointAtValue, projectPointer, snapToEnds } from './scale.js';
import { QuestionnaireSession } from './session.js';

export interface ManualClock {
  now(): number;
  advance(ms: number): void;
}

export function manualClock(startMs = 0): ManualClock {
  let t = startMs;
  return {
    now: () => t,
    advance: (ms) => {
      t += ms;
    },
  };
}

// 32-bit LCG; Math.imul keeps the multiply exact on every platform
function lcg(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (Math.imul(state, 1664525) + 1013904223) >>> 0;
    return state / 2 ** 32;
  };
}

const PERIOD_MS = 20; // 50 Hz

interface PromptScript {
  /** Values the pointer rests on, one per cadence period, in order. */
  path: number[];
  /** Value clicked at the end; the pointer is moved there for the click. */
  commit: number;
}

function runPrompt(
  session: QuestionnaireSession,
  clock: ManualClock,
  script: PromptScript,
  geometry: ScaleGeometry,
): void {
  const recorder = session.beginPrompt();
  for (const value of script.path) {
    const p = pointAtValue(value, geometry, session.scaleMax);
    recorder.pointerAt(p.x, p.y);
    recorder.tick();
    clock.advance(PERIOD_MS);
  }
  const click = pointAtValue(script.commit, geometry, session.scaleMax);
  // commit exactly what the widget would display for this click position
  const projected = projectPointer(click.x, click.y, geometry, session.scaleMax);
  if (projected === null) {
    throw new Error('scripted click landed on the scale center');
  }
  session.commit(snapToEnds(projected, session.scaleMax), click.x, click.y, geometry);
}

function gridSweep(from: number, to: number, steps: number): number[] {
  const path: number[] = [];
  for (let i = 0; i <= steps; i++) {
    path.push(from + ((to - from) * i) / steps);
  }
  return path;
}

export interface SimulatedSession {
  document: ResponsesDocument;
  json: string;
  /** Export taken after every commit, index 0 being the empty session. */
  partials: string[];
}

/**
 * The reference single-prompt session: the pointer sweeps the scale from
 * 0.2 to 0.8, wanders back, and commits at 0.6. Downstream fuzzification
 * of this trajectory lands near (0.23, 0.6, 0.77).
 */
export function runSweepSession(): SimulatedSession {
  const geometry = makeGeometry(320, 320, 260);
  const clock = manualClock();
  const session = new QuestionnaireSession({
    roster: ['ana', 'bo'],
    rater: 'ana',
    scaleMax: 1,
    geometry,
    cadenceHz: 1000 / PERIOD_MS,
    now: clock.now,
    wallClock: clock.now,
  });
  const partials = [serializeDocument(session.exportDocument())];
  runPrompt(
    session,
    clock,
    { path: [...gridSweep(0.2, 0.8, 120), 0.75, 0.7, 0.65], commit: 0.6 },
    geometry,
  );
  const document = session.exportDocument();
  const json = serializeDocument(document);
  partials.push(json);
  return { document, json, partials };
}

/**
 * A ten-prompt session with varied trajectories: a straight no-tie answer,
 * hesitations, overshoot-and-return paths, and a window resize partway
 * through that changes the scale geometry for the remaining prompts.
 */
export function runSyntheticSession(): SimulatedSession {
  const roster = Array.from({ length: 11 }, (_, i) => `m${String(i).padStart(2, '0')}`);
  const baseGeometry = makeGeometry(320, 320, 260);
  const resizedGeometry = makeGeometry(240, 260, 190);
  const clock = manualClock();
  const session = new QuestionnaireSession({
    roster,
    rater: 'm00',
    scaleMax: 1,
    geometry: baseGeometry,
    cadenceHz: 1000 / PERIOD_MS,
    now: clock.now,
    wallClock: clock.now,
  });
  const rand = lcg(0xf5a11);
  const partials = [serializeDocument(session.exportDocument())];

  for (let k = 0; k < session.promptCount; k++) {
    // the window is resized between prompts 5 and 6
    const geometry = k >= 6 ? resizedGeometry : baseGeometry;
    let script: PromptScript;
    if (k === 2) {
      // no collaboration: park at zero and click
      script = { path: [0, 0, 0, 0, 0], commit: 0 };
    } else {
      const target = 0.12 + 0.8 * ((k * 7) % 10) / 10 + 0.05 * rand();
      const start = 0.05 + 0.4 * rand();
      const overshoot = Math.min(1, target + 0.1 * rand());
      const path = [
        ...gridSweep(start, overshoot, 12 + Math.floor(rand() * 20)),
        ...Array.from({ length: 5 + Math.floor(rand() * 90) }, () => overshoot),
        ...gridSweep(overshoot, target, 6),
      ];
      script = { path, commit: target };
    }
    runPrompt(session, clock, script, geometry);
    partials.push(serializeDocument(session.exportDocument()));
    clock.advance(350); // reading the next prompt
  }
  const document = session.exportDocument();
  return { document, json: serializeDocument(document), partials };
}
