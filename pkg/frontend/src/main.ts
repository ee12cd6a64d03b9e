/**
 * Page wiring: configuration comes from the #session-config JSON block,
 * the widget records into the session, and the finished session downloads
 * as a responses document.
 */

import { serializeDocument } from './contract.js';
import { QuestionnaireSession } from './session.js';
import type { TrajectoryRecorder } from './recorder.js';
import { SemicircleScale } from './widget.js';

interface PageConfig {
  roster: string[];
  rater: string;
  scale_max?: number;
  cadence_hz?: number;
}

function readConfig(): PageConfig {
  const node = document.getElementById('session-config');
  if (!node || !node.textContent) {
    throw new Error('missing #session-config block');
  }
  return JSON.parse(node.textContent) as PageConfig;
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

function start(): void {
  const config = readConfig();
  const host = el<HTMLDivElement>('scale');
  const prompt = el<HTMLDivElement>('prompt');
  const progress = el<HTMLDivElement>('progress');
  const download = el<HTMLButtonElement>('download');

  let session: QuestionnaireSession | null = null;
  let recorder: TrajectoryRecorder | null = null;
  let timer: number | null = null;

  const widget = new SemicircleScale(host, {
    scaleMax: config.scale_max ?? 1,
    onLive: (_value, x, y) => recorder?.pointerAt(x, y),
    onCommit: (value, x, y) => {
      if (!session || session.finished) {
        return;
      }
      session.commit(value, x, y, widget.geometry());
      widget.clearMarker();
      nextPrompt();
    },
  });

  session = new QuestionnaireSession({
    roster: config.roster,
    rater: config.rater,
    scaleMax: config.scale_max ?? 1,
    geometry: widget.geometry(),
    cadenceHz: config.cadence_hz ?? 50,
    wallClock: () => Date.now(),
  });

  const periodMs = 1000 / session.cadenceHz;

  function nextPrompt(): void {
    if (!session) {
      return;
    }
    if (session.finished) {
      if (timer !== null) {
        window.clearInterval(timer);
        timer = null;
      }
      recorder = null;
      prompt.textContent = 'All done. Thank you!';
      progress.textContent = `${session.completedCount} of ${session.promptCount} answered`;
      download.disabled = false;
      return;
    }
    recorder = session.beginPrompt();
    prompt.textContent =
      `How intense is your collaboration with ${session.currentRatee()}? ` +
      'Click the scale to answer.';
    progress.textContent = `${session.completedCount + 1} of ${session.promptCount}`;
  }

  timer = window.setInterval(() => recorder?.tick(), periodMs);

  download.disabled = true;
  download.addEventListener('click', () => {
    if (!session) {
      return;
    }
    const blob = new Blob([serializeDocument(session.exportDocument())], {
      type: 'application/json',
    });
    const url = URL.createObjectURL(blob);
    const a = document.createElement('a');
    a.href = url;
    a.download = `responses-${session.rater}.json`;
    a.click();
    URL.revokeObjectURL(url);
  });

  nextPrompt();
}

// no-op when loaded without a DOM (test tooling imports the page module too)
if (typeof document !== 'undefined') {
  if (document.readyState === 'loading') {
    document.addEventListener('DOMContentLoaded', start);
  } else {
    start();
  }
}
