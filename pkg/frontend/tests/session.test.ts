import { describe, expect, it } from 'vitest';

import { makeGeometry } from '../src/contract.js';
import { QuestionnaireSession } from '../src/session.js';
import { manualClock } from '../src/simulate.js';

const GEOM = makeGeometry(320, 320, 260);

function makeSession(roster = ['ana', 'bo', 'cy', 'dee'], rater = 'bo') {
  const clock = manualClock();
  const session = new QuestionnaireSession({
    roster,
    rater,
    scaleMax: 1,
    geometry: GEOM,
    cadenceHz: 50,
    now: clock.now,
  });
  return { clock, session };
}

describe('QuestionnaireSession', () => {
  it('prompts every colleague exactly once, in roster order, never self', () => {
    const { session } = makeSession();
    const seen: string[] = [];
    while (!session.finished) {
      const ratee = session.currentRatee()!;
      seen.push(ratee);
      session.beginPrompt();
      session.commit(0.5, 1, 1);
    }
    expect(seen).toEqual(['ana', 'cy', 'dee']);
    expect(session.currentRatee()).toBeNull();
  });

  it('rejects rosters that cannot form a session', () => {
    expect(() => makeSession(['solo'], 'solo')).toThrow(/at least two/);
    expect(() => makeSession(['a', 'a', 'b'], 'a')).toThrow(/unique/);
    expect(() => makeSession(['a', 'b'], 'zz')).toThrow(/not on the roster/);
  });

  it('buffers never leak between prompts', () => {
    const { clock, session } = makeSession();
    const first = session.beginPrompt();
    first.pointerAt(1, 2);
    first.tick();
    clock.advance(20);
    session.commit(0.3, 1, 2);

    const second = session.beginPrompt();
    expect(second).not.toBe(first);
    expect(second.samples()).toHaveLength(0);
    clock.advance(20);
    session.commit(0.4, 5, 6);

    const doc = session.exportDocument();
    expect(doc.responses).toHaveLength(2);
    // first prompt: tick sample + click sample; second: click only
    expect(doc.responses[0]!.samples).toHaveLength(2);
    expect(doc.responses[1]!.samples).toHaveLength(1);
  });

  it('commit without an active prompt throws', () => {
    const { session } = makeSession();
    expect(() => session.commit(0.5, 0, 0)).toThrow(/beginPrompt/);
  });

  it('out of range values are rejected at commit', () => {
    const { session } = makeSession();
    session.beginPrompt();
    expect(() => session.commit(1.5, 0, 0)).toThrow(/outside/);
    expect(() => session.commit(-0.1, 0, 0)).toThrow(/outside/);
  });

  it('records submitted_at and committed_at on the stated clocks', () => {
    const { clock, session } = makeSession();
    session.beginPrompt();
    clock.advance(100);
    session.commit(0.5, 1, 1);
    clock.advance(250);
    session.beginPrompt();
    clock.advance(60);
    session.commit(0.6, 2, 2);

    const [a, b] = session.exportDocument().responses;
    expect(a!.committed_at).toBe(100); // relative to its prompt start
    expect(b!.committed_at).toBe(60);
    expect(a!.submitted_at).toBe(100); // wall clock defaults to sample clock
    expect(b!.submitted_at).toBe(410);
    expect(b!.submitted_at).toBeGreaterThan(a!.submitted_at);
  });

  it('annotates a response only when its geometry differs', () => {
    const { session } = makeSession();
    session.beginPrompt();
    session.commit(0.5, 1, 1, { ...GEOM });
    const resized = makeGeometry(100, 100, 80);
    session.beginPrompt();
    session.commit(0.5, 1, 1, resized);

    const [same, changed] = session.exportDocument().responses;
    expect(same!.geometry).toBeNull();
    expect(changed!.geometry).toEqual(resized);
  });

  it('a restarted prompt drops the earlier buffer', () => {
    const { clock, session } = makeSession();
    const first = session.beginPrompt();
    first.pointerAt(1, 1);
    first.tick();
    clock.advance(40);
    const retry = session.beginPrompt(); // same ratee, fresh recording
    expect(session.currentRatee()).toBe('ana');
    session.commit(0.2, 3, 3);
    const doc = session.exportDocument();
    expect(doc.responses).toHaveLength(1);
    expect(doc.responses[0]!.samples).toHaveLength(1);
    expect(retry.isSealed).toBe(true);
  });
});
