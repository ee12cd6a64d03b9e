import { describe, expect, it } from 'vitest';

import { makeGeometry } from '../src/contract.js';
import { pointAtValue, projectPointer, snapToEnds } from '../src/scale.js';

const GEOM = makeGeometry(100, 100, 50);

describe('projectPointer', () => {
  it('hits the arc anchors', () => {
    // raw projection may carry -0 at the start anchor; snapping clears it
    expect(projectPointer(50, 100, GEOM)).toBeCloseTo(0, 15);
    expect(projectPointer(100, 50, GEOM)).toBeCloseTo(0.5, 12);
    expect(projectPointer(150, 100, GEOM)).toBeCloseTo(1, 12);
  });

  it('locates the quarter point', () => {
    const p = pointAtValue(0.25, GEOM);
    expect(projectPointer(p.x, p.y, GEOM)).toBeCloseTo(0.25, 12);
  });

  it('is radius independent', () => {
    const near = projectPointer(100 + 3, 100 - 3, GEOM);
    const far = projectPointer(100 + 300, 100 - 300, GEOM);
    expect(near).toBeCloseTo(far!, 12);
  });

  it('clamps positions beyond the arc ends to the nearer end', () => {
    // below the baseline on each side
    expect(projectPointer(60, 140, GEOM)).toBe(0);
    expect(projectPointer(100, 150, GEOM)).toBe(1);
    expect(projectPointer(140, 140, GEOM)).toBe(1);
  });

  it('returns null at the exact center', () => {
    expect(projectPointer(100, 100, GEOM)).toBeNull();
  });

  it('follows a reversed arc', () => {
    const reversed = makeGeometry(100, 100, 50, 0, 180);
    expect(projectPointer(150, 100, reversed)).toBe(0);
    expect(projectPointer(50, 100, reversed)).toBeCloseTo(1, 12);
    expect(projectPointer(100, 50, reversed)).toBeCloseTo(0.5, 12);
  });

  it('multiplies by scaleMax', () => {
    expect(projectPointer(100, 50, GEOM, 7)).toBeCloseTo(3.5, 12);
  });

  it('inverts pointAtValue across the arc', () => {
    for (let i = 0; i <= 20; i++) {
      const v = i / 20;
      const p = pointAtValue(v, GEOM);
      expect(projectPointer(p.x, p.y, GEOM)).toBeCloseTo(v, 10);
    }
  });
});

describe('snapToEnds', () => {
  it('snaps trig residue at the ends and nothing else', () => {
    expect(snapToEnds(1.2e-17)).toBe(0);
    expect(snapToEnds(1 - 1e-16)).toBe(1);
    expect(snapToEnds(0.001)).toBe(0.001);
    expect(snapToEnds(0.999)).toBe(0.999);
  });

  it('scales its window with scaleMax', () => {
    expect(snapToEnds(5 - 1e-12, 5)).toBe(5);
    expect(snapToEnds(4.9, 5)).toBe(4.9);
  });

  it('makes endpoint clicks exact after projection', () => {
    const p = pointAtValue(0, GEOM);
    const raw = projectPointer(p.x, p.y, GEOM)!;
    expect(snapToEnds(raw)).toBe(0);
  });
});
