/**
 * Geometry of the semicircular scale: mapping between pointer positions
 * and scale values. Mirrors the projection the ingesting side applies to
 * raw samples, so the value shown live is the value recovered later.
 */

import type { ScaleGeometry } from './contract.js';

const DEG = 180 / Math.PI;

// true mathematical modulo; JS % keeps the sign of the dividend
function mod(a: number, m: number): number {
  return ((a % m) + m) % m;
}

/**
 * Scale value of a pointer position, in [0, scaleMax]. The angle around
 * the center is located linearly within the arc; positions off the arc
 * clamp to the nearer end. The exact center has no angle: returns null,
 * callers skip such positions.
 */
export function projectPointer(
  x: number,
  y: number,
  geometry: ScaleGeometry,
  scaleMax = 1,
): number | null {
  const dx = x - geometry.center_x;
  const dy = geometry.center_y - y; // screen y grows downward
  if (dx === 0 && dy === 0) {
    return null;
  }
  const theta = Math.atan2(dy, dx) * DEG;
  const span = geometry.end_deg - geometry.start_deg;
  // wrap the offset into the 360-degree window centered on the arc, so
  // off-scale positions clamp to the nearer end
  const base = span / 2 - 180;
  const delta = mod(theta - geometry.start_deg - base, 360) + base;
  let t = delta / span;
  if (t < 0) {
    t = 0;
  } else if (t > 1) {
    t = 1;
  }
  return t * scaleMax;
}

/**
 * Snap a projected value to an exact scale end when it is within eps of
 * one. Clicking an endpoint must commit that endpoint exactly (a zero
 * answer means "no tie" downstream), but trigonometry leaves residues
 * around 1e-16. The default window is orders of magnitude below one pixel
 * of arc, so it never moves a value a user could distinguish.
 */
export function snapToEnds(value: number, scaleMax = 1, eps = 1e-9 * scaleMax): number {
  if (Math.abs(value) <= eps) {
    return 0;
  }
  if (Math.abs(value - scaleMax) <= eps) {
    return scaleMax;
  }
  return value;
}

/** Point on the arc for a scale value (the inverse of projectPointer). */
export function pointAtValue(
  value: number,
  geometry: ScaleGeometry,
  scaleMax = 1,
): { x: number; y: number } {
  const t = Math.min(1, Math.max(0, value / scaleMax));
  const thetaDeg = geometry.start_deg + t * (geometry.end_deg - geometry.start_deg);
  const theta = thetaDeg / DEG;
  return {
    x: geometry.center_x + geometry.radius * Math.cos(theta),
    y: geometry.center_y - geometry.radius * Math.sin(theta),
  };
}
