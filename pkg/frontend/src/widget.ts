/**
 * The semicircular scale control. An SVG arc fills its host element; the
 * pointer's projected value is displayed live, and a click commits it.
 * Coordinates reported to callers are local to the host, the same frame
 * the exported geometry describes.
 */

import type { ScaleGeometry } from './contract.js';
import { makeGeometry } from './contract.js';
import { pointAtValue, projectPointer, snapToEnds } from './scale.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

export interface ScaleWidgetOptions {
  scaleMax: number;
  /** Live value under the pointer (already end-snapped). */
  onLive?: (value: number, x: number, y: number) => void;
  /** Commit click: the value shown at click time and the click position. */
  onCommit?: (value: number, x: number, y: number) => void;
  onGeometryChange?: (geometry: ScaleGeometry) => void;
}

export class SemicircleScale {
  private readonly host: HTMLElement;
  private readonly options: ScaleWidgetOptions;
  private readonly svg: SVGSVGElement;
  private readonly arc: SVGPathElement;
  private readonly marker: SVGCircleElement;
  private readonly readout: HTMLDivElement;
  private geom: ScaleGeometry;
  private live: number | null = null;
  private readonly resizeHandler = () => this.layout();
  private observer: ResizeObserver | null = null;

  constructor(host: HTMLElement, options: ScaleWidgetOptions) {
    this.host = host;
    this.options = options;

    this.svg = document.createElementNS(SVG_NS, 'svg');
    this.svg.style.display = 'block';
    this.svg.style.width = '100%';
    this.svg.style.height = '100%';
    this.svg.style.touchAction = 'none';

    this.arc = document.createElementNS(SVG_NS, 'path');
    this.arc.setAttribute('fill', 'none');
    this.arc.setAttribute('stroke', 'currentColor');
    this.arc.setAttribute('stroke-width', '10');
    this.arc.setAttribute('stroke-linecap', 'round');

    this.marker = document.createElementNS(SVG_NS, 'circle');
    this.marker.setAttribute('r', '9');
    this.marker.setAttribute('fill', 'currentColor');
    this.marker.setAttribute('visibility', 'hidden');

    this.readout = document.createElement('div');
    this.readout.className = 'scale-readout';
    this.readout.textContent = '';

    this.svg.appendChild(this.arc);
    this.svg.appendChild(this.marker);
    host.appendChild(this.svg);
    host.appendChild(this.readout);

    this.geom = this.computeGeometry();
    this.layout();

    this.svg.addEventListener('pointermove', this.onPointerMove);
    this.svg.addEventListener('click', this.onClick);
    if (typeof ResizeObserver !== 'undefined') {
      this.observer = new ResizeObserver(this.resizeHandler);
      this.observer.observe(host);
    }
    window.addEventListener('resize', this.resizeHandler);
  }

  geometry(): ScaleGeometry {
    return this.geom;
  }

  /** Last value shown to the user; null when the pointer is off the scale. */
  liveValue(): number | null {
    return this.live;
  }

  clearMarker(): void {
    this.live = null;
    this.marker.setAttribute('visibility', 'hidden');
    this.readout.textContent = '';
  }

  destroy(): void {
    this.svg.removeEventListener('pointermove', this.onPointerMove);
    this.svg.removeEventListener('click', this.onClick);
    window.removeEventListener('resize', this.resizeHandler);
    this.observer?.disconnect();
    this.svg.remove();
    this.readout.remove();
  }

  private computeGeometry(): ScaleGeometry {
    const rect = this.host.getBoundingClientRect();
    const width = Math.max(rect.width, 60);
    const height = Math.max(rect.height, 40);
    const margin = 24;
    const centerY = height - margin;
    const radius = Math.max(10, Math.min(width / 2 - margin, centerY - margin));
    return makeGeometry(width / 2, centerY, radius);
  }

  private layout(): void {
    const next = this.computeGeometry();
    const changed =
      next.center_x !== this.geom.center_x ||
      next.center_y !== this.geom.center_y ||
      next.radius !== this.geom.radius;
    this.geom = next;
    const rect = this.host.getBoundingClientRect();
    this.svg.setAttribute(
      'viewBox',
      `0 0 ${Math.max(rect.width, 60)} ${Math.max(rect.height, 40)}`,
    );
    const a = pointAtValue(0, this.geom, this.options.scaleMax);
    const b = pointAtValue(this.options.scaleMax, this.geom, this.options.scaleMax);
    const r = this.geom.radius;
    // 180 -> 0 degrees is the upper half, drawn clockwise in screen space
    this.arc.setAttribute(
      'd',
      `M ${a.x} ${a.y} A ${r} ${r} 0 0 1 ${b.x} ${b.y}`,
    );
    if (changed) {
      this.options.onGeometryChange?.(this.geom);
    }
  }

  private localPoint(ev: MouseEvent): { x: number; y: number } {
    const rect = this.host.getBoundingClientRect();
    return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
  }

  private project(p: { x: number; y: number }): number | null {
    const raw = projectPointer(p.x, p.y, this.geom, this.options.scaleMax);
    return raw === null ? null : snapToEnds(raw, this.options.scaleMax);
  }

  private readonly onPointerMove = (ev: MouseEvent) => {
    const p = this.localPoint(ev);
    const value = this.project(p);
    if (value === null) {
      return;
    }
    this.live = value;
    const dot = pointAtValue(value, this.geom, this.options.scaleMax);
    this.marker.setAttribute('cx', String(dot.x));
    this.marker.setAttribute('cy', String(dot.y));
    this.marker.setAttribute('visibility', 'visible');
    this.readout.textContent = value.toFixed(3);
    this.options.onLive?.(value, p.x, p.y);
  };

  private readonly onClick = (ev: MouseEvent) => {
    const p = this.localPoint(ev);
    const value = this.project(p);
    if (value === null) {
      return;
    }
    this.live = value;
    this.options.onCommit?.(value, p.x, p.y);
  };
}
