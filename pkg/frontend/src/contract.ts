/**
 * The responses-file contract: the JSON document this app exports and the
 * analysis side ingests. Field names follow the wire format exactly, so
 * these types double as the serialization schema.
 */

export interface ScaleGeometry {
  center_x: number;
  center_y: number;
  radius: number;
  /** Arc start/end in mathematical degrees (counterclockwise from +x). */
  start_deg: number;
  end_deg: number;
}

/** One pointer observation on the wire: [t_ms, x, y]. */
export type WireSample = [number, number, number];

export interface WireResponse {
  rater: string;
  ratee: string;
  committed: number;
  submitted_at: number;
  committed_at: number | null;
  /** Scale placement for this response when it differs from the document's. */
  geometry: ScaleGeometry | null;
  samples: WireSample[];
}

export interface ResponsesDocument {
  format: 'fsn-responses';
  version: 1;
  encoding: 'utf-8';
  scale_max: number;
  roster: string[];
  geometry: ScaleGeometry;
  cadence_hz: number | null;
  responses: WireResponse[];
}

export const FORMAT = 'fsn-responses';
export const VERSION = 1;
export const ENCODING = 'utf-8';

export function makeGeometry(
  centerX: number,
  centerY: number,
  radius: number,
  startDeg = 180,
  endDeg = 0,
): ScaleGeometry {
  if (!Number.isFinite(centerX) || !Number.isFinite(centerY)) {
    throw new Error('geometry center must be finite');
  }
  if (!(radius > 0) || !Number.isFinite(radius)) {
    throw new Error(`radius must be positive, got ${radius}`);
  }
  if (!Number.isFinite(startDeg) || !Number.isFinite(endDeg) || startDeg === endDeg) {
    throw new Error('start_deg and end_deg must be finite and differ');
  }
  return {
    center_x: centerX,
    center_y: centerY,
    radius,
    start_deg: startDeg,
    end_deg: endDeg,
  };
}

export function sameGeometry(a: ScaleGeometry, b: ScaleGeometry): boolean {
  return (
    a.center_x === b.center_x &&
    a.center_y === b.center_y &&
    a.radius === b.radius &&
    a.start_deg === b.start_deg &&
    a.end_deg === b.end_deg
  );
}

/**
 * Canonical serialization: fixed key order, two-space indent, trailing
 * newline. The same document always serializes to the same bytes, so
 * repeated exports of an unchanged session are diffable.
 */
export function serializeDocument(doc: ResponsesDocument): string {
  const geometry = (g: ScaleGeometry) => ({
    center_x: g.center_x,
    center_y: g.center_y,
    radius: g.radius,
    start_deg: g.start_deg,
    end_deg: g.end_deg,
  });
  const ordered = {
    format: doc.format,
    version: doc.version,
    encoding: doc.encoding,
    scale_max: doc.scale_max,
    roster: doc.roster,
    geometry: geometry(doc.geometry),
    cadence_hz: doc.cadence_hz,
    responses: doc.responses.map((r) => ({
      rater: r.rater,
      ratee: r.ratee,
      committed: r.committed,
      submitted_at: r.submitted_at,
      committed_at: r.committed_at,
      geometry: r.geometry === null ? null : geometry(r.geometry),
      samples: r.samples,
    })),
  };
  return JSON.stringify(ordered, null, 2) + '\n';
}

type Issue = string;

function isNumber(v: unknown): v is number {
  return typeof v === 'number' && Number.isFinite(v);
}

function isRecord(v: unknown): v is Record<string, unknown> {
  return typeof v === 'object' && v !== null && !Array.isArray(v);
}

function checkGeometry(obj: unknown, where: string, issues: Issue[]): void {
  if (!isRecord(obj)) {
    issues.push(`${where}: expected a geometry object`);
    return;
  }
  for (const key of ['center_x', 'center_y', 'radius', 'start_deg', 'end_deg']) {
    if (!isNumber(obj[key])) {
      issues.push(`${where}.${key}: expected a finite number`);
    }
  }
  if (isNumber(obj.radius) && !(obj.radius > 0)) {
    issues.push(`${where}.radius: must be positive`);
  }
  if (
    isNumber(obj.start_deg) &&
    isNumber(obj.end_deg) &&
    obj.start_deg === obj.end_deg
  ) {
    issues.push(`${where}: start_deg and end_deg must differ`);
  }
}

/**
 * Validate a parsed document against the ingestion contract. Returns every
 * issue found rather than stopping at the first, mirroring the loader on
 * the analysis side. An empty array means the export will be accepted.
 */
export function validateDocument(doc: unknown): Issue[] {
  const issues: Issue[] = [];
  if (!isRecord(doc)) {
    return ['$: expected a JSON object'];
  }
  if (doc.format !== FORMAT) {
    return [`$.format: expected ${JSON.stringify(FORMAT)}`];
  }
  if (doc.version !== VERSION) {
    return [`$.version: expected ${VERSION}`];
  }
  if (typeof doc.encoding !== 'string' || doc.encoding.toLowerCase() !== ENCODING) {
    return [`$.encoding: expected ${JSON.stringify(ENCODING)}`];
  }

  const scaleMax = doc.scale_max;
  if (!isNumber(scaleMax) || !(scaleMax > 0)) {
    issues.push('$.scale_max: expected a positive number');
  }

  const roster = doc.roster;
  if (!Array.isArray(roster) || roster.length === 0) {
    issues.push('$.roster: expected a nonempty array of names');
  } else {
    const seen = new Set<string>();
    roster.forEach((name, i) => {
      if (typeof name !== 'string' || name.length === 0 || name.includes('\t')) {
        issues.push(`$.roster[${i}]: expected a nonempty tab-free name`);
      } else if (seen.has(name)) {
        issues.push(`$.roster[${i}]: duplicate name ${JSON.stringify(name)}`);
      } else {
        seen.add(name);
      }
    });
  }

  checkGeometry(doc.geometry, '$.geometry', issues);

  if (doc.cadence_hz !== null && doc.cadence_hz !== undefined) {
    if (!isNumber(doc.cadence_hz) || !(doc.cadence_hz > 0)) {
      issues.push('$.cadence_hz: expected a positive number or null');
    }
  }

  const responses = doc.responses;
  if (!Array.isArray(responses)) {
    issues.push('$.responses: expected an array');
    return issues;
  }
  responses.forEach((item, i) => {
    const where = `$.responses[${i}]`;
    if (!isRecord(item)) {
      issues.push(`${where}: expected an object`);
      return;
    }
    const rater = item.rater;
    const ratee = item.ratee;
    if (typeof rater !== 'string' || rater.length === 0) {
      issues.push(`${where}.rater: expected a nonempty string`);
    }
    if (typeof ratee !== 'string' || ratee.length === 0) {
      issues.push(`${where}.ratee: expected a nonempty string`);
    }
    if (typeof rater === 'string' && rater.length > 0 && rater === ratee) {
      issues.push(`${where}: self-rating by ${JSON.stringify(rater)}`);
    }
    if (!isNumber(item.committed)) {
      issues.push(`${where}.committed: expected a finite number`);
    } else if (
      isNumber(scaleMax) &&
      scaleMax > 0 &&
      (item.committed < 0 || item.committed > scaleMax)
    ) {
      issues.push(`${where}.committed: outside [0, ${scaleMax}]`);
    }
    if (item.submitted_at !== undefined && !isNumber(item.submitted_at)) {
      issues.push(`${where}.submitted_at: expected a number`);
    }
    if (
      item.committed_at !== undefined &&
      item.committed_at !== null &&
      !isNumber(item.committed_at)
    ) {
      issues.push(`${where}.committed_at: expected a number or null`);
    }
    if (item.geometry !== undefined && item.geometry !== null) {
      checkGeometry(item.geometry, `${where}.geometry`, issues);
    }
    const samples = item.samples;
    if (samples === undefined) {
      return;
    }
    if (!Array.isArray(samples)) {
      issues.push(`${where}.samples: expected an array`);
      return;
    }
    let last = -Infinity;
    samples.forEach((s, j) => {
      if (!Array.isArray(s) || s.length !== 3 || !s.every(isNumber)) {
        issues.push(`${where}.samples[${j}]: expected [t, x, y] numbers`);
        return;
      }
      const t = s[0] as number;
      if (t < last) {
        issues.push(`${where}.samples[${j}]: timestamps must be nondecreasing`);
      }
      last = t;
    });
  });
  return issues;
}
