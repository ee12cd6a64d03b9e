import { describe, expect, it } from 'vitest';

import type { ResponsesDocument } from '../src/contract.js';
import {
  makeGeometry,
  sameGeometry,
  serializeDocument,
  validateDocument,
} from '../src/contract.js';

function minimalDoc(): ResponsesDocument {
  return {
    format: 'fsn-responses',
    version: 1,
    encoding: 'utf-8',
    scale_max: 1,
    roster: ['ana', 'bo'],
    geometry: makeGeometry(320, 320, 260),
    cadence_hz: 50,
    responses: [
      {
        rater: 'ana',
        ratee: 'bo',
        committed: 0.6,
        submitted_at: 1000,
        committed_at: 40,
        geometry: null,
        samples: [
          [0, 120.5, 300],
          [20, 410, 180],
        ],
      },
    ],
  };
}

describe('serializeDocument', () => {
  it('emits canonical JSON: fixed key order, two-space indent, newline', () => {
    const text = serializeDocument(minimalDoc());
    expect(text.endsWith('\n')).toBe(true);
    const keys = Object.keys(JSON.parse(text));
    expect(keys).toEqual([
      'format',
      'version',
      'encoding',
      'scale_max',
      'roster',
      'geometry',
      'cadence_hz',
      'responses',
    ]);
    expect(text).toContain('"format": "fsn-responses"');
    expect(text.startsWith('{\n  "format"')).toBe(true);
  });

  it('is stable: same document, same bytes', () => {
    expect(serializeDocument(minimalDoc())).toBe(serializeDocument(minimalDoc()));
  });

  it('orders response keys canonically', () => {
    const text = serializeDocument(minimalDoc());
    const parsed = JSON.parse(text);
    expect(Object.keys(parsed.responses[0])).toEqual([
      'rater',
      'ratee',
      'committed',
      'submitted_at',
      'committed_at',
      'geometry',
      'samples',
    ]);
  });
});

describe('validateDocument', () => {
  it('accepts a well-formed document', () => {
    expect(validateDocument(minimalDoc())).toEqual([]);
  });

  it('accepts an empty session', () => {
    expect(validateDocument({ ...minimalDoc(), responses: [] })).toEqual([]);
  });

  it('checks the header before anything else', () => {
    expect(validateDocument({ ...minimalDoc(), version: 9, scale_max: -1 })).toEqual([
      '$.version: expected 1',
    ]);
    expect(validateDocument('nope')).toEqual(['$: expected a JSON object']);
    expect(validateDocument({ ...minimalDoc(), format: 'other' })).toHaveLength(1);
  });

  it('collects field issues instead of stopping at the first', () => {
    const doc = minimalDoc() as unknown as Record<string, unknown>;
    doc.scale_max = -2;
    doc.roster = ['ana', 'ana', '', 'tab\tbed'];
    doc.cadence_hz = 0;
    const issues = validateDocument(doc);
    expect(issues).toContain('$.scale_max: expected a positive number');
    expect(issues).toContain('$.roster[1]: duplicate name "ana"');
    expect(issues).toContain('$.roster[2]: expected a nonempty tab-free name');
    expect(issues).toContain('$.roster[3]: expected a nonempty tab-free name');
    expect(issues).toContain('$.cadence_hz: expected a positive number or null');
  });

  it('flags self-ratings and out-of-range commits', () => {
    const doc = minimalDoc();
    doc.responses[0]!.ratee = 'ana';
    doc.responses[0]!.committed = 1.4;
    const issues = validateDocument(doc);
    expect(issues).toContain('$.responses[0]: self-rating by "ana"');
    expect(issues).toContain('$.responses[0].committed: outside [0, 1]');
  });

  it('flags decreasing sample timestamps', () => {
    const doc = minimalDoc();
    doc.responses[0]!.samples = [
      [20, 1, 1],
      [0, 2, 2],
    ];
    expect(validateDocument(doc)).toEqual([
      '$.responses[0].samples[1]: timestamps must be nondecreasing',
    ]);
  });

  it('flags malformed samples and geometry', () => {
    const doc = minimalDoc() as unknown as {
      responses: Record<string, unknown>[];
    };
    doc.responses[0]!.samples = [[0, 1], 'xy'];
    doc.responses[0]!.geometry = { center_x: 0, center_y: 0, radius: 0, start_deg: 10, end_deg: 10 };
    const issues = validateDocument(doc);
    expect(issues).toContain('$.responses[0].samples[0]: expected [t, x, y] numbers');
    expect(issues).toContain('$.responses[0].samples[1]: expected [t, x, y] numbers');
    expect(issues).toContain('$.responses[0].geometry.radius: must be positive');
    expect(issues).toContain('$.responses[0].geometry: start_deg and end_deg must differ');
  });
});

describe('sameGeometry', () => {
  it('compares all five fields', () => {
    const g = makeGeometry(1, 2, 3, 180, 0);
    expect(sameGeometry(g, { ...g })).toBe(true);
    expect(sameGeometry(g, { ...g, radius: 4 })).toBe(false);
    expect(sameGeometry(g, { ...g, end_deg: 1 })).toBe(false);
  });
});
