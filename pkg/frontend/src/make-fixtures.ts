/**
 * Regenerate the committed session fixtures. Run from the package root:
 *
 *     npm run fixtures
 *
 * The outputs are deterministic; a clean regeneration never produces a
 * diff. The analysis side's test suite ingests these same files, so they
 * are the handshake between the two packages.
 */

import { mkdirSync, writeFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import { runSweepSession, runSyntheticSession } from './simulate.js';

const here = dirname(fileURLToPath(import.meta.url));
const fixtures = join(here, '..', 'fixtures');

mkdirSync(join(fixtures, 'partials'), { recursive: true });

const sweep = runSweepSession();
writeFileSync(join(fixtures, 'sweep-session.json'), sweep.json);

const synthetic = runSyntheticSession();
writeFileSync(join(fixtures, 'synthetic-session.json'), synthetic.json);
synthetic.partials.forEach((json, i) => {
  const name = `partial-${String(i).padStart(2, '0')}.json`;
  writeFileSync(join(fixtures, 'partials', name), json);
});

console.log(
  `wrote sweep-session.json, synthetic-session.json and ` +
    `${synthetic.partials.length} partial exports to ${fixtures}`,
);
