"""The questionnaire frontend's exports, ingested by this package.

The frontend repo half (frontend/) commits deterministic session fixtures
generated by its scripted driver; these tests are the receiving side of
that handshake. They prove the two codebases agree on the responses file
contract without sharing any code.
"""

import json
from pathlib import Path

import pytest

from fuzzysna import build_network, load_responses
from fuzzysna.cli import main as cli_main
from fuzzysna.ingestion import fuzzify_trajectory

FRONTEND_FIXTURES = Path(__file__).parent.parent / "frontend" / "fixtures"

pytestmark = pytest.mark.skipif(
    not FRONTEND_FIXTURES.is_dir(),
    reason="frontend fixtures not generated (run npm run fixtures in frontend/)",
)


def test_swept_trajectory_fuzzifies_close_to_its_dwell_quantiles(tmp_path):
    """A pointer sweep over [0.2, 0.8] committed at 0.6 lands on
    (0.23, 0.6, 0.77) within 0.02 per endpoint, straight from the UI export.
    """
    path = FRONTEND_FIXTURES / "sweep-session.json"
    doc = load_responses(path)
    assert len(doc.responses) == 1
    resp = doc.responses[0]

    t = fuzzify_trajectory(resp, geometry=doc.geometry, scale_max=doc.scale_max)
    for got, want in zip((t.left, t.mode, t.right), (0.23, 0.6, 0.77)):
        assert abs(got - want) < 0.02, (t, got, want)

    # and the command line accepts the document as-is
    out = tmp_path / "sweep.fsn"
    assert cli_main(["ingest", str(path), "-o", str(out)]) == 0
    print(
        f"PASS frontend sweep export: ingested cleanly, fuzzified to "
        f"({t.left:.4f}, {t.mode:.4f}, {t.right:.4f})"
    )


def test_every_frontend_export_passes_ingestion_validation(tmp_path):
    """All exports of a ten-prompt scripted session load with zero issues:
    the final document and the partial export taken after every commit.
    """
    final = FRONTEND_FIXTURES / "synthetic-session.json"
    doc = load_responses(final)  # raises on any format issue
    assert len(doc.responses) == 10
    assert len(doc.roster) == 11

    result = build_network(doc)
    assert result.rejected == ()
    assert cli_main(["ingest", str(final), "-o", str(tmp_path / "net.fsn")]) == 0

    partials = sorted((FRONTEND_FIXTURES / "partials").glob("partial-*.json"))
    assert len(partials) == 11  # empty session + one per commit
    for i, partial in enumerate(partials):
        partial_doc = load_responses(partial)
        assert len(partial_doc.responses) == i
    print(
        "PASS frontend contract: 12 exports (final + 11 partials) "
        "validated with zero issues"
    )


def test_frontend_session_semantics_survive_ingestion():
    """Cross-checks on the synthetic session: the mid-session resize is
    annotated per response, the parked prompt declares no tie, and rater
    prompts cover every colleague exactly once.
    """
    doc = load_responses(FRONTEND_FIXTURES / "synthetic-session.json")

    assert [r.geometry is not None for r in doc.responses] == [False] * 6 + [True] * 4
    assert doc.responses[2].committed == 0.0

    raters = {r.rater for r in doc.responses}
    assert raters == {"m00"}
    assert [r.ratee for r in doc.responses] == [m for m in doc.roster if m != "m00"]

    net = build_network(doc).network
    # the exact-zero answer must not create an edge
    assert net.edge("m00", doc.responses[2].ratee) is None
    assert net.edge_count == 9
    print("PASS frontend semantics: resize annotations, no-tie answer, coverage")
