import json

import pytest

from fuzzysna import (
    TFN,
    DomainError,
    FormatError,
    FuzzyDigraph,
    IndexParameters,
    QuestionnaireResponse,
    ResponsesDocument,
    ScaleGeometry,
    TrajectorySample,
    build_report,
    format_tfn,
    load_network,
    load_responses,
    network_from_text,
    network_to_text,
    parse_tfn,
    report_to_json,
    report_to_tsv,
    responses_from_text,
    responses_to_text,
    save_network,
    save_report,
    save_responses,
)

EDGES_TEXT = (
    "fsn-network\t1\tutf-8\n"
    "scale_max\t1.0\n"
    "node\tA\n"
    "node\tB\n"
    "node\tC\n"
    "edge\tA\tB\t0.6;0.7;0.8\n"
    "edge\tA\tC\t0.05;0.1;0.15\n"
    "edge\tB\tC\t0.7;0.8;0.9\n"
)

MATRIX_TEXT = (
    "fsn-matrix\t1\tutf-8\n"
    "scale_max\t1.0\n"
    "\tA\tB\tC\n"
    "A\t\t0.6;0.7;0.8\t0.05;0.1;0.15\n"
    "B\t\t\t0.7;0.8;0.9\n"
    "C\t\t\t\n"
)


def issues_of(excinfo):
    return [str(issue) for issue in excinfo.value.issues]


# -- TFN text ------------------------------------------------------------------


def test_tfn_text_round_trip():
    t = TFN(0.1, 0.2, 0.30000000000000004)
    assert format_tfn(t) == "0.1;0.2;0.30000000000000004"
    assert parse_tfn(format_tfn(t)) == t


def test_parse_tfn_errors():
    with pytest.raises(DomainError):
        parse_tfn("0.1;0.2")
    with pytest.raises(DomainError):
        parse_tfn("0.1;zwei;0.3")
    with pytest.raises(DomainError):
        parse_tfn("0.1;inf;0.3")
    with pytest.raises(DomainError):
        parse_tfn("0.3;0.2;0.1")  # not ordered


# -- network, edges form ---------------------------------------------------------


def test_edges_canonical_text(triangle):
    assert network_to_text(triangle) == EDGES_TEXT


def test_edges_round_trip(triangle):
    again = network_from_text(EDGES_TEXT)
    assert again == triangle
    assert network_to_text(again) == EDGES_TEXT


def test_edges_file_round_trip(triangle, tmp_path):
    path = tmp_path / "net.fsn"
    save_network(triangle, path)
    first = path.read_bytes()
    save_network(load_network(path), path)
    assert path.read_bytes() == first


def test_edges_tolerates_comments_and_crlf(triangle):
    noisy = "# exported for review\r\n\r\n" + EDGES_TEXT.replace(
        "node\tB\n", "node\tB\r\n\r\n# mid-file remark\n"
    )
    assert network_from_text(noisy) == triangle


def test_unknown_form_rejected(triangle):
    with pytest.raises(DomainError):
        network_to_text(triangle, form="yaml")


def test_empty_document():
    with pytest.raises(FormatError) as excinfo:
        network_from_text("# nothing here\n\n", filename="empty.fsn")
    assert "empty document" in str(excinfo.value)
    assert "empty.fsn" in str(excinfo.value)


@pytest.mark.parametrize(
    "header, fragment",
    [
        ("fsn-network\t2\tutf-8", "version"),
        ("fsn-network\t1\tlatin-1", "encoding"),
        ("fsn-mystery\t1\tutf-8", "unknown format"),
        ("fsn-network\t1", "header"),
    ],
)
def test_bad_headers(header, fragment):
    text = header + "\nscale_max\t1.0\nnode\tA\n"
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    assert len(excinfo.value.issues) == 1
    assert fragment in issues_of(excinfo)[0]


def test_header_encoding_case_insensitive(triangle):
    text = EDGES_TEXT.replace("utf-8", "UTF-8", 1)
    assert network_from_text(text) == triangle


def test_edges_issues_are_collected():
    text = (
        "fsn-network\t1\tutf-8\n"
        "scale_max\tmany\n"
        "node\tA\n"
        "node\tA\n"
        "frobnicate\tA\n"
        "edge\tA\tB\t0.1;0.2;0.3\n"
        "edge\tA\tA\t0.1;0.2;0.3\n"
        "edge\tA\tC\t0.3;0.2;0.1\n"
    )
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text, filename="bad.fsn")
    rendered = issues_of(excinfo)
    assert any("bad scale_max" in s for s in rendered)
    assert any("duplicate node 'A'" in s for s in rendered)
    assert any("unknown record 'frobnicate'" in s for s in rendered)
    assert any("unknown node 'B'" in s for s in rendered)
    assert any("self-loop on 'A'" in s for s in rendered)
    assert any("bad TFN" in s for s in rendered)
    assert any("missing scale_max" in s for s in rendered)
    # every line-scoped issue carries its line number
    assert any(s.startswith("line 2:") for s in rendered)
    assert f"{len(excinfo.value.issues)} format issue(s)" in str(excinfo.value)
    assert "bad.fsn" in str(excinfo.value)


def test_edges_duplicate_records():
    text = (
        "fsn-network\t1\tutf-8\n"
        "scale_max\t1.0\n"
        "scale_max\t2.0\n"
        "node\tA\n"
        "node\tB\n"
        "edge\tA\tB\t0.1;0.2;0.3\n"
        "edge\tA\tB\t0.2;0.3;0.4\n"
    )
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    rendered = issues_of(excinfo)
    assert any("duplicate scale_max" in s for s in rendered)
    assert any("duplicate edge ('A', 'B')" in s for s in rendered)


def test_edges_support_outside_scale():
    text = (
        "fsn-network\t1\tutf-8\n"
        "scale_max\t0.5\n"
        "node\tA\n"
        "node\tB\n"
        "edge\tA\tB\t0.1;0.2;0.7\n"
    )
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    assert "support outside [0, 0.5]" in issues_of(excinfo)[0]


# -- network, matrix form ----------------------------------------------------------


def test_matrix_canonical_text(triangle):
    assert network_to_text(triangle, form="matrix") == MATRIX_TEXT


def test_matrix_round_trip(triangle):
    again = network_from_text(MATRIX_TEXT)
    assert again == triangle
    assert network_to_text(again, form="matrix") == MATRIX_TEXT


def test_matrix_and_edges_forms_agree():
    assert network_from_text(MATRIX_TEXT) == network_from_text(EDGES_TEXT)


def test_matrix_file_round_trip(triangle, tmp_path):
    path = tmp_path / "net.fsnm"
    save_network(triangle, path, form="matrix")
    first = path.read_bytes()
    # load_network sniffs the format from the header
    save_network(load_network(path), path, form="matrix")
    assert path.read_bytes() == first


def test_matrix_header_must_lead_with_empty_cell():
    text = "fsn-matrix\t1\tutf-8\nscale_max\t1.0\nA\tB\n"
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    assert "empty cell" in issues_of(excinfo)[0]


def test_matrix_header_labels_unique():
    text = "fsn-matrix\t1\tutf-8\nscale_max\t1.0\n\tA\tA\n"
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    assert "unique" in issues_of(excinfo)[0]


def test_matrix_rows_must_match_header():
    text = (
        "fsn-matrix\t1\tutf-8\n"
        "scale_max\t1.0\n"
        "\tA\tB\n"
        "B\t\t\n"
        "A\t\t\n"
    )
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    assert "match the header order" in issues_of(excinfo)[0]


def test_matrix_cell_issues():
    text = (
        "fsn-matrix\t1\tutf-8\n"
        "scale_max\t1.0\n"
        "\tA\tB\n"
        "A\t0.1;0.2;0.3\t0.1;0.2\n"
        "B\t\t\n"
    )
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    rendered = issues_of(excinfo)
    assert any("self-loop on 'A'" in s for s in rendered)
    assert any("bad TFN for ('A', 'B')" in s for s in rendered)


def test_matrix_missing_scale_max():
    text = "fsn-matrix\t1\tutf-8\n\tA\tB\nA\t\t\nB\t\t\n"
    with pytest.raises(FormatError) as excinfo:
        network_from_text(text)
    assert "missing scale_max" in issues_of(excinfo)[0]


# -- responses files -----------------------------------------------------------------


GEOM = ScaleGeometry(320.0, 240.0, 160.0)


def sample_doc():
    sweep = tuple(
        TrajectorySample(t=float(i * 20), x=320.0 + i, y=100.0 + i)
        for i in range(5)
    )
    return ResponsesDocument(
        scale_max=1.0,
        roster=("ana", "bo", "cy"),
        geometry=GEOM,
        responses=(
            QuestionnaireResponse(
                rater="ana", ratee="bo", committed=0.6,
                samples=sweep, submitted_at=1200.0, committed_at=90.0,
            ),
            QuestionnaireResponse(
                rater="bo", ratee="ana", committed=0.25,
                submitted_at=2400.0,
                geometry=ScaleGeometry(10.0, 10.0, 5.0, 90.0, -90.0),
            ),
        ),
        cadence_hz=50.0,
    )


def test_responses_round_trip():
    doc = sample_doc()
    text = responses_to_text(doc)
    again = responses_from_text(text)
    assert again == doc
    assert responses_to_text(again) == text


def test_responses_file_round_trip(tmp_path):
    path = tmp_path / "session.json"
    save_responses(sample_doc(), path)
    first = path.read_bytes()
    save_responses(load_responses(path), path)
    assert path.read_bytes() == first


def test_responses_canonical_shape():
    text = responses_to_text(sample_doc())
    obj = json.loads(text)
    assert obj["format"] == "fsn-responses"
    assert obj["version"] == 1
    assert obj["encoding"] == "utf-8"
    assert obj["responses"][0]["samples"][0] == [0.0, 320.0, 100.0]
    assert obj["responses"][1]["geometry"]["start_deg"] == 90.0
    assert text.endswith("\n")


def test_responses_invalid_json():
    with pytest.raises(FormatError) as excinfo:
        responses_from_text('{"format": "fsn-responses",\n  broken\n}')
    assert len(excinfo.value.issues) == 1
    assert excinfo.value.issues[0].location == "line 2"
    assert "invalid JSON" in excinfo.value.issues[0].message


def test_responses_must_be_object():
    with pytest.raises(FormatError) as excinfo:
        responses_from_text("[1, 2, 3]")
    assert issues_of(excinfo) == ["$: expected a JSON object"]


def test_responses_header_checked_first():
    obj = json.loads(responses_to_text(sample_doc()))
    obj["version"] = 9
    obj["scale_max"] = -1.0  # would be a second issue, but the header wins
    with pytest.raises(FormatError) as excinfo:
        responses_from_text(json.dumps(obj))
    assert len(excinfo.value.issues) == 1
    assert "version" in issues_of(excinfo)[0]


def test_responses_field_issues_are_collected():
    obj = json.loads(responses_to_text(sample_doc()))
    obj["scale_max"] = 0
    obj["roster"] = ["ana", "ana", "bad\tname"]
    obj["cadence_hz"] = -5
    obj["responses"][0]["rater"] = ""
    obj["responses"][1]["samples"] = [[0.0, 1.0], "nope"]
    with pytest.raises(FormatError) as excinfo:
        responses_from_text(json.dumps(obj), filename="sess.json")
    rendered = issues_of(excinfo)
    assert any(s.startswith("$.scale_max:") for s in rendered)
    assert any("unique" in s for s in rendered)
    assert any("tab or newline" in s for s in rendered)
    assert any(s.startswith("$.cadence_hz:") for s in rendered)
    assert any(s.startswith("$.responses[0].rater:") for s in rendered)
    assert any(s.startswith("$.responses[1].samples[0]:") for s in rendered)
    assert any(s.startswith("$.responses[1].samples[1]:") for s in rendered)
    assert "sess.json" in str(excinfo.value)


def test_responses_semantic_checks():
    obj = json.loads(responses_to_text(sample_doc()))
    obj["responses"][0]["ratee"] = "ana"  # self-rating
    obj["responses"][1]["committed"] = 4.0  # outside [0, 1]
    with pytest.raises(FormatError) as excinfo:
        responses_from_text(json.dumps(obj))
    rendered = issues_of(excinfo)
    assert any("self-rating by 'ana'" in s for s in rendered)
    assert any("outside [0, 1.0]" in s for s in rendered)


def test_responses_decreasing_timestamps():
    obj = json.loads(responses_to_text(sample_doc()))
    obj["responses"][0]["samples"] = [[10.0, 1.0, 2.0], [5.0, 1.0, 2.0]]
    with pytest.raises(FormatError) as excinfo:
        responses_from_text(json.dumps(obj))
    assert any("nondecreasing" in s for s in issues_of(excinfo))


def test_responses_bad_geometry():
    obj = json.loads(responses_to_text(sample_doc()))
    obj["geometry"]["end_deg"] = obj["geometry"]["start_deg"]
    with pytest.raises(FormatError) as excinfo:
        responses_from_text(json.dumps(obj))
    assert any("must differ" in s for s in issues_of(excinfo))


def test_responses_optional_fields_default():
    text = json.dumps(
        {
            "format": "fsn-responses",
            "version": 1,
            "encoding": "utf-8",
            "scale_max": 1.0,
            "roster": ["a", "b"],
            "geometry": {
                "center_x": 0.0,
                "center_y": 0.0,
                "radius": 1.0,
                "start_deg": 180.0,
                "end_deg": 0.0,
            },
            "responses": [{"rater": "a", "ratee": "b", "committed": 0.5}],
        }
    )
    doc = responses_from_text(text)
    assert doc.cadence_hz is None
    assert doc.responses[0].submitted_at == 0.0
    assert doc.responses[0].committed_at is None
    assert doc.responses[0].geometry is None
    assert doc.responses[0].samples == ()


# -- reports ---------------------------------------------------------------------


def test_report_tsv_structure(triangle):
    (report,) = build_report(
        triangle, ["in-degree"], IndexParameters(step_cap=2)
    )
    text = report_to_tsv(report)
    lines = text.splitlines()
    assert lines[0] == "# fsn-report\t1\tutf-8"
    assert "# index\tin-degree" in lines
    assert "# weights\tmean" in lines
    assert "# step_cap\t2" in lines
    assert "# normalized\ttrue" in lines
    assert "# truncated\tfalse" in lines
    header_at = lines.index("node\tindex\tleft\tcore\tright\tcog\trank")
    rows = lines[header_at + 1 :]
    assert len(rows) == 3
    b = TFN(0.6, 0.7, 0.8)
    assert rows[0] == f"B\tin-degree\t0.6\t0.7\t0.8\t{b.cog()!r}\t1"
    assert rows[2].startswith("A\tin-degree\t0.0\t0.0\t0.0\t0.0\t3")


def test_report_crisp_rows_have_empty_tfn_cells(triangle):
    (report,) = build_report(
        triangle, ["betweenness"], IndexParameters(step_cap=2)
    )
    text = report_to_tsv(report)
    rows = [l for l in text.splitlines() if l.startswith("B\t")]
    assert rows == ["B\tbetweenness\t\t\t\t1.0\t1"]


def test_report_json_twin(triangle):
    (report,) = build_report(
        triangle, ["in-degree"], IndexParameters(step_cap=2)
    )
    obj = json.loads(report_to_json(report))
    assert obj["format"] == "fsn-report"
    assert obj["index"] == "in-degree"
    assert obj["parameters"] == dict(report.parameters)
    assert obj["truncated"] is False
    assert [row["node"] for row in obj["rows"]] == ["B", "C", "A"]
    assert obj["rows"][0]["left"] == 0.6
    assert obj["rows"][0]["rank"] == 1


def test_report_json_crisp_rows_null(triangle):
    (report,) = build_report(
        triangle, ["betweenness"], IndexParameters(step_cap=2)
    )
    obj = json.loads(report_to_json(report))
    top = obj["rows"][0]
    assert top["node"] == "B"
    assert top["left"] is None and top["core"] is None and top["right"] is None
    assert top["cog"] == 1.0


def test_save_report_writes_both_files(triangle, tmp_path):
    (report,) = build_report(
        triangle, ["out-degree"], IndexParameters(step_cap=2)
    )
    written = save_report(report, tmp_path / "reports")
    assert [p.rsplit("/", 1)[-1] for p in written] == [
        "out-degree.tsv",
        "out-degree.json",
    ]
    with open(written[0], encoding="utf-8") as fh:
        assert fh.read() == report_to_tsv(report)
    with open(written[1], encoding="utf-8") as fh:
        assert fh.read() == report_to_json(report)
