"""File formats: networks, questionnaire responses, and reports.

All formats are plain UTF-8 text, carry a format name and version, and are
written canonically so that save -> load -> save is byte-identical. Loaders
reject unknown versions loudly and report every violation they find, not
just the first.

Network, edge-list form (tab-delimited records; blank lines and lines
starting with '#' are ignored)::

    fsn-network<TAB>1<TAB>utf-8
    scale_max<TAB>1.0
    node<TAB>alice
    node<TAB>bob
    edge<TAB>alice<TAB>bob<TAB>0.6;0.7;0.8

Network, matrix form (header row of labels, one row per node, empty cells
for absent ties)::

    fsn-matrix<TAB>1<TAB>utf-8
    scale_max<TAB>1.0
    <TAB>alice<TAB>bob
    alice<TAB><TAB>0.6;0.7;0.8
    bob<TAB><TAB>

TFNs appear everywhere in the textual form "left;mode;right" with '.' as
the decimal separator and repr-precision floats, so values round-trip
exactly.

Responses files are JSON documents (format "fsn-responses"); reports are
written as a tab-delimited table plus a JSON twin with identical content.
"""

from __future__ import annotations

import json
import math
import os
from typing import Iterable

from .centrality import CentralityReport
from .errors import DomainError, FormatError, FormatIssue
from .graph import FuzzyDigraph
from .ingestion import (
    QuestionnaireResponse,
    ResponsesDocument,
    ScaleGeometry,
    TrajectorySample,
)
from .tfn import TFN

__all__ = [
    "format_tfn",
    "parse_tfn",
    "network_to_text",
    "network_from_text",
    "save_network",
    "load_network",
    "responses_to_text",
    "responses_from_text",
    "save_responses",
    "load_responses",
    "report_to_tsv",
    "report_to_json",
    "save_report",
]

NETWORK_MAGIC = "fsn-network"
MATRIX_MAGIC = "fsn-matrix"
RESPONSES_MAGIC = "fsn-responses"
REPORT_MAGIC = "fsn-report"
FORMAT_VERSION = 1
_ENCODING = "utf-8"


def format_tfn(t: TFN) -> str:
    """Textual TFN: 'left;mode;right' with repr-precision floats."""
    return f"{t.left!r};{t.mode!r};{t.right!r}"


def parse_tfn(text: str) -> TFN:
    """Parse 'left;mode;right'. Raises DomainError on malformed input."""
    parts = text.split(";")
    if len(parts) != 3:
        raise DomainError(f"expected 'left;mode;right', got {text!r}")
    values = []
    for part in parts:
        try:
            values.append(float(part))
        except ValueError:
            raise DomainError(f"not a number: {part!r}") from None
        if not math.isfinite(values[-1]):
            raise DomainError(f"not finite: {part!r}")
    return TFN(*values)


def _float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"not finite: {text!r}")
    return value


# -- network files -------------------------------------------------------


def network_to_text(g: FuzzyDigraph, form: str = "edges") -> str:
    """Serialize a network in 'edges' (default) or 'matrix' form."""
    if form == "edges":
        lines = [
            f"{NETWORK_MAGIC}\t{FORMAT_VERSION}\t{_ENCODING}",
            f"scale_max\t{g.scale_max!r}",
        ]
        lines.extend(f"node\t{v}" for v in g.nodes)
        lines.extend(
            f"edge\t{u}\t{v}\t{format_tfn(t)}" for u, v, t in g.edges()
        )
        return "\n".join(lines) + "\n"
    if form == "matrix":
        lines = [
            f"{MATRIX_MAGIC}\t{FORMAT_VERSION}\t{_ENCODING}",
            f"scale_max\t{g.scale_max!r}",
            "\t" + "\t".join(g.nodes),
        ]
        for u in g.nodes:
            row = dict(g.out_edges(u))
            cells = [
                format_tfn(row[v]) if v in row else "" for v in g.nodes
            ]
            lines.append(u + "\t" + "\t".join(cells))
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown network form {form!r}; use 'edges' or 'matrix'")


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    """(1-based line number, line) pairs, skipping blanks and comments."""
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        yield i, line


def _check_header(
    fields: list[str], lineno: int, issues: list[FormatIssue], magics: tuple[str, ...]
) -> str | None:
    where = f"line {lineno}"
    if len(fields) != 3:
        issues.append(
            FormatIssue(where, "header must be '<format>\\t<version>\\t<encoding>'")
        )
        return None
    magic, version, encoding = fields
    if magic not in magics:
        issues.append(FormatIssue(where, f"unknown format {magic!r}"))
        return None
    if version != str(FORMAT_VERSION):
        issues.append(
            FormatIssue(where, f"unsupported {magic} version {version!r}")
        )
        return None
    if encoding.lower() != _ENCODING:
        issues.append(FormatIssue(where, f"unsupported encoding {encoding!r}"))
        return None
    return magic


def network_from_text(text: str, filename: str = "<text>") -> FuzzyDigraph:
    """Parse either network form. Raises FormatError listing all issues."""
    issues: list[FormatIssue] = []
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError(filename, [FormatIssue("line 1", "empty document")])
    (first_no, first), rest = lines[0], lines[1:]
    magic = _check_header(
        first.split("\t"), first_no, issues, (NETWORK_MAGIC, MATRIX_MAGIC)
    )
    if magic is None:
        raise FormatError(filename, issues)
    try:
        if magic == NETWORK_MAGIC:
            g = _edges_from_lines(rest, issues)
        else:
            g = _matrix_from_lines(rest, issues)
    except DomainError as exc:
        # residual constructor checks (label characters and the like)
        issues.append(FormatIssue("document", str(exc)))
        g = None
    if issues or g is None:
        raise FormatError(filename, issues)
    return g


def _parse_scale_max(fields, where, issues) -> float | None:
    if len(fields) != 2:
        issues.append(FormatIssue(where, "scale_max record needs one value"))
        return None
    try:
        value = _float(fields[1])
    except ValueError:
        issues.append(FormatIssue(where, f"bad scale_max {fields[1]!r}"))
        return None
    if value <= 0:
        issues.append(FormatIssue(where, f"scale_max must be positive, got {fields[1]}"))
        return None
    return value


def _edges_from_lines(lines, issues) -> FuzzyDigraph | None:
    scale_max: float | None = None
    nodes: list[str] = []
    seen: set[str] = set()
    edge_records: list[tuple[str, str, str, TFN]] = []
    for lineno, line in lines:
        where = f"line {lineno}"
        fields = line.split("\t")
        tag = fields[0]
        if tag == "scale_max":
            if scale_max is not None:
                issues.append(FormatIssue(where, "duplicate scale_max record"))
                continue
            scale_max = _parse_scale_max(fields, where, issues)
        elif tag == "node":
            if len(fields) != 2 or not fields[1]:
                issues.append(FormatIssue(where, "node record needs one label"))
                continue
            if fields[1] in seen:
                issues.append(FormatIssue(where, f"duplicate node {fields[1]!r}"))
                continue
            seen.add(fields[1])
            nodes.append(fields[1])
        elif tag == "edge":
            if len(fields) != 4:
                issues.append(
                    FormatIssue(where, "edge record needs from, to, and a TFN")
                )
                continue
            try:
                t = parse_tfn(fields[3])
            except DomainError as exc:
                issues.append(FormatIssue(where, f"bad TFN: {exc}"))
                continue
            edge_records.append((where, fields[1], fields[2], t))
        else:
            issues.append(FormatIssue(where, f"unknown record {tag!r}"))
    if scale_max is None:
        issues.append(FormatIssue("line 1", "missing scale_max record"))
    edges: dict[tuple[str, str], TFN] = {}
    for where, u, v, t in edge_records:
        for label in (u, v):
            if label not in seen:
                issues.append(FormatIssue(where, f"unknown node {label!r}"))
        if u == v:
            issues.append(FormatIssue(where, f"self-loop on {u!r}"))
            continue
        if (u, v) in edges:
            issues.append(FormatIssue(where, f"duplicate edge ({u!r}, {v!r})"))
            continue
        if u in seen and v in seen:
            if scale_max is not None and (t.left < 0 or t.right > scale_max):
                issues.append(
                    FormatIssue(
                        where,
                        f"edge ({u!r}, {v!r}) support outside [0, {scale_max!r}]",
                    )
                )
                continue
            edges[(u, v)] = t
    if issues:
        return None
    return FuzzyDigraph(nodes, edges, scale_max=scale_max)


def _matrix_from_lines(lines, issues) -> FuzzyDigraph | None:
    scale_max: float | None = None
    header: list[str] | None = None
    rows: list[tuple[str, str, list[str]]] = []
    for lineno, line in lines:
        where = f"line {lineno}"
        fields = line.split("\t")
        if fields[0] == "scale_max" and scale_max is None and header is None:
            scale_max = _parse_scale_max(fields, where, issues)
        elif header is None:
            if fields[0] != "":
                issues.append(
                    FormatIssue(where, "matrix header row must start with an empty cell")
                )
                return None
            header = fields[1:]
            if len(set(header)) != len(header) or any(not h for h in header):
                issues.append(FormatIssue(where, "header labels must be unique and nonempty"))
                return None
        else:
            rows.append((where, fields[0], fields[1:]))
    if scale_max is None:
        issues.append(FormatIssue("line 1", "missing scale_max record"))
    if header is None:
        issues.append(FormatIssue("line 1", "missing matrix header row"))
        return None
    if [r[1] for r in rows] != list(header):
        issues.append(
            FormatIssue(
                rows[0][0] if rows else "line 1",
                "matrix row labels must match the header order exactly",
            )
        )
        return None
    edges: dict[tuple[str, str], TFN] = {}
    for where, label, cells in rows:
        if len(cells) != len(header):
            issues.append(
                FormatIssue(where, f"expected {len(header)} cells, got {len(cells)}")
            )
            continue
        for v, cell in zip(header, cells):
            if cell == "":
                continue
            try:
                t = parse_tfn(cell)
            except DomainError as exc:
                issues.append(FormatIssue(where, f"bad TFN for ({label!r}, {v!r}): {exc}"))
                continue
            if label == v:
                issues.append(FormatIssue(where, f"self-loop on {label!r}"))
                continue
            if scale_max is not None and (t.left < 0 or t.right > scale_max):
                issues.append(
                    FormatIssue(
                        where,
                        f"edge ({label!r}, {v!r}) support outside [0, {scale_max!r}]",
                    )
                )
                continue
            edges[(label, v)] = t
    if issues:
        return None
    return FuzzyDigraph(list(header), edges, scale_max=scale_max)


def save_network(g: FuzzyDigraph, path: str | os.PathLike, form: str = "edges"):
    with open(path, "w", encoding=_ENCODING, newline="") as fh:
        fh.write(network_to_text(g, form))


def load_network(path: str | os.PathLike) -> FuzzyDigraph:
    with open(path, "r", encoding=_ENCODING) as fh:
        return network_from_text(fh.read(), filename=str(path))


# -- responses files -------------------------------------------------------


def _geometry_to_obj(geom: ScaleGeometry) -> dict:
    return {
        "center_x": geom.center_x,
        "center_y": geom.center_y,
        "radius": geom.radius,
        "start_deg": geom.start_deg,
        "end_deg": geom.end_deg,
    }


def responses_to_text(doc: ResponsesDocument) -> str:
    """Canonical JSON serialization of a responses document."""
    obj = {
        "format": RESPONSES_MAGIC,
        "version": doc.version,
        "encoding": _ENCODING,
        "scale_max": doc.scale_max,
        "roster": list(doc.roster),
        "geometry": _geometry_to_obj(doc.geometry),
        "cadence_hz": doc.cadence_hz,
        "responses": [
            {
                "rater": r.rater,
                "ratee": r.ratee,
                "committed": r.committed,
                "submitted_at": r.submitted_at,
                "committed_at": r.committed_at,
                "geometry": (
                    _geometry_to_obj(r.geometry) if r.geometry is not None else None
                ),
                "samples": [[s.t, s.x, s.y] for s in r.samples],
            }
            for r in doc.responses
        ],
    }
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


class _Checker:
    """Validation helper collecting issues by JSON path."""

    def __init__(self):
        self.issues: list[FormatIssue] = []

    def fail(self, path: str, message: str):
        self.issues.append(FormatIssue(path, message))

    def number(self, obj, path, *, required=True, positive=False) -> float | None:
        if obj is None:
            if required:
                self.fail(path, "missing number")
            return None
        if isinstance(obj, bool) or not isinstance(obj, (int, float)):
            self.fail(path, f"expected a number, got {type(obj).__name__}")
            return None
        value = float(obj)
        if not math.isfinite(value):
            self.fail(path, f"must be finite, got {obj!r}")
            return None
        if positive and value <= 0:
            self.fail(path, f"must be positive, got {obj!r}")
            return None
        return value

    def string(self, obj, path) -> str | None:
        if not isinstance(obj, str) or not obj:
            self.fail(path, "expected a nonempty string")
            return None
        return obj

    def geometry(self, obj, path) -> ScaleGeometry | None:
        if not isinstance(obj, dict):
            self.fail(path, "expected a geometry object")
            return None
        cx = self.number(obj.get("center_x"), f"{path}.center_x")
        cy = self.number(obj.get("center_y"), f"{path}.center_y")
        radius = self.number(obj.get("radius"), f"{path}.radius", positive=True)
        start = self.number(obj.get("start_deg"), f"{path}.start_deg")
        end = self.number(obj.get("end_deg"), f"{path}.end_deg")
        if None in (cx, cy, radius, start, end):
            return None
        if start == end:
            self.fail(path, "start_deg and end_deg must differ")
            return None
        return ScaleGeometry(cx, cy, radius, start, end)


def responses_from_text(text: str, filename: str = "<text>") -> ResponsesDocument:
    """Parse and fully validate a responses document.

    Every violation is collected and reported in one FormatError.
    """
    check = _Checker()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            filename, [FormatIssue(f"line {exc.lineno}", f"invalid JSON: {exc.msg}")]
        ) from None
    if not isinstance(obj, dict):
        raise FormatError(filename, [FormatIssue("$", "expected a JSON object")])

    if obj.get("format") != RESPONSES_MAGIC:
        check.fail("$.format", f"expected {RESPONSES_MAGIC!r}, got {obj.get('format')!r}")
    if obj.get("version") != FORMAT_VERSION:
        check.fail("$.version", f"unsupported version {obj.get('version')!r}")
    encoding = obj.get("encoding", _ENCODING)
    if not isinstance(encoding, str) or encoding.lower() != _ENCODING:
        check.fail("$.encoding", f"unsupported encoding {encoding!r}")
    if check.issues:
        # wrong container; field checks below would be noise
        raise FormatError(filename, check.issues)

    scale_max = check.number(obj.get("scale_max"), "$.scale_max", positive=True)
    roster_obj = obj.get("roster")
    roster: list[str] = []
    if not isinstance(roster_obj, list) or not roster_obj:
        check.fail("$.roster", "expected a nonempty list of labels")
    else:
        for i, item in enumerate(roster_obj):
            label = check.string(item, f"$.roster[{i}]")
            if label is not None:
                if any(ch in label for ch in "\t\n\r"):
                    check.fail(f"$.roster[{i}]", "label contains tab or newline")
                else:
                    roster.append(label)
        if len(set(roster)) != len(roster):
            check.fail("$.roster", "labels must be unique")
    geometry = check.geometry(obj.get("geometry"), "$.geometry")
    cadence = None
    if obj.get("cadence_hz") is not None:
        cadence = check.number(obj.get("cadence_hz"), "$.cadence_hz", positive=True)

    responses: list[QuestionnaireResponse] = []
    responses_obj = obj.get("responses", [])
    if not isinstance(responses_obj, list):
        check.fail("$.responses", "expected a list")
        responses_obj = []
    for i, item in enumerate(responses_obj):
        path = f"$.responses[{i}]"
        if not isinstance(item, dict):
            check.fail(path, "expected a response object")
            continue
        rater = check.string(item.get("rater"), f"{path}.rater")
        ratee = check.string(item.get("ratee"), f"{path}.ratee")
        committed = check.number(item.get("committed"), f"{path}.committed")
        submitted_at = item.get("submitted_at", 0.0)
        submitted_at = check.number(submitted_at, f"{path}.submitted_at")
        committed_at = None
        if item.get("committed_at") is not None:
            committed_at = check.number(item.get("committed_at"), f"{path}.committed_at")
        geom = None
        if item.get("geometry") is not None:
            geom = check.geometry(item.get("geometry"), f"{path}.geometry")
        samples: list[TrajectorySample] = []
        samples_obj = item.get("samples", [])
        if not isinstance(samples_obj, list):
            check.fail(f"{path}.samples", "expected a list of [t, x, y]")
            samples_obj = []
        previous_t = None
        for k, sample in enumerate(samples_obj):
            spath = f"{path}.samples[{k}]"
            if not isinstance(sample, list) or len(sample) != 3:
                check.fail(spath, "expected [t, x, y]")
                continue
            t = check.number(sample[0], f"{spath}[0]")
            x = check.number(sample[1], f"{spath}[1]")
            y = check.number(sample[2], f"{spath}[2]")
            if None in (t, x, y):
                continue
            if previous_t is not None and t < previous_t:
                check.fail(spath, f"timestamps must be nondecreasing ({t!r} after {previous_t!r})")
                continue
            previous_t = t
            samples.append(TrajectorySample(t, x, y))
        if None in (rater, ratee, committed, submitted_at):
            continue
        if rater == ratee:
            check.fail(path, f"self-rating by {rater!r}")
            continue
        if scale_max is not None and not (0.0 <= committed <= scale_max):
            check.fail(
                f"{path}.committed",
                f"value {committed!r} outside [0, {scale_max!r}]",
            )
            continue
        responses.append(
            QuestionnaireResponse(
                rater=rater,
                ratee=ratee,
                committed=committed,
                samples=tuple(samples),
                submitted_at=submitted_at,
                committed_at=committed_at,
                geometry=geom,
            )
        )

    if check.issues:
        raise FormatError(filename, check.issues)
    return ResponsesDocument(
        scale_max=scale_max,
        roster=tuple(roster),
        geometry=geometry,
        responses=tuple(responses),
        cadence_hz=cadence,
    )


def save_responses(doc: ResponsesDocument, path: str | os.PathLike):
    with open(path, "w", encoding=_ENCODING, newline="") as fh:
        fh.write(responses_to_text(doc))


def load_responses(path: str | os.PathLike) -> ResponsesDocument:
    with open(path, "r", encoding=_ENCODING) as fh:
        return responses_from_text(fh.read(), filename=str(path))


# -- reports ---------------------------------------------------------------


def _format_bool(value: bool) -> str:
    return "true" if value else "false"


def _parameter_lines(report: CentralityReport) -> list[str]:
    lines = [f"# index\t{report.index}"]
    for key, value in report.parameters.items():
        if isinstance(value, bool):
            rendered = _format_bool(value)
        elif isinstance(value, float):
            rendered = repr(value)
        else:
            rendered = str(value)
        lines.append(f"# {key}\t{rendered}")
    lines.append(f"# truncated\t{_format_bool(report.truncated)}")
    return lines


def report_to_tsv(report: CentralityReport) -> str:
    """Tab-delimited ranking table with the parameters echoed as comments."""
    lines = [f"# {REPORT_MAGIC}\t{FORMAT_VERSION}\t{_ENCODING}"]
    lines.extend(_parameter_lines(report))
    lines.append("node\tindex\tleft\tcore\tright\tcog\trank")
    for row in report.rows:
        if row.fuzzy is None:
            left = core = right = ""
        else:
            left = repr(row.fuzzy.left)
            core = repr(row.fuzzy.mode)
            right = repr(row.fuzzy.right)
        lines.append(
            f"{row.node}\t{row.index}\t{left}\t{core}\t{right}"
            f"\t{row.value!r}\t{row.rank}"
        )
    return "\n".join(lines) + "\n"


def report_to_json(report: CentralityReport) -> str:
    """JSON twin of the tabular report, same rows and parameters."""
    obj = {
        "format": REPORT_MAGIC,
        "version": FORMAT_VERSION,
        "index": report.index,
        "parameters": dict(report.parameters),
        "truncated": report.truncated,
        "rows": [
            {
                "node": row.node,
                "index": row.index,
                "left": None if row.fuzzy is None else row.fuzzy.left,
                "core": None if row.fuzzy is None else row.fuzzy.mode,
                "right": None if row.fuzzy is None else row.fuzzy.right,
                "cog": row.value,
                "rank": row.rank,
            }
            for row in report.rows
        ],
    }
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def save_report(report: CentralityReport, directory: str | os.PathLike) -> list[str]:
    """Write <index>.tsv and <index>.json into a directory; returns paths."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for suffix, renderer in (("tsv", report_to_tsv), ("json", report_to_json)):
        path = os.path.join(os.fspath(directory), f"{report.index}.{suffix}")
        with open(path, "w", encoding=_ENCODING, newline="") as fh:
            fh.write(renderer(report))
        written.append(path)
    return written
