"""Command-line interface.

Subcommands:

    ingest    questionnaire responses (JSON) -> network file
    analyze   network file -> ranking reports (TSV and JSON) in a directory
    rank      print one ranking to stdout
    export    network -> Graphviz dot or matrix text
    synth     generate a seeded random network file

Exit status is 0 when the command completed without errors and 1 otherwise
(ingest also exits 1 when any response was rejected). Output depends only
on the inputs and flags, never on the clock or the locale.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import io
from .centrality import (
    CRISP_INDICES,
    FUZZY_INDICES,
    REPORT_INDICES,
    IndexParameters,
    build_report,
)
from .errors import DomainError, FormatError, FormatIssue, FuzzySNAError
from .graph import (
    DEFAULT_MAX_PATHS,
    DEFAULT_STEP_CAP,
    DEFAULT_TIE_EPS,
    FuzzyDigraph,
    random_network,
)
from .ingestion import FuzzificationConfig, build_network

__all__ = ["main"]

#: Keys accepted in a --params JSON file (same names as IndexParameters).
_PARAM_KEYS = (
    "weights",
    "step_cap",
    "tie_eps",
    "normalized",
    "scale_max",
    "max_paths",
    "swap_closeness_directions",
)


def _parse_weights(text: str):
    if text in ("max", "min", "mean"):
        return text
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise DomainError(
            f"bad weights {text!r}; use max, min, mean, "
            "or comma-separated numbers"
        ) from None


def _params_from_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            path, [FormatIssue(f"line {exc.lineno}", f"invalid JSON: {exc.msg}")]
        ) from None
    if not isinstance(obj, dict):
        raise FormatError(path, [FormatIssue("$", "expected a JSON object")])
    unknown = sorted(set(obj) - set(_PARAM_KEYS))
    if unknown:
        raise FormatError(
            path,
            [FormatIssue(f"$.{key}", "unknown parameter") for key in unknown],
        )
    return dict(obj)


def _index_params(args: argparse.Namespace) -> IndexParameters:
    """Merge the defaults, the --params file, and explicit flags (strongest)."""
    config = _params_from_file(args.params) if args.params else {}
    if isinstance(config.get("weights"), list):
        config["weights"] = tuple(config["weights"])
    if args.weights is not None:
        config["weights"] = _parse_weights(args.weights)
    if args.steps is not None:
        config["step_cap"] = args.steps
    if args.tie_eps is not None:
        config["tie_eps"] = args.tie_eps
    if args.normalized is not None:
        config["normalized"] = args.normalized
    if args.scale_max is not None:
        config["scale_max"] = args.scale_max
    if args.max_paths is not None:
        config["max_paths"] = args.max_paths
    if args.swap_closeness:
        config["swap_closeness_directions"] = True
    try:
        return IndexParameters(**config)
    except TypeError as exc:
        raise DomainError(f"bad parameters: {exc}") from None


def _add_param_flags(sub: argparse.ArgumentParser):
    sub.add_argument(
        "--params",
        metavar="FILE",
        help="JSON file of analysis parameters; explicit flags override it",
    )
    sub.add_argument(
        "--weights",
        metavar="SPEC",
        help="OWA weights: max, min, mean (default), or comma-separated numbers",
    )
    sub.add_argument(
        "--steps",
        type=int,
        metavar="N",
        help=f"path length cap in edges (default {DEFAULT_STEP_CAP})",
    )
    sub.add_argument(
        "--tie-eps",
        type=float,
        metavar="X",
        help=f"slack for tied-best paths (default {DEFAULT_TIE_EPS})",
    )
    group = sub.add_mutually_exclusive_group()
    group.add_argument(
        "--normalized",
        dest="normalized",
        action="store_const",
        const=True,
        help="aggregate on the [0, 1] scale (default)",
    )
    group.add_argument(
        "--raw",
        dest="normalized",
        action="store_const",
        const=False,
        help="aggregate on the declared scale instead",
    )
    sub.set_defaults(normalized=None)
    sub.add_argument(
        "--scale-max",
        type=float,
        metavar="X",
        help="override the scale ceiling declared by the network file",
    )
    sub.add_argument(
        "--max-paths",
        type=int,
        metavar="N",
        help=f"per-pair cap on tied-path enumeration (default {DEFAULT_MAX_PATHS})",
    )
    sub.add_argument(
        "--swap-closeness",
        action="store_true",
        help="swap which direction in- and out-closeness read",
    )


def _parse_indices(text: str | None) -> list[str]:
    if text is None:
        return list(FUZZY_INDICES)
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise DomainError("no indices selected")
    for name in names:
        if name not in REPORT_INDICES:
            raise DomainError(
                f"unknown index {name!r}; expected one of "
                f"{', '.join(REPORT_INDICES)}"
            )
    return names


def _print_warnings(caught):
    for entry in caught:
        print(f"warning: {entry.message}", file=sys.stderr)


def _cmd_ingest(args: argparse.Namespace) -> int:
    doc = io.load_responses(args.responses)
    config = FuzzificationConfig(
        q_lo=args.q_lo,
        q_hi=args.q_hi,
        dwell_weighting=not args.no_dwell,
        min_spread=args.min_spread,
    )
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = build_network(doc, config=config)
    io.save_network(result.network, args.out, form=args.form)
    print(f"nodes\t{result.network.n}")
    print(f"edges\t{result.network.edge_count}")
    print(f"rejected\t{len(result.rejected)}")
    print(f"warnings\t{len(caught)}")
    for record in result.rejected:
        print(
            f"rejected: response {record.position} "
            f"({record.rater} -> {record.ratee}): {record.reason}",
            file=sys.stderr,
        )
    _print_warnings(caught)
    return 1 if result.rejected else 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = io.load_network(args.network)
    params = _index_params(args)
    indices = _parse_indices(args.indices)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        reports = build_report(g, indices, params)
    for report in reports:
        for path in io.save_report(report, args.out):
            print(path)
    _print_warnings(caught)
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    g = io.load_network(args.network)
    params = _index_params(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if args.index in CRISP_INDICES:
            reports = build_report(g, ["crisp-baselines"], params)
            report = next(r for r in reports if r.index == args.index)
        else:
            report = build_report(g, [args.index], params)[0]
    rows = report.rows if args.top is None else report.rows[: args.top]
    print("rank\tnode\tvalue\ttfn")
    for row in rows:
        tfn = "" if row.fuzzy is None else io.format_tfn(row.fuzzy)
        print(f"{row.rank}\t{row.node}\t{row.value!r}\t{tfn}")
    _print_warnings(caught)
    return 0


def _quote_dot(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _to_dot(g: FuzzyDigraph) -> str:
    lines = ["digraph network {", "  rankdir=LR;"]
    lines.extend(f"  {_quote_dot(v)};" for v in g.nodes)
    for u, v, t in g.edges():
        label = f"{io.format_tfn(t)} ({t.cog()!r})"
        lines.append(
            f"  {_quote_dot(u)} -> {_quote_dot(v)} [label={_quote_dot(label)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_export(args: argparse.Namespace) -> int:
    g = io.load_network(args.network)
    if args.format == "matrix":
        text = io.network_to_text(g, form="matrix")
    else:
        text = _to_dot(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_synth(args: argparse.Namespace) -> int:
    g = random_network(
        args.nodes,
        args.density,
        args.vagueness,
        args.seed,
        scale_max=args.scale_max,
    )
    io.save_network(g, args.out, form=args.form)
    print(f"nodes\t{g.n}")
    print(f"edges\t{g.edge_count}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzysna",
        description="Social network analysis with fuzzy tie strengths.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    ingest = subparsers.add_parser(
        "ingest", help="turn questionnaire responses into a network file"
    )
    ingest.add_argument("responses", help="responses JSON file")
    ingest.add_argument("-o", "--out", required=True, help="network file to write")
    ingest.add_argument(
        "--form", choices=("edges", "matrix"), default="edges",
        help="network serialization form (default edges)",
    )
    ingest.add_argument(
        "--q-lo", type=float, default=0.05,
        help="lower dwell quantile for the support (default 0.05)",
    )
    ingest.add_argument(
        "--q-hi", type=float, default=0.95,
        help="upper dwell quantile for the support (default 0.95)",
    )
    ingest.add_argument(
        "--no-dwell", action="store_true",
        help="weight samples uniformly instead of by dwell time",
    )
    ingest.add_argument(
        "--min-spread", type=float, default=0.0,
        help="minimum total support width after fuzzification (default 0)",
    )
    ingest.set_defaults(func=_cmd_ingest)

    analyze = subparsers.add_parser(
        "analyze", help="write ranking reports for a network"
    )
    analyze.add_argument("network", help="network file")
    analyze.add_argument(
        "--indices",
        metavar="LIST",
        help="comma-separated index names (default: all fuzzy indices); "
        f"known: {', '.join(REPORT_INDICES)}",
    )
    analyze.add_argument(
        "-o", "--out", required=True, help="directory for <index>.tsv/.json"
    )
    _add_param_flags(analyze)
    analyze.set_defaults(func=_cmd_analyze)

    rank = subparsers.add_parser("rank", help="print one ranking to stdout")
    rank.add_argument("network", help="network file")
    rank.add_argument(
        "--index",
        required=True,
        choices=FUZZY_INDICES + CRISP_INDICES,
        help="index to rank by",
    )
    rank.add_argument(
        "--top", type=int, metavar="N", help="print only the first N rows"
    )
    _add_param_flags(rank)
    rank.set_defaults(func=_cmd_rank)

    export = subparsers.add_parser(
        "export", help="convert a network to dot or matrix text"
    )
    export.add_argument("network", help="network file")
    export.add_argument(
        "--format", choices=("dot", "matrix"), default="dot",
        help="output format (default dot)",
    )
    export.add_argument(
        "-o", "--out", help="output file (default: stdout)"
    )
    export.set_defaults(func=_cmd_export)

    synth = subparsers.add_parser(
        "synth", help="generate a seeded random network file"
    )
    synth.add_argument("--nodes", type=int, required=True, help="node count")
    synth.add_argument(
        "--density", type=float, required=True,
        help="independent probability of each directed edge",
    )
    synth.add_argument(
        "--vagueness", type=float, required=True,
        help="spread ceiling as a fraction of the scale",
    )
    synth.add_argument("--seed", type=int, required=True, help="RNG seed")
    synth.add_argument(
        "--scale-max", type=float, default=1.0,
        help="scale ceiling for the generated weights (default 1.0)",
    )
    synth.add_argument("-o", "--out", required=True, help="network file to write")
    synth.add_argument(
        "--form", choices=("edges", "matrix"), default="edges",
        help="network serialization form (default edges)",
    )
    synth.set_defaults(func=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FuzzySNAError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
