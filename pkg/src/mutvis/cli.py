"""Command-line front end.

One command per process: construct graphs, compute polynomials and spectra,
query predicates, report structural invariants, and run the acceptance
suite.  Exit codes: 0 success, 1 verification failure, 2 usage or parse
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time

from . import verify as verification
from .documents import ResultDocument, parse_edge_list, serialize_edge_list
from .enumeration import (
    EnumerationLimits,
    lemma_assisted_dual_search,
    total_number_geodetic,
    visibility_polynomial,
)
from .errors import (
    EdgeListParseError,
    GraphTooLarge,
    MutvisError,
    SearchSpaceTooLarge,
    TooManyMaximalSets,
)
from .families import FAMILIES, Construction, ConstructionSpec, construct
from .graphs import Graph
from .visibility import (
    Variant,
    is_total_visibility_set_fast,
    is_visibility_set,
)

_RESOURCE_ERRORS = (GraphTooLarge, SearchSpaceTooLarge, TooManyMaximalSets)


def _add_source_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=FAMILIES, help="built-in graph family")
    parser.add_argument(
        "--params", default="", help="comma-separated integer family parameters"
    )
    parser.add_argument("--input", help="edge-list file (header 'n m', lines 'u v')")


def _add_limit_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-n", type=int, default=16, help="exhaustive enumeration ceiling"
    )
    parser.add_argument(
        "--lemma-assisted",
        action="store_true",
        help="allow the pruned dual search via convex covers",
    )
    parser.add_argument("--workers", type=int, default=1, help="parallelism degree")


def _add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--output",
        choices=("text", "structured"),
        default="text",
        help="plain text or JSON",
    )


def _parse_params(raw: str) -> tuple[int, ...]:
    raw = raw.strip()
    if not raw:
        return ()
    try:
        return tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise EdgeListParseError(f"parameters must be integers, got {raw!r}") from None


def _load_source(args) -> tuple[Graph, str, Construction | None]:
    if args.family and args.input:
        raise EdgeListParseError("give either --family or --input, not both")
    if args.family:
        spec = ConstructionSpec(args.family, _parse_params(args.params))
        built = construct(spec)
        ident = f"family={args.family}"
        if spec.params:
            ident += " params=" + ",".join(map(str, spec.params))
        return built.graph, ident, built
    if args.input:
        with open(args.input, "rb") as fh:
            raw = fh.read()
        digest = hashlib.sha256(raw).hexdigest()[:12]
        return parse_edge_list(raw.decode("utf-8")), f"file:sha256:{digest}", None
    raise EdgeListParseError("a graph source is required (--family or --input)")


def _limits(args) -> EnumerationLimits:
    return EnumerationLimits(
        max_exhaustive_n=args.max_n,
        allow_lemma_assisted=args.lemma_assisted,
        worker_count=args.workers,
    )


def _emit(doc: ResultDocument, args) -> None:
    if args.output == "structured":
        print(doc.to_json())
    else:
        print(doc.to_text(), end="")


def _parse_vertex_list(raw: str, n: int) -> list[int]:
    raw = raw.strip()
    if not raw:
        return []
    try:
        vertices = [int(tok) for tok in raw.split(",")]
    except ValueError:
        raise EdgeListParseError(f"vertex list must be integers, got {raw!r}") from None
    for v in vertices:
        if not 0 <= v < n:
            raise EdgeListParseError(f"vertex {v} outside 0..{n - 1}")
    return vertices


def cmd_poly(args) -> int:
    g, ident, _ = _load_source(args)
    variant = Variant.from_string(args.variant)
    start = time.monotonic()
    poly = visibility_polynomial(g, variant, _limits(args))
    doc = ResultDocument(
        input_id=ident,
        kind="polynomial",
        provenance="exhaustive",
        elapsed_seconds=time.monotonic() - start,
        variant=variant.value,
        payload={"coefficients": poly.to_strings(), "degree": poly.degree},
    )
    _emit(doc, args)
    return 0


def cmd_spectrum(args) -> int:
    g, ident, built = _load_source(args)
    start = time.monotonic()
    if args.lemma_assisted:
        cover = []
        if built is not None:
            cover = list(built.seven_cycles) + list(built.five_cycles)
        if not cover:
            cover = [g.all_vertices()]  # degenerate cover: pure exhaustive
        poly = lemma_assisted_dual_search(g, cover, _limits(args))
        provenance = "lemma-assisted"
    else:
        poly = visibility_polynomial(g, Variant.DUAL, _limits(args))
        provenance = "exhaustive"
    doc = ResultDocument(
        input_id=ident,
        kind="spectrum",
        provenance=provenance,
        elapsed_seconds=time.monotonic() - start,
        variant=Variant.DUAL.value,
        payload={"coefficients": poly.to_strings(), "degree": poly.degree},
    )
    _emit(doc, args)
    return 0


def cmd_check(args) -> int:
    g, ident, _ = _load_source(args)
    variant = Variant.from_string(args.variant)
    X = g.vertex_set(_parse_vertex_list(args.set, g.n))
    start = time.monotonic()
    outcome = is_visibility_set(g, X, variant)
    payload = {"set": sorted(X), "qualifies": outcome}
    if variant is Variant.TOTAL:
        payload["naive"] = outcome
        payload["fast-path"] = is_total_visibility_set_fast(g, X)
    doc = ResultDocument(
        input_id=ident,
        kind="predicate",
        provenance="exhaustive",
        elapsed_seconds=time.monotonic() - start,
        variant=variant.value,
        payload=payload,
    )
    _emit(doc, args)
    return 0


def cmd_analyze(args) -> int:
    g, ident, _ = _load_source(args)
    start = time.monotonic()
    geodetic = g.is_geodetic()
    payload = {
        "n": g.n,
        "m": g.m,
        "diameter": g.diameter(),
        "geodetic": geodetic,
        "simplicial": sorted(g.simplicial_vertices()),
        "bypass": sorted(g.bypass_vertices()),
    }
    if geodetic:
        payload["total-visibility-number"] = total_number_geodetic(g)
    doc = ResultDocument(
        input_id=ident,
        kind="report",
        provenance="exhaustive",
        elapsed_seconds=time.monotonic() - start,
        payload=payload,
    )
    _emit(doc, args)
    return 0


def cmd_construct(args) -> int:
    if not args.family:
        raise EdgeListParseError("construct requires --family")
    g, ident, built = _load_source(args)
    comments = [ident]
    comments.extend(
        f"name {name}={index}" for name, index in sorted(built.named.items())
    )
    sys.stdout.write(serialize_edge_list(g, comments))
    return 0


def cmd_verify(args) -> int:
    limits = _limits(args)
    results = verification.run_all(limits)
    for res in results:
        print(res.line())
    failed = [r for r in results if r.status == "FAIL"]
    print(
        f"{sum(r.status == 'PASS' for r in results)} passed, "
        f"{sum(r.status == 'SKIPPED' for r in results)} skipped, "
        f"{len(failed)} failed"
    )
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mutvis",
        description="Mutual-visibility sets, numbers, polynomials and spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="visibility polynomial of a graph")
    _add_source_arguments(p)
    _add_limit_arguments(p)
    _add_output_argument(p)
    p.add_argument("--variant", required=True, choices=[v.value for v in Variant])
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("spectrum", help="dual visibility spectrum of a graph")
    _add_source_arguments(p)
    _add_limit_arguments(p)
    _add_output_argument(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="test one vertex set against a predicate")
    _add_source_arguments(p)
    _add_output_argument(p)
    p.add_argument("--variant", required=True, choices=[v.value for v in Variant])
    p.add_argument("--set", default="", help="comma-separated vertex list")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", help="structural invariants of a graph")
    _add_source_arguments(p)
    _add_output_argument(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="emit a family graph as an edge list")
    _add_source_arguments(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run the full acceptance suite")
    _add_limit_arguments(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _RESOURCE_ERRORS as exc:
        hint = ""
        if isinstance(exc, GraphTooLarge):
            hint = " (raise --max-n or use --lemma-assisted with a convex cover)"
        print(f"resource limit: {exc}{hint}", file=sys.stderr)
        return 3
    except (MutvisError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
