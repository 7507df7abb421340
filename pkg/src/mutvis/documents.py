"""Text formats: the edge-list graph document and structured results.

The edge-list format is bit-exact: a header line ``n m`` followed by exactly
``m`` lines ``u v`` with ``0 <= u < v < n``.  Comment lines start with ``#``
and may appear anywhere; parsing enforces connectivity, so a loaded document
always yields a usable graph with the labels it was written with.

Counting results serialize coefficients as decimal strings only, never as
floating point, so exactness survives every round trip.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import EdgeListParseError
from .graphs import Graph, build_graph


def serialize_edge_list(g: Graph, comments: list[str] | None = None) -> str:
    """Render a graph as an edge-list document, edges sorted."""
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document; strict about counts, ranges and order."""
    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise EdgeListParseError("empty document")
    header = rows[0].split()
    if len(header) != 2:
        raise EdgeListParseError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(f"non-integer header {rows[0]!r}") from None
    if n < 1 or m < 0:
        raise EdgeListParseError(f"invalid sizes in header {rows[0]!r}")
    if len(rows) - 1 != m:
        raise EdgeListParseError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        fields = row.split()
        if len(fields) != 2:
            raise EdgeListParseError(f"edge line must be 'u v', got {row!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer edge line {row!r}") from None
        if not (0 <= u < v < n):
            raise EdgeListParseError(f"edge {row!r} violates 0 <= u < v < n={n}")
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except Exception as exc:
        raise EdgeListParseError(str(exc)) from exc


@dataclass
class ResultDocument:
    """Structured output of one command.

    ``payload`` is kind-specific; polynomial and spectrum payloads carry
    their coefficients as decimal strings.  ``provenance`` is one of
    ``exhaustive``, ``lemma-assisted``, or ``closed-form``.
    """

    input_id: str
    kind: str  # number | polynomial | spectrum | predicate | report | graph
    provenance: str
    elapsed_seconds: float
    variant: str | None = None
    payload: dict = field(default_factory=dict)

    def to_json(self) -> str:
        data = {
            "input": self.input_id,
            "kind": self.kind,
            "provenance": self.provenance,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
        }
        if self.variant is not None:
            data["variant"] = self.variant
        data.update(self.payload)
        return json.dumps(data, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"input: {self.input_id}"]
        if self.variant is not None:
            lines.append(f"variant: {self.variant}")
        lines.append(f"kind: {self.kind}")
        for key, value in self.payload.items():
            if isinstance(value, list):
                value = " ".join(str(x) for x in value)
            lines.append(f"{key}: {value}")
        lines.append(f"provenance: {self.provenance}")
        lines.append(f"elapsed-seconds: {self.elapsed_seconds:.3f}")
        return "\n".join(lines) + "\n"
