"""Deterministic constructors for every graph family used by the suite.

Each family has a frozen, documented labelling so that tests addressing
vertices by construction role ("v1", "x2", "u_1_2", ...) are stable.  The
returned :class:`Construction` carries the graph, the role-name map, and the
constituent cycles that later serve as convex pruning covers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidParams, UnsupportedFamily
from .graphs import Graph, VertexSet, build_graph

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "petersen",
    "g_n",
    "f_t",
    "f_one_ell",
    "f_composite",
)


@dataclass(frozen=True)
class ConstructionSpec:
    """Family name plus its integer parameters."""

    family: str
    params: tuple[int, ...] = ()


@dataclass(frozen=True, eq=False)
class Construction:
    """A constructed graph with its role-name map and constituent cycles."""

    graph: Graph
    family: str
    params: tuple[int, ...]
    named: dict[str, int] = field(default_factory=dict)
    five_cycles: tuple[VertexSet, ...] = ()
    seven_cycles: tuple[VertexSet, ...] = ()

    def named_set(self, *names: str) -> VertexSet:
        """Vertex set addressed by construction-role names."""
        return self.graph.vertex_set(self.named[name] for name in names)

    def y_set(self) -> VertexSet:
        """The designated witness set of the spectrum families."""
        if self.family == "f_t":
            t = self.params[0]
            names = ["v1"] + [f"v2_{i}" for i in range(1, t)]
            return self.named_set(*names)
        if self.family == "f_one_ell":
            ell = self.params[0]
            return self.named_set(*[f"v{i}" for i in range(1, ell + 1)])
        raise UnsupportedFamily(f"family {self.family!r} has no designated witness set")


def y_set(spec: "ConstructionSpec | Construction") -> VertexSet:
    """Witness set for an ``f_t`` or ``f_one_ell`` construction."""
    if isinstance(spec, Construction):
        return spec.y_set()
    return construct(spec).y_set()


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParams(message)


def _append_seven_cycles(n: int, edges: list, anchors) -> tuple[int, list, list]:
    """Grow a 7-cycle through each anchor, anchors in ascending order.

    Each cycle contributes six fresh vertices appended after the current
    highest index; returns the new vertex count and the cycles' vertex lists.
    """
    cycles = []
    for a in sorted(anchors):
        ring = [a] + list(range(n, n + 6))
        for i in range(7):
            edges.append((ring[i], ring[(i + 1) % 7]))
        cycles.append(tuple(ring))
        n += 6
    return n, edges, cycles


def attach_seven_cycle(g: Graph, anchor: int) -> Graph:
    """New graph with six fresh vertices forming a 7-cycle through ``anchor``.

    All existing labels are preserved; the new vertices take indices
    ``n..n+5``.
    """
    g._check_vertex(anchor)
    edges = list(g.edges)
    ring = [anchor] + list(range(g.n, g.n + 6))
    for i in range(7):
        edges.append((ring[i], ring[(i + 1) % 7]))
    return build_graph(g.n + 6, edges)


def path_graph(n: int) -> Construction:
    """Path ``0-1-...-(n-1)``."""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    g = build_graph(n, [(i, i + 1) for i in range(n - 1)])
    return Construction(g, "path", (n,))


def cycle_graph(n: int) -> Construction:
    """Cycle ``0-1-...-(n-1)-0``."""
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    return Construction(g, "cycle", (n,))


def complete_graph(n: int) -> Construction:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    g = build_graph(n, list(combinations(range(n), 2)))
    return Construction(g, "complete", (n,))


def complete_bipartite_graph(m: int, n: int) -> Construction:
    """Parts ``a0..a{m-1}`` on ``0..m-1`` and ``b0..b{n-1}`` on ``m..m+n-1``."""
    _require(m >= 1 and n >= 1, f"bipartite parts must be nonempty, got {m},{n}")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    g = build_graph(m + n, edges)
    named = {f"a{i}": i for i in range(m)}
    named.update({f"b{j}": m + j for j in range(n)})
    return Construction(g, "complete_bipartite", (m, n), named)


def star_graph(ell: int) -> Construction:
    """Star with center ``v0`` at index 0 and leaves ``v1..v{ell}``."""
    _require(ell >= 1, f"star needs at least one leaf, got {ell}")
    g = build_graph(ell + 1, [(0, i) for i in range(1, ell + 1)])
    named = {f"v{i}": i for i in range(ell + 1)}
    return Construction(g, "star", (ell,), named)


def petersen_graph() -> Construction:
    """Petersen graph: outer cycle ``u0..u4`` on 0..4, inner ``v0..v4`` on 5..9.

    Spokes join ``u_i`` to ``v_i``; the inner vertices form a pentagram
    (``v_i`` adjacent to ``v_{i+2 mod 5}``).
    """
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + i))
        edges.append((5 + i, 5 + (i + 2) % 5))
    g = build_graph(10, edges)
    named = {f"u{i}": i for i in range(5)}
    named.update({f"v{i}": 5 + i for i in range(5)})
    return Construction(g, "petersen", (), named)


def g_n_graph(n: int) -> Construction:
    """``n`` five-cycles glued along one shared edge.

    The shared edge is ``u=0, v=1``; cycle ``i`` (1-based) runs
    ``u, x_i, y_i, z_i, v`` with ``x_i, y_i, z_i`` at ``3i-1, 3i, 3i+1``.
    """
    _require(n >= 2, f"glued five-cycles need n >= 2, got {n}")
    edges = [(0, 1)]
    named = {"u": 0, "v": 1}
    cycles = []
    for i in range(1, n + 1):
        x, y, z = 3 * i - 1, 3 * i, 3 * i + 1
        edges.extend([(0, x), (x, y), (y, z), (z, 1)])
        named.update({f"x{i}": x, f"y{i}": y, f"z{i}": z})
        cycles.append((0, 1, x, y, z))
    g = build_graph(3 * n + 2, edges)
    five = tuple(g.vertex_set(c) for c in cycles)
    return Construction(g, "g_n", (n,), named, five_cycles=five)


def f_t_graph(t: int, include_apex: bool = True) -> Construction:
    """Witness family with a single gapped dual spectrum entry.

    ``t-1`` five-cycles share the edge ``v0 v1`` (indices 0 and 1); cycle
    ``i`` adds ``v2_i, v3_i, v4_i`` at ``3i-1, 3i, 3i+1``.  An apex vertex
    adjacent to every ``v2_i`` and ``v3_i`` follows at index ``3t-1``, and a
    7-cycle is grown onto every vertex outside the witness set
    ``{v1, v2_1, ..., v2_{t-1}}``.  The apex (and its 7-cycle) may be omitted
    for ``t = 2`` only; ``v0`` is the connecting vertex.
    """
    _require(t >= 2, f"need t >= 2, got {t}")
    if not include_apex:
        _require(t == 2, "the apex can only be omitted for t = 2")
    edges = [(0, 1)]
    named = {"v0": 0, "v1": 1}
    cycles = []
    y_bits = {1}
    for i in range(1, t):
        v2, v3, v4 = 3 * i - 1, 3 * i, 3 * i + 1
        edges.extend([(1, v2), (v2, v3), (v3, v4), (v4, 0)])
        named.update({f"v2_{i}": v2, f"v3_{i}": v3, f"v4_{i}": v4})
        cycles.append((0, 1, v2, v3, v4))
        y_bits.add(v2)
    base_n = 3 * t - 1
    if include_apex:
        apex = base_n
        base_n += 1
        named["v5"] = apex
        for i in range(1, t):
            edges.extend([(apex, 3 * i - 1), (apex, 3 * i)])
    anchors = [v for v in range(base_n) if v not in y_bits]
    n, edges, seven = _append_seven_cycles(base_n, edges, anchors)
    g = build_graph(n, edges)
    return Construction(
        g,
        "f_t",
        (t,) if include_apex else (t, 0),
        named,
        five_cycles=tuple(g.vertex_set(c) for c in cycles),
        seven_cycles=tuple(g.vertex_set(c) for c in seven),
    )


def f_one_ell_graph(ell: int) -> Construction:
    """Witness family with exactly ``ell`` singleton dual visibility sets.

    A star with center ``v0`` (index 0) and leaves ``v1..v{ell}``; every leaf
    pair ``i < j`` gains a common neighbor ``u_i_j`` (indices ``ell+1``
    onward, lexicographic), the ``u`` vertices form a clique, and a 7-cycle
    is grown onto every vertex outside ``{v1, ..., v{ell}}``.  ``v0`` is the
    connecting vertex.
    """
    _require(ell >= 1, f"need ell >= 1, got {ell}")
    edges = [(0, i) for i in range(1, ell + 1)]
    named = {f"v{i}": i for i in range(ell + 1)}
    u_indices = []
    nxt = ell + 1
    for i, j in combinations(range(1, ell + 1), 2):
        named[f"u_{i}_{j}"] = nxt
        edges.extend([(i, nxt), (j, nxt)])
        u_indices.append(nxt)
        nxt += 1
    edges.extend(combinations(u_indices, 2))
    anchors = [0] + u_indices
    n, edges, seven = _append_seven_cycles(nxt, list(edges), anchors)
    g = build_graph(n, edges)
    return Construction(
        g,
        "f_one_ell",
        (ell,),
        named,
        seven_cycles=tuple(g.vertex_set(c) for c in seven),
    )


def f_composite_graph(spectrum) -> Construction:
    """Graph whose dual visibility spectrum is the prescribed vector.

    ``spectrum`` is ``(1, r_1, ..., r_k)`` with nonnegative entries and
    ``r_k > 0``.  For ``k = 0`` the graph is a 7-cycle.  Otherwise one
    ``f_one_ell(r_1)`` component (when ``r_1 >= 1``) and ``r_i`` copies of
    ``f_t(i)`` for each ``i >= 2`` are merged at their connecting vertices,
    which become the single vertex ``v*`` at index 0.  Component ``c``'s
    role names are exposed as ``g{c}:<name>``.
    """
    spectrum = tuple(int(r) for r in spectrum)
    _require(len(spectrum) >= 1, "spectrum must not be empty")
    _require(spectrum[0] == 1, "spectrum must start with 1")
    _require(all(r >= 0 for r in spectrum), "spectrum entries must be nonnegative")
    k = len(spectrum) - 1
    if k == 0:
        base = cycle_graph(7)
        return Construction(base.graph, "f_composite", spectrum, {"v*": 0})
    _require(spectrum[-1] > 0, "the leading spectrum entry must be positive")

    parts: list[Construction] = []
    if spectrum[1] >= 1:
        parts.append(f_one_ell_graph(spectrum[1]))
    for i in range(2, k + 1):
        for _ in range(spectrum[i]):
            parts.append(f_t_graph(i))

    named = {"v*": 0}
    edges: list[tuple[int, int]] = []
    five: list[tuple[int, ...]] = []
    seven: list[tuple[int, ...]] = []
    offset = 1
    for ci, part in enumerate(parts):
        shift = offset - 1  # component vertex 0 merges into v*; others shift

        def relabel(v: int, shift: int = shift) -> int:
            return 0 if v == 0 else v + shift

        edges.extend((relabel(u), relabel(v)) for u, v in part.graph.edges)
        for name, v in part.named.items():
            if v != 0:
                named[f"g{ci}:{name}"] = relabel(v)
        five.extend(tuple(relabel(v) for v in c) for c in part.five_cycles)
        seven.extend(tuple(relabel(v) for v in c) for c in part.seven_cycles)
        offset += part.graph.n - 1
    g = build_graph(offset, edges)
    return Construction(
        g,
        "f_composite",
        spectrum,
        named,
        five_cycles=tuple(g.vertex_set(c) for c in five),
        seven_cycles=tuple(g.vertex_set(c) for c in seven),
    )


def construct(spec: ConstructionSpec) -> Construction:
    """Dispatch a :class:`ConstructionSpec` to its family constructor."""
    family = spec.family
    params = tuple(spec.params)
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unknown family {family!r}")

    def arity(k: int) -> None:
        if len(params) != k:
            raise InvalidParams(f"family {family!r} takes {k} parameter(s), got {len(params)}")

    if family == "path":
        arity(1)
        return path_graph(params[0])
    if family == "cycle":
        arity(1)
        return cycle_graph(params[0])
    if family == "complete":
        arity(1)
        return complete_graph(params[0])
    if family == "complete_bipartite":
        arity(2)
        return complete_bipartite_graph(params[0], params[1])
    if family == "star":
        arity(1)
        return star_graph(params[0])
    if family == "petersen":
        arity(0)
        return petersen_graph()
    if family == "g_n":
        arity(1)
        return g_n_graph(params[0])
    if family == "f_t":
        if len(params) == 1:
            return f_t_graph(params[0])
        if len(params) == 2:
            return f_t_graph(params[0], include_apex=bool(params[1]))
        raise InvalidParams("family 'f_t' takes t and an optional apex flag")
    if family == "f_one_ell":
        arity(1)
        return f_one_ell_graph(params[0])
    if family == "f_composite":
        if not params:
            raise InvalidParams("family 'f_composite' needs a spectrum vector")
        return f_composite_graph(params)
    raise UnsupportedFamily(f"unknown family {family!r}")  # pragma: no cover
