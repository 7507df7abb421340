"""Immutable simple connected graphs with exact distance machinery.

Vertices are dense integers ``0..n-1``.  Distances, shortest-path counts and
the per-pair geodesic geometry consumed by the visibility predicates are all
computed once at construction time; a :class:`Graph` is never mutated
afterwards, so instances can be shared freely across worker processes.

Vertex subsets are bitmasks wrapped in :class:`VertexSet`; all set algebra is
exact integer arithmetic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedGraph, DuplicateEdge, InvalidEdge


class VertexSet:
    """A subset of the vertices of one graph, stored as a bitmask.

    The universe size ``n`` travels with the set so that complements are
    always taken inside the owning graph's vertex set.  Instances are
    immutable; all operators return new sets.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0) -> None:
        if n < 0:
            raise ValueError("universe size must be nonnegative")
        if bits < 0 or bits >> n:
            raise ValueError(f"bitmask {bits:#x} outside universe of size {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> "VertexSet":
        """Build a set over ``0..n-1`` from an iterable of vertex indices."""
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside universe of size {n}")
            bits |= 1 << v
        return cls(n, bits)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def _same_universe(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError("vertex sets belong to different universes")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same_universe(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __le__(self, other: "VertexSet") -> bool:
        self._same_universe(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> "VertexSet":
        """All vertices of the owning universe not in this set."""
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def with_vertex(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside universe of size {self.n}")
        return VertexSet(self.n, self.bits | (1 << v))

    def without_vertex(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside universe of size {self.n}")
        return VertexSet(self.n, self.bits & ~(1 << v))

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


def _bfs_with_counts(adj_list: Sequence[Sequence[int]], source: int, n: int):
    """Distances and exact shortest-path counts from one source vertex."""
    dist = [-1] * n
    count = [0] * n
    dist[source] = 0
    count[source] = 1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        cu = count[u]
        for w in adj_list[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                count[w] = cu
                queue.append(w)
            elif dist[w] == du + 1:
                count[w] += cu
    return dist, count


class Graph:
    """Simple connected undirected graph over vertices ``0..n-1``.

    Attributes
    ----------
    n : vertex count.
    edges : sorted tuple of ``(u, v)`` pairs with ``u < v``.
    adj : per-vertex neighbor bitmasks.
    adj_list : per-vertex sorted neighbor tuples.
    dist : ``n x n`` hop-distance matrix.
    spcount : ``n x n`` matrix of exact shortest-path counts.
    """

    __slots__ = (
        "n",
        "edges",
        "adj",
        "adj_list",
        "dist",
        "spcount",
        "full_mask",
        "_geodetic",
        "_pair_entry",
        "_pair_scan",
        "_dist2",
        "_touch",
    )

    def __init__(self, n: int, edges: Sequence[tuple[int, int]], _internal: bool = False):
        if not _internal:
            raise TypeError("use build_graph() to construct a Graph")
        self.n = n
        self.edges = tuple(sorted(edges))
        self.full_mask = (1 << n) - 1

        adj = [0] * n
        adj_list: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            adj_list[u].append(v)
            adj_list[v].append(u)
        self.adj = tuple(adj)
        self.adj_list = tuple(tuple(sorted(nb)) for nb in adj_list)

        dist_rows = []
        count_rows = []
        for s in range(n):
            d, c = _bfs_with_counts(self.adj_list, s, n)
            if any(x < 0 for x in d):
                missing = next(i for i, x in enumerate(d) if x < 0)
                raise DisconnectedGraph(f"no path between vertices {s} and {missing}")
            dist_rows.append(tuple(d))
            count_rows.append(tuple(c))
        self.dist = tuple(dist_rows)
        self.spcount = tuple(count_rows)
        self._geodetic = all(
            self.spcount[u][v] == 1 for u in range(n) for v in range(u + 1, n)
        )
        self._build_pair_geometry()

    def _build_pair_geometry(self) -> None:
        # Per pair at distance >= 2: the mask of internal geodesic vertices
        # and the distance-layer masks used for reachability walks.
        n = self.n
        dist = self.dist
        entries = {}
        dist2 = []
        for x in range(n):
            dx = dist[x]
            for y in range(x + 1, n):
                d = dx[y]
                if d < 2:
                    continue
                dy = dist[y]
                layers = [0] * (d - 1)
                for w in range(n):
                    k = dx[w]
                    if 0 < k < d and k + dy[w] == d:
                        layers[k - 1] |= 1 << w
                internal = 0
                for mask in layers:
                    internal |= mask
                entry = (x, y, internal, tuple(layers))
                entries[(x, y)] = entry
                if d == 2:
                    dist2.append((x, y, internal))
        self._pair_entry = entries
        self._pair_scan = tuple(
            sorted(entries.values(), key=lambda e: (e[2].bit_count(), e[0], e[1]))
        )
        self._dist2 = tuple(dist2)
        touch: list[list] = [[] for _ in range(n)]
        for entry in self._pair_scan:
            x, y, internal, _ = entry
            affected = internal | (1 << x) | (1 << y)
            while affected:
                low = affected & -affected
                touch[low.bit_length() - 1].append(entry)
                affected ^= low
        self._touch = tuple(tuple(t) for t in touch)

    # -- basic accessors ------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def diameter(self) -> int:
        return max(max(row) for row in self.dist)

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        """A :class:`VertexSet` bound to this graph's vertex universe."""
        return VertexSet.of(self.n, vertices)

    def all_vertices(self) -> VertexSet:
        return VertexSet(self.n, self.full_mask)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")

    def _check_set(self, S: VertexSet) -> None:
        if not isinstance(S, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(S).__name__}")
        if S.n != self.n:
            raise ValueError("vertex set bound to a different universe")

    # -- geodesic structure ---------------------------------------------

    def interval(self, u: int, v: int) -> VertexSet:
        """Vertices lying on at least one shortest ``u,v``-path."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return VertexSet(self.n, 1 << u)
        ends = (1 << u) | (1 << v)
        entry = self._pair_entry.get((min(u, v), max(u, v)))
        if entry is None:  # adjacent pair
            return VertexSet(self.n, ends)
        return VertexSet(self.n, entry[2] | ends)

    def internal_interval_bits(self, u: int, v: int) -> int:
        """Bitmask of the internal geodesic vertices between ``u`` and ``v``."""
        if u == v:
            return 0
        entry = self._pair_entry.get((min(u, v), max(u, v)))
        return 0 if entry is None else entry[2]

    def is_convex(self, S: VertexSet) -> bool:
        """True when every geodesic between members stays inside ``S``.

        The empty set and singletons are convex by convention.
        """
        self._check_set(S)
        bits = S.bits
        outside = ~bits
        members = S.members()
        for i, x in enumerate(members):
            for y in members[i + 1 :]:
                if self.internal_interval_bits(x, y) & outside:
                    return False
        return True

    def is_isometric(self, S: VertexSet) -> bool:
        """True when the subgraph induced by ``S`` is connected and preserves
        all pairwise distances of the host graph.

        The empty set is isometric by convention; a disconnected induced
        subgraph is not isometric.
        """
        self._check_set(S)
        bits = S.bits
        members = S.members()
        if len(members) <= 1:
            return True
        adj = self.adj
        for s in members:
            host = self.dist[s]
            seen = 1 << s
            frontier = 1 << s
            d = 0
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    low = m & -m
                    nxt |= adj[low.bit_length() - 1]
                    m ^= low
                frontier = nxt & bits & ~seen
                d += 1
                m = frontier
                while m:
                    low = m & -m
                    if host[low.bit_length() - 1] != d:
                        return False
                    m ^= low
                seen |= frontier
            if seen != bits:
                return False
        return True

    def is_geodetic(self) -> bool:
        """True when every vertex pair has exactly one shortest path."""
        return self._geodetic

    def simplicial_vertices(self) -> VertexSet:
        """Vertices whose neighborhood induces a complete subgraph."""
        bits = 0
        for v in range(self.n):
            nb = self.adj[v]
            m = nb
            ok = True
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if nb & ~(self.adj[u] | low):
                    ok = False
                    break
                m ^= low
            if ok:
                bits |= 1 << v
        return VertexSet(self.n, bits)

    def bypass_vertices(self) -> VertexSet:
        """Vertices that center no convex path on three vertices.

        A vertex fails exactly when it is the unique common neighbor of some
        pair at distance two; every simplicial vertex passes.
        """
        blocked = 0
        for _, _, common in self._dist2:
            if common.bit_count() == 1:
                blocked |= common
        return VertexSet(self.n, self.full_mask & ~blocked)

    # -- derived graphs --------------------------------------------------

    def induced_subgraph(self, S: VertexSet) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by ``S`` plus the new-to-old vertex mapping.

        Raises :class:`DisconnectedGraph` when the induced subgraph is not
        connected.
        """
        self._check_set(S)
        order = S.members()
        index = {old: new for new, old in enumerate(order)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return build_graph(len(order), edges), order

    def delete_vertex(self, v: int) -> tuple["Graph", tuple[int, ...]]:
        """Graph with ``v`` removed; raises when the rest disconnects."""
        self._check_vertex(v)
        keep = VertexSet(self.n, self.full_mask & ~(1 << v))
        return self.induced_subgraph(keep)

    def __reduce__(self):
        return (build_graph, (self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and construct the graph with all derived data.

    Raises :class:`InvalidEdge` for out-of-range endpoints or self-loops,
    :class:`DuplicateEdge` for repeated unordered pairs, and
    :class:`DisconnectedGraph` when some pair has no path.
    """
    if n < 1:
        raise InvalidEdge(f"vertex count must be positive, got {n}")
    seen = set()
    normalized = []
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise InvalidEdge(f"edge {e!r} is not a vertex pair") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InvalidEdge(f"edge {e!r} has non-integer endpoints")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge {e!r} outside vertex range 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} given more than once")
        seen.add(key)
        normalized.append(key)
    return Graph(n, normalized, _internal=True)
