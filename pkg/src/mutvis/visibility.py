"""Pair visibility and the four set-level visibility predicates.

Two vertices are visible around an obstacle set ``X`` when some shortest path
between them has no internal vertex inside ``X``; membership of the endpoints
themselves is irrelevant.  The four set predicates differ only in which pair
classes must be visible: pairs inside ``X``, mixed pairs, and pairs inside
the complement.

All functions here are pure; obstacle sets are passed per call and never
cached, so concurrent use on a shared graph is safe.
"""

from __future__ import annotations

from enum import Enum

from .errors import PreconditionViolated
from .graphs import Graph, VertexSet


class Variant(Enum):
    """Which pair classes a visibility set must keep visible."""

    MV = "mv"
    DUAL = "dual"
    OUTER = "outer"
    TOTAL = "total"

    @classmethod
    def from_string(cls, s: str) -> "Variant":
        try:
            return cls(s.strip().lower())
        except ValueError:
            choices = ", ".join(v.value for v in cls)
            raise ValueError(f"unknown variant {s!r} (choose from {choices})") from None


# Required pair classes per variant: (inside X, mixed, inside complement).
_REQUIRES = {
    Variant.MV: (True, False, False),
    Variant.DUAL: (True, False, True),
    Variant.OUTER: (True, True, False),
    Variant.TOTAL: (True, True, True),
}

# Pair-class requirements reused by the enumeration engine.
_MV_ONLY = _REQUIRES[Variant.MV]
_OUT_ONLY = (False, False, True)


def _walk_visible(g: Graph, xbits: int, entry) -> bool:
    """Reachability through the shortest-path layers avoiding ``xbits``."""
    _, y, _, layers = entry
    adj = g.adj
    avoid = ~xbits
    reach = layers[0] & avoid
    for layer in layers[1:]:
        if not reach:
            return False
        nxt = 0
        m = reach
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        reach = nxt & layer & avoid
    return reach & adj[y] != 0


def _pair_visible_bits(g: Graph, xbits: int, x: int, y: int) -> bool:
    if x == y:
        return True
    entry = g._pair_entry.get((min(x, y), max(x, y)))
    if entry is None:  # adjacent: no internal vertices
        return True
    if entry[2] & xbits == 0:
        return True
    return _walk_visible(g, xbits, entry)


def _holds(g: Graph, xbits: int, requires) -> bool:
    """Full predicate over all vertex pairs, cheapest blockers first."""
    req_in, req_mix, req_out = requires
    for entry in g._pair_scan:
        internal = entry[2]
        if internal & xbits == 0:
            continue
        x_in = xbits >> entry[0] & 1
        y_in = xbits >> entry[1] & 1
        if x_in and y_in:
            required = req_in
        elif x_in or y_in:
            required = req_mix
        else:
            required = req_out
        if required and not _walk_visible(g, xbits, entry):
            return False
    return True


def _extension_ok(g: Graph, newbits: int, v: int, requires) -> bool:
    """Re-verify only the pairs whose status can change when ``v`` joins.

    Assumes ``newbits`` minus ``v`` already satisfies ``requires``; pairs not
    touching ``v`` (as endpoint or internal vertex) keep both their pair
    class and their visibility.
    """
    req_in, req_mix, req_out = requires
    for entry in g._touch[v]:
        internal = entry[2]
        if internal & newbits == 0:
            continue
        x_in = newbits >> entry[0] & 1
        y_in = newbits >> entry[1] & 1
        if x_in and y_in:
            required = req_in
        elif x_in or y_in:
            required = req_mix
        else:
            required = req_out
        if required and not _walk_visible(g, newbits, entry):
            return False
    return True


def is_pair_visible(g: Graph, X: VertexSet, x: int, y: int) -> bool:
    """True when some shortest ``x,y``-path avoids ``X`` internally.

    ``x == y`` is vacuously visible.
    """
    g._check_set(X)
    g._check_vertex(x)
    g._check_vertex(y)
    return _pair_visible_bits(g, X.bits, x, y)


def is_visibility_set(g: Graph, X: VertexSet, variant: Variant) -> bool:
    """Set-level predicate: every required pair class is ``X``-visible."""
    g._check_set(X)
    return _holds(g, X.bits, _REQUIRES[variant])


def is_total_visibility_set_fast(g: Graph, X: VertexSet) -> bool:
    """Distance-two characterization of total visibility sets.

    ``X`` qualifies exactly when no distance-two pair has its whole common
    neighborhood swallowed by ``X``.  Agrees with the naive total predicate
    on every input.
    """
    g._check_set(X)
    outside = ~X.bits
    for _, _, common in g._dist2:
        if common & outside == 0:
            return False
    return True


def is_general_position_set(g: Graph, X: VertexSet) -> bool:
    """No member lies internally on any geodesic between two members."""
    g._check_set(X)
    bits = X.bits
    members = X.members()
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            if g.internal_interval_bits(x, y) & bits:
                return False
    return True


def minimal_non_total_witness(g: Graph, X: VertexSet) -> tuple[int, int] | None:
    """Witness pair for a minimally non-total set, or ``None``.

    Requires ``X`` nonempty with every proper subset a total visibility set
    (checking the maximal proper subsets suffices, since total sets are
    closed under taking subsets).  When ``X`` itself fails the total
    predicate, returns the lexicographically first nonadjacent pair whose
    common neighborhood is exactly ``X``.
    """
    g._check_set(X)
    bits = X.bits
    if bits == 0:
        raise PreconditionViolated("X must be nonempty")
    total = _REQUIRES[Variant.TOTAL]
    for v in X:
        if not _holds(g, bits & ~(1 << v), total):
            raise PreconditionViolated(
                f"proper subset without vertex {v} is not a total visibility set"
            )
    if _holds(g, bits, total):
        return None
    for v1 in range(g.n):
        row = g.adj[v1]
        for v2 in range(v1 + 1, g.n):
            if (row >> v2) & 1:
                continue
            if g.adj[v1] & g.adj[v2] == bits:
                return (v1, v2)
    raise RuntimeError(
        "no witness pair found; the distance-two characterization is violated"
    )
