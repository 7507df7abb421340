"""Exact enumeration of visibility sets: polynomials, spectra, maximal sets.

The engine walks the subset-closed family of qualifying sets depth-first,
growing sets one vertex at a time in ascending order; closure under subsets
guarantees every qualifying set is reached exactly once.  Dual sets are not
subset-closed, so they are enumerated as the subset-closed plain-visibility
family filtered by the complement-pair condition at every node.

Counting is deterministic: with multiple workers the search forest is
partitioned statically by the minimum element of each set and the partial
count vectors are merged by addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from multiprocessing import get_context

from .errors import (
    GraphTooLarge,
    LemmaAssistedDisabled,
    NonConvexCoverMember,
    NotGeodetic,
    SearchSpaceTooLarge,
    TooManyMaximalSets,
    UnsupportedVariant,
)
from .graphs import Graph, VertexSet
from .polynomials import CountPolynomial
from .visibility import _MV_ONLY, _OUT_ONLY, _REQUIRES, Variant, _extension_ok, _holds

# Ceiling on distinct intersection states in the alternating-sum evaluation.
_MAX_INTERSECTION_STATES = 1 << 20


@dataclass(frozen=True)
class EnumerationLimits:
    """Resource bounds for the enumeration engine.

    ``max_exhaustive_n`` caps full family scans; graphs above it are refused
    unless the caller goes through the pruned (lemma-assisted) search, which
    must be switched on explicitly.  ``worker_count`` is the parallelism
    degree; results are identical for any value.
    """

    max_exhaustive_n: int = 16
    allow_lemma_assisted: bool = False
    worker_count: int = 1

    def __post_init__(self):
        if self.max_exhaustive_n < 1:
            raise ValueError("max_exhaustive_n must be positive")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")


DEFAULT_LIMITS = EnumerationLimits()


def _check_size(g: Graph, limits: EnumerationLimits) -> None:
    if g.n > limits.max_exhaustive_n:
        raise GraphTooLarge(
            f"graph has {g.n} vertices, above the exhaustive limit "
            f"{limits.max_exhaustive_n}"
        )


def _iter_family(g: Graph, variant: Variant, first_vertices=None):
    """Yield the bitmasks of all qualifying sets, each exactly once.

    ``first_vertices`` restricts the walk to subtrees whose sets have the
    given minimum element (the empty set is then not yielded); ``None``
    walks everything.
    """
    grow = _MV_ONLY if variant is Variant.DUAL else _REQUIRES[variant]
    dual = variant is Variant.DUAL
    n = g.n

    def rec(bits, start):
        if not dual or _holds(g, bits, _OUT_ONLY):
            yield bits
        for v in range(start, n):
            nb = bits | (1 << v)
            if _extension_ok(g, nb, v, grow):
                yield from rec(nb, v + 1)

    if first_vertices is None:
        yield from rec(0, 0)
    else:
        for v in first_vertices:
            nb = 1 << v
            if _extension_ok(g, nb, v, grow):
                yield from rec(nb, v + 1)


def _count_family(g: Graph, variant: Variant, first_vertices=None) -> list[int]:
    counts = [0] * (g.n + 1)
    for bits in _iter_family(g, variant, first_vertices):
        counts[bits.bit_count()] += 1
    return counts


def _subtree_counts_task(args):
    g, variant_value, vertices = args
    return _count_family(g, Variant(variant_value), vertices)


def visibility_polynomial(
    g: Graph, variant: Variant, limits: EnumerationLimits = DEFAULT_LIMITS
) -> CountPolynomial:
    """Coefficient ``i`` counts the qualifying sets of size ``i`` exactly."""
    _check_size(g, limits)
    workers = limits.worker_count
    if workers == 1:
        counts = _count_family(g, variant)
    else:
        chunks = [list(range(w, g.n, workers)) for w in range(workers)]
        chunks = [c for c in chunks if c]
        args = [(g, variant.value, chunk) for chunk in chunks]
        with get_context().Pool(len(chunks)) as pool:
            partials = pool.map(_subtree_counts_task, args)
        counts = [0] * (g.n + 1)
        counts[0] = 1  # the empty set, owned by the merge step
        for part in partials:
            for i, c in enumerate(part):
                counts[i] += c
    return CountPolynomial.from_counts(counts)


def visibility_number(
    g: Graph, variant: Variant, limits: EnumerationLimits = DEFAULT_LIMITS
) -> int:
    """Largest size of a qualifying set (degree of the polynomial)."""
    return visibility_polynomial(g, variant, limits).degree


def dual_spectrum(g: Graph, limits: EnumerationLimits = DEFAULT_LIMITS) -> CountPolynomial:
    """Count vector of dual visibility sets by size; may contain gaps."""
    return visibility_polynomial(g, Variant.DUAL, limits)


def maximal_visibility_sets(
    g: Graph, variant: Variant, limits: EnumerationLimits = DEFAULT_LIMITS
) -> list[VertexSet]:
    """All inclusion-maximal qualifying sets, smallest first.

    Defined for the subset-closed variants only; dual sets have no
    meaningful maximal family.
    """
    if variant is Variant.DUAL:
        raise UnsupportedVariant("maximal sets are not defined for the dual variant")
    _check_size(g, limits)
    family = set(_iter_family(g, variant))
    n = g.n
    maximal = []
    for bits in family:
        extendable = False
        for v in range(n):
            if not (bits >> v) & 1 and (bits | (1 << v)) in family:
                extendable = True
                break
        if not extendable:
            maximal.append(bits)
    maximal.sort(key=lambda b: (b.bit_count(), b))
    return [VertexSet(n, b) for b in maximal]


def polynomial_via_inclusion_exclusion(
    g: Graph, variant: Variant, limits: EnumerationLimits = DEFAULT_LIMITS
) -> CountPolynomial:
    """Rebuild the polynomial from maximal sets by the alternating sum.

    Every nonempty subfamily of maximal sets contributes
    ``(-1)^(k-1) * (1+x)^|intersection|``.  Subfamilies are grouped by their
    intersection, so the sum is evaluated without touching all ``2^m``
    subfamilies; the result is identical term for term.
    """
    maximal = maximal_visibility_sets(g, variant, limits)
    signed: dict[int, int] = {}
    for M in maximal:
        mbits = M.bits
        update = dict(signed)
        update[mbits] = update.get(mbits, 0) + 1
        for tbits, coeff in signed.items():
            key = tbits & mbits
            update[key] = update.get(key, 0) - coeff
        signed = {k: v for k, v in update.items() if v != 0}
        if len(signed) > _MAX_INTERSECTION_STATES:
            raise TooManyMaximalSets(
                f"{len(maximal)} maximal sets generate too many intersections"
            )
    counts = [0] * (g.n + 1)
    for tbits, coeff in signed.items():
        size = tbits.bit_count()
        for i in range(size + 1):
            counts[i] += coeff * comb(size, i)
    return CountPolynomial.from_counts(counts)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def lemma_assisted_dual_search(
    g: Graph, cover, limits: EnumerationLimits = DEFAULT_LIMITS
) -> CountPolynomial:
    """Dual spectrum via pruning with a convex cover.

    Any dual set restricted to a convex subgraph is a dual set of that
    subgraph, so candidates are assembled from the per-member dual families
    (computed exhaustively on each member) and only the surviving candidates
    are checked against the full dual predicate.  Agrees with the exhaustive
    spectrum whenever both are runnable.
    """
    if not limits.allow_lemma_assisted:
        raise LemmaAssistedDisabled(
            "pruned dual search must be enabled via allow_lemma_assisted"
        )
    cap = 1 << limits.max_exhaustive_n
    members = []
    for S in cover:
        g._check_set(S)
        if not S:
            continue
        if not g.is_convex(S):
            raise NonConvexCoverMember(f"cover member {S!r} is not convex")
        members.append(S)

    candidates = {0}
    covered = 0
    for S in members:
        sbits = S.bits
        sub, order = g.induced_subgraph(S)
        if sub.n > limits.max_exhaustive_n:
            raise GraphTooLarge(
                f"cover member with {sub.n} vertices exceeds the exhaustive limit"
            )
        member_family = []
        for local in _iter_family(sub, Variant.DUAL):
            bits = 0
            while local:
                low = local & -local
                bits |= 1 << order[low.bit_length() - 1]
                local ^= low
            member_family.append(bits)
        overlap = covered & sbits
        survivors = set()
        for cand in candidates:
            want = cand & overlap
            for mbits in member_family:
                if mbits & overlap == want:
                    survivors.add(cand | mbits)
        candidates = survivors  # never empty: the empty set survives every join
        covered |= sbits
        if len(candidates) > cap:
            raise SearchSpaceTooLarge(
                f"{len(candidates)} candidates exceed the cap {cap}"
            )

    free = g.full_mask & ~covered
    if len(candidates) << free.bit_count() > cap:
        raise SearchSpaceTooLarge(
            f"{len(candidates)} candidates with {free.bit_count()} free vertices "
            f"exceed the cap {cap}"
        )
    dual_req = _REQUIRES[Variant.DUAL]
    counts = [0] * (g.n + 1)
    for cand in candidates:
        for extra in _submasks(free):
            bits = cand | extra
            if _holds(g, bits, dual_req):
                counts[bits.bit_count()] += 1
    return CountPolynomial.from_counts(counts)


def total_number_via_bypass(g: Graph) -> int | None:
    """Total visibility number when the bypass characterization decides it.

    Returns 0 when there are no bypass vertices, 1 when every pair of bypass
    vertices is the exact common neighborhood of some nonadjacent vertex
    pair, and ``None`` otherwise (the number is then at least 2).
    """
    bypass = g.bypass_vertices()
    if not bypass:
        return 0
    members = bypass.members()
    if len(members) >= 2:
        common_masks = set()
        for u in range(g.n):
            for w in range(u + 1, g.n):
                if not g.has_edge(u, w):
                    common_masks.add(g.adj[u] & g.adj[w])
        for i, v1 in enumerate(members):
            for v2 in members[i + 1 :]:
                if ((1 << v1) | (1 << v2)) not in common_masks:
                    return None
    return 1


def total_number_geodetic(g: Graph, verify: bool = False) -> int:
    """Total visibility number of a geodetic graph: its simplicial count.

    With ``verify=True`` additionally confirms that the simplicial vertices
    form a total visibility set and that no other set of that size does.
    """
    if not g.is_geodetic():
        raise NotGeodetic("graph has a vertex pair with several shortest paths")
    simplicial = g.simplicial_vertices()
    s = len(simplicial)
    if verify:
        total_req = _REQUIRES[Variant.TOTAL]
        if not _holds(g, simplicial.bits, total_req):
            raise RuntimeError("simplicial vertices fail the total predicate")
        for combo in combinations(range(g.n), s):
            bits = 0
            for v in combo:
                bits |= 1 << v
            if bits != simplicial.bits and _holds(g, bits, total_req):
                raise RuntimeError(
                    f"unexpected second total set of size {s}: {combo}"
                )
    return s
