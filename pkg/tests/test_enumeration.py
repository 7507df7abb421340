import pytest

import oracle
from mutvis import (
    EnumerationLimits,
    Variant,
    complete_graph,
    cycle_graph,
    dual_spectrum,
    f_one_ell_graph,
    g_n_graph,
    lemma_assisted_dual_search,
    maximal_visibility_sets,
    path_graph,
    petersen_graph,
    polynomial_via_inclusion_exclusion,
    total_number_geodetic,
    total_number_via_bypass,
    visibility_number,
    visibility_polynomial,
)
from mutvis.enumeration import _iter_family
from mutvis.errors import (
    GraphTooLarge,
    LemmaAssistedDisabled,
    NonConvexCoverMember,
    NotGeodetic,
    SearchSpaceTooLarge,
    UnsupportedVariant,
)
from mutvis.visibility import _REQUIRES, _holds

PRUNED = EnumerationLimits(allow_lemma_assisted=True)


def test_polynomials_match_path_enumeration_oracle(tiny_corpus):
    for name, g in tiny_corpus:
        for variant in Variant:
            got = visibility_polynomial(g, variant).coeffs
            want = oracle.polynomial(g, variant)
            assert got == want, (name, variant, got, want)


def test_search_family_equals_literal_scan(small_corpus):
    for name, g in small_corpus:
        if g.n > 8:
            continue
        for variant in Variant:
            family = set(_iter_family(g, variant))
            scanned = {
                bits
                for bits in range(1 << g.n)
                if _holds(g, bits, _REQUIRES[variant])
            }
            assert family == scanned, (name, variant)


def test_worker_counts_do_not_change_results():
    graphs = [cycle_graph(6).graph, petersen_graph().graph]
    for g in graphs:
        for variant in (Variant.MV, Variant.DUAL):
            serial = visibility_polynomial(g, variant)
            parallel = visibility_polynomial(
                g, variant, EnumerationLimits(worker_count=3)
            )
            assert serial == parallel


def test_size_limit_is_enforced():
    g = path_graph(9).graph
    with pytest.raises(GraphTooLarge):
        visibility_polynomial(g, Variant.MV, EnumerationLimits(max_exhaustive_n=8))
    with pytest.raises(ValueError):
        EnumerationLimits(worker_count=0)


def test_visibility_number_examples():
    assert visibility_number(complete_graph(5).graph, Variant.TOTAL) == 5
    assert visibility_number(g_n_graph(3).graph, Variant.DUAL) == 2
    assert visibility_number(cycle_graph(7).graph, Variant.DUAL) == 0


def test_maximal_sets_examples():
    p3 = path_graph(3).graph
    maximal = maximal_visibility_sets(p3, Variant.MV)
    assert {frozenset(s) for s in maximal} == {
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({1, 2}),
    }
    k4 = complete_graph(4).graph
    assert [set(s) for s in maximal_visibility_sets(k4, Variant.TOTAL)] == [
        {0, 1, 2, 3}
    ]
    petersen = petersen_graph().graph
    outer = maximal_visibility_sets(petersen, Variant.OUTER)
    assert len(outer) == 15
    assert sorted(len(s) for s in outer) == [3] * 10 + [4] * 5
    with pytest.raises(UnsupportedVariant):
        maximal_visibility_sets(p3, Variant.DUAL)


def test_maximal_sets_are_maximal_by_direct_predicate(small_corpus):
    from mutvis import is_visibility_set

    for name, g in small_corpus:
        if g.n > 8:
            continue
        for variant in (Variant.MV, Variant.OUTER, Variant.TOTAL):
            for S in maximal_visibility_sets(g, variant):
                assert is_visibility_set(g, S, variant), (name, variant)
                for v in S.complement():
                    assert not is_visibility_set(g, S.with_vertex(v), variant), (
                        name,
                        variant,
                        v,
                    )


def test_inclusion_exclusion_identities():
    p3 = path_graph(3).graph
    assert polynomial_via_inclusion_exclusion(p3, Variant.MV).coeffs == (1, 3, 3)
    k2 = path_graph(2).graph
    assert polynomial_via_inclusion_exclusion(k2, Variant.MV).coeffs == (1, 2, 1)


def test_inclusion_exclusion_matches_enumeration(small_corpus):
    for name, g in small_corpus:
        for variant in (Variant.MV, Variant.OUTER, Variant.TOTAL):
            direct = visibility_polynomial(g, variant)
            rebuilt = polynomial_via_inclusion_exclusion(g, variant)
            assert direct == rebuilt, (name, variant)


def test_lemma_assisted_search_agrees_with_exhaustive():
    c6 = cycle_graph(6).graph
    got = lemma_assisted_dual_search(c6, [c6.all_vertices()], PRUNED)
    assert got.coeffs == (1, 0, 6)

    built = g_n_graph(2)
    pruned = lemma_assisted_dual_search(built.graph, built.five_cycles, PRUNED)
    assert pruned == dual_spectrum(built.graph)

    f12 = f_one_ell_graph(2)
    pruned = lemma_assisted_dual_search(f12.graph, f12.seven_cycles, PRUNED)
    assert pruned.coeffs == (1, 2)


def test_lemma_assisted_search_guards():
    c6 = cycle_graph(6).graph
    with pytest.raises(LemmaAssistedDisabled):
        lemma_assisted_dual_search(c6, [c6.all_vertices()])
    with pytest.raises(NonConvexCoverMember):
        lemma_assisted_dual_search(c6, [c6.vertex_set([0, 3])], PRUNED)
    with pytest.raises(GraphTooLarge):
        lemma_assisted_dual_search(
            c6,
            [c6.all_vertices()],
            EnumerationLimits(max_exhaustive_n=4, allow_lemma_assisted=True),
        )
    p12 = path_graph(12).graph
    with pytest.raises(SearchSpaceTooLarge):
        lemma_assisted_dual_search(
            p12,
            [p12.vertex_set([0, 1])],
            EnumerationLimits(max_exhaustive_n=8, allow_lemma_assisted=True),
        )


def test_total_number_via_bypass_cases():
    assert total_number_via_bypass(petersen_graph().graph) == 0
    assert total_number_via_bypass(f_one_ell_graph(1).graph) == 1
    assert total_number_via_bypass(cycle_graph(4).graph) is None
    assert total_number_via_bypass(path_graph(5).graph) is None
    assert visibility_number(cycle_graph(4).graph, Variant.TOTAL) == 2


def test_total_number_geodetic_cases():
    assert total_number_geodetic(path_graph(6).graph, verify=True) == 2
    assert total_number_geodetic(petersen_graph().graph, verify=True) == 0
    assert total_number_geodetic(complete_graph(3).graph, verify=True) == 3
    with pytest.raises(NotGeodetic):
        total_number_geodetic(cycle_graph(4).graph)


def test_coefficientwise_dominance(small_corpus):
    # every total set is dual and outer; dual and outer sets are plain sets
    for name, g in small_corpus:
        polys = {v: visibility_polynomial(g, v) for v in Variant}
        for i in range(g.n + 1):
            total = polys[Variant.TOTAL].coefficient(i)
            assert total <= polys[Variant.DUAL].coefficient(i), (name, i)
            assert total <= polys[Variant.OUTER].coefficient(i), (name, i)
            assert polys[Variant.OUTER].coefficient(i) <= polys[
                Variant.MV
            ].coefficient(i), (name, i)
            assert polys[Variant.DUAL].coefficient(i) <= polys[
                Variant.MV
            ].coefficient(i), (name, i)


def test_dual_spectrum_is_the_dual_polynomial(small_corpus):
    for name, g in small_corpus:
        assert dual_spectrum(g) == visibility_polynomial(g, Variant.DUAL), name
