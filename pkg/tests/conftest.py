import pytest

from mutvis import (
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    g_n_graph,
    path_graph,
    petersen_graph,
    star_graph,
)


def bull_graph():
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


@pytest.fixture(scope="session")
def small_corpus():
    """Named graphs small enough for exhaustive subset scans."""
    return [
        ("P4", path_graph(4).graph),
        ("P6", path_graph(6).graph),
        ("C4", cycle_graph(4).graph),
        ("C5", cycle_graph(5).graph),
        ("C6", cycle_graph(6).graph),
        ("C7", cycle_graph(7).graph),
        ("K4", complete_graph(4).graph),
        ("K33", complete_bipartite_graph(3, 3).graph),
        ("star4", star_graph(4).graph),
        ("bull", bull_graph()),
        ("G2", g_n_graph(2).graph),
        ("petersen", petersen_graph().graph),
    ]


@pytest.fixture(scope="session")
def tiny_corpus():
    """Graphs small enough for the path-enumeration oracle."""
    return [
        ("P4", path_graph(4).graph),
        ("P5", path_graph(5).graph),
        ("C4", cycle_graph(4).graph),
        ("C5", cycle_graph(5).graph),
        ("C6", cycle_graph(6).graph),
        ("K4", complete_graph(4).graph),
        ("K23", complete_bipartite_graph(2, 3).graph),
        ("star3", star_graph(3).graph),
        ("bull", bull_graph()),
    ]
