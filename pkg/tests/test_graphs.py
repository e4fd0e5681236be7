import math
from itertools import permutations

import pytest

from errors import DomainError, GraphSpecError, LimitError
from graphs import (
    Graph,
    automorphism_count,
    brute_force_automorphisms,
    build_graph,
    closed_form_automorphisms,
    copies_in_complete,
    embedding_patterns,
    graph_from_json,
    graph_to_json,
    load_graph,
    parse_graph_spec,
)


@pytest.mark.parametrize(
    "spec, m, e",
    [
        ("K4-e", 4, 5),
        ("S5", 5, 4),
        ("stars:3,3,2", 8, 5),
        ("K3", 3, 3),
        ("P2", 3, 2),
        ("C5", 5, 5),
        ("M3", 6, 3),
    ],
)
def test_build_graph_order_and_size(spec, m, e):
    graph = build_graph(spec)
    assert (graph.m, graph.e) == (m, e)
    assert graph.family == spec


def test_canonical_labelings():
    assert (2, 3) not in build_graph("K4-e").edges
    assert build_graph("S4").edges == ((0, 1), (0, 2), (0, 3))
    assert build_graph("C4").edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert build_graph("M2").edges == ((0, 1), (2, 3))
    assert build_graph("stars:3,2").edges == ((0, 1), (0, 2), (3, 4))


@pytest.mark.parametrize("spec", ["X3", "K", "K4-f", "stars:", "stars:3,,2", ""])
def test_parse_rejects_malformed_specs(spec):
    with pytest.raises(GraphSpecError):
        parse_graph_spec(spec)


@pytest.mark.parametrize("spec", ["C2", "stars:3,1", "K0", "S0"])
def test_build_rejects_out_of_domain(spec):
    with pytest.raises(DomainError):
        build_graph(spec)


def test_order_limit_is_configured(monkeypatch):
    with pytest.raises(LimitError):
        build_graph("K17")
    monkeypatch.setenv("RAINBOW_MAX_ORDER", "6")
    from config import get_settings

    get_settings.cache_clear()
    with pytest.raises(LimitError):
        build_graph("K7")


@pytest.mark.parametrize(
    "spec, expected",
    [
        ("K4-e", 4),
        ("S5", 24),
        ("K3", 6),
        ("P3", 2),
        ("C5", 10),
        ("M3", 48),
        ("stars:3,3,2", 16),
        ("stars:2,2", 8),
    ],
)
def test_automorphisms_closed_form_matches_brute_force(spec, expected):
    graph = build_graph(spec)
    assert closed_form_automorphisms(spec) == expected
    assert brute_force_automorphisms(Graph(m=graph.m, edges=graph.edges)) == expected
    assert automorphism_count(graph) == expected == graph.aut_count


def test_brute_force_limit():
    with pytest.raises(LimitError):
        brute_force_automorphisms(Graph(m=11, edges=[(0, 1)]))


@pytest.mark.parametrize("spec", ["K4-e", "K3", "S4", "P3", "C4", "stars:2,2"])
def test_embedding_patterns_count(spec):
    graph = build_graph(spec)
    patterns = embedding_patterns(graph)
    assert patterns.shape == (math.factorial(graph.m) // graph.aut_count, graph.e, 2)
    assert not patterns.flags.writeable
    assert (patterns[..., 0] < patterns[..., 1]).all()


@pytest.mark.parametrize("spec", ["K4", "S5", "M3", "stars:3,2", "stars:2,2,2", "stars:3,3,2"])
def test_family_patterns_match_permutation_enumeration(spec):
    graph = build_graph(spec)
    unnamed = Graph(m=graph.m, edges=graph.edges)
    generated = {tuple(map(tuple, row)) for row in embedding_patterns(graph).tolist()}
    enumerated = {tuple(map(tuple, row)) for row in embedding_patterns(unnamed).tolist()}
    assert generated == enumerated
    assert len(generated) == len(embedding_patterns(graph))


@pytest.mark.parametrize("spec, expected", [("M6", 10395), ("S12", 12), ("K12", 1), ("stars:4,3,2,2", 415800)])
def test_family_patterns_beyond_the_permutation_limit(spec, expected):
    assert len(embedding_patterns(build_graph(spec))) == expected


def test_embedding_pattern_limit():
    with pytest.raises(LimitError):
        embedding_patterns(build_graph("P10"))


@pytest.mark.parametrize("spec, n, expected", [("K3", 3, 1), ("K4-e", 4, 6), ("P2", 3, 3), ("K4-e", 5, 30)])
def test_copies_in_complete(spec, n, expected):
    assert copies_in_complete(build_graph(spec), n) == expected


def enumerate_copies(graph, n):
    images = set()
    for placement in permutations(range(n), graph.m):
        images.add(frozenset(frozenset((placement[u], placement[v])) for u, v in graph.edges))
    return len(images)


@pytest.mark.parametrize(
    "spec",
    ["K2", "K3", "K4", "K5", "K4-e", "S3", "S4", "S5", "P2", "P3", "P4", "C4", "C5", "M2", "stars:2,2", "stars:3,2"],
)
def test_copies_in_complete_matches_subgraph_enumeration(spec):
    graph = build_graph(spec)
    for n in range(graph.m, 8):
        assert copies_in_complete(graph, n) == enumerate_copies(graph, n)


def test_copies_in_complete_needs_room():
    with pytest.raises(DomainError):
        copies_in_complete(build_graph("K4"), 3)


def test_graph_normalizes_edges_and_rejects_bad_input():
    graph = Graph(m=3, edges=[(2, 1), (0, 1)])
    assert graph.edges == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        Graph(m=3, edges=[(1, 1)])
    with pytest.raises(ValueError):
        Graph(m=3, edges=[(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(m=3, edges=[(0, 3)])


def test_graph_json_round_trip_and_file_loading(tmp_path):
    graph = build_graph("K4-e")
    text = graph_to_json(graph)
    assert text == '{"m": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]}'
    parsed = graph_from_json(text)
    assert parsed.edges == graph.edges
    assert parsed.aut_count == 4

    path = tmp_path / "paw.json"
    path.write_text('{"m": 4, "edges": [[0, 1], [1, 2], [0, 2], [2, 3]]}')
    loaded = load_graph(str(path))
    assert (loaded.m, loaded.e, loaded.aut_count) == (4, 4, 2)


@pytest.mark.parametrize("text", ["not json", "[1, 2]", '{"m": 3}', '{"m": 3, "edges": [[0, 5]]}'])
def test_graph_from_json_rejects_malformed(text):
    with pytest.raises(GraphSpecError):
        graph_from_json(text)


def test_load_graph_missing_file(tmp_path):
    with pytest.raises(GraphSpecError):
        load_graph(str(tmp_path / "missing.json"))
