import random

import pytest
from hypothesis import given, settings

import oracles
from rainbowconn.coloring import EdgeColoring
from rainbowconn.errors import CapExceeded, ColoringMismatch, IndexOutOfRange
from rainbowconn.generators import complete, cycle, petersen, star
from rainbowconn.graph import build_graph
from rainbowconn.verify import (
    DEFAULT_COLOR_CAP,
    check_witness,
    rainbow_path,
    verify_rainbow_connected,
)
from strategies import colorings_for, connected_graphs


def test_c4_alternating_is_rainbow_connected():
    g = cycle(4)
    cert = verify_rainbow_connected(g, EdgeColoring.from_sequence(g, [1, 2, 2, 1]))
    assert cert.connected
    assert cert.failing_pair is None
    for (u, v), path in cert.witnesses.items():
        assert check_witness(g, EdgeColoring.from_sequence(g, [1, 2, 2, 1]), u, v, path)


def test_c4_all_one_fails_on_least_pair():
    g = cycle(4)
    cert = verify_rainbow_connected(g, EdgeColoring.from_sequence(g, [1, 1, 1, 1]))
    assert not cert.connected
    assert cert.failing_pair == (0, 2)
    assert cert.witnesses is None


def test_disconnected_graph_fails():
    g = build_graph(4, [(0, 1), (2, 3)])
    cert = verify_rainbow_connected(g, EdgeColoring.from_sequence(g, [1, 2]))
    assert not cert.connected
    assert cert.failing_pair == (0, 2)


def test_single_vertex_and_empty_pairs():
    g1 = build_graph(1, [])
    assert verify_rainbow_connected(g1, EdgeColoring.from_map({})).connected
    g2 = build_graph(2, [])
    cert = verify_rainbow_connected(g2, EdgeColoring.from_map({}))
    assert not cert.connected
    assert cert.failing_pair == (0, 1)


def test_coloring_must_cover_edges():
    g = cycle(4)
    with pytest.raises(ColoringMismatch):
        verify_rainbow_connected(g, EdgeColoring.from_map({(0, 1): 1}))


def test_color_cap():
    g = cycle(6)
    colors = [1, 2, 3, 4, 1, 2]
    many = [c + 20 for c in colors]
    with pytest.raises(CapExceeded):
        verify_rainbow_connected(g, EdgeColoring.from_sequence(g, many))
    cert = verify_rainbow_connected(
        g, EdgeColoring.from_sequence(g, many), cap_colors=40
    )
    assert cert.connected == verify_rainbow_connected(
        g, EdgeColoring.from_sequence(g, colors)
    ).connected


def test_all_distinct_fast_path_ignores_cap():
    g = complete(7)
    c = EdgeColoring.from_sequence(g, range(1, g.m + 1))
    assert c.color_count > DEFAULT_COLOR_CAP
    cert = verify_rainbow_connected(g, c)
    assert cert.connected
    for (u, v), path in cert.witnesses.items():
        assert check_witness(g, c, u, v, path)


def test_witnesses_are_valid_rainbow_paths():
    g = petersen()
    c = EdgeColoring.from_sequence(g, [1 + i % 5 for i in range(g.m)])
    cert = verify_rainbow_connected(g, c)
    if cert.connected:
        assert len(cert.witnesses) == g.n * (g.n - 1) // 2
        for (u, v), path in cert.witnesses.items():
            assert path[0] == u and path[-1] == v
            assert check_witness(g, c, u, v, path)
            assert len(path) - 1 <= c.color_count


def test_witness_path_length_within_color_count():
    g = cycle(5)
    c = EdgeColoring.from_sequence(g, [1, 2, 2, 3, 3])
    cert = verify_rainbow_connected(g, c)
    if cert.connected:
        for path in cert.witnesses.values():
            assert len(path) - 1 <= c.color_count


def test_rainbow_path_finds_one_and_rejects_bad_input():
    g = cycle(5)
    c = EdgeColoring.from_sequence(g, [1, 2, 3, 4, 5])
    p = rainbow_path(g, c, 0, 2)
    assert p is not None
    assert check_witness(g, c, 0, 2, p)
    with pytest.raises(IndexOutOfRange):
        rainbow_path(g, c, 0, 9)
    assert rainbow_path(g, c, 3, 3) == (3,)


def test_rainbow_path_none_when_blocked():
    g = star(3)
    c = EdgeColoring.from_sequence(g, [1, 1, 1])
    assert rainbow_path(g, c, 1, 2) is None


def test_check_witness_rejects_junk():
    g = cycle(4)
    c = EdgeColoring.from_sequence(g, [1, 2, 3, 4])
    assert not check_witness(g, c, 0, 2, (0, 2))
    assert not check_witness(g, c, 0, 2, (0, 1, 1, 2))
    assert not check_witness(g, c, 0, 2, (1, 2))
    assert not check_witness(g, c, 0, 2, (0, 3, 2, 1))
    assert check_witness(g, c, 0, 2, (0, 1, 2))


@given(connected_graphs(min_n=2, max_n=6).flatmap(
    lambda g: colorings_for(g, max_colors=3).map(lambda c: (g, c))
))
@settings(max_examples=150)
def test_dp_verdict_matches_naive_enumeration(gc):
    g, c = gc
    ok, pair = oracles.naive_rainbow_connected(g, c)
    cert = verify_rainbow_connected(g, c, want_witnesses=False)
    assert cert.connected == ok
    assert cert.failing_pair == pair


def test_seeded_sweep_matches_naive():
    rng = random.Random("verify-sweep")
    for _ in range(300):
        n = rng.randint(2, 6)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.6
        ]
        g = build_graph(n, edges)
        c = EdgeColoring.from_sequence(
            g, [rng.randint(1, 3) for _ in range(g.m)]
        ) if g.m else EdgeColoring.from_map({})
        ok, pair = oracles.naive_rainbow_connected(g, c)
        cert = verify_rainbow_connected(g, c, want_witnesses=True)
        assert cert.connected == ok
        assert cert.failing_pair == pair
        if ok:
            for (u, v), path in cert.witnesses.items():
                assert check_witness(g, c, u, v, path)
