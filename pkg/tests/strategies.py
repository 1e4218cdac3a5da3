"""Hypothesis strategies for small graphs."""

import hypothesis.strategies as st

from rainbowconn.graph import Graph, build_graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return build_graph(n, [])
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """A random spanning tree plus extra edges, so connectivity is built in."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((parent, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        edges.update(e for e, k in zip(pairs, keep) if k)
    return build_graph(n, edges)


@st.composite
def colorings_for(draw, g: Graph, max_colors: int = 4):
    from rainbowconn.coloring import EdgeColoring

    seq = draw(
        st.lists(
            st.integers(min_value=1, max_value=max_colors),
            min_size=g.m,
            max_size=g.m,
        )
    )
    return EdgeColoring.from_sequence(g, seq)
