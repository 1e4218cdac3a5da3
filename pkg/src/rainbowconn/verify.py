"""Independent verification that a coloring makes a graph rainbow connected.

A graph with colored edges is rainbow connected when every vertex pair is
joined by a path whose edge colors are pairwise distinct. The checker runs a
per-source fixed point over (vertex, used-color-bitmask) states, so its cost
is bounded by n * 2^c states per source regardless of path structure. It
never trusts the construction code: everything is recomputed from the graph
and the coloring alone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .coloring import EdgeColoring
from .errors import CapExceeded, IndexOutOfRange
from .graph import Graph, bfs_layers, UNREACHABLE

# Bitmask cap: states fit n * 2^16 in the worst case the API accepts.
DEFAULT_COLOR_CAP = 16

Pair = tuple[int, int]


@dataclass(frozen=True)
class RainbowCertificate:
    """Outcome of a verification run.

    connected is the verdict. When it is False, failing_pair holds the
    lexicographically least pair with no rainbow path. When witnesses were
    requested and the verdict is Connected, witnesses maps every pair (u, w)
    with u < w to one rainbow path, vertex list inclusive of both ends.
    """

    connected: bool
    failing_pair: Pair | None = None
    witnesses: dict[Pair, tuple[int, ...]] | None = None


def incidence(g: Graph) -> list[list[tuple[int, int]]]:
    """Per-vertex list of (neighbor, edge index), ascending by neighbor."""
    inc: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        inc[u].append((v, idx))
        inc[v].append((u, idx))
    return inc


def pair_connected(inc, cbits: int, bits: list[int], s: int, t: int) -> bool:
    """Is there a rainbow path from s to t? Verdict only, early exit."""
    if s == t:
        return True
    start = s << cbits
    seen = {start}
    queue = deque([start])
    mask_all = (1 << cbits) - 1
    while queue:
        key = queue.popleft()
        v = key >> cbits
        mask = key & mask_all
        for w, e in inc[v]:
            b = bits[e]
            if mask & b:
                continue
            if w == t:
                return True
            nk = (w << cbits) | (mask | b)
            if nk not in seen:
                seen.add(nk)
                queue.append(nk)
    return False


def least_failing_pair(n: int, inc, cbits: int, bits: list[int]) -> Pair | None:
    """Least pair with no rainbow path, or None when all pairs have one."""
    mask_all = (1 << cbits) - 1
    for s in range(n - 1):
        needed = n - 1 - s
        reached = bytearray(n)
        start = s << cbits
        seen = {start}
        queue = deque([start])
        while queue and needed:
            key = queue.popleft()
            v = key >> cbits
            mask = key & mask_all
            for w, e in inc[v]:
                b = bits[e]
                if mask & b:
                    continue
                nk = (w << cbits) | (mask | b)
                if nk in seen:
                    continue
                seen.add(nk)
                if w > s and not reached[w]:
                    reached[w] = 1
                    needed -= 1
                queue.append(nk)
        if needed:
            for t in range(s + 1, n):
                if not reached[t]:
                    return (s, t)
    return None


def _witness_scan(n: int, inc, cbits: int, bits: list[int]):
    """All-pairs scan that also reconstructs one rainbow path per pair."""
    mask_all = (1 << cbits) - 1
    witnesses: dict[Pair, tuple[int, ...]] = {}
    for s in range(n - 1):
        start = s << cbits
        seen = {start}
        pred: dict[int, int] = {}
        first_hit: dict[int, int] = {}
        queue = deque([start])
        while queue:
            key = queue.popleft()
            v = key >> cbits
            mask = key & mask_all
            for w, e in inc[v]:
                b = bits[e]
                if mask & b:
                    continue
                nk = (w << cbits) | (mask | b)
                if nk in seen:
                    continue
                seen.add(nk)
                pred[nk] = key
                if w not in first_hit:
                    first_hit[w] = nk
                queue.append(nk)
        for t in range(s + 1, n):
            if t not in first_hit:
                return (s, t), witnesses
            path = []
            key = first_hit[t]
            while True:
                path.append(key >> cbits)
                if key == start:
                    break
                key = pred[key]
            witnesses[(s, t)] = tuple(reversed(path))
    return None, witnesses


def _all_distinct_scan(g: Graph, want_witnesses: bool):
    # Every edge color is unique, so any shortest path is rainbow and plain
    # connectivity decides the verdict.
    layers0 = bfs_layers(g, 0)
    if UNREACHABLE in layers0.dist:
        bad = min(t for t in range(g.n) if layers0.dist[t] == UNREACHABLE)
        return RainbowCertificate(False, failing_pair=(0, bad))
    if not want_witnesses:
        return RainbowCertificate(True)
    witnesses: dict[Pair, tuple[int, ...]] = {}
    for s in range(g.n - 1):
        parent = [UNREACHABLE] * g.n
        dist = [UNREACHABLE] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        for t in range(s + 1, g.n):
            path = [t]
            while path[-1] != s:
                path.append(parent[path[-1]])
            witnesses[(s, t)] = tuple(reversed(path))
    return RainbowCertificate(True, witnesses=witnesses)


def verify_rainbow_connected(
    g: Graph,
    coloring: EdgeColoring,
    *,
    cap_colors: int = DEFAULT_COLOR_CAP,
    want_witnesses: bool = True,
) -> RainbowCertificate:
    """Decide rainbow connectivity of g under coloring.

    The coloring must cover E(g) exactly (ColoringMismatch otherwise). When
    the coloring is not injective and uses more than cap_colors colors the
    bitmask state space is refused with CapExceeded.
    """
    coloring.ensure_covers(g)
    if g.n <= 1:
        return RainbowCertificate(True, witnesses={} if want_witnesses else None)
    if g.m == 0:
        return RainbowCertificate(False, failing_pair=(0, 1))
    seq = coloring.as_sequence(g)
    if len(set(seq)) == g.m:
        return _all_distinct_scan(g, want_witnesses)
    cbits = coloring.color_count
    if cbits > cap_colors:
        raise CapExceeded(f"{cbits} colors exceed the verifier cap of {cap_colors}")
    inc = incidence(g)
    bits = [1 << (c - 1) for c in seq]
    if want_witnesses:
        failing, witnesses = _witness_scan(g.n, inc, cbits, bits)
        if failing is not None:
            return RainbowCertificate(False, failing_pair=failing)
        return RainbowCertificate(True, witnesses=witnesses)
    failing = least_failing_pair(g.n, inc, cbits, bits)
    if failing is not None:
        return RainbowCertificate(False, failing_pair=failing)
    return RainbowCertificate(True)


def rainbow_path(
    g: Graph,
    coloring: EdgeColoring,
    u: int,
    w: int,
    *,
    cap_colors: int = DEFAULT_COLOR_CAP,
) -> tuple[int, ...] | None:
    """One rainbow path from u to w, or None when no such path exists."""
    coloring.ensure_covers(g)
    if not (0 <= u < g.n) or not (0 <= w < g.n):
        raise IndexOutOfRange(f"pair ({u}, {w}) outside 0..{g.n - 1}")
    if u == w:
        return (u,)
    if g.m == 0:
        return None
    seq = coloring.as_sequence(g)
    cbits = coloring.color_count
    if len(set(seq)) == g.m:
        # All colors distinct: any shortest path works.
        layers = bfs_layers(g, u)
        if layers.dist[w] == UNREACHABLE:
            return None
        parent = [UNREACHABLE] * g.n
        dist = [UNREACHABLE] * g.n
        dist[u] = 0
        queue = deque([u])
        while queue:
            a = queue.popleft()
            for b in g.adj[a]:
                if dist[b] == UNREACHABLE:
                    dist[b] = dist[a] + 1
                    parent[b] = a
                    queue.append(b)
        path = [w]
        while path[-1] != u:
            path.append(parent[path[-1]])
        return tuple(reversed(path))
    if cbits > cap_colors:
        raise CapExceeded(f"{cbits} colors exceed the verifier cap of {cap_colors}")
    inc = incidence(g)
    bits = [1 << (c - 1) for c in seq]
    mask_all = (1 << cbits) - 1
    start = u << cbits
    seen = {start}
    pred: dict[int, int] = {}
    queue = deque([start])
    hit: int | None = None
    while queue and hit is None:
        key = queue.popleft()
        v = key >> cbits
        mask = key & mask_all
        for nb, e in inc[v]:
            b = bits[e]
            if mask & b:
                continue
            nk = (nb << cbits) | (mask | b)
            if nk in seen:
                continue
            seen.add(nk)
            pred[nk] = key
            if nb == w:
                hit = nk
                break
            queue.append(nk)
    if hit is None:
        return None
    path = []
    key = hit
    while True:
        path.append(key >> cbits)
        if key == start:
            break
        key = pred[key]
    return tuple(reversed(path))


def check_witness(
    g: Graph, coloring: EdgeColoring, u: int, w: int, path: tuple[int, ...]
) -> bool:
    """Re-check one witness path from first principles."""
    if not path or path[0] != u or path[-1] != w:
        return False
    if len(set(path)) != len(path):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    colors = [coloring.color(a, b) for a, b in zip(path, path[1:])]
    return len(set(colors)) == len(colors)
