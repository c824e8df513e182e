"""Immutable simple-graph container, BFS distances, and edge-list I/O.

Vertices are dense integer ids 0..n-1. All distances are exact integer hop
counts; nothing in this module touches floating point.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same undirected edge appears twice."""


class VertexOutOfRangeError(GraphError):
    """A vertex id falls outside 0..n-1."""


class DisconnectedError(GraphError):
    """Operation requires a connected graph."""


class SingleVertexError(GraphError):
    """Operation requires at least two vertices."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph in adjacency-list form.

    Invariants (enforced by :func:`validate`): no self-loops, no duplicate
    edges, adjacency is symmetric with sorted neighbor lists, and ``m`` is
    half the sum of the list lengths. Instances are immutable and safe to
    share across threads.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once, as (u, w) with u < w, sorted."""
        for u in range(self.n):
            for w in self.adjacency[u]:
                if u < w:
                    yield u, w

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)


@dataclass(frozen=True)
class DistanceField:
    """Hop distances from one source vertex; dist[source] == 0."""

    source: int
    dist: tuple[int, ...]


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances, cached as a read-only n x n int64 array."""

    n: int
    dist: np.ndarray

    def row(self, v: int) -> DistanceField:
        return DistanceField(source=v, dist=tuple(int(x) for x in self.dist[v]))

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.dist[pair])


def validate(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build a Graph from an edge list, rejecting invalid input.

    Raises:
        VertexOutOfRangeError: n < 1 or an endpoint outside 0..n-1.
        SelfLoopError: an edge (u, u).
        DuplicateEdgeError: the same undirected pair listed twice.
    """
    if n < 1:
        raise VertexOutOfRangeError(f"need n >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, w in edges:
        if not (0 <= u < n and 0 <= w < n):
            raise VertexOutOfRangeError(f"edge ({u}, {w}) outside 0..{n - 1}")
        if u == w:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, w) if u < w else (w, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(w)
        adj[w].append(u)
    return Graph(n=n, adjacency=tuple(tuple(sorted(a)) for a in adj), m=len(seen))


def bfs_distances(g: Graph, source: int) -> DistanceField:
    """Exact hop distances from ``source`` via breadth-first search.

    Raises DisconnectedError if any vertex is unreachable and
    VertexOutOfRangeError for an invalid source.
    """
    if not (0 <= source < g.n):
        raise VertexOutOfRangeError(f"source {source} outside 0..{g.n - 1}")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    reached = 1
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                reached += 1
                queue.append(w)
    if reached != g.n:
        raise DisconnectedError(
            f"graph is disconnected: {g.n - reached} of {g.n} vertices "
            f"unreachable from {source}"
        )
    return DistanceField(source=source, dist=tuple(dist))


def is_connected(g: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches every vertex."""
    try:
        bfs_distances(g, 0)
    except DisconnectedError:
        return False
    return True


def distance_matrix(g: Graph, threads: int = 1) -> DistanceMatrix:
    """All-pairs distances from one BFS per source.

    Rows are independent, so they may be computed in parallel; the result
    is identical at any thread count.
    """
    rows = parallel_map(lambda v: bfs_distances(g, v).dist, range(g.n), threads)
    arr = np.array(rows, dtype=np.int64)
    arr.setflags(write=False)
    return DistanceMatrix(n=g.n, dist=arr)


def diameter(g: Graph) -> int:
    """Max over all pairs of d(u, v), by BFS from every vertex."""
    best = 0
    for v in range(g.n):
        best = max(best, max(bfs_distances(g, v).dist))
    return best


def is_path_graph(g: Graph) -> bool:
    """True iff the connected graph g is a path (K_1 and K_2 included)."""
    if g.n == 1:
        return True
    degs = sorted(g.degree_sequence())
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def parallel_map(fn, items, threads: int = 1) -> list:
    """Order-preserving map, optionally fanned out over a thread pool.

    Output is independent of ``threads``; callers rely on that for
    byte-identical reports. Small batches run sequentially regardless,
    since pool startup would dominate.
    """
    items = list(items)
    if threads <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# --- canonical edge-list text format ---
# First line "n m", then m lines "u v" (0-indexed, whitespace separated).
# Lines starting with '#' are comments and ignored.

def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise EdgeListParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise EdgeListParseError(f"non-integer header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise EdgeListParseError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListParseError(f"non-integer edge line {ln!r}") from exc
    return validate(edges, n)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {w}" for u, w in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(path: str | Path, g: Graph) -> None:
    Path(path).write_text(format_edge_list(g))
