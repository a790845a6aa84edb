"""Simple undirected graphs on dense integer vertices, with editing helpers.

Vertices are always 0..n-1. Symbolic vertex names (gadget labels and the
like) never enter the arithmetic; they live in :class:`VertexNames` tables
kept alongside a graph by whoever builds it.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import GraphError


def _canonical_edge(u: int, v: int, n: int) -> tuple[int, int]:
    if not (isinstance(u, int) and isinstance(v, int)):
        raise GraphError(f"edge endpoints must be integers, got ({u!r}, {v!r})")
    if u == v:
        raise GraphError(f"loop edge ({u}, {v}) is not allowed")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Edges are stored canonically as (min, max) pairs; duplicate edges in the
    input (including reversed duplicates) are rejected rather than merged, so
    accidental double insertion in gadget assembly fails loudly.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        seen: set[tuple[int, int]] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            e = _canonical_edge(u, v, n)
            if e in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(e)
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        self.edges = frozenset(seen)
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self.n and 0 <= v < self.n else False

    def neighbours(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self._adj), reverse=True))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor; rejects loops, out-of-range endpoints and duplicates."""
    return Graph(n, edge_list)


class Bipartition:
    """A proper 2-colouring: ``side[v]`` is 0 or 1 and every edge crosses."""

    __slots__ = ("side",)

    def __init__(self, side: Sequence[int], g: Graph | None = None):
        self.side = tuple(side)
        if any(s not in (0, 1) for s in self.side):
            raise GraphError("bipartition sides must be 0 or 1")
        if g is not None:
            if len(self.side) != g.n:
                raise GraphError("bipartition length does not match vertex count")
            for u, v in g.edges:
                if self.side[u] == self.side[v]:
                    raise GraphError(f"edge ({u}, {v}) does not cross the bipartition")

    def side_of(self, v: int) -> int:
        return self.side[v]

    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        zero = tuple(v for v, s in enumerate(self.side) if s == 0)
        one = tuple(v for v, s in enumerate(self.side) if s == 1)
        return zero, one

    def __repr__(self) -> str:
        zero, one = self.parts()
        return f"Bipartition({list(zero)} | {list(one)})"


def bipartition(g: Graph) -> Bipartition | None:
    """2-colour ``g`` by BFS, or return None if some component is odd.

    Deterministic: components are visited in ascending order of their smallest
    vertex, which gets side 0.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbours(u)):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return Bipartition(side)


def odd_cycle(g: Graph) -> list[int] | None:
    """Return the vertex list of an odd cycle if one exists, else None.

    Certificate counterpart of :func:`bipartition`: exactly one of the two
    returns something.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbours(u)):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    # walk both endpoints up to their common ancestor
                    pu, pw = u, w
                    path_u, path_w = [pu], [pw]
                    while depth[pu] > depth[pw]:
                        pu = parent[pu]
                        path_u.append(pu)
                    while depth[pw] > depth[pu]:
                        pw = parent[pw]
                        path_w.append(pw)
                    while pu != pw:
                        pu, pw = parent[pu], parent[pw]
                        path_u.append(pu)
                        path_w.append(pw)
                    cycle = path_u + path_w[-2::-1]
                    return cycle
    return None


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbours(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled 0..k-1.

    Returns (subgraph, old_labels) where old_labels[new] is the original vertex.
    """
    old = sorted(set(vertices))
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(old), edges), old


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Union with b's vertices shifted up by a.n."""
    shifted = [(u + a.n, v + a.n) for u, v in b.sorted_edges()]
    return Graph(a.n + b.n, list(a.sorted_edges()) + shifted)


def add_vertices(g: Graph, count: int) -> Graph:
    if count < 0:
        raise GraphError(f"cannot add {count} vertices")
    return Graph(g.n + count, g.sorted_edges())


def add_edges(g: Graph, new_edges: Iterable[tuple[int, int]]) -> Graph:
    """New graph with extra edges; same errors as build_graph (an existing
    edge counts as a duplicate)."""
    return Graph(g.n, list(g.sorted_edges()) + list(new_edges))


class VertexNames:
    """Two-way table between symbolic vertex names and indices."""

    def __init__(self):
        self._by_name: dict[str, int] = {}
        self._by_index: dict[int, str] = {}

    def assign(self, index: int, name: str) -> None:
        if name in self._by_name and self._by_name[name] != index:
            raise GraphError(f"name {name!r} already assigned to vertex {self._by_name[name]}")
        if index in self._by_index and self._by_index[index] != name:
            raise GraphError(f"vertex {index} already named {self._by_index[index]!r}")
        self._by_name[name] = index
        self._by_index[index] = name

    def index(self, name: str) -> int:
        if name not in self._by_name:
            raise KeyError(f"unknown vertex name {name!r}")
        return self._by_name[name]

    def name(self, index: int) -> str | None:
        return self._by_index.get(index)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __len__(self) -> int:
        return len(self._by_name)

    def items(self) -> list[tuple[int, str]]:
        return sorted(self._by_index.items())

    def __repr__(self) -> str:
        return f"VertexNames({self._by_index})"


class GraphBuilder:
    """Incremental graph assembly with named vertices, for gadget constructions."""

    def __init__(self):
        self._n = 0
        self._edges: list[tuple[int, int]] = []
        self.names = VertexNames()

    def add_vertex(self, name: str | None = None) -> int:
        idx = self._n
        self._n += 1
        if name is not None:
            self.names.assign(idx, name)
        return idx

    def add_edge(self, u: int, v: int) -> None:
        self._edges.append(_canonical_edge(u, v, self._n))

    def copy_graph(self, g: Graph, name: str | None = None) -> list[int]:
        """Append a disjoint copy of g; returns new indices in vertex order."""
        base = self._n
        ids = []
        for v in range(g.n):
            ids.append(self.add_vertex(f"{name}{v}" if name is not None else None))
        for u, v in g.sorted_edges():
            self.add_edge(base + u, base + v)
        return ids

    def build(self) -> Graph:
        return Graph(self._n, self._edges)
