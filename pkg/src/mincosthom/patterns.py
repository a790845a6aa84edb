"""Built-in target patterns: even cycles and the three 7-vertex obstructions.

The claw/net/tent adjacency tables below are the single place these graphs
are defined; unit tests pin their vertex/edge counts and degree sequences.
"""

from __future__ import annotations

from .embedding import PatternEmbedding, find_induced_embedding
from .errors import GraphError
from .graphs import Graph

HEXAGON = "hexagon"
EVEN_CYCLE = "even-cycle"
BIPARTITE_CLAW = "bipartite-claw"
BIPARTITE_NET = "bipartite-net"
BIPARTITE_TENT = "bipartite-tent"

PATTERN_KINDS = (HEXAGON, EVEN_CYCLE, BIPARTITE_CLAW, BIPARTITE_NET, BIPARTITE_TENT)


def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise GraphError(f"cycle length must be at least 3, got {length}")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def cycle_roles(length: int) -> dict[str, int]:
    """1-based position names h_1..h_len for a cycle stored 0-based."""
    return {f"h_{i + 1}": i for i in range(length)}


# Bipartite claw: a 3-star with every edge subdivided. Side X = hub v_0 plus
# leaves v_1..v_3, side Y = subdivision vertices u_1..u_3.
#   vertex 0 = v_0 (hub), 1..3 = v_1..v_3 (leaves), 4..6 = u_1..u_3 (mids)
_CLAW_EDGES = [
    (0, 4),  # v_0 u_1
    (0, 5),  # v_0 u_2
    (0, 6),  # v_0 u_3
    (1, 4),  # v_1 u_1
    (2, 5),  # v_2 u_2
    (3, 6),  # v_3 u_3
]

CLAW_ROLES = {"v_0": 0, "v_1": 1, "v_2": 2, "v_3": 3, "u_1": 4, "u_2": 5, "u_3": 6}


def bipartite_claw() -> Graph:
    return Graph(7, _CLAW_EDGES)


# Bipartite net and tent, transcribed from their standard drawings.
# Black side a,b,c,d -> 0,1,2,3; white side x,y,z -> 4,5,6.
_NET_EDGES = [
    (0, 4),  # a x
    (0, 5),  # a y
    (1, 4),  # b x
    (1, 5),  # b y
    (1, 6),  # b z
    (2, 4),  # c x
    (2, 6),  # c z
    (3, 4),  # d x
]

_TENT_EDGES = [
    (0, 4),  # a x
    (0, 5),  # a y
    (1, 4),  # b x
    (1, 5),  # b y
    (1, 6),  # b z
    (2, 5),  # c y
    (3, 4),  # d x
]

NET_ROLES = {"a": 0, "b": 1, "c": 2, "d": 3, "x": 4, "y": 5, "z": 6}
TENT_ROLES = dict(NET_ROLES)


def bipartite_net() -> Graph:
    return Graph(7, _NET_EDGES)


def bipartite_tent() -> Graph:
    return Graph(7, _TENT_EDGES)


def builtin_pattern(kind: str, cycle_length: int | None = None) -> tuple[Graph, dict[str, int]]:
    """Named pattern graph plus its role table (role name -> pattern vertex)."""
    if kind == HEXAGON:
        return cycle_graph(6), cycle_roles(6)
    if kind == EVEN_CYCLE:
        if cycle_length is None or cycle_length < 4 or cycle_length % 2:
            raise GraphError(f"even-cycle pattern needs an even cycle_length >= 4, got {cycle_length}")
        return cycle_graph(cycle_length), cycle_roles(cycle_length)
    if kind == BIPARTITE_CLAW:
        return bipartite_claw(), dict(CLAW_ROLES)
    if kind == BIPARTITE_NET:
        return bipartite_net(), dict(NET_ROLES)
    if kind == BIPARTITE_TENT:
        return bipartite_tent(), dict(TENT_ROLES)
    raise GraphError(f"unknown pattern kind {kind!r}")


def embed_pattern(host: Graph, kind: str, cycle_length: int | None = None) -> PatternEmbedding | None:
    """Find an induced copy of a built-in pattern in ``host``."""
    pattern, roles = builtin_pattern(kind, cycle_length)
    image = find_induced_embedding(host, pattern)
    if image is None:
        return None
    return PatternEmbedding(kind=kind, pattern=pattern, image=image, roles=roles)
