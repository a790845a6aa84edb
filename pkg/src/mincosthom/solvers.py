"""Exact solvers and decision procedures.

Three engines live here:

* a shared backtracking core over vertex-candidate bitmasks, powering the
  exact optimizer, the budgeted decision search and the pre-colouring
  extension oracle;
* a branch-and-bound maximum independent set solver for 3-partite inputs;
* a min-cut solver for targets with a min-max ordering, built on an
  integer-capacity max-flow network.

The flow encoding, per connected input component and per side alignment:
each input vertex gets a chain of arcs along its side's min-max order, the
arc for position j costing weight(v) * cost(vertex at j); cutting the chain
at j selects image j, and infinite reverse arcs force the cut to pick
exactly one chain arc. For an input edge uv, infinite implication arcs
encode "image(u) at position >= i forces image(v) at position >= L(i)"
where L(i) is the least neighbour position over usable positions >= i, and
symmetrically. Positions whose target vertex has no neighbour are unusable
(infinite chain arc) for every non-isolated input vertex. Min-max closure
makes this implication system exact: a finite cut picks, for every edge,
images (i, j) with j >= least-neighbour(i) and i >= least-neighbour(j), and
closure of the two witnessing edges under componentwise min/max yields the
edge (i, j) itself. Hence min cut value = minimum homomorphism cost for the
fixed alignment, which the oracle-equivalence suite certifies end to end.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InstanceError, SearchCapExceeded
from .graphs import (
    Bipartition,
    Graph,
    bipartition,
    connected_components,
    induced_subgraph,
)
from .instances import Homomorphism, Precolouring, WeightedInstance, validate_hom
from .recognition import MinMaxOrdering, check_min_max_ordering, find_min_max_ordering

DEFAULT_VERTEX_CAP = 24
DEFAULT_MIS_CAP = 40


def _min_cost_table(costs: tuple[int, ...]) -> list[int]:
    """min over set bits of a candidate mask; index 0 is a sentinel."""
    hn = len(costs)
    table = [0] * (1 << hn)
    table[0] = 1 << 62
    for mask in range(1, 1 << hn):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        table[mask] = costs[low] if rest == 0 else min(costs[low], table[rest])
    return table


def _search(
    g: Graph,
    h: Graph,
    weights: tuple[int, ...],
    costs: tuple[int, ...],
    *,
    budget: int | None = None,
    minimize: bool = False,
    fixed: dict[int, int] | None = None,
) -> tuple[tuple[int, ...], int] | None:
    """Backtracking over vertices in index order with forward checking.

    minimize=True returns the exact optimum (lexicographically least optimal
    map); otherwise the first map found within the budget (or any map when
    budget is None). The admissible bound is the sum over unassigned
    vertices of their cheapest currently-consistent image.
    """
    gn, hn = g.n, h.n
    if hn == 0:
        return ((), 0) if gn == 0 else None
    full = (1 << hn) - 1
    hadj = [0] * hn
    for u, v in h.edges:
        hadj[u] |= 1 << v
        hadj[v] |= 1 << u
    minc = _min_cost_table(costs) if hn <= 16 else None

    def mask_min(mask: int) -> int:
        if minc is not None:
            return minc[mask]
        best = 1 << 62
        while mask:
            b = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if costs[b] < best:
                best = costs[b]
        return best

    cand = [full] * gn
    if fixed:
        for v, img in fixed.items():
            cand[v] = 1 << img
    # neighbours with larger index; smaller ones already filtered us when assigned
    later = [sorted(u for u in g.neighbours(v) if u > v) for v in range(gn)]
    lbterm = [weights[v] * mask_min(cand[v]) for v in range(gn)]

    best_map: list[int] | None = None
    best_cost: int | None = None
    assignment = [0] * gn

    def dfs(v: int, cur: int, lb: int) -> bool:
        nonlocal best_map, best_cost
        if v == gn:
            if minimize:
                if best_cost is None or cur < best_cost:
                    best_cost = cur
                    best_map = assignment.copy()
                return False
            best_cost = cur
            best_map = assignment.copy()
            return True
        lb_rest = lb - lbterm[v]
        mask = cand[v]
        while mask:
            b = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            cur2 = cur + weights[v] * costs[b]
            if budget is not None and cur2 + lb_rest > budget:
                continue
            if minimize and best_cost is not None and cur2 + lb_rest >= best_cost:
                continue
            trail: list[tuple[int, int, int]] = []
            lb2 = lb_rest
            ok = True
            for u in later[v]:
                old = cand[u]
                new = old & hadj[b]
                if new == old:
                    continue
                if new == 0:
                    ok = False
                    break
                term_old = lbterm[u]
                term_new = weights[u] * mask_min(new)
                cand[u] = new
                lbterm[u] = term_new
                lb2 += term_new - term_old
                trail.append((u, old, term_old))
            if ok:
                pruned = (budget is not None and cur2 + lb2 > budget) or (
                    minimize and best_cost is not None and cur2 + lb2 >= best_cost
                )
                if not pruned:
                    assignment[v] = b
                    if dfs(v + 1, cur2, lb2):
                        for u, old, term_old in trail:
                            cand[u] = old
                            lbterm[u] = term_old
                        return True
            for u, old, term_old in trail:
                cand[u] = old
                lbterm[u] = term_old
        return False

    if any(cand[v] == 0 for v in range(gn)):
        return None
    found = dfs(0, 0, sum(lbterm))
    if minimize:
        if best_map is None:
            return None
        return tuple(best_map), best_cost  # type: ignore[return-value]
    if not found:
        return None
    return tuple(best_map), best_cost  # type: ignore[arg-type, return-value]


def _guard(g: Graph, max_vertices: int, what: str) -> None:
    if g.n > max_vertices:
        raise SearchCapExceeded(f"{what} refused: input has {g.n} > {max_vertices} vertices")


def brute_force_min_cost(inst: WeightedInstance, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> Homomorphism | None:
    """Exact minimum over all homomorphisms; None iff none exists.

    The returned witness is the lexicographically least optimal map.
    """
    _guard(inst.g, max_vertices, "exhaustive minimization")
    res = _search(inst.g, inst.h, inst.weights, inst.costs, minimize=True)
    if res is None:
        return None
    mapping, cost = res
    hom = validate_hom(inst, mapping)
    if hom.cost != cost:
        raise AssertionError(f"search cost {cost} disagrees with recomputed cost {hom.cost}")
    return hom


def search_within_budget(inst: WeightedInstance, budget: int, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> Homomorphism | None:
    """First homomorphism of cost <= budget in lexicographic order, or None."""
    _guard(inst.g, max_vertices, "budgeted search")
    if budget < 0:
        raise InstanceError(f"budget must be non-negative, got {budget}")
    res = _search(inst.g, inst.h, inst.weights, inst.costs, budget=budget)
    if res is None:
        return None
    return validate_hom(inst, res[0])


def solve_precolouring(
    g: Graph, h: Graph, pre: Precolouring, *, max_vertices: int = DEFAULT_VERTEX_CAP
) -> Homomorphism | None:
    """Extend a partial assignment to a homomorphism g -> h, or None.

    Pure feasibility oracle: the returned homomorphism carries cost 0 (there
    is no cost function in the pre-colouring extension problem).
    """
    _guard(g, max_vertices, "pre-colouring extension")
    pre.validate(g, h)
    zero = (0,) * h.n
    ones = (1,) * g.n
    res = _search(g, h, ones, zero, fixed=dict(pre.assignments))
    if res is None:
        return None
    return validate_hom(WeightedInstance(g, h, zero, ones), res[0])


@dataclass(frozen=True)
class MISInstance:
    """A 3-partite graph with its parts, and an optional target size k."""

    g: Graph
    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    k: int | None = None

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.g.n < 1:
            raise InstanceError("3-partite instance needs a non-empty graph")
        if len(parts) != 3:
            raise InstanceError("exactly three parts required")
        if len(parts[0]) < 1:
            raise InstanceError("the first part must be non-empty")
        flat = [v for p in parts for v in p]
        if sorted(flat) != list(range(self.g.n)):
            raise InstanceError("parts must partition the vertex set")
        for i, p in enumerate(parts):
            ps = set(p)
            for u, v in self.g.edges:
                if u in ps and v in ps:
                    raise InstanceError(f"part {i + 1} is not independent: edge ({u}, {v})")
        if self.k is not None and (not isinstance(self.k, int) or self.k < 0):
            raise InstanceError(f"target size k must be a non-negative integer, got {self.k!r}")

    def part_of(self, v: int) -> int:
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        raise InstanceError(f"vertex {v} not in any part")


def max_independent_set_3partite(
    inst: MISInstance, *, max_vertices: int = DEFAULT_MIS_CAP
) -> tuple[frozenset[int], int]:
    """Exact maximum independent set via branch and bound.

    Branches on the max-degree vertex of the remaining subgraph; the bound
    is a greedy clique cover (a colouring of the complement).
    """
    g = inst.g
    _guard(g, max_vertices, "independent set search")
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    def clique_cover_bound(mask: int) -> int:
        cliques: list[int] = []
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            for i, cl in enumerate(cliques):
                if cl & ~adj[v] == 0:  # v adjacent to every member
                    cliques[i] = cl | (1 << v)
                    break
            else:
                cliques.append(1 << v)
        return len(cliques)

    best_set = 0
    best_size = 0

    def expand(cur: int, size: int, cand: int) -> None:
        nonlocal best_set, best_size
        if cand == 0:
            if size > best_size:
                best_size = size
                best_set = cur
            return
        if size + bin(cand).count("1") <= best_size:
            return
        if size + clique_cover_bound(cand) <= best_size:
            return
        # max-degree vertex within the remaining subgraph, ties by index
        v = -1
        vdeg = -1
        m = cand
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adj[u] & cand).count("1")
            if d > vdeg:
                vdeg = d
                v = u
        bit = 1 << v
        expand(cur | bit, size + 1, cand & ~adj[v] & ~bit)
        expand(cur, size, cand & ~bit)

    expand(0, 0, (1 << n) - 1)
    chosen = frozenset(v for v in range(n) if best_set >> v & 1)
    return chosen, best_size


class FlowNetwork:
    """Integer-capacity s-t network with a designated "infinite" capacity.

    Infinite arcs are entered with capacity None and resolved to
    1 + (sum of finite capacities) when solving, which keeps all arithmetic
    exact. No arc may enter the source or leave the sink.
    """

    def __init__(self):
        self._head: list[int] = []
        self._cap: list[int | None] = []
        self._adj: list[list[int]] = []
        self.source = self.add_node()
        self.sink = self.add_node()
        # read-off metadata set by build_flow_network: vertex -> (chain node ids, image order)
        self.chains: dict[int, tuple[list[int], tuple[int, ...]]] = {}

    def add_node(self) -> int:
        self._adj.append([])
        return len(self._adj) - 1

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def arc_count(self) -> int:
        return len(self._head) // 2

    def add_arc(self, u: int, v: int, cap: int | None) -> int:
        if v == self.source:
            raise InstanceError("arcs into the source are not allowed")
        if u == self.sink:
            raise InstanceError("arcs out of the sink are not allowed")
        if cap is not None and cap < 0:
            raise InstanceError(f"arc capacity must be non-negative, got {cap}")
        idx = len(self._head)
        self._head.append(v)
        self._cap.append(cap)
        self._adj[u].append(idx)
        self._head.append(u)
        self._cap.append(0)
        self._adj[v].append(idx + 1)
        return idx

    def infinite_capacity(self) -> int:
        return 1 + sum(c for c in self._cap if c is not None)

    def max_flow(self) -> tuple[int, frozenset[int]]:
        """Exact max flow (= min cut) and the source side of a minimum cut.

        Dinic's algorithm: augmentation proceeds along shortest residual
        paths, phase by phase, deterministically in arc insertion order.
        """
        inf = self.infinite_capacity()
        residual = [inf if c is None else c for c in self._cap]
        s, t = self.source, self.sink
        n = self.node_count
        total = 0
        while True:
            level = [-1] * n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for idx in self._adj[u]:
                    v = self._head[idx]
                    if residual[idx] > 0 and level[v] == -1:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] == -1:
                break
            it = [0] * n

            def push(u: int, limit: int) -> int:
                if u == t:
                    return limit
                while it[u] < len(self._adj[u]):
                    idx = self._adj[u][it[u]]
                    v = self._head[idx]
                    if residual[idx] > 0 and level[v] == level[u] + 1:
                        got = push(v, min(limit, residual[idx]))
                        if got > 0:
                            residual[idx] -= got
                            residual[idx ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = push(s, 1 << 300)
                if pushed == 0:
                    break
                total += pushed
        # residual reachability from the source gives the cut
        side = [False] * n
        side[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self._adj[u]:
                v = self._head[idx]
                if residual[idx] > 0 and not side[v]:
                    side[v] = True
                    queue.append(v)
        return total, frozenset(i for i in range(n) if side[i])


def max_flow(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    return net.max_flow()


def _suffix_least_neighbour(h: Graph, side: tuple[int, ...], other: tuple[int, ...]) -> list[int | None]:
    """For each position i in `side`, the least `other`-position adjacent to
    any usable side vertex at position >= i (usable = has a neighbour)."""
    pos_other = {b: j for j, b in enumerate(other)}
    least = []
    for a in side:
        nbrs = h.neighbours(a)
        least.append(min((pos_other[b] for b in nbrs), default=None))
    out: list[int | None] = [None] * len(side)
    running: int | None = None
    for i in range(len(side) - 1, -1, -1):
        if least[i] is not None and (running is None or least[i] < running):
            running = least[i]
        out[i] = running
    return out


def build_flow_network(
    inst: WeightedInstance,
    ordering: MinMaxOrdering,
    gparts: Bipartition | None = None,
) -> FlowNetwork:
    """Network whose min cut is the minimum weighted cost over homomorphisms
    that align input side 0 with ordering.order_x and side 1 with order_y.

    Infeasibility of the alignment shows up as a min cut reaching the
    network's infinite capacity. Swap the ordering for the other alignment.
    """
    if not check_min_max_ordering(inst.h, ordering):
        raise InstanceError("not a valid min-max ordering of the target")
    if gparts is None:
        gparts = bipartition(inst.g)
        if gparts is None:
            raise InstanceError("input graph is not bipartite; no homomorphism to a bipartite target")
    g, h = inst.g, inst.h
    orders = (tuple(ordering.order_x), tuple(ordering.order_y))
    net = FlowNetwork()

    for v in range(g.n):
        side_order = orders[gparts.side_of(v)]
        p = len(side_order)
        if p == 0:
            net.add_arc(net.source, net.sink, None)  # no possible image
            net.chains[v] = ([], side_order)
            continue
        mids = [net.add_node() for _ in range(p - 1)]
        seq = [net.source] + mids + [net.sink]
        isolated = g.degree(v) == 0
        for j, b in enumerate(side_order):
            usable = isolated or h.degree(b) > 0
            cap = inst.weights[v] * inst.costs[b] if usable else None
            net.add_arc(seq[j], seq[j + 1], cap)
        for j in range(1, p - 1):
            net.add_arc(seq[j + 1], seq[j], None)
        net.chains[v] = (mids, side_order)

    # implication targets depend only on the target graph and the two orders
    least_from = (
        _suffix_least_neighbour(h, orders[0], orders[1]),
        _suffix_least_neighbour(h, orders[1], orders[0]),
    )

    def threshold_node(v: int, i: int) -> int:
        # node for "image position of v is >= i"; i == 0 is always true
        mids, _ = net.chains[v]
        return net.source if i == 0 else mids[i - 1]

    for u, v in sorted(g.edges):
        for a, b in ((u, v), (v, u)):
            sa = gparts.side_of(a)
            table = least_from[sa]
            for i in range(len(orders[sa])):
                target = table[i]
                if target is not None and target > 0:
                    net.add_arc(threshold_node(a, i), threshold_node(b, target), None)
    return net


def _read_cut_assignment(net: FlowNetwork, source_side: frozenset[int]) -> dict[int, int]:
    mapping = {}
    for v, (mids, side_order) in net.chains.items():
        prefix = 0
        for node in mids:
            if node in source_side:
                prefix += 1
            else:
                break
        mapping[v] = side_order[prefix]
    return mapping


def min_cut_min_cost(inst: WeightedInstance, *, ordering: MinMaxOrdering | None = None) -> Homomorphism | None:
    """Exact minimum-cost homomorphism via max-flow/min-cut.

    Requires the target to be a proper interval bigraph; raises otherwise
    (a caller-supplied valid min-max ordering is itself proof of that). Each
    connected input component is solved under both side alignments and the
    cheaper one kept; component costs add up.
    """
    from .recognition import is_proper_interval_bigraph  # local import to keep module load light

    if ordering is None:
        pib, cert = is_proper_interval_bigraph(inst.h)
        if not pib:
            raise InstanceError("target is not a proper interval bigraph; min-cut solver refused")
        ordering = cert if isinstance(cert, MinMaxOrdering) else find_min_max_ordering(inst.h)
        if ordering is None:
            raise SearchCapExceeded("no min-max ordering witness available within the search cap")
    elif not check_min_max_ordering(inst.h, ordering):
        raise InstanceError("supplied ordering is not a valid min-max ordering of the target")

    if inst.g.n == 0:
        return Homomorphism((), 0)
    gbip = bipartition(inst.g)
    if gbip is None:
        return None

    full_map: list[int | None] = [None] * inst.g.n
    total = 0
    for comp in connected_components(inst.g):
        sub, old = induced_subgraph(inst.g, comp)
        sub_inst = WeightedInstance(
            sub, inst.h, inst.costs, tuple(inst.weights[v] for v in old)
        )
        sub_bip = bipartition(sub)
        best: tuple[int, dict[int, int]] | None = None
        for ordr in (ordering, ordering.swapped()):
            net = build_flow_network(sub_inst, ordr, sub_bip)
            value, side = net.max_flow()
            if value >= net.infinite_capacity():
                continue
            mapping = _read_cut_assignment(net, side)
            if best is None or value < best[0]:
                best = (value, mapping)
        if best is None:
            return None
        total += best[0]
        for new_idx, image in best[1].items():
            full_map[old[new_idx]] = image
    hom = validate_hom(inst, full_map)  # type: ignore[arg-type]
    if hom.cost != total:
        raise AssertionError(f"cut value {total} disagrees with recomputed cost {hom.cost}")
    return hom


def decide(inst: WeightedInstance, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> bool:
    """True iff a homomorphism of cost <= inst.budget exists.

    Dispatches to the min-cut solver whenever the target admits a min-max
    ordering (equivalently, is a proper interval bigraph), and to the
    budget-pruned exhaustive search otherwise.
    """
    if inst.budget is None:
        raise InstanceError("decide needs an instance with a budget")
    try:
        ordering = find_min_max_ordering(inst.h)
    except SearchCapExceeded:
        ordering = None
    if ordering is not None:
        hom = min_cut_min_cost(inst, ordering=ordering)
        return hom is not None and hom.cost <= inst.budget
    return search_within_budget(inst, inst.budget, max_vertices=max_vertices) is not None
