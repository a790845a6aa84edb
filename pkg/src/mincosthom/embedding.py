"""Induced-subgraph embedding search.

Exponential backtracking; fine because patterns here have at most a dozen
vertices and hosts are small fixed targets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


def find_induced_embedding(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Injective map pattern -> host preserving edges and non-edges, or None.

    Deterministic: pattern vertices are placed in index order and candidates
    tried ascending, so the returned image tuple is lexicographically least.
    """
    if pattern.n > host.n:
        return None
    p_adj = [pattern.neighbours(v) for v in range(pattern.n)]
    h_adj = [host.neighbours(v) for v in range(host.n)]
    p_deg = [pattern.degree(v) for v in range(pattern.n)]
    image: list[int] = []
    used = [False] * host.n

    def place(k: int) -> bool:
        if k == pattern.n:
            return True
        earlier = p_adj[k]
        for w in range(host.n):
            if used[w] or host.degree(w) < p_deg[k]:
                continue
            ok = True
            for j in range(k):
                if (j in earlier) != (image[j] in h_adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            image.append(w)
            used[w] = True
            if place(k + 1):
                return True
            used[w] = False
            image.pop()
        return False

    return tuple(image) if place(0) else None


@dataclass
class PatternEmbedding:
    """An induced copy of a named pattern inside a host graph.

    ``image[p]`` is the host vertex carrying pattern vertex p; ``roles`` maps
    symbolic role names (gadget corners, cycle positions) to pattern vertices.
    """

    kind: str
    pattern: Graph
    image: tuple[int, ...]
    roles: dict[str, int]

    def host_of(self, role: str) -> int:
        return self.image[self.roles[role]]

    def role_table(self) -> dict[str, int]:
        """role name -> host vertex."""
        return {name: self.image[p] for name, p in self.roles.items()}

    def is_induced_in(self, host: Graph) -> bool:
        img = self.image
        if len(img) != self.pattern.n or len(set(img)) != len(img):
            return False
        if any(not (0 <= w < host.n) for w in img):
            return False
        for a in range(self.pattern.n):
            for b in range(a + 1, self.pattern.n):
                if self.pattern.has_edge(a, b) != host.has_edge(img[a], img[b]):
                    return False
        return True
