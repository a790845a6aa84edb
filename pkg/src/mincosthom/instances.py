"""Instance model: costs on the target, weights on the input, homomorphisms.

Costs are "constrained": they depend only on the image vertex of H, so an
instance carries one integer per target vertex. Weights multiply a vertex's
image cost. All arithmetic is exact (Python integers never wrap).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InstanceError
from .graphs import Graph


def check_costs(costs: Sequence[int], h: Graph) -> tuple[int, ...]:
    costs = tuple(costs)
    if len(costs) != h.n:
        raise InstanceError(f"costs has length {len(costs)}, target has {h.n} vertices")
    for i, c in enumerate(costs):
        if not isinstance(c, int) or c < 0:
            raise InstanceError(f"cost of target vertex {i} must be a non-negative integer, got {c!r}")
    return costs


def check_weights(weights: Sequence[int], g: Graph) -> tuple[int, ...]:
    weights = tuple(weights)
    if len(weights) != g.n:
        raise InstanceError(f"weights has length {len(weights)}, input graph has {g.n} vertices")
    for v, w in enumerate(weights):
        if not isinstance(w, int) or w < 1:
            raise InstanceError(f"weight of vertex {v} must be a positive integer, got {w!r}")
    return weights


@dataclass(frozen=True)
class WeightedInstance:
    """Decision/optimization instance (G, H, c, w, budget).

    weight defaults to all ones, which is the plain constrained-cost problem;
    budget is the decision threshold and may be absent.
    """

    g: Graph
    h: Graph
    costs: tuple[int, ...]
    weights: tuple[int, ...] = None  # type: ignore[assignment]
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "costs", check_costs(self.costs, self.h))
        weights = self.weights if self.weights is not None else (1,) * self.g.n
        object.__setattr__(self, "weights", check_weights(weights, self.g))
        if self.budget is not None and (not isinstance(self.budget, int) or self.budget < 0):
            raise InstanceError(f"budget must be a non-negative integer, got {self.budget!r}")

    def hom_cost(self, mapping: Sequence[int]) -> int:
        return sum(self.weights[v] * self.costs[mapping[v]] for v in range(self.g.n))

    def with_budget(self, budget: int | None) -> "WeightedInstance":
        return WeightedInstance(self.g, self.h, self.costs, self.weights, budget)


@dataclass(frozen=True)
class Homomorphism:
    """A total map V(G) -> V(H) together with its weighted cost."""

    mapping: tuple[int, ...]
    cost: int

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]


def validate_hom(inst: WeightedInstance, mapping: Sequence[int]) -> Homomorphism:
    """Check that ``mapping`` is an edge-preserving total map and cost it.

    Raises InstanceError for partial maps, out-of-range images, or any edge
    of G whose endpoints land on a non-edge (or a single vertex) of H.
    """
    mapping = tuple(mapping)
    if len(mapping) != inst.g.n:
        raise InstanceError(f"map has length {len(mapping)}, input graph has {inst.g.n} vertices")
    for v, img in enumerate(mapping):
        if not isinstance(img, int) or not (0 <= img < inst.h.n):
            raise InstanceError(f"image of vertex {v} is {img!r}, outside the target's 0..{inst.h.n - 1}")
    for u, v in sorted(inst.g.edges):
        a, b = mapping[u], mapping[v]
        if a == b:
            raise InstanceError(f"edge ({u}, {v}) maps to the single vertex {a} (targets have no loops)")
        if not inst.h.has_edge(a, b):
            raise InstanceError(f"edge ({u}, {v}) maps to the non-edge ({a}, {b})")
    return Homomorphism(mapping, inst.hom_cost(mapping))


@dataclass(frozen=True)
class Precolouring:
    """Partial map from input vertices to target vertices."""

    assignments: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "assignments", dict(self.assignments))

    def validate(self, g: Graph, h: Graph) -> None:
        for v, img in self.assignments.items():
            if not (0 <= v < g.n):
                raise InstanceError(f"pre-coloured vertex {v} not in the input graph")
            if not (0 <= img < h.n):
                raise InstanceError(f"pre-colour image {img} of vertex {v} not in the target")

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.assignments.items())

    def get(self, v: int) -> int | None:
        return self.assignments.get(v)

    def __len__(self) -> int:
        return len(self.assignments)

    def __contains__(self, v: int) -> bool:
        return v in self.assignments
