"""Compile dominating-set questions into vector-transformation instances.

A graph on n vertices becomes an instance of dimension 3n + 1. Each vertex
u owns three coordinates: an "uncovered" flag that starts at 1 and is wiped
by choosing any vertex of u's closed neighborhood, a "chosen twice" slot,
and a "chosen once" slot. One extra coordinate stays constantly 1 and feeds
the chosen-once slots. Choosing vertex u means applying u's transformation:
it zeroes the uncovered flags across N[u], shifts u's chosen-once value
into chosen-twice, and refills chosen-once from the constant.

After applying the transformations for an index sequence, the selector
(which reads every uncovered flag and every chosen-twice slot) maps the
state to zero exactly when the chosen vertices are pairwise distinct and
dominate the graph. Length-k annihilated sequences are therefore ordered
listings of size-k dominating sets, giving M_k = k! * D_k where D_k counts
dominating sets of size exactly k.

All matrices built here are functional (0/1 with at most one 1 per row), so
reduced instances always qualify for the packed evaluation path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DenseMatrix, FunctionalMatrix, Semiring, VestError, VestInstance, new_instance
from .graphs import Graph, mask_vertices


class EmptyGraph(VestError):
    pass


@dataclass(frozen=True)
class CoordinateLayout:
    """Maps graph vertices to coordinate indices of the reduced instance."""

    n: int

    @property
    def dimension(self) -> int:
        return 3 * self.n + 1

    @property
    def constant(self) -> int:
        """Index of the always-1 coordinate."""
        return 3 * self.n

    def uncovered(self, u: int) -> int:
        """Flag that is 1 until some vertex of N[u] is chosen."""
        return 3 * u

    def chosen_twice(self, u: int) -> int:
        """Becomes nonzero when u is chosen a second time."""
        return 3 * u + 1

    def chosen_once(self, u: int) -> int:
        """Becomes 1 when u is chosen; source for the chosen-twice slot."""
        return 3 * u + 2


def coordinate_layout(n: int) -> CoordinateLayout:
    if n < 1:
        raise EmptyGraph(f"need at least one vertex, got {n}")
    return CoordinateLayout(n)


def build_initial_vector(layout: CoordinateLayout) -> tuple:
    """Every uncovered flag 1, both chosen slots 0, constant 1."""
    v = [0] * layout.dimension
    for u in range(layout.n):
        v[layout.uncovered(u)] = 1
    v[layout.constant] = 1
    return tuple(v)


def build_vertex_action(g: Graph, layout: CoordinateLayout, u: int) -> FunctionalMatrix:
    """Row-action form of the transformation for choosing vertex u."""
    actions = list(range(layout.dimension))
    for w in mask_vertices(g.closed_mask(u)):
        actions[layout.uncovered(w)] = None
    actions[layout.chosen_twice(u)] = layout.chosen_once(u)
    actions[layout.chosen_once(u)] = layout.constant
    return FunctionalMatrix(actions)


def build_vertex_matrix(g: Graph, layout: CoordinateLayout, u: int) -> DenseMatrix:
    """Dense form of ``build_vertex_action``."""
    return build_vertex_action(g, layout, u).dense()


def build_selector(g: Graph, layout: CoordinateLayout) -> DenseMatrix:
    """2n rows: for each vertex, one row reading its uncovered flag and one
    reading its chosen-twice slot."""
    d = layout.dimension
    rows = []
    for u in range(layout.n):
        row = [0] * d
        row[layout.uncovered(u)] = 1
        rows.append(tuple(row))
        row = [0] * d
        row[layout.chosen_twice(u)] = 1
        rows.append(tuple(row))
    return DenseMatrix(rows)


@dataclass(frozen=True)
class ReducedInstance:
    """A compiled instance together with its layout and source graph size."""

    instance: VestInstance
    layout: CoordinateLayout
    vertex_count: int


def reduce_graph(g: Graph, semiring: Semiring = Semiring.GF2) -> ReducedInstance:
    """Compile *g*; one transformation per vertex, in vertex order.

    The construction is semiring-agnostic: all entries are 0/1 and no step
    ever adds two nonzero values, so rational and GF(2) instances produce
    identical counts.
    """
    layout = coordinate_layout(g.n)
    v = build_initial_vector(layout)
    transformations = [build_vertex_action(g, layout, u) for u in range(g.n)]
    selector = build_selector(g, layout)
    instance = new_instance(semiring, v, transformations, selector)
    return ReducedInstance(instance, layout, g.n)
