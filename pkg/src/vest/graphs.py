"""Undirected graphs, dominating-set queries, and the two input formats.

Adjacency is stored as one int bitmask per vertex, which makes the
dominating-set test a handful of OR operations. The independent counting
routine here is the ground truth the rest of the package is checked against.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Tuple, Union

from .core import ResourceBound, VestError

DEFAULT_SUBSET_CAP = 10**8

VertexSet = Union[int, Iterable[int]]


class VertexOutOfRange(VestError):
    pass


class GraphSyntaxError(VestError):
    """A graph file failed to parse; carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InconsistentHeader(VestError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[u]`` is a bitmask of the open neighborhood of u.
    """

    n: int
    adj: Tuple[int, ...]
    edge_count: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build from an edge list, dropping self-loops (with a warning) and
        collapsing duplicate edges silently."""
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        adj = [0] * n
        count = 0
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(f"vertex {w} outside [0, {n})")
            if u == v:
                warnings.warn(f"ignoring self-loop at vertex {u}", stacklevel=2)
                continue
            if not adj[u] >> v & 1:
                count += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), count)

    def closed_mask(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise VertexOutOfRange(f"vertex {u} outside [0, {self.n})")
        return self.adj[u] | 1 << u

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def vertex_mask(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for u in vertices:
        if not 0 <= u < n:
            raise VertexOutOfRange(f"vertex {u} outside [0, {n})")
        mask |= 1 << u
    return mask


def mask_vertices(mask: int) -> Tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def closed_neighborhood(g: Graph, u: int) -> int:
    """Bitmask of u and its neighbors."""
    return g.closed_mask(u)


def is_dominating(g: Graph, vertices: VertexSet) -> bool:
    """True when every vertex is in the set or adjacent to a member.

    Accepts either a bitmask or an iterable of vertex indices.
    """
    mask = vertices if isinstance(vertices, int) else vertex_mask(vertices, g.n)
    if mask >> g.n:
        raise VertexOutOfRange(f"set mask has bits outside [0, {g.n})")
    covered = 0
    m = mask
    while m:
        low = m & -m
        covered |= g.adj[low.bit_length() - 1]
        m ^= low
    return (covered | mask) == g.full_mask


def count_dominating_sets(g: Graph, k: int, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """Number of dominating sets of size exactly k, by direct enumeration."""
    if k < 0:
        raise ValueError(f"set size must be >= 0, got {k}")
    if k > g.n:
        return 0
    total = math.comb(g.n, k)
    if total > cap:
        raise ResourceBound(
            f"counting size-{k} sets in a {g.n}-vertex graph needs {total} "
            f"subset checks, above the cap of {cap}")
    if k == 0:
        return 1 if g.n == 0 else 0
    closed = [g.adj[u] | 1 << u for u in range(g.n)]
    full = g.full_mask
    count = 0
    for combo in combinations(range(g.n), k):
        covered = 0
        for u in combo:
            covered |= closed[u]
        if covered == full:
            count += 1
    return count


def parse_edgelist(text: str) -> Graph:
    """Parse the plain edge-list format.

    First significant line is "n m"; each following line is one edge "u v"
    with 0-based endpoints. Blank lines and lines starting with '#' are
    skipped. The declared edge count is advisory here (duplicates collapse),
    but every edge line must be well-formed.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise GraphSyntaxError(f"expected header 'n m', got {line!r}", lineno)
            try:
                n, declared = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphSyntaxError(f"non-integer header field in {line!r}", lineno) from None
            if n < 1:
                raise GraphSyntaxError(f"vertex count must be >= 1, got {n}", lineno)
            if declared < 0:
                raise GraphSyntaxError(f"edge count must be >= 0, got {declared}", lineno)
            continue
        if len(parts) != 2:
            raise GraphSyntaxError(f"expected edge 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphSyntaxError(f"non-integer endpoint in {line!r}", lineno) from None
        if not 0 <= u < n or not 0 <= v < n:
            raise GraphSyntaxError(f"endpoint outside [0, {n}) in {line!r}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphSyntaxError("empty input: no 'n m' header found", 1)
    return Graph.from_edges(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS graph format: 'c' comments, one 'p edge n m' line, and
    'e u v' edge lines with 1-based endpoints. The number of edge lines must
    match the header's m exactly."""
    n = None
    declared = 0
    edge_lines = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphSyntaxError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphSyntaxError(f"expected 'p edge n m', got {line!r}", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphSyntaxError(f"non-integer problem field in {line!r}", lineno) from None
            if n < 1:
                raise GraphSyntaxError(f"vertex count must be >= 1, got {n}", lineno)
            if declared < 0:
                raise GraphSyntaxError(f"edge count must be >= 0, got {declared}", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphSyntaxError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphSyntaxError(f"expected 'e u v', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphSyntaxError(f"non-integer endpoint in {line!r}", lineno) from None
            if not 1 <= u <= n or not 1 <= v <= n:
                raise GraphSyntaxError(f"endpoint outside [1, {n}] in {line!r}", lineno)
            edge_lines += 1
            edges.append((u - 1, v - 1))
        else:
            raise GraphSyntaxError(f"unrecognized line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphSyntaxError("no problem line found", 1)
    if edge_lines != declared:
        raise InconsistentHeader(
            f"problem line declares {declared} edges but {edge_lines} edge lines follow")
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    """Dispatch on format name: "edgelist" or "dimacs"."""
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")
