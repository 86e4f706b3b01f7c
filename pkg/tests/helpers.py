"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the package's own data structures:
``naive_dominating_count`` works on plain sets and ``dense_product`` on raw
tuples, so they cannot inherit a bug from the code under test.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, List, Tuple

from vest import DenseMatrix, FunctionalMatrix, Graph, Semiring, VestInstance, new_instance


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def all_labeled_graphs(n: int) -> List[Graph]:
    """Every graph on vertex set {0..n-1}, one per edge subset."""
    slots = list(combinations(range(n), 2))
    out = []
    for bits in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if bits >> i & 1]
        out.append(Graph.from_edges(n, edges))
    return out


@lru_cache(maxsize=None)
def _canonical_forms(n: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    slots = list(combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if bits >> i & 1]
        best = None
        for perm in permutations(range(n)):
            relabeled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
            if best is None or relabeled < best:
                best = relabeled
        seen.add(best)
    return tuple(sorted(seen))


def nonisomorphic_graphs(n: int) -> List[Graph]:
    """One representative per isomorphism class of n-vertex graphs."""
    return [Graph.from_edges(n, list(edges)) for edges in _canonical_forms(n)]


def naive_dominating_count(n: int, edges: Iterable[Tuple[int, int]], k: int) -> int:
    """Set-based reference count of size-k dominating sets."""
    neighbors = {u: {u} for u in range(n)}
    for u, v in edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    everything = set(range(n))
    count = 0
    for combo in combinations(range(n), k):
        covered = set()
        for u in combo:
            covered |= neighbors[u]
        if covered == everything:
            count += 1
    return count


def dense_product(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Reference matrix product over plain Python arithmetic."""
    assert a.ncols == b.nrows
    rows = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            acc = 0
            for l in range(a.ncols):
                acc += a.rows[i][l] * b.rows[l][j]
            row.append(acc)
        rows.append(tuple(row))
    return DenseMatrix(rows)


def random_scalar(rng) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice((-3, -2, -1, 1, 2, 3)))


def random_rational_instance(rng, max_d: int = 4, max_m: int = 3, max_h: int = 3) -> VestInstance:
    d = rng.randint(1, max_d)
    m = rng.randint(1, max_m)
    h = rng.randint(1, max_h)
    v = tuple(random_scalar(rng) for _ in range(d))
    transformations = [
        DenseMatrix(tuple(tuple(random_scalar(rng) for _ in range(d)) for _ in range(d)))
        for _ in range(m)
    ]
    selector = DenseMatrix(tuple(tuple(random_scalar(rng) for _ in range(d)) for _ in range(h)))
    return new_instance(Semiring.RATIONAL, v, transformations, selector)


def random_functional_matrix(rng, d: int) -> FunctionalMatrix:
    choices = [None] + list(range(d))
    return FunctionalMatrix(tuple(rng.choice(choices) for _ in range(d)))
