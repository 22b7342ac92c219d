"""Seeded graph families for tests and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph
from .branchdec import BranchDecomposition


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Erdos-Renyi sample, resampled until connected."""
    if n < 1:
        raise ValueError("need at least one vertex")
    while True:
        prob = p if p is not None else rng.uniform(0.3, 0.7)
        edges = [(u, v) for u, v in combinations(range(n), 2)
                 if rng.random() < prob]
        g = Graph(range(n), edges)
        if g.is_connected():
            return g


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid, column-major ids: column cuts have matching = rows."""
    def vid(r: int, c: int) -> int:
        return c * rows + r

    edges = []
    for c in range(cols):
        for r in range(rows - 1):
            edges.append((vid(r, c), vid(r + 1, c)))
    for c in range(cols - 1):
        for r in range(rows):
            edges.append((vid(r, c), vid(r, c + 1)))
    return Graph(range(rows * cols), edges)


def caterpillar_decomposition(elements: list[int]) -> BranchDecomposition:
    """Leaves hang off a spine in the given order; cuts are element prefixes."""
    elems = list(elements)
    k = len(elems)
    if k == 1:
        return BranchDecomposition([], {0: elems[0]})
    base = max(elems) + 1
    leaves = {base + i: elems[i] for i in range(k)}
    if k == 2:
        return BranchDecomposition([(base, base + 1)], leaves)
    spine = [base + k + i for i in range(k - 2)]
    edges = [(spine[i], spine[i + 1]) for i in range(len(spine) - 1)]
    edges.append((base, spine[0]))
    edges.append((base + 1, spine[0]))
    for i in range(1, k - 2):
        edges.append((base + 1 + i, spine[i]))
    edges.append((base + k - 1, spine[-1]))
    return BranchDecomposition(edges, leaves)
