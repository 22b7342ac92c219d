"""Independent brute-force oracles used to validate the solver and trims.

Nothing here shares logic with the decomposition-driven solver: the
Hamiltonicity oracles are a Held-Karp bitmask DP and a plain backtracking
search, and preservation of a family trim is checked directly against
completions of the outside part.
"""

from __future__ import annotations

from .graph import Graph, bits
from .cuts import sm_cut_function
from .branchdec import SizeLimitExceeded, exact_best_decomposition
from .repsets import edge_degrees, is_path_system, _can_add_edge
from . import solver

BRUTE_HC_LIMIT = 18
BRUTE_WIDTH_LIMIT = 10


def brute_hc(g: Graph, limit: int = BRUTE_HC_LIMIT):
    """Held-Karp decision with witness; refuses instances over the limit."""
    if g.n > limit:
        raise SizeLimitExceeded(f"brute_hc limited to {limit} vertices, got {g.n}")
    n = g.n
    if n < 3 or not g.is_connected():
        return False, None
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * n
    for u, v in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    full = (1 << n) - 1
    parent: dict[tuple[int, int], int] = {(1, 0): -1}
    layer = {(1, 0)}
    for _ in range(n - 1):
        nxt = set()
        for mask, last in layer:
            for w in bits(adj[last] & ~mask):
                key = (mask | (1 << w), w)
                if key not in parent:
                    parent[key] = last
                    nxt.add(key)
        layer = nxt
    for last in bits(adj[0]):
        if last != 0 and (full, last) in parent:
            seq = []
            key = (full, last)
            while key[1] != -1 and key in parent:
                seq.append(key[1])
                prev = parent[key]
                if prev == -1:
                    break
                key = (key[0] & ~(1 << key[1]), prev)
            seq.reverse()
            verts = [g.vertices[i] for i in seq]
            cycle = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
            return True, [tuple(sorted(e)) for e in cycle]
    return False, None


def backtracking_hc(g: Graph):
    """Second, structurally different Hamiltonicity check (small n only)."""
    n = g.n
    if n < 3 or not g.is_connected():
        return False, None
    start = g.vertices[0]
    path = [start]
    visited = 1 << start

    def rec() -> bool:
        if len(path) == n:
            return g.has_edge(path[-1], start)
        for w in bits(g.adj[path[-1]] & ~visited_ref[0]):
            visited_ref[0] |= 1 << w
            path.append(w)
            if rec():
                return True
            path.pop()
            visited_ref[0] &= ~(1 << w)
        return False

    visited_ref = [visited]
    if rec():
        cycle = [(path[i], path[(i + 1) % n]) for i in range(n)]
        return True, [tuple(sorted(e)) for e in cycle]
    return False, None


def enumerate_hamiltonian_cycles(g: Graph) -> list[int]:
    """Edge masks of all Hamiltonian cycles, each listed once."""
    n = g.n
    if n < 3 or not g.is_connected():
        return []
    start = g.vertices[0]
    out = []
    path = [start]
    visited = [1 << start]

    def rec():
        if len(path) == n:
            if g.has_edge(path[-1], start) and path[1] < path[-1]:
                cycle = [(path[i], path[(i + 1) % n]) for i in range(n)]
                out.append(g.edge_mask(cycle))
            return
        for w in bits(g.adj[path[-1]] & ~visited[0]):
            visited[0] |= 1 << w
            path.append(w)
            rec()
            path.pop()
            visited[0] &= ~(1 << w)

    rec()
    return out


def brute_sm_width(g: Graph, limit: int = BRUTE_WIDTH_LIMIT) -> int:
    """Exact sm-width via the optimal decomposition search (size-limited)."""
    if g.n > limit:
        raise SizeLimitExceeded(
            f"brute_sm_width limited to {limit} vertices, got {g.n}")
    width, _ = exact_best_decomposition(g, sm_cut_function(g), limit=limit)
    return width


# -- preservation of family trims -------------------------------------------

def _path_subsets(g: Graph, universe: int):
    """All edge masks within the universe forming vertex-disjoint paths."""
    edges = list(bits(universe))

    def rec(i: int, mask: int):
        if i == len(edges):
            yield mask
            return
        yield from rec(i + 1, mask)
        u, v = g.edges[edges[i]]
        if _can_add_edge(g, mask, u, v):
            yield from rec(i + 1, mask | (1 << edges[i]))

    yield from rec(0, 0)


def _completes(g: Graph, a: int, s: int, outside_part: int) -> bool:
    """Can s (home a) and outside_part (home complement) close a cycle?"""
    b = g.vmask & ~a
    for m in solver.conc(g, a, b, s, outside_part):
        if solver.is_hamiltonian_cycle(g, m):
            return True
    return False


def verify_preservation(g: Graph, a: int, big: list[int], small: list[int],
                        method: str = "auto", hcs: list[int] | None = None) -> bool:
    """Whether `small` preserves `big` on side `a` w.r.t. outside completions.

    `cycles` groups all Hamiltonian cycles of g by their outside edge part:
    small preserves big iff every outside part completed by some big member
    is completed by some small member.  `enumerate` checks the definition
    literally over every path system of the outside edges.
    """
    if method == "auto":
        method = "cycles"
    big_set = set(big)
    small_set = set(small)
    inside = g.edges_within(a)
    outside = g.edges_within(g.vmask & ~a)
    if method == "cycles":
        if hcs is None:
            hcs = enumerate_hamiltonian_cycles(g)
        # cross edges are chosen by the completion, so group by outside part
        groups: dict[int, set[int]] = {}
        for h in hcs:
            groups.setdefault(h & outside, set()).add(h & inside)
        for parts in groups.values():
            if parts & big_set and not parts & small_set:
                return False
        return True
    if method == "enumerate":
        b = g.vmask & ~a
        for outside_part in _path_subsets(g, g.edges_within(b)):
            if any(_completes(g, a, s, outside_part) for s in big_set):
                if not any(_completes(g, a, s, outside_part) for s in small_set):
                    return False
        return True
    raise ValueError(f"unknown method {method!r}")
