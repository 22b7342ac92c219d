"""Immutable simple undirected graphs with bitset adjacency.

Vertex ids are small non-negative integers.  A fresh graph uses dense ids
0..n-1; derived graphs (induced subgraphs, split-decomposition primes with
marker vertices) keep the original ids, so ids need not be contiguous.
Vertex sets are plain python ints used as bitsets (bit i = vertex i).
"""

from __future__ import annotations

from itertools import combinations


def bits(mask: int):
    """Iterate set bit positions of a mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("vertices", "vmask", "edges", "adj", "edge_index",
                 "incident", "_hash")

    def __init__(self, vertices, edges):
        vs = sorted(set(vertices))
        self.vertices = tuple(vs)
        self.vmask = mask_of(vs)
        es = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (self.vmask >> u) & 1 or not (self.vmask >> v) & 1:
                raise ValueError(f"edge ({u},{v}) has endpoint outside vertex set")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            es.append(e)
        es.sort()
        self.edges = tuple(es)
        self.edge_index = {e: i for i, e in enumerate(es)}
        adj = {v: 0 for v in vs}
        incident = {v: 0 for v in vs}
        for i, (u, v) in enumerate(es):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            incident[u] |= 1 << i
            incident[v] |= 1 << i
        self.adj = adj
        self.incident = incident
        self._hash = None

    # -- basics ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj.get(u, 0) >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def check_subset(self, a: int) -> None:
        if a & ~self.vmask:
            bad = sorted(bits(a & ~self.vmask))
            raise ValueError(f"unknown vertex ids {bad}")

    # -- operations --------------------------------------------------------

    def induced_subgraph(self, a: int) -> "Graph":
        """Subgraph induced by the vertex set `a` (a bitmask)."""
        self.check_subset(a)
        vs = [v for v in self.vertices if (a >> v) & 1]
        es = [(u, v) for (u, v) in self.edges if (a >> u) & 1 and (a >> v) & 1]
        return Graph(vs, es)

    def cut_graph(self, a: int) -> "Bipartite":
        """Bipartite subgraph on the pair (a, complement of a)."""
        self.check_subset(a)
        b = self.vmask & ~a
        es = [(u, v) for (u, v) in self.edges
              if ((a >> u) & 1) != ((a >> v) & 1)]
        return Bipartite(Graph(self.vertices, es), a, b)

    def contract_edge(self, u: int, v: int, new_id: int | None = None):
        """Contract edge uv into a fresh vertex; returns (graph, new id)."""
        e = (u, v) if u < v else (v, u)
        if e not in self.edge_index:
            raise ValueError(f"({u},{v}) is not an edge")
        if new_id is None:
            new_id = self.vertices[-1] + 1
        merged_nbrs = (self.adj[u] | self.adj[v]) & ~(1 << u) & ~(1 << v)
        vs = [w for w in self.vertices if w not in (u, v)] + [new_id]
        es = [(x, y) for (x, y) in self.edges
              if x not in (u, v) and y not in (u, v)]
        es += [(new_id, w) for w in bits(merged_nbrs)]
        return Graph(vs, es), new_id

    def neighborhood(self, s: int) -> int:
        """N(s): vertices outside s adjacent to s, as a bitmask."""
        self.check_subset(s)
        nb = 0
        for v in bits(s):
            nb |= self.adj[v]
        return nb & ~s

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        start = self.vertices[0]
        reached = 1 << start
        frontier = reached
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~reached
            reached |= frontier
        return reached == self.vmask

    def relabeled(self, mapping: dict) -> "Graph":
        return Graph([mapping[v] for v in self.vertices],
                     [(mapping[u], mapping[v]) for (u, v) in self.edges])

    # -- edge-set helpers (edge bitmasks over self.edges) ------------------

    def edge_mask(self, edges) -> int:
        m = 0
        for u, v in edges:
            e = (u, v) if u < v else (v, u)
            m |= 1 << self.edge_index[e]
        return m

    def edge_set(self, emask: int):
        return [self.edges[i] for i in bits(emask)]

    def edges_within(self, a: int) -> int:
        """Edge bitmask of E(G[a])."""
        m = 0
        for i, (u, v) in enumerate(self.edges):
            if (a >> u) & 1 and (a >> v) & 1:
                m |= 1 << i
        return m

    def edges_between(self, a: int, b: int) -> int:
        """Edge bitmask of E(G[a, b]) for disjoint a, b."""
        m = 0
        for i, (u, v) in enumerate(self.edges):
            if ((a >> u) & 1 and (b >> v) & 1) or ((b >> u) & 1 and (a >> v) & 1):
                m |= 1 << i
        return m


class Bipartite:
    """A bipartite graph together with its declared sides (bitmasks)."""

    __slots__ = ("graph", "left", "right")

    def __init__(self, graph: Graph, left: int, right: int):
        for u, v in graph.edges:
            crosses = (((left >> u) & 1 and (right >> v) & 1)
                       or ((right >> u) & 1 and (left >> v) & 1))
            if not crosses:
                raise ValueError(f"edge ({u},{v}) does not cross the bipartition")
        self.graph = graph
        self.left = left
        self.right = right


# -- constructors ----------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` header plus `u v` lines; `#` comments and blanks ok."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {row!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        edges.append((u, v))
    return Graph(range(n), edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for (u, v) in g.edges]
    return "\n".join(lines) + "\n"
