"""Certificate dynamic programming over a branch decomposition.

A certificate is an edge bitmask forming vertex-disjoint paths inside its
home vertex set (or a Hamiltonian cycle of the whole graph, at the root).
Families are pruned with two trims: the representative-family machinery of
`repsets` on sides with a small cut vertex cover, and a twin-signature
collapse on split sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits
from .cuts import is_split, min_vertex_cover, mm_value
from .branchdec import BranchDecomposition
from .repsets import (edge_degrees, is_forest, walk_paths, pad_separator,
                      preserving_extension)


@dataclass(frozen=True)
class CertificateFamily:
    home: int
    members: tuple[int, ...]


def certificate_valid(g: Graph, emask: int, home: int) -> bool:
    if emask & ~g.edges_within(home):
        return False
    deg = edge_degrees(g, emask)
    if any(d > 2 for d in deg.values()):
        return False
    if is_forest(g, emask):
        return True
    return home == g.vmask and is_hamiltonian_cycle(g, emask)


def is_hamiltonian_cycle(g: Graph, emask: int) -> bool:
    if emask.bit_count() != g.n or g.n < 3:
        return False
    deg = edge_degrees(g, emask)
    if len(deg) != g.n or any(d != 2 for d in deg.values()):
        return False
    # all degree 2 and n edges: connected iff a single cycle
    start = g.edges[next(bits(emask))][0]
    seen = {start}
    prev, cur = None, start
    nbrs: dict[int, list[int]] = {}
    for i in bits(emask):
        u, v = g.edges[i]
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    while True:
        nxt = [w for w in nbrs[cur] if w != prev]
        if not nxt:
            return False
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        seen.add(cur)
    return len(seen) == g.n


def _path_slots(g: Graph, home: int, cert: int, max_paths: int | None):
    """Deficient-vertex mask, optionally limited to the first few paths."""
    deg = edge_degrees(g, cert)
    deficient = 0
    for v in bits(home):
        if deg.get(v, 0) < 2:
            deficient |= 1 << v
    if max_paths is None:
        return deficient
    paths = [(seq[0], seq[-1]) for seq in walk_paths(g, cert)]
    for v in bits(home):
        if deg.get(v, 0) == 0:
            paths.append((v, v))
    if len(paths) <= max_paths:
        return deficient
    paths.sort(key=lambda p: min(p))
    allowed = 0
    for u, v in paths[:max_paths]:
        allowed |= (1 << u) | (1 << v)
    return deficient & allowed


def _enumerate_pair(g: Graph, a: int, b: int, sa: int, sb: int,
                    slots_a: int, slots_b: int) -> list[int]:
    """All valid members of conc(sa, sb) whose cross edges touch the slots."""
    base = sa | sb
    home = a | b
    full_home = home == g.vmask
    n = g.n
    deg = edge_degrees(g, base)
    ends: dict[int, tuple[int, int]] = {}
    for seq in walk_paths(g, base):
        u, v = seq[0], seq[-1]
        ends[u] = (v, len(seq))
        ends[v] = (u, len(seq))
    for v in bits(home):
        if deg.get(v, 0) == 0:
            deg[v] = 0
            ends[v] = (v, 1)
    candidates = []
    for i in bits(g.edges_between(a, b)):
        u, v = g.edges[i]
        if (a >> v) & 1:
            u, v = v, u
        if (slots_a >> u) & 1 and (slots_b >> v) & 1:
            candidates.append((i, u, v))
    results: list[int] = []

    def rec(idx: int, cur: int) -> None:
        if idx == len(candidates):
            results.append(base | cur)
            return
        i, u, v = candidates[idx]
        rec(idx + 1, cur)  # skip
        if deg[u] >= 2 or deg[v] >= 2:
            return
        ou, cu = ends[u]
        if ou == v:
            if full_home and cu == n:
                results.append(base | cur | (1 << i))
            return
        ov, cv = ends[v]
        deg[u] += 1
        deg[v] += 1
        ends[ou] = (ov, cu + cv)
        ends[ov] = (ou, cu + cv)
        rec(idx + 1, cur | (1 << i))
        deg[u] -= 1
        deg[v] -= 1
        ends[ou] = (u, cu)
        ends[ov] = (v, cv)
        ends[u] = (ou, cu)
        ends[v] = (ov, cv)

    rec(0, 0)
    return results


def conc(g: Graph, a: int, b: int, sa: int, sb: int) -> list[int]:
    """All certificates sa ∪ sb ∪ E' with E' cross edges keeping validity."""
    if a & b:
        raise ValueError("certificate homes must be disjoint")
    return _enumerate_pair(g, a, b, sa, sb, a, b)


def join(g: Graph, a: int, b: int, sa: int, sb: int,
         k: int | None = None, split_a: bool | None = None,
         split_b: bool | None = None) -> list[int]:
    """Preserving subset of conc(sa, sb); split sides limited to 4k paths."""
    if a & b:
        raise ValueError("certificate homes must be disjoint")
    if k is None:
        k = max(mm_value(g, a), mm_value(g, b))
    if split_a is None:
        split_a = is_split(g, a)
    if split_b is None:
        split_b = is_split(g, b)
    limit = max(4 * k, 1)
    slots_a = _path_slots(g, a, sa, limit if split_a else None)
    slots_b = _path_slots(g, b, sb, limit if split_b else None)
    return _enumerate_pair(g, a, b, sa, sb, slots_a, slots_b)


# -- trims ------------------------------------------------------------------

def trim_vc(g: Graph, a: int, fam: list[int], seed: int = 0,
            stats: dict | None = None) -> list[int]:
    """Representative subfamily via a preserving extension over a Koenig cover."""
    cover = min_vertex_cover(g.cut_graph(a))
    c = pad_separator(g, a, cover)
    estar = g.edges_between(a, c & ~a)
    ext = preserving_extension(g, a, c, fam, estar, seed=seed, stats=stats)
    out = []
    seen = set()
    for _, core in ext:
        if core not in seen:
            seen.add(core)
            out.append(core)
    return out


def trim_split(g: Graph, a: int, fam: list[int]) -> list[int]:
    """One representative per twin signature on a split side.

    On a split side every boundary vertex has the same outside
    neighbourhood, so a certificate only matters through how many paths
    and how many isolated vertices offer attachment slots; certificates
    with a deficient non-boundary vertex can never be completed.
    """
    outside = g.vmask & ~a
    if not is_split(g, a):
        raise ValueError("trim_split needs a split side")
    boundary = g.neighborhood(outside) & a
    common_outside = g.neighborhood(a)
    t = common_outside.bit_count()
    chosen: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []
    for cert in sorted(set(fam)):
        if not is_forest(g, cert):
            continue  # a closed cycle cannot reach the non-empty outside
        deg = edge_degrees(g, cert)
        dead = False
        isolated = 0
        for v in bits(a):
            d = deg.get(v, 0)
            if d < 2 and not (boundary >> v) & 1:
                dead = True
                break
            if d == 0:
                isolated += 1
                if t < 2:
                    dead = True
                    break
        if dead:
            continue
        sig = (len(walk_paths(g, cert)), isolated)
        if sig not in chosen:
            chosen[sig] = cert
            order.append(sig)
    return [chosen[s] for s in order]


def trim(g: Graph, a: int, fam: list[int], seed: int = 0,
         on_trim=None, stats: dict | None = None) -> list[int]:
    """Dispatch: split sides use the twin signature, others the rep-set trim."""
    outside = g.vmask & ~a
    if outside == 0 or len(fam) <= 1:
        return list(fam)
    if is_split(g, a):
        out = trim_split(g, a, fam)
    else:
        out = trim_vc(g, a, fam, seed=seed, stats=stats)
    if on_trim is not None:
        on_trim(g, a, list(fam), list(out))
    return out


# -- the bottom-up decision procedure ---------------------------------------

INTERMEDIATE_TRIM_CAP = 1024


def solve_hc(g: Graph, bd: BranchDecomposition, seed: int = 0,
             use_trim: bool = True, on_trim=None, trace: dict | None = None,
             stats: dict | None = None):
    """Decide Hamiltonicity along the decomposition; returns (bool, witness).

    The witness, when present, is an edge list forming the cycle, verified
    to be a simple spanning cycle before being returned.
    """
    if g.n < 3 or not g.is_connected():
        return False, None
    if bd.elements != g.vmask:
        raise ValueError("decomposition does not cover the graph's vertices")
    if trace is not None:
        trace.setdefault("node_sizes", [])
        trace.setdefault("max_family", 0)

    def note(size: int):
        if trace is not None:
            trace["node_sizes"].append(size)
            trace["max_family"] = max(trace["max_family"], size)

    adj: dict[int, list[int]] = {u: [] for u in bd.nodes}
    for u, v in bd.edges:
        adj[u].append(v)
        adj[v].append(u)

    def merge(h1: int, f1: list[int], h2: int, f2: list[int], is_root: bool):
        home = h1 | h2
        k = max(mm_value(g, h1), mm_value(g, h2))
        sa_split = is_split(g, h1)
        sb_split = is_split(g, h2)
        limit = max(4 * k, 1)
        members: dict[int, None] = {}
        for s1 in f1:
            slots_a = _path_slots(g, h1, s1, limit if sa_split else None)
            for s2 in f2:
                slots_b = _path_slots(g, h2, s2, limit if sb_split else None)
                for m in _enumerate_pair(g, h1, h2, s1, s2, slots_a, slots_b):
                    members[m] = None
            if use_trim and not is_root and len(members) > INTERMEDIATE_TRIM_CAP:
                members = dict.fromkeys(
                    trim(g, home, list(members), seed=seed, on_trim=on_trim,
                         stats=stats))
        fam = list(members)
        if use_trim and not is_root:
            fam = trim(g, home, fam, seed=seed, on_trim=on_trim, stats=stats)
        note(len(fam))
        return home, fam

    def subtree(node: int, parent: int):
        children = [w for w in adj[node] if w != parent]
        if not children:
            v = bd.leaf_map[node]
            note(1)
            return 1 << v, [0]
        if len(children) != 2:
            raise ValueError("decomposition tree is not subcubic")
        h1, f1 = subtree(children[0], node)
        h2, f2 = subtree(children[1], node)
        return merge(h1, f1, h2, f2, False)

    if not bd.edges:  # single leaf, n >= 3 impossible here
        return False, None
    x, y = bd.edges[0]  # root at a subdivision of this edge
    hx, fx = subtree(x, y)
    hy, fy = subtree(y, x)
    _, final = merge(hx, fx, hy, fy, True)
    for m in final:
        if is_hamiltonian_cycle(g, m):
            return True, g.edge_set(m)
    return False, None
