"""Cycle-structured certificate searches.

Hamiltonian cycles (budgeted backtracking), perfect matchings, 2-factors
(matching complements for cubic graphs, generic degree-2 search
otherwise), and minimum-total-length pairs of vertex-disjoint cycles.

All searches are deterministic: neighbors are visited in edge-id order
and ties are broken on sorted edge-id sequences, so certificates are
reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, girth, UNBOUNDED

FOUND = "found"
NOT_FOUND = "not-found"
BUDGET = "budget-exhausted"


@dataclass(frozen=True)
class Cycle:
    """Simple cycle as an ordered closed walk of edge ids.

    vertices[i] is the tail of edge_ids[i]; length >= 2 is allowed only
    for a parallel pair.
    """

    edge_ids: tuple
    vertices: tuple

    def __len__(self):
        return len(self.edge_ids)

    def key(self) -> tuple:
        return tuple(sorted(self.edge_ids))

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class TwoFactor:
    """Vertex-disjoint cycles covering every vertex of the graph."""

    cycles: tuple

    @property
    def component_count(self) -> int:
        return len(self.cycles)

    def edge_ids(self) -> tuple:
        out = []
        for c in self.cycles:
            out.extend(c.edge_ids)
        return tuple(sorted(out))


@dataclass(frozen=True)
class DisjointCyclePair:
    """Two vertex-disjoint cycles; the U-Link bound uses the minimum one."""

    first: Cycle
    second: Cycle

    @property
    def total_length(self) -> int:
        return len(self.first) + len(self.second)

    def key(self) -> tuple:
        return tuple(sorted((self.first.key(), self.second.key())))


def cycle_from_edges(g: Graph, edge_ids) -> Cycle:
    """Build a Cycle from an unordered set of edge ids, validating it.

    A valid simple cycle is a connected subgraph in which every touched
    vertex has degree exactly 2 (so a parallel pair is a 2-cycle).
    """
    ids = list(edge_ids)
    if len(set(ids)) != len(ids) or len(ids) < 2:
        raise GraphError("cycle needs >= 2 distinct edges")
    deg = {}
    for eid in ids:
        u, v = g.endpoints(eid)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()) or len(deg) != len(ids):
        raise GraphError("edge set is not a single simple cycle")
    # walk it
    by_vertex = {}
    for eid in ids:
        u, v = g.endpoints(eid)
        by_vertex.setdefault(u, []).append(eid)
        by_vertex.setdefault(v, []).append(eid)
    start = min(deg)
    first = min(by_vertex[start])
    walk_edges = [first]
    u, v = g.endpoints(first)
    walk_vertices = [start]
    cur = v if u == start else u
    prev_edge = first
    while cur != start:
        walk_vertices.append(cur)
        e1, e2 = by_vertex[cur]
        nxt = e2 if e1 == prev_edge else e1
        walk_edges.append(nxt)
        a, b = g.endpoints(nxt)
        cur = b if a == cur else a
        prev_edge = nxt
    if len(walk_edges) != len(ids):
        raise GraphError("edge set is not a single simple cycle")
    return Cycle(tuple(walk_edges), tuple(walk_vertices))


def is_valid_cycle(g: Graph, edge_ids) -> bool:
    try:
        cycle_from_edges(g, edge_ids)
    except (GraphError, KeyError, ValueError):
        return False
    return True


# ---------------------------------------------------------------------------
# Hamiltonian cycles


@dataclass(frozen=True)
class HamiltonianResult:
    status: str
    cycle: Cycle | None
    nodes: int


def hamiltonian_cycle(g: Graph, budget: int = 10**7) -> HamiltonianResult:
    """Backtracking search for a Hamiltonian cycle.

    NOT_FOUND is returned only when the search space was exhausted
    within the node budget; running out of budget is a value, not an
    error.
    """
    n = g.vertex_count
    if n < 3:
        raise GraphError("hamiltonian_cycle needs >= 3 vertices")
    nodes = 0
    start = 0
    path_edges = []
    visited = 1 << start
    full = (1 << n) - 1

    # smallest edge id per neighbor, so parallel edges are not re-tried
    def options(v):
        seen = {}
        for eid, w in g.incident(v):
            if w not in seen:
                seen[w] = eid
        return sorted(seen.items(), key=lambda t: t[1])

    opts = [options(v) for v in range(n)]

    def feasible(visited, cur):
        # every unvisited vertex still needs two usable neighbors
        for v in range(n):
            if visited >> v & 1:
                continue
            avail = 0
            for w, _ in opts[v]:
                if not visited >> w & 1 or w == cur or w == start:
                    avail += 1
                    if avail == 2:
                        break
            if avail < 2:
                return False
        return True

    def rec(cur, visited):
        nonlocal nodes
        for w, eid in opts[cur]:
            nodes += 1
            if nodes > budget:
                return BUDGET
            if visited == full:
                if w == start:
                    path_edges.append(eid)
                    return FOUND
                continue
            if visited >> w & 1:
                continue
            if not feasible(visited | 1 << w, w):
                continue
            path_edges.append(eid)
            r = rec(w, visited | 1 << w)
            if r is not None:
                return r
            path_edges.pop()
        return None

    r = rec(start, visited)
    if r == FOUND:
        verts = [start]
        cur = start
        for eid in path_edges[:-1]:
            a, b = g.endpoints(eid)
            cur = b if a == cur else a
            verts.append(cur)
        return HamiltonianResult(FOUND, Cycle(tuple(path_edges), tuple(verts)), nodes)
    if r == BUDGET:
        return HamiltonianResult(BUDGET, None, nodes)
    return HamiltonianResult(NOT_FOUND, None, nodes)


# ---------------------------------------------------------------------------
# perfect matchings and 2-factors


def perfect_matchings(g: Graph, limit: int = 10**6) -> list:
    """All perfect matchings as sorted edge-id tuples (at most limit).

    Branches on the most constrained unmatched vertex, which subsumes
    forced-edge propagation. Odd vertex count yields [].
    """
    n = g.vertex_count
    if n % 2 or n == 0:
        return [] if n else [()]
    out = []
    matched = [False] * n

    def rec(chosen):
        if len(out) >= limit:
            return
        best_v, best_opts = -1, None
        for v in range(n):
            if matched[v]:
                continue
            o = [(eid, w) for eid, w in g.incident(v) if not matched[w]]
            if best_opts is None or len(o) < len(best_opts):
                best_v, best_opts = v, o
                if not o:
                    return
        if best_v == -1:
            out.append(tuple(sorted(chosen)))
            return
        matched[best_v] = True
        for eid, w in best_opts:
            matched[w] = True
            chosen.append(eid)
            rec(chosen)
            chosen.pop()
            matched[w] = False
            if len(out) >= limit:
                break
        matched[best_v] = False

    rec([])
    return sorted(out)


def _cycles_of_degree2_subgraph(g: Graph, edge_ids) -> tuple:
    by_vertex = {}
    for eid in edge_ids:
        u, v = g.endpoints(eid)
        by_vertex.setdefault(u, []).append(eid)
        by_vertex.setdefault(v, []).append(eid)
    remaining = set(edge_ids)
    cycles = []
    while remaining:
        seed = min(remaining)
        comp = set()
        stack = [seed]
        while stack:
            eid = stack.pop()
            if eid in comp:
                continue
            comp.add(eid)
            for x in g.endpoints(eid):
                for other in by_vertex[x]:
                    if other not in comp and other in remaining:
                        stack.append(other)
        remaining -= comp
        cycles.append(cycle_from_edges(g, comp))
    return tuple(sorted(cycles, key=lambda c: c.key()))


def two_factors(g: Graph, limit: int = 10**6) -> list:
    """All 2-factors (spanning vertex-disjoint cycle covers), up to limit.

    For cubic graphs the 2-factors are exactly the complements of the
    perfect matchings; the generic path is a backtracking search over
    degree-2 spanning subgraphs.
    """
    n = g.vertex_count
    if n == 0:
        return []
    from .graph import is_cubic
    factors = []
    if is_cubic(g):
        for m in perfect_matchings(g, limit):
            rest = [eid for eid in range(len(g.edges)) if eid not in set(m)]
            factors.append(TwoFactor(_cycles_of_degree2_subgraph(g, rest)))
    else:
        if any(g.degree(v) < 2 for v in range(n)):
            return []
        m = len(g.edges)
        deg = [0] * n
        left = list(g.degrees())
        chosen = []

        def rec(eid):
            if len(factors) >= limit:
                return
            if eid == m:
                if all(d == 2 for d in deg):
                    factors.append(
                        TwoFactor(_cycles_of_degree2_subgraph(g, chosen)))
                return
            u, v = g.endpoints(eid)
            left[u] -= 1
            left[v] -= 1
            # include
            if deg[u] < 2 and deg[v] < 2:
                deg[u] += 1
                deg[v] += 1
                chosen.append(eid)
                rec(eid + 1)
                chosen.pop()
                deg[u] -= 1
                deg[v] -= 1
            # exclude, if both endpoints can still reach degree 2
            if deg[u] + left[u] >= 2 and deg[v] + left[v] >= 2:
                rec(eid + 1)
            left[u] += 1
            left[v] += 1

        rec(0)
    factors.sort(key=lambda f: f.edge_ids())
    return factors


def min_component_two_factor(g: Graph, limit: int = 10**6):
    """A 2-factor minimizing the component count, or None.

    Ties broken by the lexicographically smallest sorted edge-id
    sequence.
    """
    best = None
    for f in two_factors(g, limit):
        key = (f.component_count, f.edge_ids())
        if best is None or key < best[0]:
            best = (key, f)
    return best[1] if best else None


# ---------------------------------------------------------------------------
# vertex-disjoint cycle pairs


def _cycles_of_length(g: Graph, length: int) -> list:
    """All simple cycles with exactly `length` edges.

    Each cycle is produced once: its root is its smallest vertex and the
    first edge id is smaller than the last. Returns (sorted_ids, walk
    edge list, vertex bitmask) triples sorted lexicographically.
    """
    n = g.vertex_count
    out = []
    for root in range(n):
        # path state: current vertex, edges used, vertex mask
        def extend(cur, edges, mask):
            if len(edges) == length - 1:
                for eid, w in g.incident(cur):
                    if w == root and eid > edges[0] and eid not in edges:
                        out.append((tuple(sorted(edges + [eid])),
                                    edges + [eid], mask))
                return
            for eid, w in g.incident(cur):
                if w == root or w < root or mask >> w & 1 or eid in edges:
                    continue
                extend(w, edges + [eid], mask | 1 << w)

        for eid, w in g.incident(root):
            if w > root:
                extend(w, [eid], 1 << root | 1 << w)
    dedup = {}
    for key, walk, mask in out:
        if key not in dedup:
            dedup[key] = (key, walk, mask)
    return [dedup[k] for k in sorted(dedup)]


def min_disjoint_cycle_pair(g: Graph):
    """A vertex-disjoint cycle pair of minimum total length, or None.

    Cycles are enumerated in increasing length; once every cycle of
    length <= best_total - girth has been processed no better pair can
    exist, which certifies optimality.
    """
    g0 = girth(g)
    if g0 is UNBOUNDED:
        return None
    n = g.vertex_count
    seen = []  # (sorted_ids, walk, mask) in processing order
    best = None  # (total, pair_key, cycle_ids_a, cycle_ids_b)
    for length in range(g0, n + 1):
        if best is not None and length + g0 > best[0]:
            break
        for key, walk, mask in _cycles_of_length(g, length):
            for okey, owalk, omask in seen:
                if mask & omask:
                    continue
                total = len(key) + len(okey)
                pair_key = tuple(sorted((okey, key)))
                if best is None or (total, pair_key) < (best[0], best[1]):
                    best = (total, pair_key, pair_key[0], pair_key[1])
            seen.append((key, walk, mask))
    if best is None:
        return None
    a = cycle_from_edges(g, best[2])
    b = cycle_from_edges(g, best[3])
    return DisjointCyclePair(a, b)
