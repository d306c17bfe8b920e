"""Multigraph core: representation, parsing, and structural predicates.

Graphs are immutable values. Vertices are 0..n-1; edges are unordered
pairs with stable integer ids 0..m-1 in construction order. Parallel
edges are allowed, loops are not. Operations that derive a new graph
(edge removal, simplification) return the new graph together with an
edge-id mapping so certificates can always be stated in original ids.
"""

from __future__ import annotations

import itertools


class GraphError(ValueError):
    pass


class Unbounded:
    """Girth of a forest. Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unbounded"

    def __gt__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __ge__(self, other):
        return True

    def __le__(self, other):
        return isinstance(other, Unbounded)

    def __eq__(self, other):
        return isinstance(other, Unbounded)

    def __hash__(self):
        return hash("Unbounded")


UNBOUNDED = Unbounded()


class Graph:
    """Finite undirected multigraph without loops.

    Immutable after construction; safe to share across workers.
    """

    __slots__ = ("vertex_count", "edges", "labels", "_incidence", "_degrees")

    def __init__(self, vertex_count: int, edges, labels=None):
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in edges)
        for i, (u, v) in enumerate(edges):
            if u == v:
                raise GraphError(f"edge {i} is a loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge {i} endpoint out of range: ({u}, {v})")
        self.vertex_count = vertex_count
        self.edges = edges
        self.labels = tuple(labels) if labels is not None else None
        inc = [[] for _ in range(vertex_count)]
        deg = [0] * vertex_count
        for eid, (u, v) in enumerate(edges):
            inc[u].append((eid, v))
            inc[v].append((eid, u))
            deg[u] += 1
            deg[v] += 1
        self._incidence = tuple(tuple(x) for x in inc)
        self._degrees = tuple(deg)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> tuple:
        return self._degrees

    def incident(self, v: int) -> tuple:
        """Pairs (edge_id, other_endpoint) in edge-id order per vertex."""
        return self._incidence[v]

    def endpoints(self, eid: int) -> tuple:
        return self.edges[eid]

    def neighbors(self, v: int):
        return [w for _, w in self._incidence[v]]

    def adjacency_masks(self) -> list:
        """Per-vertex neighbor bitmask of the simple projection."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def remove_edges(self, edge_ids) -> tuple:
        """New graph without the given edges, keeping all vertices.

        Returns (graph, id_map) where id_map[new_id] = old_id.
        """
        drop = set(edge_ids)
        keep = [eid for eid in range(len(self.edges)) if eid not in drop]
        g = Graph(self.vertex_count, [self.edges[eid] for eid in keep],
                  labels=self.labels)
        return g, tuple(keep)

    def simple_projection(self) -> tuple:
        """Deduplicate parallel edges; keeps the smallest id of each class.

        Returns (graph, id_map) with id_map[new_id] = old_id.
        """
        seen = {}
        keep = []
        for eid, (u, v) in enumerate(self.edges):
            key = (u, v) if u < v else (v, u)
            if key not in seen:
                seen[key] = eid
                keep.append(eid)
        g = Graph(self.vertex_count, [self.edges[eid] for eid in keep],
                  labels=self.labels)
        return g, tuple(keep)

    def is_simple(self) -> bool:
        keys = {(min(u, v), max(u, v)) for u, v in self.edges}
        return len(keys) == len(self.edges)

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph(V={self.vertex_count}, E={len(self.edges)})"


class EdgeSubset:
    """Immutable bitset over the edge ids of a specific graph."""

    __slots__ = ("edge_count", "bits")

    def __init__(self, edge_count: int, ids=()):
        self.edge_count = edge_count
        bits = 0
        for eid in ids:
            if not 0 <= eid < edge_count:
                raise GraphError(f"edge id {eid} out of range")
            bits |= 1 << eid
        self.bits = bits

    @classmethod
    def _from_bits(cls, edge_count: int, bits: int) -> "EdgeSubset":
        s = cls(edge_count)
        s.bits = bits
        return s

    def __contains__(self, eid: int) -> bool:
        return bool(self.bits >> eid & 1)

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def ids(self) -> tuple:
        return tuple(self)

    def __eq__(self, other):
        return (isinstance(other, EdgeSubset)
                and self.edge_count == other.edge_count
                and self.bits == other.bits)

    def __hash__(self):
        return hash((self.edge_count, self.bits))

    def __repr__(self):
        return f"EdgeSubset({sorted(self)} of {self.edge_count})"


# ---------------------------------------------------------------------------
# parsing


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: lines "u v", optional header "n <count>".

    '#' begins a comment line. Duplicate lines produce parallel edges.
    Without a header the vertex count is max index + 1.
    """
    edges = []
    forced_n = None
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or forced_n is not None:
                raise GraphError(f"line {lineno}: bad header {line!r}")
            try:
                forced_n = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad header {line!r}") from None
            if forced_n < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphError(f"line {lineno}: loop edge {u} {v}")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = forced_n if forced_n is not None else max_seen + 1
    if max_seen >= n:
        raise GraphError(f"vertex index {max_seen} exceeds declared count {n}")
    return Graph(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _g6_read_n(data: bytes) -> tuple:
    """Decode the graph6 size field; returns (n, offset)."""
    if not data:
        raise GraphError("empty graph6 input")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        return n, 4
    if len(data) < 8:
        raise GraphError("truncated graph6 size field")
    n = 0
    for b in data[2:8]:
        n = n << 6 | (b - 63)
    return n, 8


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word (simple graphs only).

    Accepts the optional '>>graph6<<' header. Bit layout per the public
    format description: upper triangle, column major, 6-bit groups
    biased by 63.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    if not s:
        raise GraphError("empty graph6 input")
    data = s.encode("ascii", errors="strict") if isinstance(s, str) else s
    for b in data:
        if not 63 <= b <= 126:
            raise GraphError(f"graph6 byte {b} outside 63..126")
    n, off = _g6_read_n(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise GraphError(
            f"graph6 body length {len(body)} != expected {expect} for n={n}")
    bits = 0
    for b in body:
        bits = bits << 6 | (b - 63)
    pad = 6 * expect - nbits
    bits >>= pad
    edges = []
    pos = nbits - 1  # first bit is the most significant one
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a simple graph as one graph6 word."""
    if not g.is_simple():
        raise GraphError("graph6 encodes simple graphs only")
    n = g.vertex_count
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [(n >> 6 * k & 63) + 63 for k in range(5, -1, -1)]
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | adj[i][j]
    pad = (-nbits) % 6
    bits <<= pad
    body = []
    for k in range((nbits + pad) // 6 - 1, -1, -1):
        body.append((bits >> 6 * k & 63) + 63)
    return bytes(head + body).decode("ascii")


# ---------------------------------------------------------------------------
# structural predicates


def is_connected(g: Graph) -> bool:
    """True iff g has at most one component (V=0 counts as connected)."""
    n = g.vertex_count
    if n == 0:
        return True
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for _, w in g.incident(v):
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def component_count(g: Graph) -> int:
    n = g.vertex_count
    seen = [False] * n
    comps = 0
    for s in range(n):
        if seen[s]:
            continue
        comps += 1
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for _, w in g.incident(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return comps


def bridges(g: Graph) -> EdgeSubset:
    """Edges whose removal increases the component count.

    Iterative DFS with lowpoints; re-entry is blocked per edge id, so a
    parallel pair is never reported as a bridge.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    out = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # stack entries: (vertex, entering edge id, incidence cursor)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, ein, i = stack.pop()
            inc = g.incident(v)
            advanced = False
            while i < len(inc):
                eid, w = inc[i]
                i += 1
                if eid == ein:
                    continue
                if disc[w] == -1:
                    stack.append((v, ein, i))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced and ein != -1:
                # v is finished; fold its lowpoint into the parent
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] > disc[pv]:
                    out |= 1 << ein
    return EdgeSubset._from_bits(len(g.edges), out)


def is_cubic(g: Graph) -> bool:
    """Every vertex has degree exactly 3 (parallel edges count)."""
    return g.vertex_count > 0 and all(d == 3 for d in g.degrees())


def _connected_after_deleting(g: Graph, removed: set) -> bool:
    n = g.vertex_count
    alive = [v for v in range(n) if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        v = stack.pop()
        for _, w in g.incident(v):
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff g is k-vertex-connected.

    Checked by deleting every vertex subset of size < k; complete graphs
    follow the convention that K_n is (n-1)-connected.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    n = g.vertex_count
    if n == 0:
        return False
    masks = g.adjacency_masks()
    complete = all(masks[v] == ((1 << n) - 1) ^ (1 << v) for v in range(n))
    if complete:
        return n - 1 >= k
    if n <= k:
        return False
    for size in range(k):
        for subset in itertools.combinations(range(n), size):
            if not _connected_after_deleting(g, set(subset)):
                return False
    return True


def girth(g: Graph):
    """Length of the shortest cycle; UNBOUNDED for forests.

    A parallel pair counts as a 2-cycle. Exact: for each edge, the
    shortest path between its endpoints avoiding that edge closes the
    shortest cycle through it.
    """
    best = None
    m = len(g.edges)
    for eid in range(m):
        u, v = g.edges[eid]
        # BFS from u to v without using edge eid
        dist = {u: 0}
        queue = [u]
        found = None
        while queue and found is None:
            nxt = []
            for x in queue:
                if best is not None and dist[x] + 1 >= best:
                    continue
                for fid, y in g.incident(x):
                    if fid == eid or y in dist:
                        continue
                    dist[y] = dist[x] + 1
                    if y == v:
                        found = dist[y]
                        break
                    nxt.append(y)
                if found is not None:
                    break
            queue = nxt
        if found is not None:
            cyc = found + 1
            if best is None or cyc < best:
                best = cyc
    return UNBOUNDED if best is None else best
