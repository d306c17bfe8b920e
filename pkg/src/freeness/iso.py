"""Canonical forms and isomorphism tests for small simple graphs.

Individualization-refinement with a lexicographically-minimal target
encoding. Intended for graphs up to ~16 vertices (family membership,
catalog deduplication); no attempt at nauty-scale performance.
"""

from __future__ import annotations

from .graph import Graph


def _refine(n: int, adj: list, colors: list) -> list:
    """Stable color refinement; colors are small ints, order-significant."""
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = adj[v]
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        order = sorted(set(sigs))
        relabel = {s: i for i, s in enumerate(order)}
        new = [relabel[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _cells(n: int, colors: list) -> list:
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _encode(n: int, adj: list, order: list) -> bytes:
    """Upper-triangle bits of the relabeled adjacency, row-major."""
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * n
    for v in range(n):
        m = adj[v]
        pv = pos[v]
        while m:
            low = m & -m
            rows[pv] |= 1 << pos[low.bit_length() - 1]
            m ^= low
    bits = bytearray()
    acc = 0
    cnt = 0
    for i in range(n):
        for j in range(i + 1, n):
            acc = acc << 1 | (rows[i] >> j & 1)
            cnt += 1
            if cnt == 8:
                bits.append(acc)
                acc = cnt = 0
    if cnt:
        bits.append(acc << (8 - cnt))
    return bytes(bits)


def _multipartite_parts(n: int, adj: list):
    """Part sizes if the graph is complete multipartite, else None.

    Complete multipartite == every component of the complement is a
    clique. Includes empty and complete graphs.
    """
    full = (1 << n) - 1
    co = [full ^ (1 << v) ^ adj[v] for v in range(n)]
    seen = 0
    parts = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        stack = [s]
        while stack:
            v = stack.pop()
            m = co[v] & ~comp
            comp |= co[v]
            while m:
                low = m & -m
                stack.append(low.bit_length() - 1)
                m ^= low
        for v in range(n):
            if comp >> v & 1 and (co[v] | 1 << v) != comp:
                return None  # complement component is not a clique
        seen |= comp
        parts.append(comp.bit_count())
    return sorted(parts)


def canonical_key(g: Graph) -> bytes:
    """Canonical encoding of the simple projection of g.

    Two graphs are isomorphic iff their keys (and vertex counts) match.
    """
    n = g.vertex_count
    adj = g.adjacency_masks()
    # complete multipartite graphs (incl. empty/complete) would cascade
    # through refinement; they are determined by their part sizes
    parts = _multipartite_parts(n, adj)
    if parts is not None:
        rows = []
        start = 0
        for size in parts:
            rows.append((start, size))
            start += size
        order = []
        masks = [0] * n
        for start, size in rows:
            order.extend(range(start, start + size))
        for i, (s1, k1) in enumerate(rows):
            for s2, k2 in rows[i + 1:]:
                for a in range(s1, s1 + k1):
                    for b in range(s2, s2 + k2):
                        masks[a] |= 1 << b
                        masks[b] |= 1 << a
        return bytes([n]) + _encode(n, masks, order)

    best = [None]

    def walk(colors):
        cells = _cells(n, colors)
        split = next((c for c in cells if len(c) > 1), None)
        if split is None:
            order = [c[0] for c in cells]
            key = _encode(n, adj, order)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        base = max(colors) + 1
        for v in split:
            child = colors[:]
            child[v] = base
            walk(_refine(n, adj, child))

    walk(_refine(n, adj, [0] * n))
    return bytes([n]) + best[0]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.vertex_count != b.vertex_count:
        return False
    sa, _ = a.simple_projection()
    sb, _ = b.simple_projection()
    if len(sa.edges) != len(sb.edges):
        return False
    if sorted(sa.degrees()) != sorted(sb.degrees()):
        return False
    return canonical_key(sa) == canonical_key(sb)
