"""Petersen-family minor containment.

Minor testing searches directly for a minor model (disjoint connected
branch sets with the required adjacencies) with capacity pruning, which
refutes fast on sparse hosts; every Found result carries a model that an
independent verifier re-checks without re-searching.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, GraphError
from .iso import canonical_key, are_isomorphic
from .cycles import FOUND, NOT_FOUND, BUDGET


@dataclass(frozen=True)
class MinorModel:
    """branch_of[host_vertex] is a pattern vertex or None; realized[i] is
    the host edge standing in for pattern edge i."""

    branch_of: tuple
    realized: tuple


@dataclass(frozen=True)
class MinorResult:
    status: str
    model: MinorModel | None
    nodes: int


@dataclass(frozen=True)
class PetersenFamily:
    members: tuple
    names: tuple

    def __len__(self):
        return len(self.members)


class _BudgetHit(Exception):
    pass


# ---------------------------------------------------------------------------
# delta-wye transforms


def delta_y(g: Graph, triangle: tuple) -> Graph:
    """Replace a triangle by a new degree-3 vertex joined to its corners."""
    e1, e2, e3 = triangle
    verts = set()
    for eid in (e1, e2, e3):
        verts.update(g.endpoints(eid))
    if len({e1, e2, e3}) != 3 or len(verts) != 3:
        raise GraphError("edges do not form a triangle")
    pairs = {frozenset(g.endpoints(eid)) for eid in (e1, e2, e3)}
    if len(pairs) != 3:
        raise GraphError("edges do not form a triangle")
    w = g.vertex_count
    edges = [g.edges[eid] for eid in range(len(g.edges))
             if eid not in (e1, e2, e3)]
    edges.extend((a, w) for a in sorted(verts))
    return Graph(g.vertex_count + 1, edges)


def y_delta(g: Graph, v: int) -> Graph:
    """Replace a degree-3 vertex by a triangle on its neighbors.

    Parallel edges that arise are kept; callers that need the simple
    graph project afterwards.
    """
    inc = g.incident(v)
    if len(inc) != 3:
        raise GraphError(f"vertex {v} does not have degree 3")
    nbrs = [w for _, w in inc]
    if len(set(nbrs)) != 3:
        raise GraphError(f"vertex {v} has a repeated neighbor")
    relabel = lambda x: x if x < v else x - 1
    edges = [(relabel(a), relabel(b)) for eid, (a, b) in enumerate(g.edges)
             if v not in (a, b)]
    a, b, c = sorted(relabel(x) for x in nbrs)
    edges.extend([(a, b), (a, c), (b, c)])
    return Graph(g.vertex_count - 1, edges)


def _triangles(g: Graph):
    seen = set()
    masks = g.adjacency_masks()
    simple, idmap = g.simple_projection()
    by_pair = {}
    for eid, (u, v) in enumerate(simple.edges):
        by_pair[frozenset((u, v))] = idmap[eid]
    for a in range(g.vertex_count):
        for b in range(a + 1, g.vertex_count):
            if not masks[a] >> b & 1:
                continue
            common = masks[a] & masks[b]
            c = common >> (b + 1)
            base = b + 1
            while c:
                low = c & -c
                x = base + low.bit_length() - 1
                tri = (by_pair[frozenset((a, b))],
                       by_pair[frozenset((a, x))],
                       by_pair[frozenset((b, x))])
                if tri not in seen:
                    seen.add(tri)
                    yield tri
                c ^= low
    return


_FAMILY_CACHE = None


def petersen_family() -> PetersenFamily:
    """The delta-wye closure of K6 under simple-graph projection.

    Exactly seven pairwise non-isomorphic 15-edge graphs, including the
    Petersen graph.
    """
    global _FAMILY_CACHE
    if _FAMILY_CACHE is not None:
        return _FAMILY_CACHE
    k6 = Graph(6, list(itertools.combinations(range(6), 2)))
    frontier = [k6]
    seen = {canonical_key(k6): k6}
    while frontier:
        nxt = []
        for g in frontier:
            candidates = []
            for tri in _triangles(g):
                candidates.append(delta_y(g, tri))
            for v in range(g.vertex_count):
                inc = g.incident(v)
                if len(inc) == 3 and len({w for _, w in inc}) == 3:
                    candidates.append(y_delta(g, v))
            for h in candidates:
                hs, _ = h.simple_projection()
                if len(hs.edges) != 15:
                    continue  # a parallel edge was merged away
                key = canonical_key(hs)
                if key not in seen:
                    seen[key] = hs
                    nxt.append(hs)
        frontier = nxt
    members = sorted(seen.values(),
                     key=lambda g: (g.vertex_count, canonical_key(g)))
    if len(members) != 7:
        raise AssertionError(f"delta-wye closure has {len(members)} members")
    names = []
    for g in members:
        degs = sorted(g.degrees())
        if g.vertex_count == 6:
            names.append("K6")
        elif g.vertex_count == 10:
            names.append("Petersen")
        elif degs == [4] * 6 + [6]:
            names.append("K3,3,1")
        elif degs == [3, 3] + [4] * 6 and _is_k44_minus_edge(g):
            names.append("K4,4-e")
        else:
            names.append(f"PF{g.vertex_count}")
    _FAMILY_CACHE = PetersenFamily(tuple(members), tuple(names))
    return _FAMILY_CACHE


def _is_k44_minus_edge(g: Graph) -> bool:
    k44 = Graph(8, [(i, j) for i in range(4) for j in range(4, 8)])
    ref = k44.remove_edges([0])[0]
    return are_isomorphic(g, ref)


# ---------------------------------------------------------------------------
# minor model search


def _min_branch_size(sorted_degs_desc, need: int, cap: int):
    """Smallest h with (sum of h largest degrees) - 2(h-1) >= need."""
    total = 0
    for h in range(1, cap + 1):
        total += sorted_degs_desc[h - 1]
        if total - 2 * (h - 1) >= need:
            return h
    return None


def _connected_subsets(masks, seed, allowed, max_size):
    """Yield connected subsets (as bitmasks) containing seed.

    `allowed` must not contain seed. Each qualifying subset is yielded
    exactly once (standard banned-extension enumeration).
    """

    def rec(cur, ext, banned):
        yield cur
        if cur.bit_count() >= max_size:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            banned |= low
            grown = ext | (masks[v] & allowed & ~banned & ~cur)
            yield from rec(cur | low, grown, banned)

    yield from rec(1 << seed, masks[seed] & allowed, 1 << seed)


def _components(masks, region):
    comps = []
    rem = region
    while rem:
        low = rem & -rem
        comp = low
        stack = [low.bit_length() - 1]
        while stack:
            v = stack.pop()
            new = masks[v] & region & ~comp
            comp |= new
            while new:
                nl = new & -new
                stack.append(nl.bit_length() - 1)
                new ^= nl
        comps.append(comp)
        rem &= ~comp
    return comps


def has_minor(host: Graph, pattern: Graph, budget: int = 10**7) -> MinorResult:
    """Search for a minor model of pattern inside host.

    NOT_FOUND is only returned when the branch-set search space was
    exhausted within budget; every FOUND model passes the independent
    verifier.
    """
    hs, hmap = host.simple_projection()
    n = hs.vertex_count
    pn = pattern.vertex_count
    masks = hs.adjacency_masks()
    pdeg = pattern.degrees()
    # multiplicity of pattern demands between vertex pairs
    pmult = {}
    for u, v in pattern.edges:
        key = (u, v) if u < v else (v, u)
        pmult[key] = pmult.get(key, 0) + 1

    if pn > n or len(pmult) > len(hs.edges):
        return MinorResult(NOT_FOUND, None, 0)

    degs_desc = sorted(hs.degrees(), reverse=True)
    min_size = []
    for p in range(pn):
        h = _min_branch_size(degs_desc, pdeg[p], n)
        if h is None:
            return MinorResult(NOT_FOUND, None, 0)
        min_size.append(h)
    if sum(min_size) > n:
        return MinorResult(NOT_FOUND, None, 0)

    pmasks = pattern.adjacency_masks()

    # twin classes: swapping two twins is a pattern automorphism, so the
    # branch sets of a class can be forced into increasing min-vertex order
    twin_class = list(range(pn))
    classes = []
    for p in range(pn):
        for cls in classes:
            rep = cls[0]
            if all((pmasks[p] & ~(1 << q)) == (pmasks[q] & ~(1 << p))
                   for q in cls):
                cls.append(p)
                twin_class[p] = twin_class[rep]
                break
        else:
            classes.append([p])
            twin_class[p] = p
    twin_prev = [None] * pn  # previous member of the same class, if any
    class_pos = [0] * pn
    class_members = [()] * pn
    for cls in classes:
        for i, p in enumerate(cls):
            if i:
                twin_prev[cls[i]] = cls[i - 1]
            class_pos[p] = i
            class_members[p] = tuple(q for q in cls if q != p)

    # pattern placement order: most constrained first, twins consecutive
    order = []
    placed_mask = 0
    remaining = set(range(pn))
    while remaining:
        best = max(remaining, key=lambda p: (
            (pmasks[p] & placed_mask).bit_count() if order else 0,
            twin_prev[p] is not None and placed_mask >> twin_prev[p] & 1,
            pdeg[p], -p))
        order.append(best)
        placed_mask |= 1 << best
        remaining.discard(best)
    suffix_min = [0] * (pn + 1)
    for j in range(pn - 1, -1, -1):
        suffix_min[j] = suffix_min[j + 1] + min_size[order[j]]

    branch = [0] * pn  # pattern vertex -> host mask
    nodes = 0

    def host_edges_between(m1, m2):
        cnt = 0
        for u, v in host.edges:
            if (m1 >> u & 1 and m2 >> v & 1) or (m1 >> v & 1 and m2 >> u & 1):
                cnt += 1
        return cnt

    def neighborhood(mask):
        nb = 0
        m = mask
        while m:
            low = m & -m
            nb |= masks[low.bit_length() - 1]
            m ^= low
        return nb & ~mask

    def induced_edge_count(mask):
        cnt = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            cnt += (masks[v] & mask).bit_count()
            m ^= low
        return cnt // 2

    nbhd = [0] * pn  # cached neighborhood of each placed branch set
    placed_bits_at = [0] * (pn + 1)
    for j, p in enumerate(order):
        placed_bits_at[j + 1] = placed_bits_at[j] | 1 << p

    def feasible_future(j, unused):
        """Every unplaced pattern vertex with placed neighbors must have a
        single unused component meeting all those frontiers, and every
        placed vertex needs one free frontier vertex per unplaced
        neighbor."""
        placed_bits = placed_bits_at[j]
        comps = _components(masks, unused)
        for t in range(pn):
            if placed_bits >> t & 1:
                continue
            anchor_fronts = []
            m = pmasks[t] & placed_bits
            while m:
                low = m & -m
                q = low.bit_length() - 1
                f = nbhd[q] & unused
                if not f:
                    return None
                anchor_fronts.append(f)
                m ^= low
            if anchor_fronts:
                if not any(all(c & f for f in anchor_fronts) for c in comps):
                    return None
        for q in order[:j]:
            r = (pmasks[q] & ~placed_bits).bit_count()
            if r and (nbhd[q] & unused).bit_count() < r:
                return None
        return comps

    def place(j, used):
        nonlocal nodes
        if j == pn:
            return True
        unused = ((1 << n) - 1) & ~used
        comps = feasible_future(j, unused)
        if comps is None:
            return False
        p = order[j]
        anchors = [q for q in order[:j] if pmasks[p] >> q & 1]
        max_sz = n - used.bit_count() - suffix_min[j + 1]
        if max_sz < min_size[p]:
            return False
        # a candidate lives inside one unused component that can see
        # every anchor's frontier
        region = 0
        for c in comps:
            if all(c & nbhd[q] for q in anchors):
                region |= c
        if anchors:
            zone = nbhd[anchors[0]] & region
        else:
            zone = region
        z = zone
        while z:
            low = z & -z
            z ^= low
            seed = low.bit_length() - 1
            # subsets whose smallest zone vertex is this seed
            allowed = region & ~(low - 1 & zone) & ~low
            for cand in _connected_subsets(masks, seed, allowed, max_sz):
                nodes += 1
                if nodes > budget:
                    raise _BudgetHit
                if cand.bit_count() < min_size[p]:
                    continue
                nb = neighborhood(cand)
                ok = True
                for q in anchors:
                    key = (p, q) if p < q else (q, p)
                    need = pmult[key]
                    if not nb & branch[q]:
                        ok = False
                        break
                    if need > 1 and host_edges_between(cand, branch[q]) < need:
                        ok = False
                        break
                if not ok:
                    continue
                boundary = 0
                m = cand
                while m:
                    lw = m & -m
                    boundary += (masks[lw.bit_length() - 1] & ~cand).bit_count()
                    m ^= lw
                if boundary < pdeg[p]:
                    continue
                branch[p] = cand
                nbhd[p] = nb
                if place(j + 1, used | cand):
                    return True
                branch[p] = 0
        return False

    try:
        found = place(0, 0)
    except _BudgetHit:
        return MinorResult(BUDGET, None, nodes)
    if not found:
        return MinorResult(NOT_FOUND, None, nodes)

    branch_of = [None] * host.vertex_count
    for p in range(pn):
        m = branch[p]
        while m:
            low = m & -m
            branch_of[low.bit_length() - 1] = p
            m ^= low
    # realize pattern edges with distinct original host edges
    taken = set()
    realized = []
    for u, v in pattern.edges:
        pick = None
        for eid, (a, b) in enumerate(host.edges):
            if eid in taken:
                continue
            if ((branch[u] >> a & 1 and branch[v] >> b & 1)
                    or (branch[u] >> b & 1 and branch[v] >> a & 1)):
                pick = eid
                break
        if pick is None:
            raise AssertionError("model realization failed")
        taken.add(pick)
        realized.append(pick)
    model = MinorModel(tuple(branch_of), tuple(realized))
    if not verify_minor_model(host, pattern, model):
        raise AssertionError("search produced an invalid model")
    return MinorResult(FOUND, model, nodes)


def verify_minor_model(host: Graph, pattern: Graph, model: MinorModel) -> bool:
    """Re-check a minor model without re-searching.

    Branch sets must be nonempty, disjoint (by construction of the
    assignment map) and connected; each pattern edge must be realized by
    its own host edge joining the right branch sets.
    """
    if len(model.branch_of) != host.vertex_count:
        return False
    if len(model.realized) != len(pattern.edges):
        return False
    sets = {}
    for v, p in enumerate(model.branch_of):
        if p is None:
            continue
        if not 0 <= p < pattern.vertex_count:
            return False
        sets.setdefault(p, set()).add(v)
    for p in range(pattern.vertex_count):
        vs = sets.get(p)
        if not vs:
            return False
        seen = {min(vs)}
        stack = [min(vs)]
        while stack:
            x = stack.pop()
            for _, w in host.incident(x):
                if w in vs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != vs:
            return False
    if len(set(model.realized)) != len(model.realized):
        return False
    for i, (u, v) in enumerate(pattern.edges):
        a, b = host.endpoints(model.realized[i])
        pa, pb = model.branch_of[a], model.branch_of[b]
        if {pa, pb} != {u, v}:
            return False
    return True


# ---------------------------------------------------------------------------
# intrinsic linking


@dataclass(frozen=True)
class LinkageResult:
    status: str  # linked | linkless | budget-exhausted
    member_index: int | None
    member_name: str | None
    model: MinorModel | None
    records: tuple  # one per family member: (name, status, nodes)
    nodes: int


LINKED = "linked"
LINKLESS = "linkless"


def is_intrinsically_linked(g: Graph, budget: int = 10**7) -> LinkageResult:
    """Linked iff some Petersen-family member is a minor of g.

    Fast filter: fewer than 15 simple edges or 6 vertices cannot contain
    a member. Linkless requires all seven refutations to be exhaustive.
    """
    fam = petersen_family()
    gs, _ = g.simple_projection()
    if len(gs.edges) < 15 or g.vertex_count < 6:
        records = tuple((name, "filtered", 0) for name in fam.names)
        return LinkageResult(LINKLESS, None, None, None, records, 0)
    records = []
    total = 0
    exhausted = True
    for idx, (member, name) in enumerate(zip(fam.members, fam.names)):
        res = has_minor(g, member, budget)
        total += res.nodes
        if res.status == FOUND:
            records.append((name, "found", res.nodes))
            return LinkageResult(LINKED, idx, name, res.model,
                                 tuple(records), total)
        records.append((name, "refuted" if res.status == NOT_FOUND
                        else "budget-exhausted", res.nodes))
        if res.status == BUDGET:
            exhausted = False
    if not exhausted:
        return LinkageResult(BUDGET, None, None, None, tuple(records), total)
    return LinkageResult(LINKLESS, None, None, None, tuple(records), total)
