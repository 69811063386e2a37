"""Vertex permutations and the searches built on them.

Covers automorphism verification, backtracking searches for involutions that
move every edge (or every vertex), graph isomorphism, exact canonical forms
for small graphs, antipodal maps, and subgraph embedding.

All searches are exhaustive: a None result is a proof of non-existence, not a
heuristic failure.  Candidate images are tried in ascending label order inside
color classes so returned witnesses are reproducible.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .graphs import Edge, Graph

Perm = tuple[int, ...]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a search hits its deadline; never silently wrong."""


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """compose(p, q): apply q first, then p."""
    return tuple(p[q[v]] for v in range(len(p)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for v, w in enumerate(p):
        inv[w] = v
    return tuple(inv)


def apply_edge(p: Perm, e: Edge) -> Edge:
    u, v = p[e[0]], p[e[1]]
    return (u, v) if u < v else (v, u)


def is_permutation(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def is_automorphism(g: Graph, p) -> bool:
    """True iff p is a vertex permutation of g mapping edges onto edges."""
    if not is_permutation(p, g.order):
        raise ValueError(f"not a permutation of 0..{g.order - 1}: {p!r}")
    return all(apply_edge(p, e) in g.edges for e in g.edges)


@dataclass(frozen=True)
class InvolutionReport:
    involutory: bool
    fixed_vertices: tuple[int, ...]
    fixed_edges: tuple[Edge, ...]


def classify_involution(g: Graph, p) -> InvolutionReport:
    """Check order 2 and list fixed vertices and fixed edges of an automorphism.

    A fixed edge is any e with image e as a set, so swapped endpoints count.
    """
    p = tuple(p)
    if not is_automorphism(g, p):
        raise ValueError("permutation is not an automorphism of the graph")
    involutory = compose(p, p) == identity_perm(g.order)
    fixed_vertices = tuple(v for v in range(g.order) if p[v] == v)
    fixed_edges = tuple(e for e in g.edge_list if apply_edge(p, e) == e)
    return InvolutionReport(involutory, fixed_vertices, fixed_edges)


# ---------------------------------------------------------------------------
# Color refinement (shared pruning for all searches)
# ---------------------------------------------------------------------------

def refine_colors(g: Graph, initial=None) -> tuple[int, ...]:
    """1-dimensional Weisfeiler-Leman refinement to a stable coloring.

    Color values are ranks of class signatures, so they are invariant under
    isomorphism and comparable across graphs.
    """
    n = g.order
    colors = tuple(initial) if initial is not None else tuple(g.degree(v) for v in range(n))
    colors = _rank(colors)
    while True:
        sigs = tuple(
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))
            for v in range(n)
        )
        new = _rank(sigs)
        if new == colors:
            return colors
        colors = new


def _rank(values) -> tuple[int, ...]:
    order = {s: i for i, s in enumerate(sorted(set(values)))}
    return tuple(order[s] for s in values)


# ---------------------------------------------------------------------------
# Involution searches
# ---------------------------------------------------------------------------

def find_fixed_edge_free_involution(g: Graph, deadline: float | None = None) -> Perm | None:
    """Involutory automorphism whose induced edge map has no fixed edge.

    Success decides membership in the automorphism-based-strategy class; a
    None return means the exhaustive search proved no witness exists.
    """
    return _involution_search(g, forbid_fixed_edges=True, forbid_fixed_points=False,
                              deadline=deadline)


def find_fixed_point_free_involution(g: Graph, deadline: float | None = None) -> Perm | None:
    """Involutory automorphism without fixed vertices (order must be even)."""
    if g.order % 2:
        return None
    return _involution_search(g, forbid_fixed_edges=False, forbid_fixed_points=True,
                              deadline=deadline)


def _involution_search(g: Graph, *, forbid_fixed_edges: bool, forbid_fixed_points: bool,
                       deadline: float | None) -> Perm | None:
    # an involution has order exactly 2, so the identity never qualifies:
    # at least one 2-cycle is required
    n = g.order
    if n < 2:
        return None
    colors = refine_colors(g)
    adj = g.adjacency_masks
    img = [-1] * n
    ticks = 0

    def check_deadline():
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 256 == 0 and time.monotonic() > deadline:
            raise SearchBudgetExceeded("involution search deadline exceeded")

    def consistent_pair(v: int, u: int) -> bool:
        # require adj(v, w) == adj(u, img[w]) for every assigned w
        for w in range(n):
            iw = img[w]
            if iw < 0 or w in (v, u):
                continue
            if ((adj[v] >> w) & 1) != ((adj[u] >> iw) & 1):
                return False
            if ((adj[u] >> w) & 1) != ((adj[v] >> iw) & 1):
                return False
        return True

    def consistent_fix(v: int) -> bool:
        for w in range(n):
            iw = img[w]
            if iw < 0 or w == v:
                continue
            if ((adj[v] >> w) & 1) != ((adj[v] >> iw) & 1):
                return False
        return True

    def next_vertex() -> int:
        best = -1
        for v in range(n):
            if img[v] < 0:
                if best < 0:
                    best = v
                if adj[v] & _assigned_mask[0]:
                    return v
        return best

    _assigned_mask = [0]

    def search() -> bool:
        check_deadline()
        v = next_vertex()
        if v < 0:
            return any(img[w] != w for w in range(n))
        if not forbid_fixed_points:
            ok_fixed = consistent_fix(v)
            if ok_fixed and forbid_fixed_edges:
                # a fixed vertex may not be adjacent to another fixed vertex
                ok_fixed = all(img[w] != w for w in g.adjacency[v])
            if ok_fixed:
                img[v] = v
                _assigned_mask[0] |= 1 << v
                if search():
                    return True
                img[v] = -1
                _assigned_mask[0] &= ~(1 << v)
        for u in range(v + 1, n):
            if img[u] >= 0 or colors[u] != colors[v]:
                continue
            if forbid_fixed_edges and ((adj[v] >> u) & 1):
                continue  # swapping adjacent vertices fixes the edge between them
            if not consistent_pair(v, u):
                continue
            img[v], img[u] = u, v
            _assigned_mask[0] |= (1 << v) | (1 << u)
            if search():
                return True
            img[v] = img[u] = -1
            _assigned_mask[0] &= ~((1 << v) | (1 << u))
        return False

    if search():
        return tuple(img)
    return None


def antipodal_involution(g: Graph) -> Perm | None:
    """Map every vertex to its unique farthest vertex, when that is well
    defined and the resulting map is an involutory automorphism.

    The correspondence is verified, not assumed: if any vertex has several
    farthest vertices, or the map fails to preserve adjacency, the graph is
    reported as not antipodal by returning None.
    """
    if not g.is_connected():
        raise ValueError("antipodal map needs a connected graph")
    n = g.order
    if n == 1:
        return None
    mapping = []
    for v in range(n):
        dist = _bfs_distances(g, v)
        ecc = max(dist)
        farthest = [u for u, d in enumerate(dist) if d == ecc]
        if len(farthest) != 1:
            return None
        mapping.append(farthest[0])
    p = tuple(mapping)
    if not is_permutation(p, n) or compose(p, p) != identity_perm(n):
        return None
    if not is_automorphism(g, p):
        return None
    return p


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

def find_isomorphism(g: Graph, h: Graph, deadline: float | None = None) -> Perm | None:
    """Bijection V(g) -> V(h) preserving adjacency both ways, or None.

    Color-refinement preprocessing, then backtracking over color classes.
    """
    maps = _iso_search(g, h, find_all=False, deadline=deadline)
    return maps[0] if maps else None


def enumerate_automorphisms(g: Graph, deadline: float | None = None) -> list[Perm]:
    """All automorphisms of g, in lexicographic image order."""
    return _iso_search(g, g, find_all=True, deadline=deadline)


def _iso_search(g: Graph, h: Graph, *, find_all: bool, deadline: float | None) -> list[Perm]:
    n = g.order
    if n != h.order or g.size != h.size:
        return []
    if g.degree_sequence() != h.degree_sequence():
        return []
    gcolors = refine_colors(g)
    hcolors = refine_colors(h)
    if sorted(gcolors) != sorted(hcolors):
        return []
    hadj = h.adjacency_masks
    gadj = g.adjacency_masks
    by_color: dict[int, list[int]] = {}
    for u, c in enumerate(hcolors):
        by_color.setdefault(c, []).append(u)

    class_size = {c: len(vs) for c, vs in by_color.items()}
    order = sorted(range(n), key=lambda v: (class_size[gcolors[v]], gcolors[v], v))

    img = [-1] * n
    used = [False] * n
    results: list[Perm] = []
    ticks = 0

    def search(pos: int) -> bool:
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 512 == 0 and time.monotonic() > deadline:
            raise SearchBudgetExceeded("isomorphism search deadline exceeded")
        if pos == n:
            results.append(tuple(img))
            return not find_all
        v = order[pos]
        for u in by_color[gcolors[v]]:
            if used[u]:
                continue
            ok = True
            for j in range(pos):
                w = order[j]
                if ((gadj[v] >> w) & 1) != ((hadj[u] >> img[w]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            img[v] = u
            used[u] = True
            if search(pos + 1):
                return True
            img[v] = -1
            used[u] = False
        return False

    search(0)
    return results


# ---------------------------------------------------------------------------
# Canonical forms (exact, small graphs)
# ---------------------------------------------------------------------------

def canonical_form(g: Graph):
    """Hashable certificate with canonical_form(g1) == canonical_form(g2)
    iff g1 and g2 are isomorphic.

    Individualization-refinement: refine, then branch over the first smallest
    non-singleton color class, taking the minimum relabeled edge tuple over
    all leaves.  Exact but exponential in the worst case; meant for the small
    graphs this workbench deals in.
    """
    n = g.order
    if n == 0:
        return (0, ())
    best: list[tuple | None] = [None]

    def rec(colors):
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                if target is None or len(classes[c]) < len(classes[target]):
                    target = c
        if target is None:
            perm = colors  # discrete: color ranks are a bijection
            cand = tuple(sorted(apply_edge(perm, e) for e in g.edges))
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        base = max(colors) + 1
        for v in classes[target]:
            split = list(colors)
            split[v] = base
            rec(refine_colors(g, split))

    rec(refine_colors(g))
    return (n, best[0])


# ---------------------------------------------------------------------------
# Subgraph embedding (monomorphism, not induced)
# ---------------------------------------------------------------------------

def embed_pattern(host_masks, pattern: Graph, require_edge: Edge | None = None):
    """Map the non-isolated vertices of pattern injectively into the host so
    that every pattern edge lands on a host edge.

    host_masks: adjacency bitmasks indexed by host vertex (mask of neighbors).
    require_edge: if given, some pattern edge must map onto exactly this host
    edge; used for incremental "did this move create a copy" checks.

    Returns the vertex mapping as a dict, or None.
    """
    pverts = pattern.non_isolated()
    if not pverts:
        return {}
    nhost = len(host_masks)
    host_deg = [bin(m).count("1") for m in host_masks]
    pdeg = {v: pattern.degree(v) for v in pverts}

    def extend(order, mapping, used):
        if len(mapping) == len(pverts):
            return dict(mapping)
        v = order[len(mapping)]
        anchors = [w for w in pattern.adjacency[v] if w in mapping]
        if anchors:
            cands = _mask_bits(_mask_intersect(host_masks, [mapping[w] for w in anchors]))
        else:
            cands = range(nhost)
        for cand in cands:
            if cand in used or host_deg[cand] < pdeg[v]:
                continue
            mapping[v] = cand
            used.add(cand)
            got = extend(order, mapping, used)
            if got is not None:
                return got
            del mapping[v]
            used.remove(cand)
        return None

    def ordered_from(seed_pair=None):
        seen = []
        seen_set = set()
        if seed_pair:
            for v in seed_pair:
                seen.append(v)
                seen_set.add(v)
        while len(seen) < len(pverts):
            nxt = None
            for v in pverts:
                if v in seen_set:
                    continue
                if any(w in seen_set for w in pattern.adjacency[v]):
                    nxt = v
                    break
            if nxt is None:
                nxt = next(v for v in pverts if v not in seen_set)
            seen.append(nxt)
            seen_set.add(nxt)
        return seen

    if require_edge is None:
        return extend(ordered_from(), {}, set())

    a, b = require_edge
    for p, q in pattern.edges:
        for (pv, qv) in ((p, q), (q, p)):
            if pdeg[pv] > host_deg[a] or pdeg[qv] > host_deg[b]:
                continue
            mapping = {pv: a, qv: b}
            got = extend(ordered_from((pv, qv)), mapping, {a, b})
            if got is not None:
                return got
    return None


def _mask_intersect(host_masks, host_vertices):
    m = ~0
    for hv in host_vertices:
        m &= host_masks[hv]
    return m


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
