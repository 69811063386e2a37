"""Immutable simple graphs, named families, products and derived constructions.

Vertices are always the dense integers 0..n-1 and every constructor documents
its labeling, so that permutation and strategy certificates are stable across
runs.  Product graphs encode the vertex pair (u1, u2) row-major as u1*n2 + u2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, reduce

Edge = tuple[int, int]

PLATONIC_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to (min, max)."""
    if u == v:
        raise ValueError(f"loop edge ({u},{v}) is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus a set of normalized edges."""

    order: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.order):
                raise ValueError(f"edge ({u},{v}) out of range for order {self.order}")

    @staticmethod
    def build(order: int, edges=()) -> "Graph":
        return Graph(order, frozenset(edge(u, v) for u, v in edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges sorted lexicographically; the canonical edge indexing."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adjacency))

    def non_isolated(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.order) if self.adjacency[v])

    def is_connected(self) -> bool:
        if self.order <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def relabel(self, perm) -> "Graph":
        """Apply a vertex permutation: vertex v becomes perm[v]."""
        return Graph.build(self.order, ((perm[u], perm[v]) for u, v in self.edges))

    def strip_isolated(self) -> "Graph":
        """Drop isolated vertices, relabeling the rest densely in label order."""
        keep = self.non_isolated()
        index = {v: i for i, v in enumerate(keep)}
        return Graph.build(len(keep), ((index[u], index[v]) for u, v in self.edges))

    def to_json_obj(self) -> dict:
        return {"order": self.order, "edges": [list(e) for e in self.edge_list]}

    @staticmethod
    def from_json_obj(obj: dict) -> "Graph":
        return Graph.build(int(obj["order"]), [tuple(e) for e in obj["edges"]])

    def __repr__(self):
        return f"Graph(order={self.order}, size={self.size})"


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """Tagged description of a named graph family instance.

    Path/Cycle parameters count edges (a path of length n has n+1 vertices),
    matching the usual convention for P_n and C_n.
    """

    kind: str
    args: tuple = ()

    @staticmethod
    def path(n: int): return FamilySpec("path", (n,))
    @staticmethod
    def cycle(n: int): return FamilySpec("cycle", (n,))
    @staticmethod
    def complete(n: int): return FamilySpec("complete", (n,))
    @staticmethod
    def complete_bipartite(s: int, t: int): return FamilySpec("complete_bipartite", (s, t))
    @staticmethod
    def star(n: int): return FamilySpec("star", (n,))
    @staticmethod
    def cube(d: int): return FamilySpec("cube", (d,))
    @staticmethod
    def grid(dims): return FamilySpec("grid", tuple(dims))
    @staticmethod
    def platonic(name: str): return FamilySpec("platonic", (name,))
    @staticmethod
    def complete_bipartite_minus_edge(s: int, t: int):
        return FamilySpec("complete_bipartite_minus_edge", (s, t))
    @staticmethod
    def complete_minus_matching(n: int): return FamilySpec("complete_minus_matching", (n,))
    @staticmethod
    def triangle_plus_edge(): return FamilySpec("triangle_plus_edge", ())
    @staticmethod
    def fig1(index: int): return FamilySpec("fig1", (index,))


def path_graph(n: int) -> Graph:
    """Path with n edges on vertices 0..n (n >= 0)."""
    if n < 0:
        raise ValueError("path length must be >= 0")
    return Graph.build(n + 1, ((i, i + 1) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    """Cycle with n edges on vertices 0..n-1 (n >= 3)."""
    if n < 3:
        raise ValueError("cycle length must be >= 3")
    return Graph.build(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.build(n, itertools.combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with parts 0..s-1 and s..s+t-1."""
    if s < 1 or t < 1:
        raise ValueError("bipartite classes must be non-empty")
    return Graph.build(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def star_graph(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.build(n + 1, ((0, i) for i in range(1, n + 1)))


def cube_graph(d: int) -> Graph:
    """Hypercube Q_d; vertex labels are the d-bit strings."""
    if d < 1:
        raise ValueError("cube dimension must be >= 1")
    n = 1 << d
    return Graph.build(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)))


def grid_graph(dims) -> Graph:
    """Cartesian product of paths; dims are path lengths (edge counts)."""
    dims = tuple(dims)
    if not dims or any(d < 1 for d in dims):
        raise ValueError("grid dims must be non-empty and >= 1")
    return reduce(cartesian, (path_graph(d) for d in dims))


def _lcf_graph(n: int, shifts, repeats: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    seq = list(shifts) * repeats
    assert len(seq) == n
    for i, s in enumerate(seq):
        edges.append((i, (i + s) % n))
    return Graph.build(n, edges)


def triangle_plus_edge() -> Graph:
    """Triangle 0,1,2 with the extra edge {2,3} attached at vertex 2."""
    return Graph.build(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def platonic_graph(name: str) -> Graph:
    if name == "tetrahedron":
        return complete_graph(4)
    if name == "cube":
        return cube_graph(3)
    if name == "octahedron":
        return complete_minus_matching(6)
    if name == "dodecahedron":
        return _lcf_graph(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)
    if name == "icosahedron":
        # gyroelongated bipyramid: apexes 0 and 11, pentagons 1..5 and 6..10
        edges = []
        for i in range(5):
            u, l = 1 + i, 6 + i
            edges += [(0, u), (11, l)]
            edges += [(u, 1 + (i + 1) % 5), (l, 6 + (i + 1) % 5)]
            edges += [(u, l), (u, 6 + (i + 1) % 5)]
        return Graph.build(12, edges)
    raise ValueError(f"unknown platonic solid {name!r}")


def complete_bipartite_minus_edge(s: int, t: int) -> Graph:
    """K_{s,t} minus its lexicographically first cross edge {0, s}."""
    g = complete_bipartite(s, t)
    return Graph(g.order, g.edges - {(0, s)})


def complete_minus_matching(n: int) -> Graph:
    """K_n minus the matching {0,1}, {2,3}, ... of size floor(n/2)."""
    g = complete_graph(n)
    matching = {(2 * i, 2 * i + 1) for i in range(n // 2)}
    return Graph(g.order, g.edges - matching)


def _spider(legs) -> Graph:
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.build(nxt, edges)


def fig1_graph(index: int) -> Graph:
    """The eight catalog graphs in SYMM minus AUTO of size 4 and 5."""
    catalog = (
        triangle_plus_edge,                      # 0: triangle with an edge attached
        lambda: path_graph(5),                   # 1: P_5
        lambda: _spider((1, 1, 3)),              # 2: spider with legs 1,1,3
        lambda: star_graph(5),                   # 3: K_{1,5}
        lambda: Graph.build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),  # 4: triangle + 2-tail
        lambda: Graph.build(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),  # 5: bull
        lambda: Graph.build(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),  # 6: K4 - e
        lambda: cycle_graph(5),                  # 7: C_5
    )
    if not 0 <= index < len(catalog):
        raise ValueError("fig1 index must be in 0..7")
    return catalog[index]()


_FAMILY_BUILDERS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "complete_bipartite": complete_bipartite,
    "star": star_graph,
    "cube": cube_graph,
    "grid": lambda *dims: grid_graph(dims),
    "platonic": platonic_graph,
    "complete_bipartite_minus_edge": complete_bipartite_minus_edge,
    "complete_minus_matching": complete_minus_matching,
    "triangle_plus_edge": triangle_plus_edge,
    "fig1": fig1_graph,
}


def make_family(spec: FamilySpec) -> Graph:
    """Build the canonical labeled instance described by a FamilySpec."""
    try:
        builder = _FAMILY_BUILDERS[spec.kind]
    except KeyError:
        raise ValueError(f"unknown family kind {spec.kind!r}") from None
    return builder(*spec.args)


# ---------------------------------------------------------------------------
# Products and derived graphs
# ---------------------------------------------------------------------------

def pair_index(u1: int, u2: int, n2: int) -> int:
    return u1 * n2 + u2


def cartesian(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product: edges inside one factor at a fixed vertex of the other."""
    n2 = g2.order
    edges = []
    for a, b in g1.edges:
        for w in range(n2):
            edges.append((pair_index(a, w, n2), pair_index(b, w, n2)))
    for v in range(g1.order):
        for c, d in g2.edges:
            edges.append((pair_index(v, c, n2), pair_index(v, d, n2)))
    return Graph.build(g1.order * n2, edges)


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    """Lexicographic product g1[g2]: first coordinates adjacent, or equal with
    second coordinates adjacent."""
    n2 = g2.order
    edges = []
    for a, b in g1.edges:
        for x in range(n2):
            for y in range(n2):
                edges.append((pair_index(a, x, n2), pair_index(b, y, n2)))
    for v in range(g1.order):
        for c, d in g2.edges:
            edges.append((pair_index(v, c, n2), pair_index(v, d, n2)))
    return Graph.build(g1.order * n2, edges)


def categorical(g1: Graph, g2: Graph) -> Graph:
    """Categorical (tensor) product: adjacent in both coordinates."""
    n2 = g2.order
    edges = []
    for a, b in g1.edges:
        for c, d in g2.edges:
            edges.append((pair_index(a, c, n2), pair_index(b, d, n2)))
            edges.append((pair_index(a, d, n2), pair_index(b, c, n2)))
    return Graph.build(g1.order * n2, edges)


def graph_sum(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2's vertices are shifted up by g1.order."""
    n1 = g1.order
    edges = list(g1.edges) + [(u + n1, v + n1) for u, v in g2.edges]
    return Graph.build(n1 + g2.order, edges)


def aux_product(g1: Graph, g2: Graph, kind: int) -> Graph:
    """The three auxiliary products whose edge sets partition the lexicographic
    product: 1 = first-adjacent/second-equal, 2 = first-adjacent/second-distinct,
    3 = first-equal/second-adjacent."""
    n2 = g2.order
    edges = []
    if kind == 1:
        for a, b in g1.edges:
            for w in range(n2):
                edges.append((pair_index(a, w, n2), pair_index(b, w, n2)))
    elif kind == 2:
        for a, b in g1.edges:
            for x in range(n2):
                for y in range(n2):
                    if x != y:
                        edges.append((pair_index(a, x, n2), pair_index(b, y, n2)))
    elif kind == 3:
        for v in range(g1.order):
            for c, d in g2.edges:
                edges.append((pair_index(v, c, n2), pair_index(v, d, n2)))
    else:
        raise ValueError("aux product kind must be 1, 2 or 3")
    return Graph.build(g1.order * n2, edges)


def subdivision(g: Graph) -> Graph:
    """Insert one new vertex in every edge; new vertices take labels
    n, n+1, ... following the sorted edge order."""
    n = g.order
    edges = []
    for k, (u, v) in enumerate(g.edge_list):
        w = n + k
        edges.append((u, w))
        edges.append((w, v))
    return Graph.build(n + g.size, edges)


def complement(g: Graph) -> Graph:
    full = set(itertools.combinations(range(g.order), 2))
    return Graph(g.order, frozenset(full - set(g.edges)))
