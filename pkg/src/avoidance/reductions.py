"""Complexity constructions: the reduction R from fixed-point-free involutions
to fixed-edge-free involutions, and both directions of the equivalence between
permuted-automorphism reconstruction (PAR) and graph isomorphism.

Labeling of R(G): original vertices keep 0..n-1, subdivision vertices follow
in sorted edge order, then one 3-vertex star gadget (center, leaf, leaf) per
non-isolated original vertex in vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Edge, Graph, complement, graph_sum
from . import morphisms
from .morphisms import Perm


class NoIsomorphismError(ValueError):
    """The two graphs of a PAR instance are not isomorphic."""


class InvalidCertificateError(ValueError):
    """A permutation offered as a PAR solution is structurally impossible."""


def reduce_r(g: Graph) -> Graph:
    """Subdivide every edge, then hang a 3-star by one of its leaves onto each
    non-isolated original vertex."""
    sub = []
    n = g.order
    for k, (u, v) in enumerate(g.edge_list):
        w = n + k
        sub.append((u, w))
        sub.append((w, v))
    base = n + g.size
    for v in g.non_isolated():
        c, l1, l2 = base, base + 1, base + 2
        sub += [(v, c), (c, l1), (c, l2)]
        base += 3
    return Graph.build(base, sub)


def lift_fixed_point_free(g: Graph, phi) -> Perm:
    """Lift a fixed-point-free involution of g to a fixed-edge-free involution
    of reduce_r(g): subdivision vertices follow the edge action, star gadgets
    ride along with their base vertices."""
    phi = tuple(phi)
    report = morphisms.classify_involution(g, phi)
    if not report.involutory or report.fixed_vertices:
        raise ValueError("permutation is not a fixed-point-free involution")
    n, m = g.order, g.size
    eidx = {e: i for i, e in enumerate(g.edge_list)}
    gadget_base = {}
    base = n + m
    for v in g.non_isolated():
        gadget_base[v] = base
        base += 3
    img = list(range(base))
    for v in range(n):
        img[v] = phi[v]
    for e, i in eidx.items():
        img[n + i] = n + eidx[morphisms.apply_edge(phi, e)]
    for v, b in gadget_base.items():
        b2 = gadget_base[phi[v]]
        img[b], img[b + 1], img[b + 2] = b2, b2 + 1, b2 + 2
    return tuple(img)


def reduction_correctness_check(g: Graph, deadline: float | None = None) -> bool:
    """Does g have a fixed-point-free involution exactly when R(g) has a
    fixed-edge-free one?  Both sides are decided by exhaustive search."""
    has_fpf = morphisms.find_fixed_point_free_involution(g, deadline) is not None
    has_ffe = morphisms.find_fixed_edge_free_involution(reduce_r(g), deadline) is not None
    return has_fpf == has_ffe


# ---------------------------------------------------------------------------
# PAR <-> GI
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParInstance:
    """An instance of permuted automorphism reconstruction: isomorphic graphs
    g and h plus a fixed-edge-free involutory automorphism beta of h."""

    g: Graph
    h: Graph
    beta: Perm

    def __post_init__(self):
        report = morphisms.classify_involution(self.h, self.beta)
        if not report.involutory or report.fixed_edges:
            raise ValueError("beta must be a fixed-edge-free involution of h")

    def to_json_obj(self) -> dict:
        from . import graph6
        return {"g": graph6.encode(self.g), "h": graph6.encode(self.h),
                "beta": list(self.beta)}


def _cone(g: Graph) -> Graph:
    """Add an apex vertex (label n) adjacent to every existing vertex."""
    n = g.order
    return Graph.build(n + 1, list(g.edges) + [(v, n) for v in range(n)])


def preprocess(g: Graph) -> tuple[Graph, list[str]]:
    """Make a graph connected (by complementing) and of odd size (by adding
    apex vertices, at most twice).

    Complementing a disconnected graph yields a connected one.  An apex keeps
    the graph connected, which an isolated extra edge would not, and deleting
    any universal vertex of the coned graph is isomorphic to the original, so
    isomorphism is both preserved and reflected.
    """
    log: list[str] = []
    if not g.is_connected():
        g = complement(g)
        log.append("complement")
    for _ in range(2):
        if g.size % 2 == 1:
            break
        g = _cone(g)
        log.append("apex")
    assert g.size % 2 == 1, "parity fix failed"
    return g, log


@dataclass(frozen=True)
class GiToParResult:
    instance: ParInstance
    g0: Graph
    g1: Graph
    g0_log: tuple[str, ...]
    g1_log: tuple[str, ...]
    n_half: int  # order of the processed g0 (= first component of instance.g)

    def to_json_obj(self) -> dict:
        obj = self.instance.to_json_obj()
        obj["transform_log"] = {"g0": list(self.g0_log), "g1": list(self.g1_log)}
        return obj


def gi_to_par(g0: Graph, g1: Graph) -> GiToParResult:
    """Build the PAR instance (g0' + g1', g0' + g0', copy swap) after the
    connectivity and parity preprocessing; the logs allow inverting the
    transforms on a recovered mapping."""
    p0, log0 = preprocess(g0)
    p1, log1 = preprocess(g1)
    big_g = graph_sum(p0, p1)
    big_h = graph_sum(p0, p0)
    n = p0.order
    beta = tuple(list(range(n, 2 * n)) + list(range(n)))
    instance = ParInstance(big_g, big_h, beta)
    return GiToParResult(instance, g0, g1, tuple(log0), tuple(log1), n)


def par_via_iso(instance: ParInstance, deadline: float | None = None) -> Perm:
    """Solve PAR given an isomorphism oracle: conjugate beta through an
    isomorphism pi from g to h."""
    pi = morphisms.find_isomorphism(instance.g, instance.h, deadline)
    if pi is None:
        raise NoIsomorphismError("instance graphs are not isomorphic")
    alpha = morphisms.compose(morphisms.inverse(pi), morphisms.compose(instance.beta, pi))
    report = morphisms.classify_involution(instance.g, alpha)
    assert report.involutory and not report.fixed_edges
    return alpha


def recover_isomorphism(alpha, result: GiToParResult) -> Perm:
    """Extract an isomorphism g0 -> g1 from a PAR solution on a gi_to_par
    instance, undoing the preprocessing.

    alpha must swap the two components; acting within them is impossible for
    legitimate instances (odd component size) and raises InvalidCertificateError.
    """
    alpha = tuple(alpha)
    n = result.n_half
    total = result.instance.g.order
    if len(alpha) != total:
        raise InvalidCertificateError("alpha has the wrong length")
    first = set(range(n))
    image = {alpha[v] for v in first}
    if image & first:
        raise InvalidCertificateError("alpha acts within a component")
    if image != set(range(n, total)):
        raise InvalidCertificateError("alpha does not swap the two components")
    mapping = tuple(alpha[v] - n for v in range(n))

    p0, _ = preprocess(result.g0)
    p1, _ = preprocess(result.g1)
    mapping = _verify_mapping(p0, p1, mapping)

    log0, log1 = list(result.g0_log), list(result.g1_log)
    if len(log0) != len(log1) or any(a != b for a, b in zip(log0, log1)):
        raise InvalidCertificateError("transform logs differ; inputs were trivially non-isomorphic")
    chain0 = _preprocess_chain(result.g0)
    chain1 = _preprocess_chain(result.g1)
    for step, before0, before1 in zip(reversed(log0), reversed(chain0), reversed(chain1)):
        if step == "apex":
            mapping = _peel_apex(before0, before1, mapping)
        # complement: an isomorphism of complements is one of the originals
    return _verify_mapping(result.g0, result.g1, mapping)


def _preprocess_chain(g: Graph) -> list[Graph]:
    """Graphs *before* each preprocessing step, aligned with the log."""
    chain = []
    if not g.is_connected():
        chain.append(g)
        g = complement(g)
    for _ in range(2):
        if g.size % 2 == 1:
            break
        chain.append(g)
        g = _cone(g)
    return chain


def _peel_apex(before0: Graph, before1: Graph, mapping) -> tuple[int, ...]:
    """Turn an isomorphism of the coned graphs into one of the originals."""
    w0 = before0.order  # apex label in cone(before0)
    w1 = before1.order
    target = mapping[w0]
    if target != w1:
        # the apex landed on some other universal vertex; swapping two
        # universal vertices is an automorphism, so send it home first
        swap = list(range(before1.order + 1))
        swap[target], swap[w1] = w1, target
        mapping = tuple(swap[x] for x in mapping)
    return tuple(mapping[v] for v in range(w0))


def _verify_mapping(g0: Graph, g1: Graph, mapping) -> tuple[int, ...]:
    mapping = tuple(mapping)
    if g0.order != g1.order or g0.size != g1.size:
        raise InvalidCertificateError("graphs have different order or size")
    if sorted(mapping) != list(range(g0.order)):
        raise InvalidCertificateError("mapping is not a bijection")
    for u, v in g0.edges:
        a, b = mapping[u], mapping[v]
        if not g1.has_edge(a, b):
            raise InvalidCertificateError(f"edge ({u},{v}) not preserved")
    return mapping
