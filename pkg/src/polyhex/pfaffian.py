"""Orientations, central cycles, Pfaffianness, and exact matching counts.

An orientation assigns a direction to every edge.  An even cycle is oddly
oriented when, along either traversal, an odd number of its edges point with
the traversal.  An orientation is Pfaffian when every central cycle (an even
cycle whose removal leaves a perfectly matchable graph) is oddly oriented.

The brute-force search enumerates one representative per switching class:
reversing all edges at a vertex flips exactly two edges of every cycle
through it, so even-cycle parities are class invariants, and fixing the
directions of a spanning tree picks exactly one representative per class.
A failed exhaustive scan is therefore a proof of non-Pfaffianness.

Where an orientation exists, the number of perfect matchings equals the
square root of the determinant of the skew adjacency matrix, computed here in
exact integer arithmetic (fraction-free elimination), never floating point.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .graphs import Graph, Cycle, enumerate_cycles, has_perfect_matching, _has_pm
from .families import (Embedding, KLEIN_BIPARTITE, KLEIN_NONBIPARTITE,
                       PolyhexSpec, TORUS, is_planar_polyhex)

DEFAULT_CLASS_BUDGET = 24  # refuse searches beyond 2**24 switching classes
_BUDGET_ENV = "POLYHEX_SEARCH_BUDGET"


class SearchBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class Orientation:
    """A direction (tail, head) for every edge of the host, in edge-id order."""

    host: Graph
    direction: tuple

    def __post_init__(self):
        if len(self.direction) != len(self.host.edges):
            raise ValueError("orientation must cover every edge exactly once")
        for (u, v), (t, h) in zip(self.host.edges, self.direction):
            if {t, h} != {u, v}:
                raise ValueError(f"direction ({t},{h}) does not match edge ({u},{v})")

    def flip_mask(self) -> int:
        """Bitmask of edges directed high-to-low (relative to the stored u<v)."""
        m = 0
        for i, ((u, v), (t, h)) in enumerate(zip(self.host.edges, self.direction)):
            if (t, h) != (u, v):
                m |= 1 << i
        return m


def orientation_from_flips(g: Graph, flips: int) -> Orientation:
    dirs = []
    for i, (u, v) in enumerate(g.edges):
        dirs.append((v, u) if flips >> i & 1 else (u, v))
    return Orientation(g, tuple(dirs))


def central_cycles(g: Graph):
    """All even cycles whose vertex-deleted remainder has a perfect matching."""
    if not has_perfect_matching(g):
        raise ValueError("central cycles are defined for graphs with a perfect matching")
    if g._central is not None:
        return g._central
    full = g.full_vertex_mask()
    out = [c for c in enumerate_cycles(g)
           if c.even and _has_pm(g, full & ~c.vmask)]
    g._central = out
    return out


def _traversal_parity(g: Graph, c: Cycle, flips: int) -> int:
    """Parity of forward edges along the stored traversal, under flip mask."""
    fwd = 0
    k = len(c.vertices)
    for i in range(k):
        u, v = c.vertices[i], c.vertices[(i + 1) % k]
        eid = g.edge_index[(u, v) if u < v else (v, u)]
        stored_forward = u < v
        flipped = flips >> eid & 1
        if stored_forward != bool(flipped):
            fwd += 1
    return fwd % 2


def is_oddly_oriented(c: Cycle, d: Orientation) -> bool:
    """Odd number of cycle edges pointing with the traversal (even cycles only)."""
    if not c.even:
        raise ValueError("parity of an odd cycle depends on the traversal direction")
    return _traversal_parity(d.host, c, d.flip_mask()) == 1


def is_pfaffian_orientation(d: Orientation) -> bool:
    g = d.host
    flips = d.flip_mask()
    return all(_traversal_parity(g, c, flips) == 1 for c in central_cycles(g))


def _class_budget() -> int:
    env = os.environ.get(_BUDGET_ENV)
    return int(env) if env else DEFAULT_CLASS_BUDGET


def pfaffian_search(g: Graph):
    """First Pfaffian orientation over all switching-class representatives, or None.

    Tree edges keep their stored direction; the assignment counter's bit j
    drives the j-th co-tree edge (ascending edge id), counters ascending.
    """
    if not g.is_connected():
        raise ValueError("pfaffian search requires a connected graph")
    if not has_perfect_matching(g):
        raise ValueError("pfaffian search requires a perfect matching")
    # spanning tree via DFS from 0
    in_tree = set()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                in_tree.add(g.edge_index[(v, u) if v < u else (u, v)])
                stack.append(u)
    cotree = [e for e in range(len(g.edges)) if e not in in_tree]
    dim = len(cotree)
    budget = _class_budget()
    if dim > budget:
        raise SearchBudgetError(
            f"search space 2^{dim} exceeds the 2^{budget} class budget "
            f"(override with {_BUDGET_ENV})")

    # per central cycle: edge mask and the flip parity it requires
    need = []
    for c in central_cycles(g):
        ref = _traversal_parity(g, c, 0)
        need.append((c.mask, ref ^ 1))
    need.sort(key=lambda p: p[0].bit_count())

    for counter in range(1 << dim):
        flips = 0
        bits = counter
        while bits:
            low = bits & -bits
            flips |= 1 << cotree[low.bit_length() - 1]
            bits ^= low
        ok = True
        for mask, parity in need:
            if (flips & mask).bit_count() & 1 != parity:
                ok = False
                break
        if ok:
            return orientation_from_flips(g, flips)
    return None


def count_switching_classes(g: Graph) -> int:
    return 1 << (len(g.edges) - g.n + 1)


# ---------------------------------------------------------------------------
# Exact counting
# ---------------------------------------------------------------------------


def skew_adjacency(d: Orientation) -> list:
    n = d.host.n
    a = [[0] * n for _ in range(n)]
    for t, h in d.direction:
        a[t][h] = 1
        a[h][t] = -1
    return a


def bareiss_determinant(matrix: list) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matching_count_by_determinant(d: Orientation) -> int:
    """sqrt(det) of the skew adjacency matrix of a Pfaffian orientation."""
    if not is_pfaffian_orientation(d):
        raise ValueError("orientation is not Pfaffian; the determinant count is invalid")
    det = bareiss_determinant(skew_adjacency(d))
    if det < 0:
        raise ArithmeticError(f"skew determinant {det} is negative")
    root = math.isqrt(det)
    if root * root != det:
        raise ArithmeticError(f"skew determinant {det} is not a perfect square")
    return root


# ---------------------------------------------------------------------------
# Cross-cap parity and the parameter classifier
# ---------------------------------------------------------------------------


def cross_cap_odd_check(emb: Embedding):
    """Check |E(C)| = |E(C) & E_0| (mod 2) for every cycle C.

    A cycle is 1-sided exactly when it crosses E_0 an odd number of times, so
    this is the cross-cap-odd property of the embedding.  Returns (flag,
    report) where the report has one row per cycle.
    """
    if emb.spec.family != KLEIN_NONBIPARTITE:
        raise ValueError("cross-cap parity applies to the non-bipartite Klein family")
    if not emb.crossing_edges:
        raise ValueError("embedding carries no crossing-edge labels")
    rows = []
    ok = True
    for c in enumerate_cycles(emb.graph):
        crossings = len(c.edge_ids & emb.crossing_edges)
        good = (len(c) - crossings) % 2 == 0
        ok = ok and good
        rows.append((c.vertices, len(c), crossings, good))
    return ok, rows


PFAFFIAN = "pfaffian"
NOT_PFAFFIAN = "not-pfaffian"


def classify_pfaffian(spec: PolyhexSpec):
    """Parameter-driven verdict with a reason tag.

    Torus: Pfaffian iff planar or (14,1,2) up to twin (the Heawood graph).
    Bipartite Klein: Pfaffian iff K_e(4,2).  Non-bipartite Klein: always
    Pfaffian (the embedding is cross-cap-odd).
    """
    spec.validate()
    if spec.family == TORUS:
        if is_planar_polyhex(spec):
            return PFAFFIAN, "planar"
        # the Heawood triple (14,1,2) and its parameter twin (14,1,4)
        if (spec.k, spec.q) == (14, 1) and spec.t in (2, 4):
            return PFAFFIAN, "heawood"
        return NOT_PFAFFIAN, "none"
    if spec.family == KLEIN_BIPARTITE:
        if is_planar_polyhex(spec):
            return PFAFFIAN, "planar"
        return NOT_PFAFFIAN, "none"
    return PFAFFIAN, "cross-cap-odd"
