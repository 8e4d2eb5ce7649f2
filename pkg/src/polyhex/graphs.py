"""Simple undirected graphs and the combinatorial predicates used everywhere else.

Vertices are the integers 0..n-1.  Edges are unordered pairs stored as (u, v)
with u < v, sorted lexicographically; the index of an edge in that list is its
edge id.  All operations are pure functions of their inputs; Graph instances
are immutable after construction (internal memo tables are the only mutable
state and never change observable behaviour).

Everything here is exhaustive search tuned for desk scale (up to roughly 64
vertices, cycle-space dimension up to ~20).  No floating point is used in any
counting path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

INFINITE = float("inf")

# Cycle-space enumeration refuses above this dimension (2**20 subsets).
MAX_CYCLE_SPACE_DIM = 20


class Graph:
    """An immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "edge_index", "_pm_memo", "_cycles", "_central")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"parallel edge {e}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._pm_memo = {0: True}
        self._cycles = None
        self._central = None

    # -- basics ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple:
        return tuple(len(a) for a in self.adj)

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def full_vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def subgraph_without(self, vertices) -> "Graph":
        """Graph induced on the complement of `vertices`, relabelled 0..m-1."""
        drop = set(vertices)
        keep = [v for v in range(self.n) if v not in drop]
        relabel = {v: i for i, v in enumerate(keep)}
        es = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        return Graph(len(keep), es)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(_component(self, 0, self.full_vertex_mask())) == self.n


@dataclass(frozen=True)
class Matching:
    """A set of pairwise non-adjacent edges, stored as sorted edge ids."""

    edge_ids: tuple
    perfect: bool


@dataclass(frozen=True)
class Cycle:
    """A cycle, canonically rotated: starts at its smallest vertex and runs
    toward that vertex's smaller neighbour on the cycle."""

    vertices: tuple
    edge_ids: frozenset
    mask: int = field(compare=False)      # bitmask over edge ids
    vmask: int = field(compare=False)     # bitmask over vertex ids

    def __len__(self):
        return len(self.vertices)

    @property
    def even(self) -> bool:
        return len(self.vertices) % 2 == 0


@dataclass(frozen=True)
class EdgeCut:
    """An edge cut together with the two vertex sets it separates."""

    edge_ids: tuple
    side_a: tuple
    side_b: tuple
    cyclic: bool


def _component(g: Graph, start: int, alive: int) -> set:
    """Vertices reachable from start inside the alive bitmask."""
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if alive >> u & 1 and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def components_within(g: Graph, vertices) -> list:
    """Connected components of the subgraph induced on `vertices`, each a sorted tuple."""
    alive = 0
    for v in vertices:
        alive |= 1 << v
    out = []
    left = set(vertices)
    while left:
        start = min(left)
        comp = _component(g, start, alive)
        comp &= left
        out.append(tuple(sorted(comp)))
        left -= comp
    return sorted(out)


# ---------------------------------------------------------------------------
# Perfect matchings
# ---------------------------------------------------------------------------


def _has_pm(g: Graph, alive: int) -> bool:
    memo = g._pm_memo
    hit = memo.get(alive)
    if hit is not None:
        return hit
    if alive.bit_count() % 2:
        memo[alive] = False
        return False
    v = (alive & -alive).bit_length() - 1
    rest = alive ^ (1 << v)
    ok = False
    for u in g.adj[v]:
        if rest >> u & 1 and _has_pm(g, rest ^ (1 << u)):
            ok = True
            break
    memo[alive] = ok
    return ok


def has_perfect_matching(g: Graph) -> bool:
    """True iff g has a perfect matching (empty graph counts, odd order never)."""
    return _has_pm(g, g.full_vertex_mask())


def has_perfect_matching_avoiding(g: Graph, vertices) -> bool:
    """True iff g minus the given vertices has a perfect matching."""
    alive = g.full_vertex_mask()
    for v in vertices:
        alive &= ~(1 << v)
    return _has_pm(g, alive)


def enumerate_perfect_matchings(g: Graph) -> list:
    """All perfect matchings, sorted lexicographically by their edge-id tuples."""
    out = []
    chosen = []

    def rec(alive: int):
        if alive == 0:
            out.append(tuple(sorted(chosen)))
            return
        v = (alive & -alive).bit_length() - 1
        rest = alive ^ (1 << v)
        for u in g.adj[v]:
            if rest >> u & 1:
                chosen.append(g.edge_index[(v, u) if v < u else (u, v)])
                rec(rest ^ (1 << u))
                chosen.pop()

    if g.n % 2 == 0:
        rec(g.full_vertex_mask())
    out.sort()
    return [Matching(m, perfect=True) for m in out]


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------


def _cycle_from_mask(g: Graph, mask: int):
    """Decode an edge bitmask into a Cycle if it is a single connected 2-regular
    subgraph, else None."""
    deg = {}
    nbr = {}
    m = mask
    while m:
        low = m & -m
        e = low.bit_length() - 1
        m ^= low
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    if not deg or any(d != 2 for d in deg.values()):
        return None
    start = min(deg)
    a, b = sorted(nbr[start])
    seq = [start, a]
    while seq[-1] != start:
        x, y = nbr[seq[-1]]
        seq.append(y if x == seq[-2] else x)
    seq.pop()
    if len(seq) != len(deg):
        return None  # two or more disjoint cycles
    eids = frozenset(
        g.edge_index[(seq[i], seq[(i + 1) % len(seq)]) if seq[i] < seq[(i + 1) % len(seq)]
                     else (seq[(i + 1) % len(seq)], seq[i])]
        for i in range(len(seq))
    )
    vmask = 0
    for v in seq:
        vmask |= 1 << v
    return Cycle(tuple(seq), eids, mask, vmask)


def cycle_from_vertices(g: Graph, seq) -> Cycle:
    """Build a Cycle from an explicit vertex sequence (consecutive pairs must be edges)."""
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        raise ValueError("not a cycle: vertices must be at least 3 and distinct")
    eids = []
    mask = 0
    vmask = 0
    for i in range(k):
        u, v = seq[i], seq[(i + 1) % k]
        e = (u, v) if u < v else (v, u)
        if e not in g.edge_index:
            raise ValueError(f"missing edge {e}")
        eid = g.edge_index[e]
        eids.append(eid)
        mask |= 1 << eid
        vmask |= 1 << u
    c = _cycle_from_mask(g, mask)
    assert c is not None
    return c


def enumerate_cycles(g: Graph) -> list:
    """Every cycle of g exactly once, via the binary cycle space.

    The spanning-forest fundamental cycles generate the space; each of the
    2**dim - 1 nonzero members is kept iff it is connected and 2-regular.
    Result is cached on the graph and sorted by (length, vertex sequence).
    """
    if g._cycles is not None:
        return g._cycles
    # spanning forest via DFS; fundamental cycle masks for co-tree edges
    parent = {}
    parent_edge = {}
    tree_edges = set()
    for root in range(g.n):
        if root in parent:
            continue
        parent[root] = root
        stack = [root]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in parent:
                    parent[u] = v
                    e = g.edge_index[(v, u) if v < u else (u, v)]
                    parent_edge[u] = e
                    tree_edges.add(e)
                    stack.append(u)
    cotree = [e for e in range(len(g.edges)) if e not in tree_edges]
    dim = len(cotree)
    if dim > MAX_CYCLE_SPACE_DIM:
        raise ValueError(
            f"cycle space dimension {dim} exceeds enumeration budget {MAX_CYCLE_SPACE_DIM}")

    def tree_path_mask(u: int, v: int) -> int:
        # xor of the two root paths; shared prefix cancels
        mask = 0
        while u != parent[u]:
            mask ^= 1 << parent_edge[u]
            u = parent[u]
        while v != parent[v]:
            mask ^= 1 << parent_edge[v]
            v = parent[v]
        return mask

    fund = []
    for e in cotree:
        u, v = g.edges[e]
        fund.append((1 << e) | tree_path_mask(u, v))

    cycles = []
    mask = 0
    # Gray-code walk over all subsets: one xor per step
    for counter in range(1, 1 << dim):
        mask ^= fund[(counter & -counter).bit_length() - 1]
        c = _cycle_from_mask(g, mask)
        if c is not None:
            cycles.append(c)
    cycles.sort(key=lambda c: (len(c), c.vertices))
    g._cycles = cycles
    return cycles


def enumerate_cycles_dfs(g: Graph) -> list:
    """Independent cycle enumeration by rooted path DFS (cross-check oracle).

    Each cycle is found from its smallest vertex, walking first toward the
    smaller neighbour, so every cycle is produced exactly once.
    """
    out = []

    def extend(path, seen):
        head = path[-1]
        root = path[0]
        for u in g.adj[head]:
            if u == root and len(path) >= 3 and path[1] < head:
                out.append(tuple(path))
            elif u > root and u not in seen:
                seen.add(u)
                path.append(u)
                extend(path, seen)
                path.pop()
                seen.remove(u)

    for root in range(g.n):
        extend([root], {root})
    return sorted(out, key=lambda seq: (len(seq), seq))


# ---------------------------------------------------------------------------
# Colourings and connectivity
# ---------------------------------------------------------------------------


def is_bipartite(g: Graph):
    """BFS 2-colouring; returns (flag, colours) with component roots coloured 0."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u in g.adj[v]:
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return False, None
    return True, tuple(colour)


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no vertex set of size < k disconnects g (exhaustive, for small k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not g.is_connected():
        return False
    if g.n <= k:
        # complete-graph convention: K_n is (n-1)-connected
        return all(g.degree(v) == g.n - 1 for v in range(g.n))
    for size in range(1, k):
        for cut in itertools.combinations(range(g.n), size):
            alive = g.full_vertex_mask()
            for v in cut:
                alive &= ~(1 << v)
            start = (alive & -alive).bit_length() - 1
            if len(_component(g, start, alive)) != alive.bit_count():
                return False
    return True


def _is_chordless(g: Graph, c: Cycle) -> bool:
    verts = set(c.vertices)
    inner = sum(1 for u, v in g.edges if u in verts and v in verts)
    return inner == len(c)


def _max_flow_min_cut(g: Graph, source_set, sink_set, cap: int):
    """Unit-capacity max flow between two contracted vertex sets.

    Stops as soon as the flow reaches `cap` (the caller's current best cut
    cannot be improved then).  Returns (flow, cut_edge_ids or None); the cut
    is only extracted when flow < cap.
    """
    src = set(source_set)
    snk = set(sink_set)
    # residual as dict of dicts over directed arcs between vertex ids
    res = {}
    for u, v in g.edges:
        res.setdefault(u, {})[v] = 1
        res.setdefault(v, {})[u] = 1
    flow = 0
    while flow < cap:
        # BFS from the whole source set
        prev = {v: None for v in src}
        queue = list(src)
        reached = None
        while queue and reached is None:
            v = queue.pop(0)
            for u, r in res.get(v, {}).items():
                if r > 0 and u not in prev:
                    prev[u] = v
                    if u in snk:
                        reached = u
                        break
                    if u not in src:
                        queue.append(u)
        if reached is None:
            break
        v = reached
        while prev[v] is not None:
            u = prev[v]
            res[u][v] -= 1
            res[v][u] = res.get(v, {}).get(u, 0) + 1
            v = u
        flow += 1
    if flow >= cap:
        return flow, None
    # min cut: edges from residual-reachable side to the rest
    reach = set(src)
    queue = list(src)
    while queue:
        v = queue.pop(0)
        for u, r in res.get(v, {}).items():
            if r > 0 and u not in reach:
                reach.add(u)
                queue.append(u)
    cut = tuple(sorted(
        g.edge_index[e] for e in g.edges
        if (e[0] in reach) != (e[1] in reach)))
    return flow, cut


def cyclic_edge_connectivity(g: Graph, with_cut: bool = False):
    """Minimum size of an edge cut leaving a cycle on both sides.

    Computed as the minimum, over pairs of vertex-disjoint cycles, of the
    minimum edge cut separating them (each cycle contracted to a terminal).
    Only chordless cycles need be considered: any cycle contains a chordless
    one on a subset of its vertices, and shrinking a terminal never increases
    the cut.  Returns INFINITE when no two vertex-disjoint cycles exist.
    """
    cycles = [c for c in enumerate_cycles(g) if _is_chordless(g, c)]
    cycles.sort(key=len)
    best = INFINITE
    best_cut = None
    for i in range(len(cycles)):
        ci = cycles[i]
        for j in range(i + 1, len(cycles)):
            cj = cycles[j]
            if ci.vmask & cj.vmask:
                continue
            cap = best if best is not INFINITE else len(g.edges) + 1
            flow, cut = _max_flow_min_cut(g, set(ci.vertices), set(cj.vertices), cap)
            if flow < best:
                best = flow
                best_cut = (cut, ci, cj)
    if not with_cut:
        return best
    if best_cut is None:
        return best, None
    cut, ci, cj = best_cut
    alive = g.full_vertex_mask()
    kill = set(cut)
    # sides of the cut
    adj_cut = {v: [u for u in g.adj[v]
                   if g.edge_index[(v, u) if v < u else (u, v)] not in kill]
               for v in range(g.n)}
    seen = {ci.vertices[0]}
    stack = [ci.vertices[0]]
    while stack:
        v = stack.pop()
        for u in adj_cut[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    side_a = tuple(sorted(seen))
    side_b = tuple(sorted(set(range(g.n)) - seen))
    return best, EdgeCut(cut, side_a, side_b, cyclic=True)


# ---------------------------------------------------------------------------
# Extendability, braces, bricks
# ---------------------------------------------------------------------------


def is_k_extendable(g: Graph, k: int) -> bool:
    """Connected, at least 2k+2 vertices, and every k independent edges extend
    to a perfect matching."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n < 2 * k + 2:
        return False
    if not g.is_connected():
        return False
    if not has_perfect_matching(g):
        return False
    if k == 0:
        return True
    for combo in itertools.combinations(range(len(g.edges)), k):
        used = set()
        ok = True
        for e in combo:
            u, v = g.edges[e]
            if u in used or v in used:
                ok = False
                break
            used.update((u, v))
        if not ok:
            continue
        if not has_perfect_matching_avoiding(g, used):
            return False
    return True


def is_brace(g: Graph) -> bool:
    """Brace: 2-extendable bipartite graph."""
    bip, _ = is_bipartite(g)
    return bip and is_k_extendable(g, 2)


def is_bicritical(g: Graph) -> bool:
    if g.n < 4 or g.n % 2:
        return False
    for u, v in itertools.combinations(range(g.n), 2):
        if not has_perfect_matching_avoiding(g, (u, v)):
            return False
    return True


def is_brick(g: Graph) -> bool:
    """Brick: 3-connected bicritical graph."""
    return vertex_connectivity_at_least(g, 3) and is_bicritical(g)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _signatures(g: Graph) -> list:
    return [(g.degree(v), tuple(sorted(g.degree(u) for u in g.adj[v]))) for v in range(g.n)]


def _iso_gen(g1: Graph, g2: Graph, pin=None):
    """Yield every isomorphism g1 -> g2 (as a tuple mapping), in the
    deterministic order induced by ascending candidate ids.

    `pin` optionally fixes the image of vertex 0.
    """
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return
    sig1 = _signatures(g1)
    sig2 = _signatures(g2)
    if sorted(sig1) != sorted(sig2):
        return
    cands = {v: [u for u in range(g2.n) if sig2[u] == sig1[v]] for v in range(g1.n)}
    if pin is not None:
        if pin not in cands.get(0, []):
            return
        cands = dict(cands)
        cands[0] = [pin]
    order = sorted(range(g1.n), key=lambda v: (len(cands[v]), v))
    # interleave to keep mapped neighbourhoods connected where possible
    mapping = [-1] * g1.n
    used = [False] * g2.n
    adj2set = [set(a) for a in g2.adj]

    def rec(idx):
        if idx == g1.n:
            yield tuple(mapping)
            return
        v = order[idx]
        for u in cands[v]:
            if used[u]:
                continue
            ok = True
            for w in g1.adj[v]:
                mw = mapping[w]
                if mw != -1 and mw not in adj2set[u]:
                    ok = False
                    break
            if ok:
                # non-adjacent pairs must stay non-adjacent (same edge count
                # would catch it globally, but pruning here is cheaper)
                for w in range(g1.n):
                    mw = mapping[w]
                    if mw != -1 and w not in g1.adj[v] and mw in adj2set[u]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = u
            used[u] = True
            yield from rec(idx + 1)
            mapping[v] = -1
            used[u] = False

    yield from rec(0)


def find_isomorphism(g1: Graph, g2: Graph, faces1=None, faces2=None):
    """A vertex bijection preserving adjacency, or None.

    When face lists are supplied (each face a vertex sequence), the bijection
    must additionally map every face of g1 onto a face of g2.
    """
    if faces1 is None:
        for m in _iso_gen(g1, g2):
            return m
        return None
    face_sets2 = {frozenset(_face_edge_set(g2, f)) for f in faces2}
    for m in _iso_gen(g1, g2):
        if all(frozenset(_mapped_face_edges(g2, f, m)) in face_sets2 for f in faces1):
            return m
    return None


def _face_edge_set(g: Graph, face) -> set:
    k = len(face)
    return {(face[i], face[(i + 1) % k]) if face[i] < face[(i + 1) % k]
            else (face[(i + 1) % k], face[i]) for i in range(k)}


def _mapped_face_edges(g2: Graph, face, m) -> set:
    k = len(face)
    out = set()
    for i in range(k):
        u, v = m[face[i]], m[face[(i + 1) % k]]
        out.add((u, v) if u < v else (v, u))
    return out


def automorphism_vertex_orbits(g: Graph) -> list:
    """Orbits of the automorphism group, via repeated isomorphism search with
    the first vertex pinned.  Returned as a sorted list of sorted tuples."""
    if g.n == 0:
        return []
    orbit_of = {}
    for v in range(g.n):
        if v in orbit_of:
            continue
        placed = False
        for r in sorted(set(orbit_of.values())):
            if _maps_to(g, r, v):
                orbit_of[v] = r
                placed = True
                break
        if not placed:
            orbit_of[v] = v
    orbits = {}
    for v, r in orbit_of.items():
        orbits.setdefault(r, []).append(v)
    return sorted(tuple(sorted(o)) for o in orbits.values())


def _maps_to(g: Graph, src: int, dst: int) -> bool:
    """True iff some automorphism of g maps src to dst."""
    if src == dst:
        return True
    perm = list(range(g.n))
    perm[0], perm[src] = perm[src], perm[0]
    g1 = _relabelled(g, perm)
    # g1 relabels src to position 0, so pinning 0 -> dst pins src -> dst
    for _ in _iso_gen(g1, g, pin=dst):
        return True
    return False


def _relabelled(g: Graph, perm) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# ---------------------------------------------------------------------------
# Edge colouring and Hamiltonian cycles
# ---------------------------------------------------------------------------


def three_edge_coloring(g: Graph):
    """A proper 3-edge-colouring of a cubic graph (backtracking), or None."""
    if not g.is_cubic():
        raise ValueError("three_edge_coloring requires a cubic graph")
    m = len(g.edges)
    colour = [-1] * m
    incident = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        incident[u].append(e)
        incident[v].append(e)

    def rec(e):
        if e == m:
            return True
        u, v = g.edges[e]
        banned = {colour[f] for f in incident[u] + incident[v] if colour[f] != -1}
        for c in (0, 1, 2):
            if c not in banned:
                colour[e] = c
                if rec(e + 1):
                    return True
                colour[e] = -1
        return False

    return tuple(colour) if rec(0) else None


def hamiltonian_cycle(g: Graph):
    """A Hamiltonian cycle found by backtracking, or None after exhaustion."""
    if g.n < 3:
        return None
    path = [0]
    seen = {0}

    def rec():
        v = path[-1]
        if len(path) == g.n:
            return 0 in g.adj[v]
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                path.append(u)
                if rec():
                    return True
                path.pop()
                seen.remove(u)
        return False

    if rec():
        return cycle_from_vertices(g, path)
    return None
