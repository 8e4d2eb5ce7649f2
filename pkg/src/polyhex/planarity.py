"""Desk-scale planarity and K33-subdivision search for subcubic graphs.

Two independent routes are provided:

* ``planar_by_embedding_search``: the classic incremental face-placement
  planarity test (embed a cycle, then repeatedly route a path of some bridge
  through a face containing all its attachments; a bridge with no admissible
  face proves non-planarity).  Complete for any graph after block
  decomposition.

* ``k33_subdivision_by_packing``: exhaustive search for six branch vertices
  plus nine internally disjoint paths.  Complete but exponential, intended
  for cross-checks on graphs with at most ~14 vertices, and for extracting a
  witness from graphs already known non-planar (where witnesses are dense).

In a graph of maximum degree 3 a K5 subdivision is impossible (its branch
vertices need degree 4), so by Kuratowski's theorem: non-planar iff a K33
subdivision exists.
"""

from __future__ import annotations

import itertools

from .graphs import Graph


# ---------------------------------------------------------------------------
# Incremental face-placement planarity
# ---------------------------------------------------------------------------


def _blocks(g: Graph) -> list:
    """Biconnected components as lists of edges (vertex labels of g)."""
    index = {}
    low = {}
    stack_edges = []
    blocks = []
    counter = [0]

    def dfs(v, parent_edge):
        index[v] = low[v] = counter[0]
        counter[0] += 1
        for u in g.adj[v]:
            e = (v, u) if v < u else (u, v)
            if e == parent_edge:
                continue
            if u not in index:
                stack_edges.append(e)
                dfs(u, e)
                low[v] = min(low[v], low[u])
                if low[u] >= index[v]:
                    block = []
                    while True:
                        f = stack_edges.pop()
                        block.append(f)
                        if f == e:
                            break
                    blocks.append(block)
            elif index[u] < index[v]:
                stack_edges.append(e)
                low[v] = min(low[v], index[u])

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(10000)
    try:
        for v in range(g.n):
            if v not in index:
                dfs(v, None)
    finally:
        sys.setrecursionlimit(old)
    return blocks


def _cycle_dfs(adj: dict):
    """Robust cycle finder (iterative DFS with back-edge detection)."""
    colour = {v: 0 for v in adj}
    parent = {v: None for v in adj}
    for root in adj:
        if colour[root]:
            continue
        stack = [(root, iter(adj[root]))]
        colour[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent[v]:
                    continue
                if colour[u] == 1:
                    cyc = [v]
                    while cyc[-1] != u:
                        cyc.append(parent[cyc[-1]])
                    return cyc
                if colour[u] == 0:
                    colour[u] = 1
                    parent[u] = v
                    stack.append((u, iter(adj[u])))
                    advanced = True
                    break
            if not advanced:
                colour[v] = 2
                stack.pop()
    return None


def _planar_block(edges: list) -> bool:
    """Face-placement test for one biconnected block (edge list)."""
    verts = sorted({v for e in edges for v in e})
    if len(edges) <= 3 or len(verts) <= 3:
        return True
    if len(edges) > 3 * len(verts) - 6:
        return False
    adj = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    start = _cycle_dfs(adj)
    if start is None:
        return True  # acyclic block (single edge)

    embedded_v = set(start)
    embedded_e = set()
    k = len(start)
    for i in range(k):
        a, b = start[i], start[(i + 1) % k]
        embedded_e.add((a, b) if a < b else (b, a))
    # faces as cyclic vertex lists; the starting cycle bounds both faces
    faces = [list(start), list(reversed(start))]

    all_edges = {(u, v) if u < v else (v, u) for u, v in edges}

    while embedded_e != all_edges:
        # bridges: connected components of G - embedded vertices plus their
        # attachment edges, and single unembedded chords between embedded verts
        rest = [v for v in verts if v not in embedded_v]
        bridges = []  # (attachments frozenset, representative path-finder data)
        comp_of = {}
        for comp in components_within_dict(adj, rest):
            att = set()
            for v in comp:
                for u in adj[v]:
                    if u in embedded_v:
                        att.add(u)
            bridges.append(("comp", frozenset(att), comp))
        for (u, v) in all_edges - embedded_e:
            if u in embedded_v and v in embedded_v:
                bridges.append(("chord", frozenset((u, v)), (u, v)))
        if not bridges:
            break

        best = None
        for br in bridges:
            kind, att, data = br
            admissible = [i for i, f in enumerate(faces) if att <= set(f)]
            if not admissible:
                return False
            if best is None or len(admissible) < len(best[1]):
                best = (br, admissible)
            if len(admissible) == 1:
                break
        (kind, att, data), admissible = best
        face_idx = admissible[0]

        if kind == "chord":
            u, v = data
            path = [u, v]
        else:
            comp = set(data)
            # path between two distinct attachments through the component
            att_list = sorted(att)
            u = att_list[0]
            # BFS from u's neighbours inside comp to any other attachment
            starts = [w for w in comp if u in adj[w] or w in adj[u]]
            prev = {}
            queue = []
            for w in sorted(starts):
                if w not in prev:
                    prev[w] = None
                    queue.append(w)
            target = None
            while queue:
                w = queue.pop(0)
                hit = [x for x in adj[w] if x in att and x != u]
                if hit:
                    target = (w, min(hit))
                    break
                for x in adj[w]:
                    if x in comp and x not in prev:
                        prev[x] = w
                        queue.append(x)
            assert target is not None, "bridge with a single attachment in a 2-connected block"
            w, v = target
            mid = [w]
            while prev[mid[-1]] is not None:
                mid.append(prev[mid[-1]])
            mid.reverse()
            path = [u] + mid + [v]

        # split the chosen face along the path
        f = faces[face_idx]
        iu = f.index(path[0])
        iv = f.index(path[-1])
        arc1 = f[iu:iv + 1] if iu <= iv else f[iu:] + f[:iv + 1]
        arc2 = f[iv:iu + 1] if iv <= iu else f[iv:] + f[:iu + 1]
        inner = path[1:-1]
        faces[face_idx] = arc1 + list(reversed(inner))
        faces.append(arc2 + inner)

        for x in inner:
            embedded_v.add(x)
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            embedded_e.add((a, b) if a < b else (b, a))

    return True


def components_within_dict(adj: dict, vertices) -> list:
    keep = set(vertices)
    out = []
    left = set(keep)
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in keep and u not in comp:
                    comp.add(u)
                    stack.append(u)
        out.append(sorted(comp))
        left -= comp
    return out


def planar_by_embedding_search(g: Graph) -> bool:
    """True iff g is planar (every biconnected block embeds)."""
    if g.n <= 4:
        return True
    if len(g.edges) > 3 * g.n - 6:
        return False
    return all(_planar_block(b) for b in _blocks(g))


# ---------------------------------------------------------------------------
# K33 subdivision by disjoint-path packing
# ---------------------------------------------------------------------------


def _flow_nine(g: Graph, A, B) -> bool:
    """Necessary condition: nine internally disjoint A-to-B paths exist
    (vertex capacities 1 outside the branch vertices).

    Integer-indexed residual network: non-branch vertex v splits into
    in-node 2v and out-node 2v+1; branch vertices get single terminal nodes.
    """
    n = g.n
    branch_id = {}
    for idx, a in enumerate(A):
        branch_id[a] = 2 * n + idx
    for idx, b in enumerate(B):
        branch_id[b] = 2 * n + 3 + idx
    src = 2 * n + 6
    snk = 2 * n + 7
    nodes = 2 * n + 8
    head = [[] for _ in range(nodes)]   # arc target
    cap = [[] for _ in range(nodes)]    # residual capacity
    rev = [[] for _ in range(nodes)]    # index of reverse arc

    def add_arc(x, y, c):
        head[x].append(y)
        cap[x].append(c)
        rev[x].append(len(head[y]))
        head[y].append(x)
        cap[y].append(0)
        rev[y].append(len(head[x]) - 1)

    inA = set(A)
    inB = set(B)
    for v in range(n):
        if v not in branch_id:
            add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        if (u in inA and v in inA) or (u in inB and v in inB):
            continue
        for a, b in ((u, v), (v, u)):
            x = branch_id[a] if a in branch_id else 2 * a + 1
            y = branch_id[b] if b in branch_id else 2 * b
            if a in inB or b in inA:
                continue  # flow never runs backward through terminals
            add_arc(x, y, 1)
    for a in A:
        add_arc(src, branch_id[a], 3)
    for b in B:
        add_arc(branch_id[b], snk, 3)

    flow = 0
    prev_node = [0] * nodes
    prev_arc = [0] * nodes
    while flow < 9:
        seen = [False] * nodes
        seen[src] = True
        queue = [src]
        qi = 0
        found = False
        while qi < len(queue) and not found:
            x = queue[qi]
            qi += 1
            hx, cx = head[x], cap[x]
            for i in range(len(hx)):
                if cx[i] > 0 and not seen[hx[i]]:
                    y = hx[i]
                    seen[y] = True
                    prev_node[y] = x
                    prev_arc[y] = i
                    if y == snk:
                        found = True
                        break
                    queue.append(y)
        if not found:
            return False
        y = snk
        while y != src:
            x = prev_node[y]
            i = prev_arc[y]
            cap[x][i] -= 1
            cap[y][rev[x][i]] += 1
            y = x
        flow += 1
    return True


def _pack_paths(g: Graph, A, B, node_budget):
    """Try to route the nine paths for branch sets A, B.

    Returns the list of nine paths (vertex sequences, one per (a_i, b_j) in
    row-major order) or None.  node_budget None means exhaustive.
    """
    branch = set(A) | set(B)
    pairs = [(a, b) for a in A for b in B]
    used = [False] * g.n
    paths = []
    nodes = [0]

    def routes(a, b):
        """DFS-enumerate simple a..b paths internally avoiding used/branch."""
        stack = [(a, [a])]
        while stack:
            v, path = stack.pop()
            for u in sorted(g.adj[v], reverse=True):
                if u == b and v != a or u == b and v == a:
                    yield path + [b]
                elif u not in branch and not used[u] and u not in path:
                    stack.append((u, path + [u]))

    def rec(idx):
        nodes[0] += 1
        if node_budget is not None and nodes[0] > node_budget:
            raise _Budget()
        if idx == 9:
            return True
        a, b = pairs[idx]
        for path in routes(a, b):
            inner = path[1:-1]
            # reachability prune is implicit: DFS only yields complete paths
            for x in inner:
                used[x] = True
            paths.append(path)
            if rec(idx + 1):
                return True
            paths.pop()
            for x in inner:
                used[x] = False
        return False

    try:
        if rec(0):
            return list(paths)
    except _Budget:
        return None
    return None


class _Budget(Exception):
    pass


def k33_subdivision_by_packing(g: Graph, node_budget=None):
    """Exhaustive search for a K33 subdivision: returns (branches, paths) or None.

    branches is (a1,a2,a3,b1,b2,b3); paths are the nine vertex sequences in
    row-major (a_i, b_j) order.  With node_budget set, hard pairs are skipped,
    so a None answer is only conclusive when node_budget is None.
    """
    if any(g.degree(v) > 3 for v in range(g.n)):
        raise ValueError("K33 subdivision search requires maximum degree 3")
    if g.n < 6 or len(g.edges) < 9:
        return None
    cand = [v for v in range(g.n) if g.degree(v) == 3]
    adjset = [set(a) for a in g.adj]
    for A in itertools.combinations(cand, 3):
        # each branch vertex needs three disjoint paths out, so its side
        # must be independent
        if A[1] in adjset[A[0]] or A[2] in adjset[A[0]] or A[2] in adjset[A[1]]:
            continue
        rest = [v for v in cand if v not in A]
        # symmetry break: the side holding the smallest branch vertex is A
        for B in itertools.combinations(rest, 3):
            if B[0] < A[0]:
                continue
            if B[1] in adjset[B[0]] or B[2] in adjset[B[0]] or B[2] in adjset[B[1]]:
                continue
            if not _flow_nine(g, A, B):
                continue
            got = _pack_paths(g, A, B, node_budget)
            if got is not None:
                return (A + B), got
    return None
