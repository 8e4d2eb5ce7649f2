"""Hexagonal tilings of the torus and Klein bottle.

Everything is built from the rectangular hexagon lattice L(k,q): vertices
v[i,j] for 0 <= i <= k, 0 <= j <= q, horizontal edges v[i,j]v[i+1,j], and
vertical edges v[i,j]v[i,j+1] exactly when i = j (mod 2).  A vertex v[i,j]
is black iff i+j is even.  Row j (the j-th layer) is the path
v[0,j] ... v[k,j].

Three closed families arise by identifying boundary vertices of L(k,q):

* torus T(k,q,t), k even: glue v[0,j] ~ v[k,j], then v[i,0] ~ v[i+q+2t, q]
  (columns mod k).  Excluded triples (the gluing would not give a simple
  cubic all-hexagon embedding): k = 2, (4,1,t), (k,1,0), (k,1,k/2-1).

* Klein bottle, bipartite, K_e(k,q), k >= 4 even, q >= 2: glue
  v[0,j] ~ v[k,j], then v[i,0] ~ v[c-i mod k, q].  The mirror offset c must
  have the parity of q for the reflection to respect the vertical-edge rule
  (i = j mod 2), so c = k when q is even (the plain reflection) and c = k-1
  when q is odd.  All odd offsets give hexagon-preserving isomorphic results.

* Klein bottle, non-bipartite, K_o(k,q), q even, k >= 3: glue
  v[i,0] ~ v[i,q], then v[0,j] ~ v[k, s0-j] with s0 = q-1 for even k and
  s0 = q-2 for odd k.  The edges created by this second (left-right)
  identification form the crossing set E_0; removing them leaves the
  bipartite tube.

Faces are traced as lattice hexagons and pushed through the identifications;
`validate_polyhex` then checks the embedding axioms (cubic, kq vertices,
3kq/2 edges, kq/2 distinct hexagonal faces, every edge on exactly two faces)
rather than trusting any index formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, Cycle, cycle_from_vertices

TORUS = "torus"
KLEIN_BIPARTITE = "klein-bipartite"
KLEIN_NONBIPARTITE = "klein-nonbipartite"

_FAMILY_ORDER = {TORUS: 0, KLEIN_BIPARTITE: 1, KLEIN_NONBIPARTITE: 2}
_FAMILY_PREFIX = {TORUS: "T", KLEIN_BIPARTITE: "Ke", KLEIN_NONBIPARTITE: "Ko"}


class SpecError(ValueError):
    """Invalid or excluded family parameters."""


class BuildError(RuntimeError):
    """The identifications produced something that is not a polyhex embedding."""


@dataclass(frozen=True, order=True)
class PolyhexSpec:
    """Family tag plus parameters; t is stored as 0 for the Klein families."""

    family: str
    k: int
    q: int
    t: int = 0

    def __post_init__(self):
        if self.family not in _FAMILY_ORDER:
            raise SpecError(f"unknown family {self.family!r}")

    def validate(self):
        k, q, t = self.k, self.q, self.t
        if self.family == TORUS:
            if k < 2 or k % 2:
                raise SpecError(f"{self}: torus needs even k >= 2")
            if q < 1:
                raise SpecError(f"{self}: torus needs q >= 1")
            if not 0 <= t <= k // 2 - 1:
                raise SpecError(f"{self}: torus needs 0 <= t <= k/2-1")
            if k == 2 or (k == 4 and q == 1) or (q == 1 and t in (0, k // 2 - 1)):
                raise SpecError(
                    f"{self}: excluded triple; (k,q,t) must avoid "
                    "(2,q,t), (4,1,t), (k,1,0) and (k,1,k/2-1), which do not "
                    "give strong all-hexagon embeddings")
        elif self.family == KLEIN_BIPARTITE:
            if k < 4 or k % 2:
                raise SpecError(f"{self}: bipartite Klein polyhex needs even k >= 4")
            if q < 2:
                raise SpecError(f"{self}: bipartite Klein polyhex needs q >= 2")
            if t:
                raise SpecError(f"{self}: t is unused for Klein families (store 0)")
        else:
            if q < 2 or q % 2:
                raise SpecError(f"{self}: non-bipartite Klein polyhex needs even q >= 2")
            if k < 3:
                raise SpecError(f"{self}: non-bipartite Klein polyhex needs k >= 3")
            if t:
                raise SpecError(f"{self}: t is unused for Klein families (store 0)")
        return self

    @property
    def n_vertices(self) -> int:
        return self.k * self.q

    def sort_key(self):
        return (_FAMILY_ORDER[self.family], self.k, self.q, self.t)

    def __str__(self):
        if self.family == TORUS:
            return f"T:{self.k},{self.q},{self.t}"
        return f"{_FAMILY_PREFIX[self.family]}:{self.k},{self.q}"


def parse_spec(text: str) -> PolyhexSpec:
    """Parse "T:k,q,t" | "Ke:k,q" | "Ko:k,q" (validated)."""
    try:
        prefix, rest = text.split(":", 1)
        nums = [int(x) for x in rest.split(",")]
    except ValueError as exc:
        raise SpecError(f"cannot parse spec string {text!r}") from exc
    if prefix == "T" and len(nums) == 3:
        spec = PolyhexSpec(TORUS, *nums)
    elif prefix == "Ke" and len(nums) == 2:
        spec = PolyhexSpec(KLEIN_BIPARTITE, nums[0], nums[1])
    elif prefix == "Ko" and len(nums) == 2:
        spec = PolyhexSpec(KLEIN_NONBIPARTITE, nums[0], nums[1])
    else:
        raise SpecError(f"cannot parse spec string {text!r}")
    return spec.validate()


# ---------------------------------------------------------------------------
# The open lattice
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    """The open rectangular hexagon lattice L(k,q) with its coordinates."""

    graph: Graph
    k: int
    q: int
    coords: tuple          # vertex id -> (i, j)
    index: dict            # (i, j) -> vertex id
    black: tuple           # vertex id -> True iff i+j even


def build_lattice(k: int, q: int) -> Lattice:
    if k < 1 or q < 1:
        raise ValueError("lattice needs k >= 1 and q >= 1")
    coords = [(i, j) for j in range(q + 1) for i in range(k + 1)]
    index = {c: v for v, c in enumerate(coords)}
    edges = []
    for j in range(q + 1):
        for i in range(k):
            edges.append((index[(i, j)], index[(i + 1, j)]))
    for j in range(q):
        for i in range(k + 1):
            if i % 2 == j % 2:
                edges.append((index[(i, j)], index[(i, j + 1)]))
    g = Graph(len(coords), edges)
    black = tuple((i + j) % 2 == 0 for (i, j) in coords)
    return Lattice(g, k, q, tuple(coords), index, black)


# ---------------------------------------------------------------------------
# Identifications
# ---------------------------------------------------------------------------


def _mirror_offset(k: int, q: int) -> int:
    # parity of the offset must match the parity of q (see module docstring)
    return k if q % 2 == 0 else k - 1


def _ko_flip(k: int, q: int) -> int:
    return q - 1 if k % 2 == 0 else q - 2


def _identified_pairs(spec: PolyhexSpec) -> list:
    """The literal boundary identifications, as coordinate pairs in L(k,q)."""
    k, q, t = spec.k, spec.q, spec.t
    pairs = []
    if spec.family == TORUS:
        s = q + 2 * t
        for j in range(q + 1):
            pairs.append(((0, j), (k, j)))
        for i in range(k + 1):
            pairs.append(((i, 0), ((i + s) % k, q)))
    elif spec.family == KLEIN_BIPARTITE:
        c = _mirror_offset(k, q)
        for j in range(q + 1):
            pairs.append(((0, j), (k, j)))
        for i in range(k + 1):
            pairs.append(((i, 0), ((c - i) % k, q)))
    else:
        s0 = _ko_flip(k, q)
        for i in range(k + 1):
            pairs.append(((i, 0), (i, q)))
        for j in range(q + 1):
            pairs.append(((0, j), (k, (s0 - j) % q)))
    return pairs


def resolve(spec: PolyhexSpec, i: int, j: int) -> tuple:
    """Map arbitrary extended lattice coordinates into the fundamental
    domain [0,k) x [0,q), following the identification pattern."""
    k, q, t = spec.k, spec.q, spec.t
    if spec.family == TORUS:
        s = q + 2 * t
        m = j // q
        j0 = j - m * q
        i0 = (i - m * s) % k
        return (i0, j0)
    if spec.family == KLEIN_BIPARTITE:
        c = _mirror_offset(k, q)
        while j >= q:
            i, j = (c - i) % k, j - q
        while j < 0:
            i, j = (c - i) % k, j + q
        return (i % k, j)
    s0 = _ko_flip(k, q)
    b = i // k
    r = i - b * k
    if b % 2:
        j = s0 - j
    return (r, j % q)


# ---------------------------------------------------------------------------
# Embeddings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """A polyhex graph with its face structure and construction bookkeeping."""

    spec: PolyhexSpec
    graph: Graph
    faces: tuple             # Cycle objects, one per hexagon
    layers: tuple            # row j -> tuple of vertex ids for columns 0..k-1
    crossing_edges: frozenset  # edge ids of E_0 (non-bipartite Klein; else empty)
    coords: tuple            # vertex id -> canonical (i, j)
    surface: str             # "torus" or "klein-bottle"

    @property
    def coord_index(self) -> dict:
        return {c: v for v, c in enumerate(self.coords)}

    def vertex_at(self, i: int, j: int) -> int:
        return self.coord_index[resolve(self.spec, i, j)]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def build_polyhex(spec: PolyhexSpec) -> Embedding:
    """Construct the graph, its hexagon list, and the crossing edges.

    Raises SpecError for excluded parameters and BuildError if the glued
    object fails any embedding axiom.
    """
    spec.validate()
    k, q = spec.k, spec.q
    lat = build_lattice(k, q)
    uf = _UnionFind(lat.coords)
    for a, b in _identified_pairs(spec):
        uf.union(a, b)

    # canonical representative of every class: its member inside [0,k) x [0,q)
    rep_of = {}
    for c in lat.coords:
        root = uf.find(c)
        if c[0] < k and c[1] < q:
            if root in rep_of and rep_of[root] != c:
                raise BuildError(f"{spec}: identification classes collide at {c}")
            rep_of[root] = c
    if len(rep_of) != k * q:
        raise BuildError(f"{spec}: expected {k * q} vertex classes, got {len(rep_of)}")
    canon = sorted(rep_of.values(), key=lambda c: (c[1], c[0]))
    vid = {c: i for i, c in enumerate(canon)}

    # the formula-based resolver must agree with the union-find on the lattice
    for c in lat.coords:
        if resolve(spec, *c) != rep_of[uf.find(c)]:
            raise BuildError(f"{spec}: resolver disagrees with identifications at {c}")

    edges = set()
    for u, v in lat.graph.edges:
        a = vid[rep_of[uf.find(lat.coords[u])]]
        b = vid[rep_of[uf.find(lat.coords[v])]]
        if a == b:
            raise BuildError(f"{spec}: identification creates a loop at vertex {a}")
        edges.add((a, b) if a < b else (b, a))
    graph = Graph(k * q, sorted(edges))

    # crossing edges: the wrap edges of the second identification of K_o
    crossing = set()
    if spec.family == KLEIN_NONBIPARTITE:
        for j in range(q):
            a = vid[resolve(spec, k - 1, j)]
            b = vid[resolve(spec, k, j)]
            e = (a, b) if a < b else (b, a)
            crossing.add(graph.edge_index[e])

    # hexagons: band j in [0,q), left vertical column c with c = j (mod 2)
    faces = []
    for j in range(q):
        for c in range(k):
            if c % 2 != j % 2:
                continue
            walk = [(c, j), (c + 1, j), (c + 2, j), (c + 2, j + 1), (c + 1, j + 1), (c, j + 1)]
            ids = [vid[resolve(spec, *p)] for p in walk]
            if len(set(ids)) != 6:
                raise BuildError(f"{spec}: hexagon at band {j}, column {c} degenerates")
            try:
                faces.append(cycle_from_vertices(graph, ids))
            except ValueError as exc:
                raise BuildError(f"{spec}: hexagon at band {j}, column {c}: {exc}") from exc

    layers = tuple(tuple(vid[resolve(spec, i, j)] for i in range(k)) for j in range(q))
    surface = "torus" if spec.family == TORUS else "klein-bottle"
    emb = Embedding(spec, graph, tuple(faces), layers, frozenset(crossing),
                    tuple(canon), surface)
    report = validate_polyhex(emb)
    bad = [line for line in report if not line[1]]
    if bad:
        raise BuildError(f"{spec}: embedding validation failed: {bad}")
    return emb


def validate_polyhex(emb: Embedding) -> list:
    """Check every embedding axiom; returns [(check, ok, detail), ...]."""
    g = emb.graph
    k, q = emb.spec.k, emb.spec.q
    report = []
    report.append(("cubic", g.is_cubic(), f"degrees {sorted(set(g.degrees()))}"))
    report.append(("vertex count", g.n == k * q, f"{g.n} vs kq={k * q}"))
    report.append(("edge count", len(g.edges) == 3 * k * q // 2,
                   f"{len(g.edges)} vs 3kq/2={3 * k * q // 2}"))
    report.append(("face count", len(emb.faces) == k * q // 2,
                   f"{len(emb.faces)} vs kq/2={k * q // 2}"))
    hexes = all(len(f) == 6 for f in emb.faces)
    report.append(("faces are hexagons", hexes,
                   f"lengths {sorted({len(f) for f in emb.faces})}"))
    distinct = len({f.edge_ids for f in emb.faces}) == len(emb.faces)
    report.append(("faces distinct", distinct, ""))
    cover = {}
    for f in emb.faces:
        for e in f.edge_ids:
            cover[e] = cover.get(e, 0) + 1
    counts = sorted({cover.get(e, 0) for e in range(len(g.edges))})
    report.append(("each edge on two faces", counts == [2], f"coverage counts {counts}"))
    return report


_NAMED = {"heawood": (14, 1, 2), "cube": (8, 1, 1), "k33": (6, 1, 1)}


def named_graph(name: str) -> Embedding:
    """The classics by their torus coordinates: heawood, cube, k33."""
    if name not in _NAMED:
        raise ValueError(f"unknown name {name!r}; choose from {sorted(_NAMED)}")
    k, q, t = _NAMED[name]
    return build_polyhex(PolyhexSpec(TORUS, k, q, t))


# ---------------------------------------------------------------------------
# Parameter-level predicates
# ---------------------------------------------------------------------------


def torus_param_twin(spec: PolyhexSpec) -> PolyhexSpec:
    """The mirror triple (k, q, t') with t' = (k - 2q - 2t)/2 mod k/2."""
    if spec.family != TORUS:
        raise SpecError("parameter twins exist only for the torus family")
    half = spec.k // 2
    t2 = (half - spec.q - spec.t) % half
    return PolyhexSpec(TORUS, spec.k, spec.q, t2)


def _q1_window_t(k: int) -> int:
    # the unique integer t with (k-3)/4 <= t <= k/4 (the interval has length
    # 3/4, and for even k it always contains exactly one integer)
    t0 = k // 4
    if not (k - 3 <= 4 * t0 <= k):
        t0 = (k - 2) // 4
    assert k - 3 <= 4 * t0 <= k
    return t0


def face_width_class(spec: PolyhexSpec) -> str:
    """"two" or "at-least-three", from closed-form parameter conditions.

    The conditions classify isomorphism classes of embeddings.  For the
    torus with q = 1 the literal window (k-3)/4 <= t <= k/4 holds a single
    triple t0; its class also contains the Prop-3.2 twin k/2-1-t0, and the
    triples t = 1 and t = k/2-2, whose faces i and i+1 share the disjoint
    edges {2i,2i+1} and {2i+2,2i-1} (for 4 | k these are the prism triples,
    isomorphic to T(k/2, 2, k/4-1); for k = 2 mod 4 they are
    hexagon-preserving isomorphic to the window triple itself).  The q = 2
    window {0, k/2-2, k/2-1} is already twin-closed, and k = 4 always has
    two faces sharing both verticals.  face_width_witness is the
    combinatorial ground truth these conditions are tested against.
    """
    spec.validate()
    k, q, t = spec.k, spec.q, spec.t
    if spec.family == TORUS:
        if k == 4:
            return "two"
        if q == 2:
            return "two" if t in (0, k // 2 - 2, k // 2 - 1) else "at-least-three"
        if q == 1:
            t0 = _q1_window_t(k)
            hits = {t0, k // 2 - 1 - t0, 1, k // 2 - 2}
            return "two" if t in hits else "at-least-three"
        return "at-least-three"
    if spec.family == KLEIN_BIPARTITE:
        return "two" if (k == 4 or q == 2) else "at-least-three"
    return "two" if (3 <= k <= 4 or q == 2) else "at-least-three"


def face_width_witness(emb: Embedding):
    """First pair of faces sharing two vertex-disjoint edges, or None.

    Such a pair certifies face-width exactly 2 for a 3-connected strong
    embedding: a curve through the two faces crossing the two shared edges
    meets the graph in two points and cannot bound a disc.
    """
    faces = emb.faces
    for a in range(len(faces)):
        for b in range(a + 1, len(faces)):
            shared = faces[a].edge_ids & faces[b].edge_ids
            if len(shared) < 2:
                continue
            es = sorted(shared)
            for e1, e2 in itertools.combinations(es, 2):
                u1, v1 = emb.graph.edges[e1]
                u2, v2 = emb.graph.edges[e2]
                if len({u1, v1, u2, v2}) == 4:
                    return (a, b), (e1, e2)
    return None


def is_planar_polyhex(spec: PolyhexSpec) -> bool:
    """Closed-form planarity, at the level of isomorphism classes.

    Torus: the cubes T(4,2,*), the prisms T(k,2,k/2-1), and for q = 1 the
    triples t in {1, k/2-2} when 4 | k, which are isomorphic to the prism
    T(k/2, 2, k/4-1) (alternating row and chord steps close after k/2 steps
    exactly when 4 | k; T(8,1,*) is the k = 8 instance, the cube).  These
    are the only q = 1 planars: an affine image a*{0,1,2}+b of the prism
    connection set contains a difference of 1 only for a = +-1 when k/2 is
    even, so the class is the twin pair {1, k/2-2}, and for k = 2 mod 4 the
    whole class is the non-planar Moebius one.

    Bipartite Klein: only K_e(4,2) (the cube).  Non-bipartite Klein:
    K_o(3,q) (a ring of hexagon annuli capped by two triangles) and
    K_o(k,2) with k odd (the k-prism); even k gives Moebius ladders, and
    k >= 5 with q >= 4 forces face-width at least 3, both non-planar.
    """
    spec.validate()
    k, q, t = spec.k, spec.q, spec.t
    if spec.family == TORUS:
        if k == 4 and q == 2:
            return True
        if q == 2 and t == k // 2 - 1:
            return True
        return q == 1 and k % 4 == 0 and t in (1, k // 2 - 2)
    if spec.family == KLEIN_BIPARTITE:
        return (k, q) == (4, 2)
    return k == 3 or (q == 2 and k % 2 == 1)


def all_specs(max_vertices: int) -> list:
    """Every valid spec with kq <= max_vertices, sorted by (family, k, q, t)."""
    out = []
    for k in range(2, max_vertices + 1, 2):
        for q in range(1, max_vertices // k + 1):
            for t in range(k // 2):
                spec = PolyhexSpec(TORUS, k, q, t)
                try:
                    spec.validate()
                except SpecError:
                    continue
                out.append(spec)
    for k in range(4, max_vertices + 1, 2):
        for q in range(2, max_vertices // k + 1):
            out.append(PolyhexSpec(KLEIN_BIPARTITE, k, q).validate())
    for k in range(3, max_vertices + 1):
        for q in range(2, max_vertices // k + 1, 2):
            out.append(PolyhexSpec(KLEIN_NONBIPARTITE, k, q).validate())
    out.sort(key=PolyhexSpec.sort_key)
    return out
