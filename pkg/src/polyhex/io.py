"""Serialization: graph6, edge-list JSON, DOT, and orientation files."""

from __future__ import annotations

import json

from .graphs import Graph


def to_graph6(g: Graph) -> str:
    """Encode in graph6 (bit-packed upper triangle, 6 bits per character)."""
    n = g.n
    if n <= 62:
        head = [chr(n + 63)]
    elif n <= 258047:
        head = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        raise ValueError("graph6 supports at most 258047 vertices here")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        head.append(chr(val + 63))
    return "".join(head)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("invalid graph6 character")
    if data[0] == 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = n * (n - 1) // 2
    bits = []
    for d in body:
        for s6 in (5, 4, 3, 2, 1, 0):
            bits.append(d >> s6 & 1)
    if len(bits) < need:
        raise ValueError("graph6 string too short")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_edge_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def from_edge_json(text: str) -> Graph:
    data = json.loads(text)
    return Graph(int(data["n"]), [tuple(e) for e in data["edges"]])


def to_dot(g: Graph, comments=(), directed_pairs=None) -> str:
    """DOT text; pass directed_pairs (list of (tail, head)) for a digraph."""
    lines = []
    for c in comments:
        lines.append(f"// {c}")
    if directed_pairs is None:
        lines.append("graph {")
        for u, v in g.edges:
            lines.append(f"  {u} -- {v};")
    else:
        lines.append("digraph {")
        for t, h in directed_pairs:
            lines.append(f"  {t} -> {h};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def orientation_to_json(direction) -> str:
    return json.dumps([list(p) for p in direction])


def orientation_from_json(text: str, g: Graph) -> tuple:
    """Parse an orientation file and check it covers every edge exactly once."""
    pairs = [tuple(p) for p in json.loads(text)]
    seen = {}
    for t, h in pairs:
        e = (t, h) if t < h else (h, t)
        if e not in g.edge_index:
            raise ValueError(f"orientation lists non-edge ({t},{h})")
        if e in seen:
            raise ValueError(f"orientation lists edge {e} twice")
        seen[e] = (t, h)
    missing = [e for e in g.edges if e not in seen]
    if missing:
        raise ValueError(f"orientation misses edges {missing[:3]}")
    return tuple(seen[e] for e in g.edges)
