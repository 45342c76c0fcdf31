"""Immutable simple graphs on dense integer vertices, plus parsing.

Vertices are always 0..n-1.  Edges are unordered pairs stored as (u, v)
with u < v.  The text format is a header line "n m" followed by m lines
"u v"; a JSON alternative is {"n": ..., "edges": [[u, v], ...]}.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    LoopEdge,
    MalformedLine,
    VertexOutOfRange,
)


class Graph:
    """An immutable simple undirected graph."""

    __slots__ = ("n", "_edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise VertexOutOfRange(f"vertex count {n} is negative")
        self.n = n
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj
        )
        self._masks: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self._adj[u]

    def adjacency_mask(self, v: int) -> int:
        if self._masks is None:
            masks = []
            for u in range(self.n):
                m = 0
                for w in self._adj[u]:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks[v]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def connected_avoiding(g: Graph, a: int, b: int, banned: int) -> bool:
    """True when a and b lie in one component of g minus the banned set.

    ``banned`` is a bitmask of forbidden vertices; a and b themselves are
    always allowed.
    """
    if a == b:
        return True
    target = 1 << b
    seen = (1 << a) | banned & ~target
    frontier = 1 << a
    while frontier:
        nxt = 0
        v = frontier
        while v:
            low = v & -v
            nxt |= g.adjacency_mask(low.bit_length() - 1)
            v ^= low
        if nxt & target:
            return True
        frontier = nxt & ~seen
        seen |= frontier
    return False


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedLine(f"{what}: {tok!r} is not an integer") from None


def parse_graph(text: str) -> Graph:
    """Parse the "n m" text format. Duplicate edge lines are rejected."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx >= len(lines):
        raise MalformedLine("empty input")
    head = lines[idx].split()
    if len(head) != 2:
        raise MalformedLine(f"header must be 'n m', got {lines[idx]!r}")
    n = _parse_int(head[0], "vertex count")
    m = _parse_int(head[1], "edge count")
    if n < 0 or m < 0:
        raise MalformedLine("negative count in header")
    idx += 1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    taken = 0
    while taken < m:
        if idx >= len(lines):
            raise MalformedLine(f"expected {m} edge lines, found {taken}")
        line = lines[idx]
        idx += 1
        if not line.strip():
            raise MalformedLine("blank line inside edge list")
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"edge line must be 'u v', got {line!r}")
        u = _parse_int(parts[0], "edge endpoint")
        v = _parse_int(parts[1], "edge endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) listed twice")
        seen.add(key)
        edges.append(key)
        taken += 1
    for rest in lines[idx:]:
        if rest.strip():
            raise MalformedLine(f"unexpected trailing line {rest!r}")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_graph_json(obj: object) -> Graph:
    """Parse the JSON form (a dict or a JSON string)."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise MalformedLine(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise MalformedLine("JSON graph needs 'n' and 'edges' keys")
    n = obj["n"]
    if not isinstance(n, int):
        raise MalformedLine("'n' must be an integer")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for item in obj["edges"]:
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise MalformedLine(f"edge entry {item!r} must be a pair")
        u, v = item
        if not (isinstance(u, int) and isinstance(v, int)):
            raise MalformedLine(f"edge entry {item!r} must hold integers")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) listed twice")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def graph_as_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def complement_pairs(g: Graph) -> Iterator[tuple[int, int]]:
    """Non-adjacent vertex pairs (u < v), in lexicographic order."""
    for u in range(g.n):
        nbrs = set(g.neighbors(u))
        for v in range(u + 1, g.n):
            if v not in nbrs:
                yield (u, v)
