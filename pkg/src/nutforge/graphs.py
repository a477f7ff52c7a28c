"""Simple graphs on integer vertices, plus graph6 / edge-list interchange.

Vertices are 0..vertex_count-1.  Edges are stored as sorted pairs (u, v)
with u < v, so a SimpleGraph can never hold a loop or a parallel edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from collections import deque


class GraphFormatError(ValueError):
    """Raised when graph6 or edge-list input cannot be parsed."""


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge ({u}, {v}) for order {self.vertex_count}")

    @staticmethod
    def from_edges(vertex_count: int, edges) -> "SimpleGraph":
        norm = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        return SimpleGraph(vertex_count, norm)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_rows(self) -> list[list[int]]:
        rows = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for u, v in self.edges:
            rows[u][v] = 1
            rows[v][u] = 1
        return rows


def is_connected(g: SimpleGraph) -> bool:
    if g.vertex_count == 0:
        return True
    adj = g.neighbors()
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == g.vertex_count


def is_bipartite(g: SimpleGraph) -> bool:
    adj = g.neighbors()
    color = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def is_regular(g: SimpleGraph, d: int) -> bool:
    return all(deg == d for deg in g.degrees())


# ---------------------------------------------------------------------------
# graph6 (McKay's ASCII format for simple graphs)
# ---------------------------------------------------------------------------

def _encode_graph6_order(n: int) -> bytes:
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 orders above 258047 not supported")


def to_graph6(g: SimpleGraph) -> str:
    """Encode as graph6: order header, then the upper triangle read column by
    column (pairs (0,1), (0,2), (1,2), (0,3), ...) packed into 6-bit chars."""
    n = g.vertex_count
    out = bytearray(_encode_graph6_order(n))
    bits = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            bits = (bits << 1) | (1 if (u, v) in g.edges else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> SimpleGraph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = [ord(c) - 63 for c in data]
    if not raw or any(x < 0 or x > 63 for x in raw):
        raise GraphFormatError(f"not a graph6 string: {text!r}")
    if raw[0] == 63:
        if len(raw) < 4:
            raise GraphFormatError("truncated graph6 order")
        n = (raw[1] << 12) | (raw[2] << 6) | raw[3]
        body = raw[4:]
    else:
        n = raw[0]
        body = raw[1:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise GraphFormatError(f"graph6 body too short for order {n}")
    edges = set()
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if body[idx // 6] & (1 << (5 - idx % 6)):
                edges.add((u, v))
            idx += 1
    return SimpleGraph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Plain edge-list interchange: first line "n <order>", then "u v" per edge.
# ---------------------------------------------------------------------------

def to_edge_list(g: SimpleGraph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> SimpleGraph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate order header")
            try:
                n = int(parts[1])
            except (IndexError, ValueError):
                raise GraphFormatError(f"line {lineno}: bad order header {line!r}") from None
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop {u} {v} not allowed in a simple graph")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <order>' header")
    try:
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
