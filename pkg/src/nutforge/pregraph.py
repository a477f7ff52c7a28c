"""Pregraphs: dart-based multigraphs with loops, parallel edges and semi-edges.

A pregraph is a quadruple (darts, vertices, beg, inv): beg maps each dart to
its initial vertex and inv is the dart-reversal involution.  A dart fixed by
inv is a semi-edge; a pair {a, inv a} with both ends at the same vertex is a
loop.  Degree counts darts at a vertex, so a semi-edge contributes 1 and a
loop contributes 2; the adjacency diagonal follows the same rule.

Construction goes through *element lists*.  An element is one structural
unit with a fixed id order used everywhere (files, CLI voltage lists,
voltage-sweep assignments):

    ("E", u, v)   one edge copy from u to v (u < v), copies listed adjacently
    ("L", v)      one loop at v
    ("S", v)      one semi-edge at v

sorted primarily E < L < S, then by endpoints.  Element k owns darts 2k and
2k+1 except that semi-edges own a single self-inverse dart.
"""
from __future__ import annotations

from dataclasses import dataclass
from collections import Counter, deque

from .graphs import SimpleGraph

Element = tuple  # ("E", u, v) | ("L", v) | ("S", v)

_KIND_ORDER = {"E": 0, "L": 1, "S": 2}


class PregraphFormatError(ValueError):
    """Raised when a textual pregraph record cannot be parsed."""


@dataclass(frozen=True)
class Pregraph:
    vertex_count: int
    beg: tuple[int, ...]
    inv: tuple[int, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a pregraph needs at least one vertex")
        n_darts = len(self.beg)
        if len(self.inv) != n_darts:
            raise ValueError("beg and inv must cover the same dart set")
        for a in range(n_darts):
            if not 0 <= self.beg[a] < self.vertex_count:
                raise ValueError(f"dart {a} starts at missing vertex {self.beg[a]}")
            if self.inv[self.inv[a]] != a:
                raise ValueError(f"inv is not an involution at dart {a}")

    @property
    def dart_count(self) -> int:
        return len(self.beg)

    def degree(self, v: int) -> int:
        return sum(1 for x in self.beg if x == v)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for x in self.beg:
            deg[x] += 1
        return deg

    def is_semi_edge(self, a: int) -> bool:
        return self.inv[a] == a

    def elements(self) -> list[Element]:
        """Element list in canonical id order (see module docstring)."""
        return [el for el, _ in self.elements_with_darts()]

    def elements_with_darts(self) -> list[tuple[Element, int]]:
        """(element, representative dart) pairs in element id order.

        The representative dart of ("E", u, v) begins at u; of a loop or a
        semi-edge, at its vertex.  Relies on the dart layout produced by
        from_element_list, which all constructors funnel through.
        """
        out = []
        seen = set()
        for a in range(self.dart_count):
            if a in seen:
                continue
            b = self.inv[a]
            seen.add(a)
            seen.add(b)
            x, y = self.beg[a], self.beg[b]
            if a == b:
                out.append((("S", x), a))
            elif x == y:
                out.append((("L", x), a))
            elif x < y:
                out.append((("E", x, y), a))
            else:
                out.append((("E", y, x), b))
        return out

    @staticmethod
    def from_element_list(vertex_count: int, elements) -> "Pregraph":
        elements = sorted(elements, key=_element_key)
        beg: list[int] = []
        inv: list[int] = []
        for el in elements:
            kind = el[0]
            a = len(beg)
            if kind == "E":
                _, u, v = el
                if u == v:
                    raise ValueError(f"edge element {el} must join distinct vertices")
                if u > v:
                    u, v = v, u
                beg += [u, v]
                inv += [a + 1, a]
            elif kind == "L":
                _, v = el
                beg += [v, v]
                inv += [a + 1, a]
            elif kind == "S":
                _, v = el
                beg.append(v)
                inv.append(a)
            else:
                raise ValueError(f"unknown element kind {kind!r}")
        return Pregraph(vertex_count, tuple(beg), tuple(inv))

    @staticmethod
    def from_counts(vertex_count: int, edges=None, loops=None, semis=None) -> "Pregraph":
        """Build from multiplicity maps: edges {(u,v): m}, loops {v: k}, semis {v: k}."""
        els: list[Element] = []
        for (u, v), m in (edges or {}).items():
            els.extend([("E", min(u, v), max(u, v))] * m)
        for v, k in (loops or {}).items():
            els.extend([("L", v)] * k)
        for v, k in (semis or {}).items():
            els.extend([("S", v)] * k)
        return Pregraph.from_element_list(vertex_count, els)


def _element_key(el: Element):
    return (_KIND_ORDER[el[0]],) + el[1:]


def element_counts(p: Pregraph) -> tuple[Counter, Counter, Counter]:
    """(edge multiplicities by (u,v), loop counts by v, semi counts by v)."""
    edges: Counter = Counter()
    loops: Counter = Counter()
    semis: Counter = Counter()
    for el in p.elements():
        if el[0] == "E":
            edges[(el[1], el[2])] += 1
        elif el[0] == "L":
            loops[el[1]] += 1
        else:
            semis[el[1]] += 1
    return edges, loops, semis


def adjacency_matrix(p: Pregraph) -> list[list[int]]:
    """Symmetric integer matrix: off-diagonal (x, y) counts darts from x to y;
    diagonal (x, x) is semi-edges at x plus twice the loops at x."""
    n = p.vertex_count
    mat = [[0] * n for _ in range(n)]
    for a in range(p.dart_count):
        x = p.beg[a]
        y = p.beg[p.inv[a]]
        mat[x][y] += 1
    # Each loop contributes two darts x->x, already counted as +2; each
    # semi-edge is one self-inverse dart, counted as +1.
    return mat


def underlying_graph(p: Pregraph) -> SimpleGraph:
    """Strip semi-edges, loops and duplicate edges."""
    edges = set()
    for a in range(p.dart_count):
        x = p.beg[a]
        y = p.beg[p.inv[a]]
        if x < y:
            edges.add((x, y))
    return SimpleGraph(p.vertex_count, frozenset(edges))


def is_connected(p: Pregraph) -> bool:
    g = underlying_graph(p)
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


def is_cubic(p: Pregraph) -> bool:
    return all(d == 3 for d in p.degrees())


# ---------------------------------------------------------------------------
# Textual format: "l=<order>" header, then one record per structural group:
#   E u v m   (m parallel edges between u and v)
#   L v k     (k loops at v)
#   S v k     (k semi-edges at v)
# ---------------------------------------------------------------------------

def encode_pregraph(p: Pregraph) -> str:
    edges, loops, semis = element_counts(p)
    lines = [f"l={p.vertex_count}"]
    for (u, v), m in sorted(edges.items()):
        lines.append(f"E {u} {v} {m}")
    for v, k in sorted(loops.items()):
        lines.append(f"L {v} {k}")
    for v, k in sorted(semis.items()):
        lines.append(f"S {v} {k}")
    return "\n".join(lines) + "\n"


def decode_pregraph(text: str) -> Pregraph:
    records = _parse_records(text.splitlines())
    return _records_to_pregraph(records)


def encode_pregraph_file(pregraphs) -> str:
    """Multiple pregraphs, blocks separated by a blank line."""
    return "\n".join(encode_pregraph(p) for p in pregraphs)


def decode_pregraph_file(text: str) -> list[Pregraph]:
    blocks: list[list[str]] = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip():
            if line.strip().startswith("l=") and current:
                blocks.append(current)
                current = []
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return [_records_to_pregraph(_parse_records(block)) for block in blocks]


def _parse_records(lines) -> list[tuple]:
    records: list[tuple] = []
    order = None
    for lineno, line in enumerate(lines, start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith("l="):
            if order is not None:
                raise PregraphFormatError(f"line {lineno}: duplicate l= header")
            try:
                order = int(stripped[2:])
            except ValueError:
                raise PregraphFormatError(f"line {lineno}: bad header {line!r}") from None
            records.append(("l", order))
            continue
        parts = stripped.split()
        kind = parts[0]
        try:
            if kind == "E":
                u, v, m = map(int, parts[1:4])
                if len(parts) != 4:
                    raise ValueError
                records.append(("E", u, v, m))
            elif kind in ("L", "S"):
                v, k = map(int, parts[1:3])
                if len(parts) != 3:
                    raise ValueError
                records.append((kind, v, k))
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise PregraphFormatError(f"line {lineno}: bad record {line!r}") from None
    if order is None:
        raise PregraphFormatError("missing l= header")
    return records


def _records_to_pregraph(records) -> Pregraph:
    order = None
    els: list[Element] = []
    for rec in records:
        if rec[0] == "l":
            order = rec[1]
        elif rec[0] == "E":
            _, u, v, m = rec
            if m < 1:
                raise PregraphFormatError(f"edge record with multiplicity {m}")
            els.extend([("E", min(u, v), max(u, v))] * m)
        else:
            kind, v, k = rec
            if k < 1:
                raise PregraphFormatError(f"{kind} record with count {k}")
            els.extend([(kind, v)] * k)
    try:
        return Pregraph.from_element_list(order, els)
    except ValueError as exc:
        raise PregraphFormatError(str(exc)) from None


def find_dart(p: Pregraph, u: int, v: int, copy: int = 0) -> int:
    """Dart id of the copy-th edge element from u to v (direction u -> v)."""
    found = 0
    for el, a in p.elements_with_darts():
        if el[0] == "E" and {el[1], el[2]} == {u, v}:
            if found == copy:
                return a if p.beg[a] == u else p.inv[a]
            found += 1
    raise ValueError(f"no edge copy {copy} between {u} and {v}")
