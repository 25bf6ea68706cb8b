"""Game boards: immutable undirected graphs, family builders, text/JSON
formats, and brute-force isomorphism utilities for small graphs.

Vertices are 0-based internally.  Every user-facing surface (text files,
JSON, CLI, error messages) is 1-based; the conversion happens at the
boundary, never inside algorithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

ISO_MAX_VERTICES = 12
AUTOMORPHISM_GROUP_CAP = 500_000

Edge = tuple[int, int]
Point = tuple[float, float]


class GraphError(ValueError):
    """Base class for graph construction and parsing failures."""


class ParamError(GraphError):
    """A family parameter is out of range.  The message names the parameter."""


class ParseError(GraphError):
    """Malformed graph text or JSON.  Carries a 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeLimitError(GraphError):
    """Isomorphism utilities refuse graphs beyond the supported size."""


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    """An undirected graph on vertices 0..n-1.

    Loops are permitted only when ``allows_loops`` is true; parallel edges
    never are.  Instances are immutable and hashable; equality compares the
    vertex count, edge set, and loop flag (layout is cosmetic).
    """

    __slots__ = ("n", "edges", "allows_loops", "layout", "_adj", "_has_loop")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        allows_loops: bool = False,
        layout: Optional[Sequence[Point]] = None,
    ):
        if n < 0:
            raise ParamError(f"vertex count must be >= 0, got n={n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(
                    f"edge ({u + 1}, {v + 1}) has an endpoint outside 1..{n}"
                )
            if u == v and not allows_loops:
                raise GraphError(f"loop at vertex {u + 1} on a loop-free graph")
            e = _normalize_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0] + 1}, {e[1] + 1})")
            seen.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "allows_loops", bool(allows_loops))
        if layout is not None:
            if len(layout) != n:
                raise GraphError(
                    f"layout has {len(layout)} points for {n} vertices"
                )
            layout = tuple((float(x), float(y)) for x, y in layout)
        object.__setattr__(self, "layout", layout)
        adj: list[list[int]] = [[] for _ in range(n)]
        has_loop = [False] * n
        for u, v in seen:
            if u == v:
                has_loop[u] = True
            else:
                adj[u].append(v)
                adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_has_loop", tuple(has_loop))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Graph is immutable")

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v, sorted, excluding v itself even when v has a loop."""
        return self._adj[v]

    def has_loop(self, v: int) -> bool:
        return self._has_loop[v]

    def degree(self, v: int) -> int:
        """Number of incident edges; a loop counts as one."""
        return len(self._adj[v]) + (1 if self._has_loop[v] else 0)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_layout(self, layout: Sequence[Point]) -> "Graph":
        return Graph(self.n, self.edges, self.allows_loops, layout)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
            and self.allows_loops == other.allows_loops
        )

    def __hash__(self):
        return hash((self.n, self.edges, self.allows_loops))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()}, allows_loops={self.allows_loops})"


# ---------------------------------------------------------------------------
# layout helpers (coordinates live in the unit square, y grows downward)


def _circle_layout(count: int, radius: float = 0.45, center: Point = (0.5, 0.5)) -> list[Point]:
    cx, cy = center
    pts = []
    for i in range(count):
        a = -math.pi / 2 + 2 * math.pi * i / max(count, 1)
        pts.append((round(cx + radius * math.cos(a), 4), round(cy + radius * math.sin(a), 4)))
    return pts


def _path_layout(n: int) -> list[Point]:
    if n == 1:
        return [(0.5, 0.5)]
    return [(round(i / (n - 1), 4), 0.5) for i in range(n)]


def _column_layout(count: int, x: float) -> list[Point]:
    if count == 1:
        return [(x, 0.5)]
    return [(x, round(0.1 + 0.8 * i / (count - 1), 4)) for i in range(count)]


# ---------------------------------------------------------------------------
# family builders


def path(n: int) -> Graph:
    """P_n: vertices v1..vn, edges between consecutive vertices."""
    if n < 1:
        raise ParamError(f"path requires n >= 1, got n={n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], layout=_path_layout(n))


def cycle(n: int) -> Graph:
    """C_n: cycle v1..vn labeled clockwise."""
    if n < 3:
        raise ParamError(f"cycle requires n >= 3, got n={n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, edges, layout=_circle_layout(n))


def complete(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise ParamError(f"complete requires n >= 1, got n={n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, edges, layout=_circle_layout(n))


def complete_looped(n: int) -> Graph:
    """K*_n: K_n with a loop added at every vertex."""
    if n < 1:
        raise ParamError(f"complete-looped requires n >= 1, got n={n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(i, i) for i in range(n)]
    return Graph(n, edges, allows_loops=True, layout=_circle_layout(n))


def complete_bipartite(n: int, m: int) -> Graph:
    """K_{n,m}: parts v1..vn and v(n+1)..v(n+m)."""
    if n < 1:
        raise ParamError(f"bipartite requires n >= 1, got n={n}")
    if m < 1:
        raise ParamError(f"bipartite requires m >= 1, got m={m}")
    edges = [(i, n + j) for i in range(n) for j in range(m)]
    layout = _column_layout(n, 0.25) + _column_layout(m, 0.75)
    return Graph(n + m, edges, layout=layout)


def wheel(n: int) -> Graph:
    """W_n on n vertices: rim cycle v1..v(n-1) plus hub vn joined to the rim."""
    if n < 4:
        raise ParamError(f"wheel requires n >= 4, got n={n}")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    layout = _circle_layout(rim) + [(0.5, 0.5)]
    return Graph(n, edges, layout=layout)


def book(n: int) -> Graph:
    """B_n on n vertices: spine edge v1v2, pages v3..vn joined to both spine ends."""
    if n < 3:
        raise ParamError(f"book requires n >= 3, got n={n}")
    edges = [(0, 1)]
    for p in range(2, n):
        edges += [(0, p), (1, p)]
    pages = n - 2
    layout = [(0.15, 0.85), (0.85, 0.85)]
    if pages == 1:
        layout.append((0.5, 0.2))
    else:
        layout += [(round(0.1 + 0.8 * i / (pages - 1), 4), 0.2) for i in range(pages)]
    return Graph(n, edges, layout=layout)


def chorded_cycle(n: int, j: int) -> Graph:
    """C_n plus the chord v1-vj; j must land strictly inside 3..n-1."""
    if n < 4:
        raise ParamError(f"chorded requires n >= 4, got n={n}")
    if not (3 <= j <= n - 1):
        raise ParamError(f"chorded requires 3 <= j <= n-1, got j={j}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.append((0, j - 1))
    return Graph(n, edges, layout=_circle_layout(n))


def triangular_ladder(n: int) -> Graph:
    """T_n: vertices v1..vn, edges between indices differing by 1 or 2."""
    if n < 3:
        raise ParamError(f"ladder requires n >= 3, got n={n}")
    edges = [(i, j) for i in range(n) for j in (i + 1, i + 2) if j < n]
    layout = [
        (round(i / (n - 1), 4), 0.8 if i % 2 == 0 else 0.2) for i in range(n)
    ]
    return Graph(n, edges, layout=layout)


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]            # outer C5
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]   # inner pentagram
    edges += [(i, i + 5) for i in range(5)]                 # spokes
    layout = _circle_layout(5, radius=0.45) + _circle_layout(5, radius=0.22)
    return Graph(10, edges, layout=layout)


def _cube() -> Graph:
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, i + 4) for i in range(4)]
    outer = [(0.1, 0.1), (0.9, 0.1), (0.9, 0.9), (0.1, 0.9)]
    inner = [(0.32, 0.32), (0.68, 0.32), (0.68, 0.68), (0.32, 0.68)]
    return Graph(8, edges, layout=outer + inner)


def _octahedron() -> Graph:
    # K_{2,2,2}: every pair adjacent except the three antipodal pairs.
    missing = {(0, 1), (2, 3), (4, 5)}
    edges = [
        (i, j)
        for i in range(6)
        for j in range(i + 1, 6)
        if (i, j) not in missing
    ]
    ring = _circle_layout(6)
    order = [0, 2, 4, 1, 3, 5]  # place each antipodal pair opposite
    layout = [ring[order.index(i)] for i in range(6)]
    return Graph(6, edges, layout=layout)


def _moser_spindle() -> Graph:
    # 1-based edge list; v1 is the degree-4 apex shared by both rhombi.
    pairs = [
        (1, 2), (1, 5), (1, 6), (1, 7),
        (2, 3), (2, 7), (3, 4), (3, 7),
        (4, 5), (4, 6), (5, 6),
    ]
    edges = [(u - 1, v - 1) for u, v in pairs]
    layout = [
        (0.5, 0.05), (0.9, 0.35), (1.0, 0.95), (0.0, 0.95),
        (0.1, 0.35), (0.4, 0.62), (0.6, 0.62),
    ]
    return Graph(7, edges, layout=layout)


NAMED_GRAPHS = {
    "moser-spindle": _moser_spindle,
    "petersen": _petersen,
    "cube": _cube,
    "octahedron": _octahedron,
}

_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete-looped": 1,
    "bipartite": 2,
    "wheel": 1,
    "book": 1,
    "chorded": 2,
    "ladder": 1,
}

_FAMILY_ALIASES = {
    "looped": "complete-looped",
    "triangular-ladder": "ladder",
}


@dataclass(frozen=True)
class FamilySpec:
    """A buildable description of a board: a parametric family, a named
    graph, or a custom edge list."""

    kind: str
    args: tuple[int, ...] = ()
    name: Optional[str] = None
    n: Optional[int] = None
    edges: Optional[tuple[Edge, ...]] = None
    loops: bool = False

    @staticmethod
    def parse(text: str) -> "FamilySpec":
        """Parse CLI syntax such as ``path:5``, ``bipartite:2,3``, ``petersen``."""
        text = text.strip().lower()
        name, _, rest = text.partition(":")
        name = _FAMILY_ALIASES.get(name, name)
        if name in NAMED_GRAPHS:
            if rest:
                raise ParamError(f"named graph {name!r} takes no parameters")
            return FamilySpec(kind="named", name=name)
        if name not in _FAMILY_ARITY:
            known = sorted(_FAMILY_ARITY) + sorted(NAMED_GRAPHS)
            raise ParamError(f"unknown family {name!r}; known: {', '.join(known)}")
        parts = [p for p in rest.split(",") if p] if rest else []
        try:
            args = tuple(int(p) for p in parts)
        except ValueError:
            raise ParamError(f"family {name!r} parameters must be integers, got {rest!r}")
        if len(args) != _FAMILY_ARITY[name]:
            raise ParamError(
                f"family {name!r} takes {_FAMILY_ARITY[name]} parameter(s), got {len(args)}"
            )
        return FamilySpec(kind=name, args=args)

    @staticmethod
    def custom(graph: Graph) -> "FamilySpec":
        return FamilySpec(
            kind="custom",
            n=graph.n,
            edges=tuple(graph.sorted_edges()),
            loops=graph.allows_loops,
        )

    def build(self) -> Graph:
        if self.kind == "named":
            assert self.name is not None
            return NAMED_GRAPHS[self.name]()
        if self.kind == "custom":
            assert self.n is not None and self.edges is not None
            g = Graph(self.n, self.edges, allows_loops=self.loops)
            if g.layout is None:
                g = g.with_layout(_circle_layout(g.n))
            return g
        builders = {
            "path": path,
            "cycle": cycle,
            "complete": complete,
            "complete-looped": complete_looped,
            "bipartite": complete_bipartite,
            "wheel": wheel,
            "book": book,
            "chorded": chorded_cycle,
            "ladder": triangular_ladder,
        }
        return builders[self.kind](*self.args)

    def label(self) -> str:
        if self.kind == "named":
            return str(self.name)
        if self.kind == "custom":
            return f"custom({self.n} vertices, {len(self.edges or ())} edges)"
        if self.args:
            return f"{self.kind}:{','.join(str(a) for a in self.args)}"
        return self.kind


def build(spec: FamilySpec) -> Graph:
    return spec.build()


# ---------------------------------------------------------------------------
# text and JSON formats


def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format.

    Lines starting with ``#`` are comments.  An optional ``loops`` directive
    may precede the header.  The first data line is the vertex count; each
    following line is an edge ``u v`` with 1-based endpoints.
    """
    n: Optional[int] = None
    allows_loops = False
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if line.lower() == "loops":
                allows_loops = True
                continue
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"expected vertex count, got {line!r}", lineno)
            if n < 0:
                raise ParseError(f"vertex count must be >= 0, got {n}", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"edge endpoints must be integers, got {line!r}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}) has an endpoint outside 1..{n}", lineno)
        if u == v and not allows_loops:
            raise ParseError(
                f"loop at vertex {u} but no 'loops' directive", lineno
            )
        e = _normalize_edge(u - 1, v - 1)
        if e in seen:
            raise ParseError(f"duplicate edge ({e[0] + 1}, {e[1] + 1})", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise ParseError("missing vertex count")
    return Graph(n, edges, allows_loops=allows_loops)


def graph_to_text(graph: Graph) -> str:
    lines = []
    if graph.allows_loops:
        lines.append("loops")
    lines.append(str(graph.n))
    lines += [f"{u + 1} {v + 1}" for u, v in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(graph: Graph) -> dict:
    data: dict = {
        "n": graph.n,
        "edges": [[u + 1, v + 1] for u, v in graph.sorted_edges()],
        "loops": graph.allows_loops,
    }
    if graph.layout is not None:
        data["layout"] = [[x, y] for x, y in graph.layout]
    return data


def graph_from_json(data: dict) -> Graph:
    try:
        n = int(data["n"])
        raw_edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"graph JSON needs integer 'n' and a list 'edges': {exc}")
    loops = bool(data.get("loops", False))
    edges = []
    for item in raw_edges:
        if len(item) != 2:
            raise ParseError(f"edge {item!r} must have exactly two endpoints")
        u, v = int(item[0]), int(item[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        edges.append((u - 1, v - 1))
    layout = None
    if data.get("layout") is not None:
        layout = [(float(x), float(y)) for x, y in data["layout"]]
    try:
        return Graph(n, edges, allows_loops=loops, layout=layout)
    except GraphError as exc:
        raise ParseError(str(exc))


# ---------------------------------------------------------------------------
# isomorphism and automorphisms (brute force with pruning; small graphs only)


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection on vertices, stored as a tuple: image[i] = perm[i]."""

    perm: tuple[int, ...]

    def apply(self, v: int) -> int:
        return self.perm[v]

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """self after other: (self.compose(other)).apply(v) == self(other(v))."""
        return VertexPermutation(tuple(self.perm[p] for p in other.perm))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return VertexPermutation(tuple(inv))


def _check_size(graph: Graph, op: str) -> None:
    if graph.n > ISO_MAX_VERTICES:
        raise SizeLimitError(
            f"{op} supports at most {ISO_MAX_VERTICES} vertices, got {graph.n}"
        )


def _profile(graph: Graph, v: int) -> tuple[int, bool]:
    return (len(graph.neighbors(v)), graph.has_loop(v))


def _iso_search(g: Graph, h: Graph, cap: Optional[int] = None):
    """Backtracking search for adjacency-preserving bijections g -> h.

    Yields mappings as tuples (image of vertex i at position i).  Vertices
    are assigned in descending degree order and every partial assignment is
    checked against all previously assigned vertices, so mismatched prefixes
    die early even on regular graphs.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    g_adj = [set(g.neighbors(v)) for v in range(n)]
    h_adj = [set(h.neighbors(v)) for v in range(n)]
    mapping = [-1] * n
    used = [False] * n
    found = 0

    def extend(idx: int):
        nonlocal found
        if idx == n:
            found += 1
            if cap is not None and found > cap:
                raise SizeLimitError(
                    f"automorphism group exceeds the cap of {cap} permutations"
                )
            yield tuple(mapping)
            return
        v = order[idx]
        pv = _profile(g, v)
        for w in range(n):
            if used[w] or _profile(h, w) != pv:
                continue
            ok = True
            for u in order[:idx]:
                if (u in g_adj[v]) != (mapping[u] in h_adj[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                yield from extend(idx + 1)
                mapping[v] = -1
                used[w] = False

    yield from extend(0)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by pruned backtracking."""
    _check_size(g, "isomorphism")
    _check_size(h, "isomorphism")
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(_profile(g, v) for v in range(g.n)) != sorted(
        _profile(h, v) for v in range(h.n)
    ):
        return False
    for _ in _iso_search(g, h):
        return True
    return False


def automorphisms(graph: Graph) -> list[VertexPermutation]:
    """The full automorphism group, identity first, then sorted.

    Groups larger than AUTOMORPHISM_GROUP_CAP raise SizeLimitError rather
    than exhausting memory.
    """
    _check_size(graph, "automorphisms")
    perms = set(_iso_search(graph, graph, cap=AUTOMORPHISM_GROUP_CAP))
    identity = tuple(range(graph.n))
    rest = sorted(perms - {identity})
    return [VertexPermutation(identity)] + [VertexPermutation(p) for p in rest]
