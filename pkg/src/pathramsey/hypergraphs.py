"""Triangle decompositions, their dual hypergraphs, and the chromatic index.

A 3-colored graph whose monochromatic components are all triangles dualizes
to a hypergraph whose vertices are the triangles and whose hyperedges are the
original vertices; the dual of a 6-regular host is 3-uniform, 3-regular,
3-partite, and linear, and the search harness asks whether every such
hypergraph has chromatic index at most 5.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

from .goodness import Budget, BudgetExceeded
from .graphs import (
    ColoredGraph,
    Graph,
    GraphError,
    color_subgraph,
    connected_components,
)


@dataclass(frozen=True)
class Hypergraph3:
    """Hypergraph with (intended) 3-element edges and an optional 3-partition.

    The constructor stores what it is given; the property checkers below are
    the arbiters, so slightly malformed duals (non-6-regular hosts) can still
    be emitted with their failing flags reported.
    """

    n: int
    edges: tuple[frozenset[int], ...]
    parts: tuple[frozenset[int], frozenset[int], frozenset[int]] | None = None

    def __post_init__(self):
        for e in self.edges:
            if any(not 0 <= v < self.n for v in e):
                raise GraphError("hyperedge vertex out of range")

    def is_three_uniform(self) -> bool:
        return all(len(e) == 3 for e in self.edges)

    def is_three_regular(self) -> bool:
        count = [0] * self.n
        for e in self.edges:
            for v in e:
                count[v] += 1
        return all(c == 3 for c in count)

    def is_linear(self) -> bool:
        for i in range(len(self.edges)):
            for j in range(i + 1, len(self.edges)):
                if len(self.edges[i] & self.edges[j]) > 1:
                    return False
        return True

    def is_three_partite(self) -> bool:
        parts = self.parts if self.parts is not None else find_three_partition(self)
        if parts is None:
            return False
        if sorted(v for p in parts for v in p) != list(range(self.n)):
            return False
        return all(all(len(e & p) == 1 for p in parts) for e in self.edges)

    def to_json(self) -> str:
        doc: dict = {"v": self.n, "edges": [sorted(e) for e in self.edges]}
        if self.parts is not None:
            doc["parts"] = [sorted(p) for p in self.parts]
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph3":
        try:
            doc = json.loads(text)
            n = int(doc["v"])
            edges = tuple(frozenset(int(v) for v in e) for e in doc["edges"])
            parts = doc.get("parts")
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"invalid hypergraph document: {exc}") from exc
        if parts is not None:
            if len(parts) != 3:
                raise GraphError("parts must list exactly three classes")
            parts = tuple(frozenset(int(v) for v in p) for p in parts)
        return cls(n, edges, parts)


def find_three_partition(h: Hypergraph3):
    """Search for a 3-partition meeting every edge once; None if impossible."""
    assign: dict[int, int] = {}
    edges = [sorted(e) for e in h.edges if len(e) == 3]
    if not all(len(e) == 3 for e in h.edges):
        return None

    def ok(v: int, p: int) -> bool:
        for e in edges:
            if v in e:
                for u in e:
                    if u != v and assign.get(u) == p:
                        return False
        return True

    order = sorted(range(h.n))

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for p in range(3):
            if ok(v, p):
                assign[v] = p
                if place(i + 1):
                    return True
                del assign[v]
        return False

    if not place(0):
        return None
    return tuple(frozenset(v for v in range(h.n) if assign[v] == p) for p in range(3))


@dataclass(frozen=True)
class TriangleDecomposition:
    host: ColoredGraph
    triangles: tuple[tuple[int, frozenset[int]], ...]


@dataclass(frozen=True)
class DecompositionResult:
    decomposition: TriangleDecomposition | None
    offending: tuple[int, frozenset[int]] | None  # (color, component) that is not a triangle


def detect_triangle_decomposition(cg: ColoredGraph) -> DecompositionResult:
    """Check that every monochromatic component is a triangle."""
    if cg.k != 3:
        raise GraphError("triangle decompositions are defined for 3-colored graphs")
    triangles = []
    for c in range(cg.k):
        sub = color_subgraph(cg, c)
        for comp in connected_components(sub):
            if len(comp) == 1:
                continue
            inner = sub.subgraph(comp)
            if len(comp) != 3 or len(inner.edges) != 3:
                return DecompositionResult(None, (c, comp))
            triangles.append((c, comp))
    return DecompositionResult(TriangleDecomposition(cg, tuple(triangles)), None)


@dataclass(frozen=True)
class DualReport:
    hypergraph: Hypergraph3
    three_uniform: bool
    three_regular: bool
    three_partite: bool
    linear: bool
    host_six_regular: bool


def build_dual(td: TriangleDecomposition) -> DualReport:
    """Dual hypergraph: vertices are triangles, hyperedges are host vertices.

    Each host vertex's set of incident triangles becomes one hyperedge; the
    3-partition is taken directly from the triangle colors.  A non-6-regular
    host yields a dual whose failing property flags are simply reported.
    """
    host = td.host.graph
    incident: list[list[int]] = [[] for _ in range(host.n)]
    for idx, (_, comp) in enumerate(td.triangles):
        for v in comp:
            incident[v].append(idx)
    edges = tuple(frozenset(tris) for tris in incident if tris)
    parts = tuple(
        frozenset(i for i, (c, _) in enumerate(td.triangles) if c == p) for p in range(3)
    )
    h = Hypergraph3(len(td.triangles), edges, parts)
    six_regular = all(host.degree(v) == 6 for v in range(host.n))
    return DualReport(
        h,
        h.is_three_uniform(),
        h.is_three_regular(),
        h.is_three_partite(),
        h.is_linear(),
        six_regular,
    )


def intersection_graph(h: Hypergraph3) -> Graph:
    """Graph on hyperedges, adjacent when they share a vertex."""
    m = len(h.edges)
    pairs = [
        (i, j) for i in range(m) for j in range(i + 1, m) if h.edges[i] & h.edges[j]
    ]
    return Graph.from_edges(m, pairs)


def chromatic_index(h: Hypergraph3, budget: Budget = Budget()) -> int | None:
    """Exact chromatic index; None when the search budget runs out.

    Intersecting hyperedges must differ in color, so this is the chromatic
    number of the intersection graph, computed here by direct backtracking
    (the branch-and-bound solver in the Ramsey module is the cross-check).
    """
    g = intersection_graph(h)
    m = g.n
    if m == 0:
        return 0
    from .graphs import adjacency_masks

    masks = adjacency_masks(g)
    order = sorted(range(m), key=lambda v: -bin(masks[v]).count("1"))
    nodes = 0
    max_nodes = budget.max_nodes

    def colorable(k: int) -> bool:
        nonlocal nodes
        colors = [-1] * m

        def place(i: int) -> bool:
            nonlocal nodes
            if i == m:
                return True
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExceeded(nodes)
            v = order[i]
            used = {colors[u] for u in range(m) if masks[v] >> u & 1 and colors[u] != -1}
            cap = min(k, max(colors[order[j]] for j in range(i)) + 2) if i else 1
            for c in range(cap):
                if c in used:
                    continue
                colors[v] = c
                if place(i + 1):
                    return True
                colors[v] = -1
            return False

        return place(0)

    try:
        for k in range(1, m + 1):
            if colorable(k):
                return k
    except BudgetExceeded:
        return None
    return m


@dataclass(frozen=True)
class SearchEntry:
    index: int
    valid: bool
    reason: str | None
    chi_index: int | None
    flagged: bool


def question25_search(corpus, budget: Budget = Budget()) -> list[SearchEntry]:
    """Per-instance chromatic index over a corpus; flags any instance above 5.

    Instances failing the 3-uniform / 3-regular / 3-partite / linear checks
    are skipped with the failing property named.
    """
    report = []
    for i, h in enumerate(corpus):
        reason = None
        for name, check in (
            ("3-uniform", h.is_three_uniform),
            ("3-regular", h.is_three_regular),
            ("3-partite", h.is_three_partite),
            ("linear", h.is_linear),
        ):
            if not check():
                reason = f"not {name}"
                break
        if reason is not None:
            report.append(SearchEntry(i, False, reason, None, False))
            continue
        chi = chromatic_index(h, budget)
        report.append(SearchEntry(i, True, None, chi, chi is not None and chi >= 6))
    return report


# ---------------------------------------------------------------------------
# Instance generation.

def generate_small_instances(max_edges: int = 9) -> list[Hypergraph3]:
    """All 3-uniform 3-regular 3-partite linear hypergraphs with <= max_edges
    hyperedges, up to isomorphism.

    Counting forces e = v and part sizes e/3, so candidate sizes are the
    multiples of 3; orderly generation picks edge triples in increasing order
    and canonical forms reject isomorphs (part permutations included).
    """
    out = []
    for e in range(3, max_edges + 1, 3):
        out.extend(_instances_with_edges(e))
    return out


def _instances_with_edges(e: int) -> list[Hypergraph3]:
    m = e // 3
    parts = [list(range(p * m, (p + 1) * m)) for p in range(3)]
    candidates = [
        (a, b, c) for a in parts[0] for b in parts[1] for c in parts[2]
    ]
    found: dict[tuple, Hypergraph3] = {}

    def compatible(tri, chosen) -> bool:
        return all(len(set(tri) & set(t)) <= 1 for t in chosen)

    def extend(start: int, chosen: list, count: dict):
        if len(chosen) == e:
            if all(count.get(v, 0) == 3 for p in parts for v in p):
                h = Hypergraph3(
                    3 * m,
                    tuple(frozenset(t) for t in chosen),
                    tuple(frozenset(p) for p in parts),
                )
                found.setdefault(_canonical_key(h), h)
            return
        remaining = e - len(chosen)
        if len(candidates) - start < remaining:
            return
        for i in range(start, len(candidates)):
            tri = candidates[i]
            if any(count.get(v, 0) >= 3 for v in tri):
                continue
            if not compatible(tri, chosen):
                continue
            for v in tri:
                count[v] = count.get(v, 0) + 1
            chosen.append(tri)
            extend(i + 1, chosen, count)
            chosen.pop()
            for v in tri:
                count[v] -= 1

    extend(0, [], {})
    return list(found.values())


def _canonical_key(h: Hypergraph3) -> tuple:
    """Minimal edge-set representation over part-preserving relabelings."""
    m = h.n // 3
    base = [tuple(sorted(e)) for e in h.edges]
    best = None
    for part_perm in permutations(range(3)):
        for p0 in permutations(range(m)):
            for p1 in permutations(range(m)):
                for p2 in permutations(range(m)):
                    perms = (p0, p1, p2)

                    def relabel(v: int) -> int:
                        p, off = divmod(v, m)
                        return part_perm[p] * m + perms[p][off]

                    key = tuple(
                        sorted(tuple(sorted(relabel(v) for v in e)) for e in base)
                    )
                    if best is None or key < best:
                        best = key
    return best


def build_triangle_host(m: int, shifts: tuple[int, int, int]) -> ColoredGraph:
    """A 6-regular host whose three color classes are perfect triangle partitions.

    Vertices are the cells (i, i+c mod m) of the cyclic Latin square of odd
    order m, for the three distinct shifts c; rows, columns, and symbols each
    group the cells into disjoint triangles (colors 0, 1, 2).
    """
    if m < 3 or m % 2 == 0:
        raise GraphError("the cyclic construction needs odd m >= 3")
    if len(set(shifts)) != 3 or any(not 0 <= c < m for c in shifts):
        raise GraphError("need three distinct shifts in 0..m-1")
    cells = [(i, (i + c) % m) for c in shifts for i in range(m)]
    index = {cell: idx for idx, cell in enumerate(cells)}
    color = {}
    edges = []

    def add_triangle(cell_triple, col):
        idx = sorted(index[c] for c in cell_triple)
        for a in range(3):
            for b in range(a + 1, 3):
                e = (idx[a], idx[b])
                if e in color:
                    raise GraphError("construction produced a doubly covered edge")
                color[e] = col
                edges.append(e)

    inv2 = pow(2, -1, m)
    for i in range(m):  # rows -> color 0
        add_triangle([(i, (i + c) % m) for c in shifts], 0)
    for j in range(m):  # columns -> color 1
        add_triangle([((j - c) % m, j) for c in shifts], 1)
    for s in range(m):  # symbols i+j = s -> color 2
        add_triangle([(((s - c) * inv2 % m), (((s - c) * inv2 + c) % m)) for c in shifts], 2)
    g = Graph.from_edges(len(cells), edges)
    return ColoredGraph(g, 3, color)
