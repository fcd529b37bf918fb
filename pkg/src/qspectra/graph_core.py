"""Simple undirected graphs: construction, named families, structure, text formats.

Vertices are 0..n-1. Edges are stored as a sorted tuple of (u, v) pairs with
u < v, so two Graph objects compare equal exactly when they are the same
labeled graph. All constructors validate; enumeration helpers build trusted
edge tuples directly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "DegreeStats",
    "StructureInfo",
    "graph_from_edges",
    "complete",
    "complete_bipartite",
    "star",
    "cycle",
    "path",
    "matching",
    "crown",
    "prism",
    "disjoint_union",
    "disjoint_copies",
    "cartesian_product",
    "build_family",
    "FAMILY_KINDS",
    "degree_stats",
    "structure",
    "is_complete",
    "is_star",
    "is_perfect_matching",
    "is_balanced_complete_bipartite",
    "complete_bipartite_parts",
    "is_single_edge_with_isolates",
    "components_all_complete_or_crown",
    "parse_graph6",
    "emit_graph6",
    "parse_edgelist",
    "emit_edgelist",
    "iter_labeled_graphs",
    "random_graph",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph with precomputed degrees and adjacency sets."""

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(init=False, repr=False)
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        deg = [0] * self.n
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "degrees", tuple(deg))
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "_hash", hash((self.n, self.edges)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validated constructor: rejects loops and out-of-range endpoints,
    deduplicates, and canonicalizes edge order."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    seen = set()
    for e in edges:
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ValueError(f"edge endpoints must be integers: {(u, v)!r}")
        if u == v:
            raise ValueError(f"loop edge not allowed: {(u, v)}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range 0..{n - 1}: {(u, v)}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


# -- named families ----------------------------------------------------------

def complete(n: int) -> Graph:
    _require_size("complete", n)
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    _require_size("complete_bipartite", a)
    _require_size("complete_bipartite", b)
    edges = tuple((i, a + j) for i in range(a) for j in range(b))
    return Graph(a + b, edges)


def star(n: int) -> Graph:
    """Star on n vertices: one center joined to the other n-1."""
    _require_size("star", n)
    return Graph(n, tuple((0, i) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple(sorted((i, (i + 1) % n) if i < (i + 1) % n
                                 else ((i + 1) % n, i) for i in range(n))))


def path(n: int) -> Graph:
    _require_size("path", n)
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def matching(k: int) -> Graph:
    """k disjoint edges on 2k vertices."""
    _require_size("matching", k)
    return Graph(2 * k, tuple((2 * i, 2 * i + 1) for i in range(k)))


def crown(r: int) -> Graph:
    """Complete bipartite graph on r+1 plus r+1 vertices minus a perfect
    matching; r-regular bipartite on 2(r+1) vertices."""
    _require_size("crown", r)
    s = r + 1
    edges = tuple((i, s + j) for i in range(s) for j in range(s) if i != j)
    return Graph(2 * s, edges)


def prism(n: int) -> Graph:
    """Circular ladder: the Cartesian product of an n-cycle with one edge."""
    return cartesian_product(cycle(n), path(2))


def disjoint_union(*graphs: Graph) -> Graph:
    if not graphs:
        raise ValueError("disjoint_union needs at least one graph")
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, tuple(edges))


def disjoint_copies(k: int, g: Graph) -> Graph:
    _require_size("disjoint_copies", k)
    return disjoint_union(*([g] * k))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (u, v) maps to index u * h.n + v."""
    hn = h.n
    edges = []
    for u in range(g.n):
        base = u * hn
        edges.extend((base + x, base + y) for x, y in h.edges)
    for x, y in g.edges:
        bx, by = x * hn, y * hn
        edges.extend((bx + v, by + v) for v in range(hn))
    return Graph(g.n * hn, tuple(sorted(edges)))


def _require_size(kind: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{kind}: size parameters must be integers >= 1, got {value!r}")


FAMILY_KINDS = ("complete", "complete_bipartite", "star", "cycle", "path",
                "matching", "crown", "prism", "copies")


def build_family(kind: str, params: Sequence[int]) -> Graph:
    """Dispatch a family by name. 'copies k <kind> <params...>' nests."""
    params = list(params)
    if kind == "copies":
        if len(params) < 2:
            raise ValueError("copies needs a count and an inner family")
        count = _as_int(params[0])
        inner = build_family(str(params[1]), params[2:])
        return disjoint_copies(count, inner)
    builders = {
        "complete": (complete, 1),
        "complete_bipartite": (complete_bipartite, 2),
        "star": (star, 1),
        "cycle": (cycle, 1),
        "path": (path, 1),
        "matching": (matching, 1),
        "crown": (crown, 1),
        "prism": (prism, 1),
    }
    if kind not in builders:
        raise ValueError(f"unknown family kind {kind!r}; known: {', '.join(FAMILY_KINDS)}")
    fn, arity = builders[kind]
    if len(params) != arity:
        raise ValueError(f"family {kind} takes {arity} parameter(s), got {len(params)}")
    return fn(*(_as_int(p) for p in params))


def _as_int(value) -> int:
    if isinstance(value, int):
        return value
    try:
        return int(str(value), 10)
    except ValueError:
        raise ValueError(f"family parameters must be integers, got {value!r}") from None


# -- degree statistics and structure -----------------------------------------

@dataclass(frozen=True)
class DegreeStats:
    n: int
    m: int
    max_degree: int
    min_degree: int
    average_degree: Fraction  # 2m/n, exact
    zagreb_m1: int            # sum of squared degrees

    @property
    def average_degree_float(self) -> float:
        return self.average_degree.numerator / self.average_degree.denominator


def degree_stats(g: Graph) -> DegreeStats:
    deg = g.degrees
    return DegreeStats(
        n=g.n,
        m=g.m,
        max_degree=max(deg),
        min_degree=min(deg),
        average_degree=Fraction(2 * g.m, g.n),
        zagreb_m1=sum(d * d for d in deg),
    )


@dataclass(frozen=True)
class StructureInfo:
    components: tuple[tuple[int, ...], ...]   # vertex lists, each sorted, by min vertex
    is_connected: bool
    component_bipartite: tuple[bool, ...]
    is_bipartite: bool
    bipartite_component_count: int
    is_regular: bool
    regularity_degree: int | None


def structure(g: Graph) -> StructureInfo:
    """Connected components with per-component two-colorability."""
    seen = [False] * g.n
    comps: list[tuple[int, ...]] = []
    bip_flags: list[bool] = []
    for s0 in range(g.n):
        if seen[s0]:
            continue
        color = {s0: 0}
        seen[s0] = True
        stack = [s0]
        verts = [s0]
        bip = True
        while stack:
            u = stack.pop()
            cu = color[u]
            for w in g.adjacency[u]:
                if w in color:
                    if color[w] == cu:
                        bip = False
                else:
                    color[w] = 1 - cu
                    seen[w] = True
                    stack.append(w)
                    verts.append(w)
        comps.append(tuple(sorted(verts)))
        bip_flags.append(bip)
    deg = g.degrees
    regular = max(deg) == min(deg)
    return StructureInfo(
        components=tuple(comps),
        is_connected=len(comps) == 1,
        component_bipartite=tuple(bip_flags),
        is_bipartite=all(bip_flags),
        bipartite_component_count=sum(bip_flags),
        is_regular=regular,
        regularity_degree=deg[0] if regular else None,
    )


# -- structural predicates (used for equality-case diagnosis) ----------------

def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_star(g: Graph) -> bool:
    """One center adjacent to all others, no other edges; includes the
    single edge (n=2) but not the single vertex."""
    if g.n < 2 or g.m != g.n - 1:
        return False
    return max(g.degrees) == g.n - 1


def is_perfect_matching(g: Graph) -> bool:
    return g.n >= 2 and all(d == 1 for d in g.degrees)


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """Part sizes (a, b) with a <= b if g is a complete bipartite graph with
    nonempty parts, else None."""
    if g.m == 0:
        return None
    info = structure(g)
    if not info.is_connected or not info.is_bipartite:
        return None
    # connected bipartite: recover the 2-coloring, then check every cross pair
    color = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in color:
                color[w] = 1 - color[u]
                stack.append(w)
    a = sum(1 for c in color.values() if c == 0)
    b = g.n - a
    if g.m != a * b:
        return None
    return (a, b) if a <= b else (b, a)


def is_balanced_complete_bipartite(g: Graph) -> bool:
    parts = complete_bipartite_parts(g)
    return parts is not None and parts[0] == parts[1]


def is_single_edge_with_isolates(g: Graph) -> bool:
    return g.m == 1


def _component_subgraph(g: Graph, verts: tuple[int, ...]) -> Graph:
    index = {v: i for i, v in enumerate(verts)}
    vset = set(verts)
    edges = tuple(sorted((index[u], index[v]) for u, v in g.edges if u in vset))
    return Graph(len(verts), edges)


def components_all_complete_or_crown(g: Graph, r: int) -> tuple[int, int] | None:
    """If every component of g is either the complete graph on r+1 vertices or
    the r-regular crown on 2(r+1) vertices, return (complete_copies,
    crown_copies); else None. A connected r-regular bipartite graph on 2(r+1)
    vertices is necessarily the crown (its bipartite complement is a perfect
    matching), so no isomorphism test is needed."""
    if r < 1 or any(d != r for d in g.degrees):
        return None
    info = structure(g)
    completes = crowns = 0
    for comp, bip in zip(info.components, info.component_bipartite):
        size = len(comp)
        if size == r + 1:
            completes += 1        # r-regular on r+1 vertices is forced complete
        elif size == 2 * (r + 1) and bip:
            crowns += 1
        else:
            return None
    return completes, crowns


# -- graph6 format ------------------------------------------------------------

_G6_MAX_LONG = 258047  # largest vertex count of the 4-byte header form


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= _G6_MAX_LONG:
        header = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError(f"graph6 supports at most {_G6_MAX_LONG} vertices, got {n}")
    bits = []
    # upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        adj = g.adjacency[j]
        bits.extend(1 if i in adj else 0 for i in range(j))
    out = [header]
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        group += [0] * (6 - len(group))
        out.append(chr(sum(b << (5 - i) for i, b in enumerate(group)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if not line:
        raise ValueError("graph6: empty input")
    if line.startswith(">>graph6<<"):
        line = line[10:]
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"graph6: character {ch!r} out of range")
    if line[0] == "~":
        if len(line) >= 2 and line[1] == "~":
            raise ValueError("graph6: 8-byte vertex counts are not supported")
        if len(line) < 4:
            raise ValueError("graph6: truncated long-form vertex count")
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    if n < 1:
        raise ValueError(f"graph6: vertex count must be >= 1, got {n}")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ValueError(
            f"graph6: body has {len(body)} characters, expected {expect} for n={n}")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> (5 - i)) & 1 for i in range(6))
    if any(bits[nbits:]):
        raise ValueError("graph6: nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    # column order is not the canonical edge order; sort before constructing
    return Graph(n, tuple(sorted(edges)))


# -- edge-list text format -----------------------------------------------------

def emit_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """First significant line is the vertex count; each following line one
    'u v' pair. '#' starts a comment; blank lines are skipped."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ValueError(
                    f"line {lineno}: expected vertex count, got {line!r}") from None
            if n < 1:
                raise ValueError(f"line {lineno}: vertex count must be >= 1, got {n}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: endpoints must be integers, got {line!r}") from None
        if u == v:
            raise ValueError(f"line {lineno}: loop edge not allowed: {(u, v)}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(
                f"line {lineno}: edge endpoint out of range 0..{n - 1}: {(u, v)}")
        edges.append((u, v) if u < v else (v, u))
    if n is None:
        raise ValueError("edge list: no vertex count found")
    return graph_from_edges(n, edges)


# -- enumeration and sampling --------------------------------------------------

def iter_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on exactly n vertices, in edge-mask order."""
    pairs = tuple(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if (mask >> i) & 1)
        yield Graph(n, edges)


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = tuple(itertools.combinations(range(n), 2))
    edges = tuple(pairs[i] for i in range(len(pairs)) if (mask >> i) & 1)
    return Graph(n, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Uniform G(n, p) from the supplied generator."""
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n)
                  if rng.random() < p)
    return Graph(n, edges)
