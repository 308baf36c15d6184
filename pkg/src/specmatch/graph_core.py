"""Immutable simple graphs with bitset adjacency, standard constructions,
named families, and graph6 / edge-list serialization.

Vertices are dense 0-indexed integers. All operations return new graphs;
nothing here mutates, so graphs are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import (
    ConstructionFailed,
    IndexOutOfRange,
    InvalidEdge,
    InvalidParameter,
    InvalidSpec,
    ParseError,
)

# Bitset rows keep complement/join cache-friendly; everything here is O(n^2)
# worst case, which is fine at desk scale.
MAX_VERTICES = 4096


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one int bitmask per vertex. The constructor
    validates symmetry and irreflexivity so every reachable Graph is simple.
    """

    __slots__ = ("n", "_adj", "m", "_hash")

    def __init__(self, n: int, adj_masks: Iterable[int]):
        if n < 1:
            raise InvalidParameter(f"graph needs at least one vertex, got n={n}")
        if n > MAX_VERTICES:
            raise InvalidParameter(f"n={n} exceeds cap {MAX_VERTICES}")
        adj = tuple(adj_masks)
        if len(adj) != n:
            raise InvalidParameter(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        degree_sum = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise IndexOutOfRange(f"adjacency row {v} references vertices >= {n}")
            if (row >> v) & 1:
                raise InvalidEdge(f"self-loop at vertex {v}")
            degree_sum += row.bit_count()
        for v, row in enumerate(adj):
            for u in _bits(row):
                if not (adj[u] >> v) & 1:
                    raise InvalidEdge(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self._adj = adj
        self.m = degree_sum // 2
        self._hash = hash((n, adj))

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            for v in _bits(self._adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse silently."""
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise InvalidEdge(f"self-loop ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, (full & ~row & ~(1 << v) for v, row in enumerate(g.adjacency_masks)))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; g1 keeps labels 0..n1-1."""
    n1, n2 = g1.n, g2.n
    cross1 = ((1 << n2) - 1) << n1
    cross2 = (1 << n1) - 1
    rows = [row | cross1 for row in g1.adjacency_masks]
    rows += [(row << n1) | cross2 for row in g2.adjacency_masks]
    return Graph(n1 + n2, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    rows = list(g1.adjacency_masks)
    rows += [row << g1.n for row in g2.adjacency_masks]
    return Graph(g1.n + g2.n, rows)


def canonical_vertex_set(g_or_n, members: Iterable[int]) -> tuple[int, ...]:
    """Sorted, deduplicated vertex tuple, validated against the graph order."""
    n = g_or_n.n if isinstance(g_or_n, Graph) else int(g_or_n)
    out = tuple(sorted(set(int(v) for v in members)))
    if out and (out[0] < 0 or out[-1] >= n):
        raise IndexOutOfRange(f"vertex set {out} outside 0..{n - 1}")
    return out


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced on ``members``, relabeled 0..|S|-1 in sorted order."""
    keep = canonical_vertex_set(g, members)
    if not keep:
        raise InvalidParameter("induced subgraph needs at least one vertex")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in _bits(g.adjacency_masks[v]):
            if u in pos:
                row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(keep), rows)


def isolated_count(g: Graph) -> int:
    return sum(1 for row in g.adjacency_masks if row == 0)


def degree_stats(g: Graph) -> tuple[int, Fraction, int]:
    """(minimum degree, average degree as exact rational, maximum degree)."""
    degs = g.degrees()
    return min(degs), Fraction(2 * g.m, g.n), max(degs)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    adj = g.adjacency_masks
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(tuple(_bits(seen)))
        unseen &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def bipartition(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """2-coloring (color-0 set, color-1 set), or None if an odd cycle exists.

    For a connected bipartite graph the split is unique up to swapping sides;
    the side containing the lowest vertex comes first.
    """
    adj = g.adjacency_masks
    color0 = 0
    color1 = 0
    for comp in connected_components(g):
        start = comp[0]
        color0 |= 1 << start
        frontier = 1 << start
        side = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= ~(color0 | color1)
            side ^= 1
            if side:
                color1 |= nxt
            else:
                color0 |= nxt
            frontier = nxt
    for v in range(g.n):
        own = color0 if (color0 >> v) & 1 else color1
        if adj[v] & own:
            return None
    return tuple(_bits(color0)), tuple(_bits(color1))


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"empty graph needs n >= 1, got {n}")
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, (full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameter(f"complete bipartite needs both parts >= 1, got {a},{b}")
    return join(empty_graph(a), empty_graph(b))


_FAMILIES = {
    "complete": (1, complete_graph),
    "empty": (1, empty_graph),
    "cycle": (1, cycle_graph),
    "path": (1, path_graph),
    "complete_bipartite": (2, complete_bipartite),
}


def make_family(kind: str, *params: int) -> Graph:
    """Named standard graph: complete n, empty n, cycle n, path n,
    complete_bipartite a b."""
    key = kind.replace("-", "_").lower()
    if key not in _FAMILIES:
        raise InvalidParameter(f"unknown family {kind!r}; known: {sorted(_FAMILIES)}")
    arity, builder = _FAMILIES[key]
    if len(params) != arity:
        raise InvalidParameter(f"family {kind!r} takes {arity} parameter(s)")
    return builder(*params)


@dataclass(frozen=True)
class BiregularFamilySpec:
    """Parameters of a connected bipartite graph whose larger side X is
    ``delta``-regular, whose smaller side Y is ``d_y``-regular, and whose
    part sizes satisfy |X| = |Y| + k = y + k.

    The degree-sum identity y * d_y == (y + k) * delta must hold exactly.
    """

    delta: int
    k: int
    y: int
    d_y: int

    def __post_init__(self):
        if self.delta < 1:
            raise InvalidSpec(f"delta must be >= 1, got {self.delta}")
        if self.k < 1:
            raise InvalidSpec(f"k must be a positive integer, got {self.k}")
        if self.y < self.delta:
            raise InvalidSpec(f"need y >= delta, got y={self.y} < delta={self.delta}")
        if self.d_y < self.delta:
            raise InvalidSpec(f"need d_y >= delta, got d_y={self.d_y}")
        if self.y * self.d_y != (self.y + self.k) * self.delta:
            raise InvalidSpec(
                f"degree sums disagree: y*d_y={self.y * self.d_y} "
                f"!= (y+k)*delta={(self.y + self.k) * self.delta}"
            )

    @property
    def x_size(self) -> int:
        return self.y + self.k

    @property
    def order(self) -> int:
        return self.y + self.k + self.y


def construct_biregular_family(spec: BiregularFamilySpec) -> Graph:
    """Build a verified member for ``spec``: X = 0..x_size-1, Y after it.

    Round-robin stub assignment gives exact degrees but can split into
    gcd-induced components (always when delta divides y < x_size*...); a
    deterministic sequence of degree-preserving crossing swaps then stitches
    the components together. The result is verified connected and
    degree-exact before it is returned.
    """
    x_size, y_size = spec.x_size, spec.y
    n = x_size + y_size
    rows = [0] * n
    for i in range(x_size):
        for j in range(spec.delta):
            yv = x_size + (i * spec.delta + j) % y_size
            rows[i] |= 1 << yv
            rows[yv] |= 1 << i
    g = Graph(n, rows)
    if not is_connected(g):
        g = _stitch_components(g, x_size)
    if g is None or not is_connected(g):
        raise ConstructionFailed(f"could not connect a member for {spec}")
    degs = g.degrees()
    if any(degs[i] != spec.delta for i in range(x_size)) or any(
        degs[v] != spec.d_y for v in range(x_size, n)
    ):
        raise ConstructionFailed(f"degree verification failed for {spec}")
    return g


def _stitch_components(g: Graph, x_size: int) -> Optional[Graph]:
    """Merge components by 2-swaps on X-Y edges; preserves every degree."""
    rows = list(g.adjacency_masks)
    n = g.n

    def components() -> list[int]:
        masks = []
        unseen = (1 << n) - 1
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            seen = 1 << start
            frontier = seen
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= rows[v]
                frontier = nxt & ~seen
                seen |= frontier
            masks.append(seen)
            unseen &= ~seen
        return masks

    comps = components()
    guard = n * n
    while len(comps) > 1 and guard > 0:
        guard -= 1
        first, second = comps[0], comps[1]
        swapped = False
        for xa in range(x_size):
            if not (first >> xa) & 1:
                continue
            for ya in _bits(rows[xa]):
                for xb in range(x_size):
                    if not (second >> xb) & 1:
                        continue
                    for yb in _bits(rows[xb]):
                        if (rows[xa] >> yb) & 1 or (rows[xb] >> ya) & 1:
                            continue
                        rows[xa] &= ~(1 << ya)
                        rows[ya] &= ~(1 << xa)
                        rows[xb] &= ~(1 << yb)
                        rows[yb] &= ~(1 << xb)
                        rows[xa] |= 1 << yb
                        rows[yb] |= 1 << xa
                        rows[xb] |= 1 << ya
                        rows[ya] |= 1 << xb
                        swapped = True
                        break
                    if swapped:
                        break
                if swapped:
                    break
            if swapped:
                break
        if not swapped:
            return None
        comps = components()
    return Graph(n, rows) if len(comps) == 1 else None


def construct_join_exception(delta: int, core: Graph) -> Graph:
    """Join of an independent set of size delta+1 with an arbitrary graph of
    order delta. Minimum degree is exactly delta and no fractional perfect
    matching exists (removing the core isolates delta+1 vertices)."""
    if delta < 1:
        raise InvalidParameter(f"delta must be >= 1, got {delta}")
    if core.n != delta:
        raise InvalidParameter(f"core must have order {delta}, got {core.n}")
    return join(empty_graph(delta + 1), core)


def construct_clique_apex(t: int) -> Graph:
    """Complete graph on 2t vertices plus an apex vertex adjacent to t of
    them: the apex has minimum degree t, yet the graph is Hamiltonian."""
    if t < 2:
        raise InvalidParameter(f"t must be >= 2, got {t}")
    g = complete_graph(2 * t)
    rows = list(g.adjacency_masks) + [0]
    apex = 2 * t
    for v in range(t):
        rows[v] |= 1 << apex
        rows[apex] |= 1 << v
    return Graph(2 * t + 1, rows)


# ---------------------------------------------------------------------------
# graph6 and edge-list formats
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (bit-exact round trip with parse_graph6)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    body = []
    acc = 0
    nbits = 0
    for col in range(1, n):
        col_mask = g.adjacency_masks[col]
        for row in range(col):
            acc = (acc << 1) | ((col_mask >> row) & 1)
            nbits += 1
            if nbits == 6:
                body.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        body.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; raises ParseError with a byte offset."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", 0)
    vals = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c} outside graph6 range 63..126", i)
        vals.append(c - 63)
    if vals[0] == 63:  # 126 - 63: multi-byte order
        if len(vals) < 4:
            raise ParseError("truncated multi-byte order", len(s))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body_start = 4
    else:
        n = vals[0]
        body_start = 1
    if n < 1:
        raise ParseError(f"order {n} not supported", 0)
    if n > MAX_VERTICES:
        raise ParseError(f"order {n} exceeds cap {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - body_start != need:
        raise ParseError(
            f"expected {need} adjacency bytes for n={n}, got {len(vals) - body_start}",
            min(body_start + need, len(s)),
        )
    rows = [0] * n
    col, row = 1, 0  # bits run x01, x02, x12, x03, ... then zero padding
    for k in range(need):
        group = vals[body_start + k]
        for b in range(5, -1, -1):
            bit = (group >> b) & 1
            if col >= n:
                if bit:
                    raise ParseError("nonzero padding bit", body_start + k)
                continue
            if bit:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            row += 1
            if row == col:
                col += 1
                row = 0
    return Graph(n, rows)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    """Parse the 'n m' header plus m 'u v' lines; '#' starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ParseError("empty edge-list input", 0)
    head = rows[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {rows[0]!r}", 0)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"non-integer header {rows[0]!r}", 0) from None
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(rows) - 1}", 0)
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", 0)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer edge {line!r}", 0) from None
    return from_edge_list(n, edges)
