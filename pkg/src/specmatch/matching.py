"""Fractional matching numbers computed exactly via the bipartite double
cover, half-integral witness extraction, and independent brute-force oracles
for deficiency and the integral matching number.

Everything in this module is exact integer / half-integer arithmetic; no
floating point enters any matching quantity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

import numpy as np

from .errors import InvalidWeight, NotBipartite, TooLarge, UnknownEdge
from .graph_core import Graph, _bits, bipartition, isolated_count

DEFICIENCY_CAP = 24
MATCHING_CAP = 16
_CHUNK = 1 << 20


@dataclass(frozen=True)
class MatchingResult:
    """A matching (pairwise disjoint edges) with its size."""

    edges: frozenset[tuple[int, int]]
    size: int


@dataclass(frozen=True)
class FractionalMatching:
    """Edge weights in {0, 1/2, 1} stored exactly; only edges of the host
    graph appear as keys."""

    weights: Mapping[tuple[int, int], Fraction]

    @property
    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def to_json_obj(self) -> dict:
        edges = [
            {"u": u, "v": v, "weight_halves": int(w * 2)}
            for (u, v), w in sorted(self.weights.items())
            if w
        ]
        total = self.total
        return {"edges": edges, "total": f"{int(total * 2)}/2"}


@dataclass(frozen=True)
class DeficiencyWitness:
    """A vertex set S realizing max(isolated(G - S) - |S|), with the number
    of edges crossing from S to the isolated set."""

    vertices: tuple[int, ...]
    size: int
    isolated: int
    crossing_edges: int
    deficiency: int


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover on 2n vertices: each edge uv lifts to
    u~(v+n) and (u+n)~v. Always bipartite with parts 0..n-1 / n..2n-1."""
    n = g.n
    rows = [0] * (2 * n)
    for v, row in enumerate(g.adjacency_masks):
        rows[v] = row << n
        rows[v + n] = row
    return Graph(2 * n, rows)


def max_matching_bipartite(g: Graph) -> MatchingResult:
    """Maximum matching by Hopcroft-Karp layered augmentation. The final
    BFS finding no augmenting path certifies optimality."""
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("graph has an odd cycle")
    left = parts[0]
    adj = g.adjacency_masks
    match = [-1] * g.n
    inf = g.n + 1
    dist = [0] * g.n

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if match[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in _bits(adj[u]):
                w = match[v]
                if w == -1:
                    reachable_free = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reachable_free

    def dfs(root: int) -> bool:
        # iterative: stack frames are (vertex, neighbor iterator, chosen v)
        stack: list[list] = [[root, _bits(adj[root]), -1]]
        while stack:
            frame = stack[-1]
            u, it = frame[0], frame[1]
            advanced = False
            for v in it:
                w = match[v]
                if w == -1:
                    match[u] = v
                    match[v] = u
                    for pu, _, pv in reversed(stack[:-1]):
                        match[pu] = pv
                        match[pv] = pu
                    return True
                if dist[w] == dist[u] + 1:
                    frame[2] = v
                    stack.append([w, _bits(adj[w]), -1])
                    advanced = True
                    break
            if not advanced:
                dist[u] = inf
                stack.pop()
        return False

    while bfs():
        for u in left:
            if match[u] == -1:
                dfs(u)
    edges = frozenset(
        (u, match[u]) if u < match[u] else (match[u], u) for u in left if match[u] != -1
    )
    return MatchingResult(edges, len(edges))


def fractional_matching_number(g: Graph) -> Fraction:
    """Exact half-integer maximum total weight of a fractional matching,
    equal to half the matching number of the bipartite double cover."""
    return Fraction(max_matching_bipartite(double_cover(g)).size, 2)


def extract_fractional_matching(g: Graph) -> FractionalMatching:
    """Half-integral optimal witness: fold the double-cover matching back,
    giving each original edge half of its two lift indicators."""
    n = g.n
    dc_matching = max_matching_bipartite(double_cover(g))
    lifted = dc_matching.edges
    weights: dict[tuple[int, int], Fraction] = {}
    for u, v in g.edges():
        halves = 0
        if (min(u, v + n), max(u, v + n)) in lifted:
            halves += 1
        if (min(v, u + n), max(v, u + n)) in lifted:
            halves += 1
        if halves:
            weights[(u, v)] = Fraction(halves, 2)
    return FractionalMatching(weights)


def verify_fractional_matching(
    g: Graph, fm: FractionalMatching
) -> tuple[bool, Fraction]:
    """Exact feasibility check: every weight in [0,1] on a real edge, and
    every vertex load at most 1. Returns (feasible, total weight)."""
    load = [Fraction(0)] * g.n
    total = Fraction(0)
    for (u, v), w in fm.weights.items():
        if not g.has_edge(u, v):
            raise UnknownEdge(f"({u},{v}) is not an edge")
        if not 0 <= w <= 1:
            raise InvalidWeight(f"weight {w} on ({u},{v}) outside [0,1]")
        load[u] += w
        load[v] += w
        total += w
    feasible = all(l <= 1 for l in load)
    return feasible, total


def _popcounts(masks: np.ndarray) -> np.ndarray:
    # SWAR popcount on uint32
    v = masks.copy()
    v = v - ((v >> 1) & np.uint32(0x55555555))
    v = (v & np.uint32(0x33333333)) + ((v >> 2) & np.uint32(0x33333333))
    v = (v + (v >> 4)) & np.uint32(0x0F0F0F0F)
    return ((v * np.uint32(0x01010101)) >> 24).astype(np.int64)


def brute_force_deficiency(g: Graph, cap: int = DEFICIENCY_CAP) -> DeficiencyWitness:
    """Exhaustive max of isolated(G-S) - |S| over all 2^n subsets S.

    Vectorized over subset bitmasks in chunks; ties are broken toward the
    lexicographically least S (compared as sorted member lists).
    """
    n = g.n
    if n > cap:
        raise TooLarge(f"n={n} exceeds brute-force cap {cap}")
    adj = g.adjacency_masks
    best_value = -(n + 1)
    best_masks: list[int] = []
    total = 1 << n
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        masks = np.arange(start, stop, dtype=np.uint32)
        iso = np.zeros(stop - start, dtype=np.int64)
        for v in range(n):
            av = np.uint32(adj[v])
            iso += ((masks & av) == av) & (((masks >> np.uint32(v)) & 1) == 0)
        value = iso - _popcounts(masks)
        chunk_best = int(value.max())
        if chunk_best > best_value:
            best_value = chunk_best
            best_masks = []
        if chunk_best == best_value:
            best_masks.extend(int(m) for m in masks[value == chunk_best])
    s_tuple = min((tuple(_bits(m)) for m in best_masks))
    s_mask = 0
    for v in s_tuple:
        s_mask |= 1 << v
    isolated = 0
    crossing = 0
    for v in range(n):
        if (s_mask >> v) & 1:
            continue
        if adj[v] & ~s_mask == 0:
            isolated += 1
            crossing += adj[v].bit_count()
    return DeficiencyWitness(
        vertices=s_tuple,
        size=len(s_tuple),
        isolated=isolated,
        crossing_edges=crossing,
        deficiency=isolated - len(s_tuple),
    )


def brute_force_matching_number(g: Graph, cap: int = MATCHING_CAP) -> int:
    """Exact integral matching number by branch-on-edge recursion over the
    bitmask of still-available vertices."""
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds brute-force cap {cap}")
    adj = g.adjacency_masks
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if adj[v] & mask:
                break
            mask ^= low  # v has no available partner; drop it
        else:
            return 0
        if mask in memo:
            return memo[mask]
        rest = mask & ~(1 << v)
        result = best(rest)  # v stays unmatched
        for u in _bits(adj[v] & mask):
            result = max(result, 1 + best(rest & ~(1 << u)))
        memo[mask] = result
        return result

    return best((1 << g.n) - 1)


def has_fractional_perfect_matching(g: Graph, cross_check_cap: int = DEFICIENCY_CAP) -> bool:
    """True iff the fractional matching number equals n/2. For graphs within
    the brute-force cap the answer is cross-checked against zero maximum
    deficiency; a mismatch means an implementation bug and raises."""
    fast = 2 * fractional_matching_number(g) == g.n
    if g.n <= cross_check_cap:
        slow = brute_force_deficiency(g, cap=cross_check_cap).deficiency == 0
        if fast != slow:
            raise RuntimeError(
                "double-cover route and deficiency oracle disagree on "
                f"{g!r}: fast={fast} slow={slow}"
            )
    return fast


def deficiency_consistent(g: Graph, cap: int = DEFICIENCY_CAP) -> bool:
    """Exact identity: fractional matching number == (n - max deficiency)/2."""
    witness = brute_force_deficiency(g, cap=cap)
    return fractional_matching_number(g) == Fraction(g.n - witness.deficiency, 2)


def _edge_iter(g: Graph) -> Iterator[tuple[int, int]]:
    return g.edges()
