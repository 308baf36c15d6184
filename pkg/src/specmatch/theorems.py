"""Tri-state machine checkers for the spectral bounds on fractional
matchings, recognizers for the extremal families that sit exactly on the
thresholds, and a seeded random hunter for counterexamples.

Strict inequalities are reported HOLDS / FAILS / BOUNDARY with a signed
margin instead of a boolean: the tight families sit exactly on their
thresholds and a boolean would misreport them under floating-point noise.
For recognized closed-form families the margins are computed in exact
rational arithmetic, bypassing floating point entirely.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import HypothesisUnmet, InvalidParameter
from .graph_core import (
    Graph,
    bipartition,
    complement,
    degree_stats,
    from_edge_list,
    is_connected,
    to_graph6,
)
from . import matching, spectral

DEFAULT_EPSILON = 1e-8

Real = Union[int, float, Fraction, str]


class Status(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    BOUNDARY = "BOUNDARY"


class Verdict(str, Enum):
    CONSISTENT = "CONSISTENT"
    VIOLATION = "VIOLATION"
    VACUOUS = "VACUOUS"
    BOUNDARY = "BOUNDARY"


@dataclass(frozen=True)
class ConditionStatus:
    """Outcome of one inequality: status plus signed distance to the
    threshold (positive = satisfied). margin None means unconditional."""

    status: Status
    margin: Optional[float]

    @classmethod
    def from_margin(cls, margin: Union[float, Fraction], eps: float) -> "ConditionStatus":
        mf = float(margin)
        if abs(mf) <= eps:
            return cls(Status.BOUNDARY, mf)
        return cls(Status.HOLDS if mf > 0 else Status.FAILS, mf)

    @classmethod
    def unconditional(cls) -> "ConditionStatus":
        return cls(Status.HOLDS, None)


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    verdict: Verdict
    hypothesis: ConditionStatus
    conclusion: ConditionStatus
    witnesses: dict
    epsilon: float
    graph6: str

    def to_json_obj(self) -> dict:
        return {
            "theorem": self.theorem,
            "verdict": self.verdict.value,
            "hypothesis": _condition_json(self.hypothesis),
            "conclusion": _condition_json(self.conclusion),
            "witnesses": {k: _jsonable(v) for k, v in sorted(self.witnesses.items())},
            "epsilon": self.epsilon,
            "graph6": self.graph6,
        }


def _condition_json(c: ConditionStatus) -> dict:
    return {"status": c.status.value, "margin": c.margin}


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list, frozenset, set)):
        return [_jsonable(v) for v in sorted(value)] if isinstance(
            value, (set, frozenset)
        ) else [_jsonable(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    return value


def half_str(value: Fraction) -> str:
    """Half-integers rendered as 'p/2' (so 3 renders as '6/2')."""
    return f"{int(value * 2)}/2"


def _combine(hypothesis: ConditionStatus, conclusion: ConditionStatus) -> Verdict:
    if hypothesis.status is Status.FAILS:
        return Verdict.VACUOUS
    if hypothesis.status is Status.BOUNDARY:
        return Verdict.BOUNDARY
    if conclusion.status is Status.HOLDS:
        return Verdict.CONSISTENT
    if conclusion.status is Status.BOUNDARY:
        return Verdict.BOUNDARY
    return Verdict.VIOLATION


def _require_connected_order3(g: Graph) -> None:
    if g.n < 3:
        raise HypothesisUnmet(f"need order >= 3, got n={g.n}")
    if not is_connected(g):
        raise HypothesisUnmet("graph is not connected")


def _to_fraction(value: Real) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


# ---------------------------------------------------------------------------
# cached per-graph quantities (graphs are immutable and hashable)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _radius(g: Graph) -> float:
    return spectral.graph_radius(g)


@lru_cache(maxsize=None)
def _fmn(g: Graph) -> Fraction:
    return matching.fractional_matching_number(g)


@lru_cache(maxsize=None)
def _fpm(g: Graph) -> bool:
    return matching.has_fractional_perfect_matching(g)


@lru_cache(maxsize=None)
def _complement(g: Graph) -> Graph:
    return complement(g)


@lru_cache(maxsize=None)
def _exact_radius(g: Graph) -> Optional[Fraction]:
    """Closed-form radius: 2d for regular graphs (any number of components),
    2*n*delta/(n-k) for recognized bi-regular bipartite members."""
    delta, _, big = degree_stats(g)
    if delta == big:
        return Fraction(2 * delta)
    member = recognize_biregular_family(g)
    if member is not None:
        return member.radius_value
    return None


# ---------------------------------------------------------------------------
# extremal-family recognizers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiregularMembership:
    """Parameters extracted from a connected bipartite graph whose larger
    side is minimum-degree-regular and whose smaller side is regular, with
    the closed-form matching number and radius both cross-checked."""

    delta: int
    k: int
    d_y: int
    part_x: tuple[int, ...]
    part_y: tuple[int, ...]
    fractional_matching_value: Fraction
    radius_value: Fraction


@lru_cache(maxsize=None)
def recognize_biregular_family(g: Graph) -> Optional[BiregularMembership]:
    """Membership test: connected, bipartite, one side all of degree
    delta(G), the other side regular, and the delta side larger by k >= 1.

    On success the closed forms alpha'* = (n-k)/2 and q1 = 2n*delta/(n-k)
    are verified against the matching and spectral modules; a mismatch is
    an implementation bug and raises RuntimeError.
    """
    if not is_connected(g):
        return None
    parts = bipartition(g)
    if parts is None:
        return None
    a, b = parts
    if len(a) == len(b):
        return None
    part_x, part_y = (a, b) if len(a) > len(b) else (b, a)
    degs = g.degrees()
    x_degrees = {degs[v] for v in part_x}
    y_degrees = {degs[v] for v in part_y}
    if len(x_degrees) != 1 or len(y_degrees) != 1:
        return None
    d_x = x_degrees.pop()
    d_y = y_degrees.pop()
    delta = min(degs)
    if d_x != delta:
        return None
    n = g.n
    k = len(part_x) - len(part_y)
    fm_value = Fraction(n - k, 2)
    radius_value = Fraction(2 * n * delta, n - k)
    if _fmn(g) != fm_value:
        raise RuntimeError(
            f"bi-regular closed form alpha'*={fm_value} disagrees with "
            f"matching module value {_fmn(g)} on {to_graph6(g)}"
        )
    if abs(_radius(g) - float(radius_value)) > 1e-8:
        raise RuntimeError(
            f"bi-regular closed form q1={radius_value} disagrees with "
            f"spectral module value {_radius(g)} on {to_graph6(g)}"
        )
    return BiregularMembership(
        delta, k, d_y, part_x, part_y, fm_value, radius_value
    )


@lru_cache(maxsize=None)
def recognize_join_exception(g: Graph) -> Optional[int]:
    """Return delta iff g is the join of an independent set of size delta+1
    with some graph on the remaining delta vertices (so n = 2*delta+1 and
    delta is the minimum degree).

    Each member of the independent set has exactly delta non-neighbors, so
    the set is forced to be {v} union non-neighbors(v) for any of its
    vertices; the search is linear in the candidate vertices.
    """
    degs = g.degrees()
    delta = min(degs)
    n = g.n
    if delta < 1 or n != 2 * delta + 1:
        return None
    adj = g.adjacency_masks
    full = (1 << n) - 1
    for v in range(n):
        if degs[v] != delta:
            continue
        independent = full & ~adj[v]  # v plus its non-neighbors
        rest = full & ~independent
        ok = True
        for u in range(n):
            if (independent >> u) & 1 and adj[u] != rest:
                ok = False
                break
        if ok:
            return delta
    return None


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------


def check_degree_bounds(g: Graph, eps: float = DEFAULT_EPSILON) -> TheoremReport:
    """Chain 2*delta <= 2*dbar <= q1 <= 2*Delta, with equality at both ends
    exactly when the graph is regular."""
    delta, dbar, big = degree_stats(g)
    q1 = _radius(g)
    gaps = (2.0 * float(dbar) - 2.0 * delta, q1 - 2.0 * float(dbar), 2.0 * big - q1)
    chain_margin = min(gaps)
    regular = delta == big
    ends_equal = abs(2.0 * delta - 2.0 * float(dbar)) <= eps and abs(q1 - 2.0 * big) <= eps
    iff_ok = ends_equal == regular
    conclusion = ConditionStatus.from_margin(chain_margin, eps)
    if chain_margin < -eps or not iff_ok:
        verdict = Verdict.VIOLATION
    elif conclusion.status is Status.BOUNDARY:
        verdict = Verdict.BOUNDARY
    else:
        verdict = Verdict.CONSISTENT
    return TheoremReport(
        theorem="degree-bounds",
        verdict=verdict,
        hypothesis=ConditionStatus.unconditional(),
        conclusion=conclusion,
        witnesses={
            "two_delta": 2 * delta,
            "two_dbar": 2 * dbar,
            "q1": q1,
            "two_big_delta": 2 * big,
            "regular": regular,
            "ends_equal_within_eps": ends_equal,
            "regularity_iff_ok": iff_ok,
        },
        epsilon=eps,
        graph6=to_graph6(g),
    )


Deletion = Optional[tuple]


def check_subgraph_monotonicity(
    g: Graph, deletion: Deletion = None, eps: float = DEFAULT_EPSILON
) -> TheoremReport:
    """Radius monotonicity under one edge or vertex deletion from a
    connected graph: q1(H) <= q1(G). ``deletion`` is None (identity),
    ("edge", u, v), or ("vertex", v)."""
    if not is_connected(g):
        raise HypothesisUnmet("graph is not connected")
    if deletion is None:
        h = g
        label = "identity"
    elif deletion[0] == "edge":
        _, u, v = deletion
        if not g.has_edge(u, v):
            raise InvalidParameter(f"({u},{v}) is not an edge")
        edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
        h = from_edge_list(g.n, edges)
        label = f"edge ({min(u, v)},{max(u, v)})"
    elif deletion[0] == "vertex":
        _, v = deletion
        if g.n == 1:
            raise InvalidParameter("vertex deletion would leave an empty graph")
        if not 0 <= v < g.n:
            raise InvalidParameter(f"vertex {v} out of range")
        keep = [u for u in range(g.n) if u != v]
        from .graph_core import induced_subgraph

        h = induced_subgraph(g, keep)
        label = f"vertex {v}"
    else:
        raise InvalidParameter(f"unknown deletion spec {deletion!r}")
    q_g = _radius(g)
    q_h = _radius(h)
    conclusion = ConditionStatus.from_margin(q_g - q_h, eps)
    verdict = (
        Verdict.VIOLATION
        if conclusion.status is Status.FAILS
        else (Verdict.BOUNDARY if conclusion.status is Status.BOUNDARY else Verdict.CONSISTENT)
    )
    return TheoremReport(
        theorem="subgraph-monotonicity",
        verdict=verdict,
        hypothesis=ConditionStatus.unconditional(),
        conclusion=conclusion,
        witnesses={"q1_graph": q_g, "q1_subgraph": q_h, "deletion": label},
        epsilon=eps,
        graph6=to_graph6(g),
    )


def _hypothesis_radius_below(
    g: Graph, threshold: Fraction, eps: float
) -> tuple[ConditionStatus, float]:
    """Status of 'q1(G) < threshold', exact when a closed form applies."""
    exact = _exact_radius(g)
    if exact is not None:
        return ConditionStatus.from_margin(threshold - exact, eps), float(exact)
    q1 = _radius(g)
    return ConditionStatus.from_margin(float(threshold) - q1, eps), q1


def _fpm_conclusion(g: Graph) -> tuple[ConditionStatus, bool]:
    """Exactly-decided 'G has a fractional perfect matching'. The margin is
    +1/2 when it holds, else the (half-integer) shortfall below n/2."""
    fpm = _fpm(g)
    margin = 0.5 if fpm else float(_fmn(g) - Fraction(g.n, 2))
    status = Status.HOLDS if fpm else Status.FAILS
    return ConditionStatus(status, margin), fpm


def _deficiency_witness_json(g: Graph) -> Optional[dict]:
    if g.n > matching.DEFICIENCY_CAP:
        return None
    w = matching.brute_force_deficiency(g)
    return {
        "set": list(w.vertices),
        "size": w.size,
        "isolated": w.isolated,
        "crossing_edges": w.crossing_edges,
        "deficiency": w.deficiency,
    }


def check_fm_lower(g: Graph, k: Real, eps: float = DEFAULT_EPSILON) -> TheoremReport:
    """If q1(G) < 2n*delta/(n-k) then alpha'*(G) > (n-k)/2, for any real
    k in [0, n). The conclusion is decided exactly in rational arithmetic."""
    _require_connected_order3(g)
    kf = _to_fraction(k)
    n = g.n
    if not 0 <= kf < n:
        raise InvalidParameter(f"k must lie in [0, {n}), got {kf}")
    delta, _, _ = degree_stats(g)
    threshold = Fraction(2 * n * delta, 1) / (n - kf)
    hypothesis, q1 = _hypothesis_radius_below(g, threshold, eps)
    alpha = _fmn(g)
    conclusion = ConditionStatus.from_margin(alpha - (n - kf) / 2, eps)
    return TheoremReport(
        theorem="fm-lower",
        verdict=_combine(hypothesis, conclusion),
        hypothesis=hypothesis,
        conclusion=conclusion,
        witnesses={
            "n": n,
            "delta": delta,
            "k": kf,
            "threshold": float(threshold),
            "threshold_exact": threshold,
            "q1": q1,
            "alpha_star": half_str(alpha),
        },
        epsilon=eps,
        graph6=to_graph6(g),
    )


def check_ratio_bound(g: Graph, eps: float = DEFAULT_EPSILON) -> TheoremReport:
    """alpha'*(G) >= n*delta/q1(G) for connected graphs of order >= 3, with
    equality exactly on bi-regular bipartite members with integer
    k = n - 2n*delta/q1.

    Regular graphs with a fractional perfect matching attain equality with
    k* = 0, outside the (positive-k) family; they are flagged for review
    and reported BOUNDARY, never VIOLATION.
    """
    _require_connected_order3(g)
    n = g.n
    delta, _, big = degree_stats(g)
    alpha = _fmn(g)
    exact_q1 = _exact_radius(g)
    q1 = float(exact_q1) if exact_q1 is not None else _radius(g)
    if exact_q1 is not None:
        bound = Fraction(n * delta, 1) / exact_q1
        margin = alpha - bound
        k_star = n - Fraction(2 * n * delta, 1) / exact_q1
    else:
        bound = n * delta / q1
        margin = float(alpha) - bound
        k_star = n - 2 * n * delta / q1
    conclusion = ConditionStatus.from_margin(margin, eps)
    witnesses = {
        "n": n,
        "delta": delta,
        "q1": q1,
        "alpha_star": half_str(alpha),
        "bound": float(bound),
        "k_star": float(k_star),
        "equality": conclusion.status is Status.BOUNDARY,
    }
    if conclusion.status is Status.FAILS:
        verdict = Verdict.VIOLATION
    elif conclusion.status is Status.HOLDS:
        verdict = Verdict.CONSISTENT
    else:
        member = recognize_biregular_family(g)
        if member is not None:
            k_int_ok = abs(float(k_star) - round(float(k_star))) <= eps
            witnesses["member"] = {
                "delta": member.delta,
                "k": member.k,
                "d_y": member.d_y,
            }
            witnesses["k_integer"] = k_int_ok
            verdict = Verdict.CONSISTENT if k_int_ok and round(float(k_star)) == member.k else Verdict.BOUNDARY
        elif delta == big and _fpm(g):
            witnesses["regular_fpm_boundary"] = True
            verdict = Verdict.BOUNDARY
        else:
            witnesses["equality_uncharacterized"] = True
            verdict = Verdict.BOUNDARY
    return TheoremReport(
        theorem="ratio-bound",
        verdict=verdict,
        hypothesis=ConditionStatus.unconditional(),
        conclusion=conclusion,
        witnesses=witnesses,
        epsilon=eps,
        graph6=to_graph6(g),
    )


def check_fpm_radius(g: Graph, eps: float = DEFAULT_EPSILON) -> TheoremReport:
    """If q1(G) < 2n*delta/(n-1) then G has a fractional perfect matching."""
    _require_connected_order3(g)
    n = g.n
    delta, _, _ = degree_stats(g)
    threshold = Fraction(2 * n * delta, n - 1)
    hypothesis, q1 = _hypothesis_radius_below(g, threshold, eps)
    conclusion, fpm = _fpm_conclusion(g)
    witnesses = {
        "n": n,
        "delta": delta,
        "threshold": float(threshold),
        "q1": q1,
        "alpha_star": half_str(_fmn(g)),
        "fpm": fpm,
    }
    if not fpm:
        witnesses["deficiency_witness"] = _deficiency_witness_json(g)
    return TheoremReport(
        theorem="fpm-radius",
        verdict=_combine(hypothesis, conclusion),
        hypothesis=hypothesis,
        conclusion=conclusion,
        witnesses=witnesses,
        epsilon=eps,
        graph6=to_graph6(g),
    )


def _complement_radius(g: Graph) -> tuple[Optional[Fraction], float]:
    """(exact, float) radius of the complement; exact for regular
    complements, bi-regular members, and join-exception graphs."""
    gc = _complement(g)
    exact = _exact_radius(gc)
    if exact is None and recognize_join_exception(g) is not None:
        exact = Fraction(2 * min(g.degrees()))
    q1c = float(exact) if exact is not None else _radius(gc)
    return exact, q1c


def check_fpm_complement(g: Graph, eps: float = DEFAULT_EPSILON) -> TheoremReport:
    """If q1 of the complement is below 2*delta then G has a fractional
    perfect matching. The complement may be disconnected; its radius is the
    max over components."""
    _require_connected_order3(g)
    delta, _, _ = degree_stats(g)
    exact, q1c = _complement_radius(g)
    if exact is not None:
        hypothesis = ConditionStatus.from_margin(Fraction(2 * delta) - exact, eps)
    else:
        hypothesis = ConditionStatus.from_margin(2.0 * delta - q1c, eps)
    conclusion, fpm = _fpm_conclusion(g)
    witnesses = {
        "delta": delta,
        "q1_complement": q1c,
        "threshold": 2.0 * delta,
        "alpha_star": half_str(_fmn(g)),
        "fpm": fpm,
    }
    if not fpm:
        witnesses["deficiency_witness"] = _deficiency_witness_json(g)
    return TheoremReport(
        theorem="fpm-complement",
        verdict=_combine(hypothesis, conclusion),
        hypothesis=hypothesis,
        conclusion=conclusion,
        witnesses=witnesses,
        epsilon=eps,
        graph6=to_graph6(g),
    )


def check_fpm_complement_refined(g: Graph, eps: float = DEFAULT_EPSILON) -> TheoremReport:
    """If q1 of the complement is below 2*delta + 2 then G has a fractional
    perfect matching, unless G is a join-exception graph (independent set of
    size delta+1 joined to a graph on delta vertices)."""
    _require_connected_order3(g)
    delta, _, _ = degree_stats(g)
    exact, q1c = _complement_radius(g)
    if exact is not None:
        hypothesis = ConditionStatus.from_margin(Fraction(2 * delta + 2) - exact, eps)
    else:
        hypothesis = ConditionStatus.from_margin(2.0 * delta + 2.0 - q1c, eps)
    exception_delta = recognize_join_exception(g)
    fpm = _fpm(g)
    satisfied = fpm or exception_delta is not None
    margin = 0.5 if satisfied else float(_fmn(g) - Fraction(g.n, 2))
    conclusion = ConditionStatus(Status.HOLDS if satisfied else Status.FAILS, margin)
    witnesses = {
        "delta": delta,
        "q1_complement": q1c,
        "threshold": 2.0 * delta + 2.0,
        "alpha_star": half_str(_fmn(g)),
        "fpm": fpm,
        "exception_delta": exception_delta,
    }
    if not fpm:
        witnesses["deficiency_witness"] = _deficiency_witness_json(g)
    return TheoremReport(
        theorem="fpm-complement-refined",
        verdict=_combine(hypothesis, conclusion),
        hypothesis=hypothesis,
        conclusion=conclusion,
        witnesses=witnesses,
        epsilon=eps,
        graph6=to_graph6(g),
    )


# ---------------------------------------------------------------------------
# running everything / hunting
# ---------------------------------------------------------------------------


def default_k_sweep(n: int) -> list[Fraction]:
    """Half-integer grid {0, 1/2, ..., n - 1/2} for the lower-bound check."""
    return [Fraction(i, 2) for i in range(2 * n)]


def run_all_checks(
    g: Graph,
    eps: float = DEFAULT_EPSILON,
    k_values: Optional[Sequence[Real]] = None,
) -> list[TheoremReport]:
    """Every checker on one connected graph of order >= 3, sweeping the
    lower-bound check over ``k_values`` (default: half-integer grid)."""
    _require_connected_order3(g)
    reports = [
        check_degree_bounds(g, eps),
        check_ratio_bound(g, eps),
        check_fpm_radius(g, eps),
        check_fpm_complement(g, eps),
        check_fpm_complement_refined(g, eps),
    ]
    first_edge = next(g.edges(), None)
    if first_edge is not None:
        reports.append(
            check_subgraph_monotonicity(g, ("edge", *first_edge), eps)
        )
    ks = default_k_sweep(g.n) if k_values is None else list(k_values)
    reports.extend(check_fm_lower(g, k, eps) for k in ks)
    return reports


_CHECKERS = {
    "degree-bounds": check_degree_bounds,
    "subgraph-monotonicity": check_subgraph_monotonicity,
    "ratio-bound": check_ratio_bound,
    "fpm-radius": check_fpm_radius,
    "fpm-complement": check_fpm_complement,
    "fpm-complement-refined": check_fpm_complement_refined,
}


def checker_names() -> list[str]:
    return [*_CHECKERS, "fm-lower"]


def run_named_check(
    g: Graph, name: str, k: Optional[Real] = None, eps: float = DEFAULT_EPSILON
) -> TheoremReport:
    if name == "fm-lower":
        if k is None:
            raise InvalidParameter("fm-lower needs a k value")
        return check_fm_lower(g, k, eps)
    if name not in _CHECKERS:
        raise InvalidParameter(f"unknown theorem {name!r}; known: {checker_names()}")
    return _CHECKERS[name](g, eps=eps)


@dataclass(frozen=True)
class HuntConfig:
    n_min: int = 4
    n_max: int = 10
    edge_probability: float = 0.5
    min_degree: int = 1
    count: int = 100
    seed: int = 0
    epsilon: float = DEFAULT_EPSILON


@dataclass
class HuntResult:
    violations: list[TheoremReport] = field(default_factory=list)
    graphs_checked: int = 0
    reports_total: int = 0
    config: Optional[HuntConfig] = None

    def to_json_obj(self) -> dict:
        cfg = self.config
        return {
            "violations": [r.to_json_obj() for r in self.violations],
            "graphs_checked": self.graphs_checked,
            "reports_total": self.reports_total,
            "config": None
            if cfg is None
            else {
                "n_min": cfg.n_min,
                "n_max": cfg.n_max,
                "edge_probability": cfg.edge_probability,
                "min_degree": cfg.min_degree,
                "count": cfg.count,
                "seed": cfg.seed,
                "epsilon": cfg.epsilon,
            },
        }


def generate_hunt_graphs(config: HuntConfig) -> list[Graph]:
    """Seeded Erdos-Renyi style stream, filtered to connected graphs meeting
    the minimum-degree floor; disconnected draws are discarded, not
    repaired. Deterministic for a fixed config."""
    if config.count < 1:
        raise InvalidParameter("count must be >= 1")
    if not 0.0 < config.edge_probability <= 1.0:
        raise InvalidParameter("edge probability must lie in (0, 1]")
    if config.n_min < 3 or config.n_max < config.n_min:
        raise InvalidParameter("need 3 <= n_min <= n_max")
    rng = random.Random(config.seed)
    graphs: list[Graph] = []
    attempts_left = config.count * 10_000
    while len(graphs) < config.count:
        if attempts_left <= 0:
            raise RuntimeError(
                "exhausted attempts; the filter is too strict for these parameters"
            )
        attempts_left -= 1
        n = rng.randint(config.n_min, config.n_max)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < config.edge_probability
        ]
        g = from_edge_list(n, edges)
        if min(g.degrees(), default=0) < config.min_degree:
            continue
        if not is_connected(g):
            continue
        graphs.append(g)
    return graphs


def hunt(config: HuntConfig) -> HuntResult:
    """Run every checker over a seeded random stream and collect VIOLATION
    reports (expected: none; one would be an implementation bug or an
    actual counterexample)."""
    result = HuntResult(config=config)
    for g in generate_hunt_graphs(config):
        reports = run_all_checks(g, eps=config.epsilon)
        result.graphs_checked += 1
        result.reports_total += len(reports)
        result.violations.extend(
            r for r in reports if r.verdict is Verdict.VIOLATION
        )
    return result
