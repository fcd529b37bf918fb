"""Catalog of lower and upper bounds on the signless Laplacian energy.

Each entry couples a closed-form estimate with an applicability predicate and
an equality diagnosis. Estimates are only claimed under hypotheses that make
them true (verified exhaustively on small orders and on large random batches);
a graph outside a bound's hypotheses gets an inapplicable result with a reason
rather than a bogus number.

Bound identifiers are a fixed external interface. Direction is 'lower' or
'upper'; a strict entry never attains equality, so its diagnosis reports
'near-tight-strict' when the gap is within tolerance instead of claiming
equality.

Used throughout: n vertices, m edges, M1 is the sum of squared degrees, the
mean eigenvalue is 2m/n, deviations gamma_i = |q_i - 2m/n| are sorted
descending, and T = 2m + M1 - 4m^2/n is the sum of squared deviations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from . import tolerances
from .graph_core import (
    Graph,
    degree_stats,
    is_balanced_complete_bipartite,
    is_complete,
    is_perfect_matching,
    is_single_edge_with_isolates,
    is_star,
    structure,
)
from .energy import gamma_sequence

__all__ = [
    "BOUND_IDS",
    "EqualityDiagnosis",
    "BoundResult",
    "evaluate_bound",
    "all_bounds",
    "gan5_two_case_value",
]

BOUND_IDS = (
    "L-GAN1", "L-GAN2", "L-GAN3", "L-GAN4", "L-GAN5",
    "L-THM1", "L-COR4", "L-COR5", "L-THM2", "L-COR2", "L-COR3",
    "U-ABR1", "U-ABR2", "U-LI", "U-GAN", "U-THM3", "U-COR6", "U-COR7",
)

PAIR_ENUMERATION_LIMIT = 20   # enumerate all valid vertex pairs only below this order


@dataclass(frozen=True)
class EqualityDiagnosis:
    """Comparison of numerical tightness against the recorded equality family.

    verdict is one of:
      consistent              tightness and family membership agree (or there
                              is nothing to check)
      tight-no-stated-family  equality attained outside the recorded family;
                              the recorded characterizations are not complete,
                              so this is informative, not an error
      stated-family-not-tight family member failed to attain equality; would
                              indicate a defect
      near-tight-strict       a strict bound came within tolerance of equality
    """
    tight: bool
    condition: str | None
    condition_met: bool | None
    verdict: str


@dataclass(frozen=True)
class BoundResult:
    bound_id: str
    direction: str              # lower | upper
    strict: bool
    applicable: bool
    reason: str | None          # populated when not applicable
    value: float | None
    gap: float | None           # qe - value (lower) or value - qe (upper)
    diagnosis: EqualityDiagnosis | None
    details: dict[str, Any]


@dataclass(frozen=True)
class _Ctx:
    n: int
    m: int
    m1: int
    dmax: int
    dmin: int
    degrees: tuple[int, ...]
    connected: bool
    bipartite: bool
    regular: bool
    qe: float
    mean: float
    g1: float
    gn: float
    gn_zero: bool


@lru_cache(maxsize=8192)
def _ctx(g: Graph) -> _Ctx:
    stats = degree_stats(g)
    info = structure(g)
    gam = gamma_sequence(g)
    # the energy is summed here from the deviation sequence directly so that
    # evaluating bounds costs one eigensolve, not three
    return _Ctx(
        n=stats.n, m=stats.m, m1=stats.zagreb_m1,
        dmax=stats.max_degree, dmin=stats.min_degree,
        degrees=g.degrees,
        connected=info.is_connected, bipartite=info.is_bipartite,
        regular=info.is_regular,
        qe=math.fsum(gam.values),
        mean=gam.mean, g1=gam.values[0], gn=gam.values[-1],
        gn_zero=gam.min_is_zero,
    )


def _skip(bound_id: str, direction: str, strict: bool, reason: str) -> BoundResult:
    return BoundResult(bound_id=bound_id, direction=direction, strict=strict,
                       applicable=False, reason=reason, value=None, gap=None,
                       diagnosis=None, details={})


def _finish(bound_id: str, direction: str, strict: bool, value: float, c: _Ctx,
            condition: str | None, condition_met: bool | None,
            details: dict[str, Any]) -> BoundResult:
    gap = (c.qe - value) if direction == "lower" else (value - c.qe)
    tight = abs(gap) <= tolerances.tight_tol(c.qe)
    if strict:
        verdict = "near-tight-strict" if tight else "consistent"
    elif condition is None:
        verdict = "tight-no-stated-family" if tight else "consistent"
    elif tight and condition_met:
        verdict = "consistent"
    elif tight:
        verdict = "tight-no-stated-family"
    elif condition_met:
        verdict = "stated-family-not-tight"
    else:
        verdict = "consistent"
    diag = EqualityDiagnosis(tight=tight, condition=condition,
                             condition_met=condition_met, verdict=verdict)
    return BoundResult(bound_id=bound_id, direction=direction, strict=strict,
                       applicable=True, reason=None, value=value, gap=gap,
                       diagnosis=diag, details=details)


# -- degree-pair selection shared by the two pair-based estimates ----------------
#
# Deterministic rule: anchor at the lowest-index extreme-degree vertex, pick the
# partner as the lowest-index extreme-degree vertex among the rest, then branch
# on adjacency. Below PAIR_ENUMERATION_LIMIT vertices the details also carry the
# spread of the estimate over every valid anchor/partner pair.

def _top_pair_value(g: Graph, c: _Ctx, v1: int, v2: int) -> float:
    d2 = c.degrees[v2]
    if v2 in g.adjacency[v1]:
        return (2 * c.m1 / c.m + c.degrees[v1] + d2
                - math.sqrt((c.degrees[v1] - d2) ** 2 + 4) - 8 * c.m / c.n)
    return 2 * c.m1 / c.m + 2 * d2 - 8 * c.m / c.n


def _bottom_pair_value(g: Graph, c: _Ctx, vn: int, vn1: int) -> float:
    dn1 = c.degrees[vn1]
    if vn1 in g.adjacency[vn]:
        return 8 * c.m / c.n - 2 * c.degrees[vn] - 2 * dn1
    return 8 * c.m / c.n - (2 * dn1 + c.dmax + c.degrees[vn]
                            - math.sqrt((c.dmax - c.degrees[vn]) ** 2 + 4))


def _pair_candidates(degrees: tuple[int, ...], want_max: bool):
    """All (anchor, partner) pairs the tie-breaking could legitimately pick."""
    extreme = max(degrees) if want_max else min(degrees)
    for v1 in (i for i, d in enumerate(degrees) if d == extreme):
        rest = [(d, i) for i, d in enumerate(degrees) if i != v1]
        d2 = max(d for d, _ in rest) if want_max else min(d for d, _ in rest)
        for v2 in (i for d, i in rest if d == d2):
            yield v1, v2


def _deterministic_pair(degrees: tuple[int, ...], want_max: bool) -> tuple[int, int]:
    extreme = max(degrees) if want_max else min(degrees)
    v1 = degrees.index(extreme)
    rest = [(d, i) for i, d in enumerate(degrees) if i != v1]
    d2 = max(d for d, _ in rest) if want_max else min(d for d, _ in rest)
    v2 = min(i for d, i in rest if d == d2)
    return v1, v2


def _pair_details(g: Graph, c: _Ctx, want_max: bool,
                  value_fn) -> tuple[float, dict[str, Any]]:
    v1, v2 = _deterministic_pair(c.degrees, want_max)
    value = value_fn(g, c, v1, v2)
    details: dict[str, Any] = {
        "anchor_vertex": v1,
        "partner_vertex": v2,
        "anchor_degree": c.degrees[v1],
        "partner_degree": c.degrees[v2],
        "pair_adjacent": v2 in g.adjacency[v1],
    }
    if c.n <= PAIR_ENUMERATION_LIMIT:
        vals = [value_fn(g, c, a, b) for a, b in _pair_candidates(c.degrees, want_max)]
        details["pair_value_min"] = min(vals)
        details["pair_value_max"] = max(vals)
        details["pair_count"] = len(vals)
    return value, details


def gan5_two_case_value(g: Graph) -> float:
    """The adjacency-branched form of the L-GAN5 estimate, evaluated without
    the bipartite special case. Exposed because the reference tables tabulate
    this form for every row, bipartite or not."""
    c = _ctx(g)
    if c.m < 1 or c.n < 2:
        raise ValueError("two-case estimate needs at least one edge and two vertices")
    vn, vn1 = _deterministic_pair(c.degrees, want_max=False)
    return _bottom_pair_value(g, c, vn, vn1)


# -- equality-family predicates ---------------------------------------------------

def _is_crown_like(g: Graph, c: _Ctx) -> bool:
    # connected bipartite r-regular on 2r+2 vertices is exactly the complement
    # of a perfect matching inside a balanced complete bipartite graph
    return (c.connected and c.regular and c.bipartite
            and c.n == 2 * c.dmax + 2)


def _constant_common_neighbors(g: Graph) -> bool:
    if g.n < 2:
        return False
    adj = g.adjacency
    first = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            k = len(adj[u] & adj[v])
            if first is None:
                first = k
            elif k != first:
                return False
    return True


def _thm3_family(g: Graph, c: _Ctx) -> bool:
    if is_complete(g) or is_perfect_matching(g):
        return True
    # strongly-regular-style case: regular with every vertex pair sharing the
    # same number of common neighbours, adjacent or not
    return c.regular and c.m >= 1 and _constant_common_neighbors(g)


# -- lower bounds -----------------------------------------------------------------

def _l_gan1(g: Graph, c: _Ctx) -> BoundResult:
    if c.m < 1:
        return _skip("L-GAN1", "lower", False, "requires at least one edge")
    value = 2 * (c.m1 / c.m - 2 * c.m / c.n)
    return _finish("L-GAN1", "lower", False, value, c,
                   "star", is_star(g), {})


def _l_gan2(g: Graph, c: _Ctx) -> BoundResult:
    if c.m < 1:
        return _skip("L-GAN2", "lower", False, "requires at least one edge")
    value = 2 * c.dmax + 2 - 4 * c.m / c.n
    return _finish("L-GAN2", "lower", False, value, c,
                   "star", is_star(g), {})


def _l_gan3(g: Graph, c: _Ctx) -> BoundResult:
    if c.m < 1:
        return _skip("L-GAN3", "lower", False, "requires at least one edge")
    value = (c.dmax + c.dmin
             + math.sqrt((c.dmax - c.dmin) ** 2 + 4 * c.dmax) - 4 * c.m / c.n)
    return _finish("L-GAN3", "lower", False, value, c,
                   "star", is_star(g), {})


def _l_gan4(g: Graph, c: _Ctx) -> BoundResult:
    if c.m < 1 or c.n < 2:
        return _skip("L-GAN4", "lower", False,
                     "requires at least one edge and two vertices")
    value, details = _pair_details(g, c, want_max=True, value_fn=_top_pair_value)
    return _finish("L-GAN4", "lower", False, value, c, None, None, details)


def _l_gan5(g: Graph, c: _Ctx) -> BoundResult:
    # false for disconnected graphs, where deleting the extreme pair can touch
    # several components at once
    if not c.connected or c.m < 1:
        return _skip("L-GAN5", "lower", False,
                     "requires a connected graph with at least one edge")
    if c.bipartite:
        value = 8 * c.m / c.n - 2 * c.dmin
        details: dict[str, Any] = {"branch": "bipartite"}
    else:
        value, details = _pair_details(g, c, want_max=False,
                                       value_fn=_bottom_pair_value)
        details["branch"] = "two-case"
    return _finish("L-GAN5", "lower", False, value, c, None, None, details)


def _l_thm1(g: Graph, c: _Ctx) -> BoundResult:
    if c.m < 1 or c.n < 2:
        return _skip("L-THM1", "lower", False,
                     "requires at least one edge and two vertices")
    if c.gn_zero:
        return _skip("L-THM1", "lower", False,
                     "requires every eigenvalue to deviate from the mean")
    t = 2 * c.m + c.m1 - 4 * c.m * c.m / c.n
    value = (2 * math.sqrt(t * c.n) * math.sqrt(c.g1 * c.gn) / (c.g1 + c.gn))
    return _finish("L-THM1", "lower", False, value, c, None, None,
                   {"gamma_max": c.g1, "gamma_min": c.gn})


def _deviation_threshold_scale(c: _Ctx) -> float:
    # sqrt(m (n^3 - n^2 - 2mn + 4m)), computed in exact integers first
    c_int = c.m * (c.n ** 3 - c.n ** 2 - 2 * c.m * c.n + 4 * c.m)
    return math.sqrt(c_int)


def _l_cor4(g: Graph, c: _Ctx) -> BoundResult:
    if not c.connected or c.m < 1:
        return _skip("L-COR4", "lower", False,
                     "requires a connected graph with at least one edge")
    threshold = _deviation_threshold_scale(c) / (2 * c.n)
    if c.gn < threshold:
        return _skip("L-COR4", "lower", False,
                     "requires the minimum deviation to reach sqrt(c)/(2n)")
    value = (2 * math.sqrt(2) / 3) * math.sqrt(
        (2 * c.m + 0.5 * (c.dmax - c.dmin) ** 2) * c.n)
    return _finish("L-COR4", "lower", False, value, c,
                   "complete graph on three vertices",
                   c.n == 3 and c.m == 3, {"threshold": threshold})


def _l_cor5(g: Graph, c: _Ctx) -> BoundResult:
    if not c.connected or c.m < 1:
        return _skip("L-COR5", "lower", True,
                     "requires a connected graph with at least one edge")
    threshold = _deviation_threshold_scale(c) / c.n ** 3
    if c.gn < threshold:
        return _skip("L-COR5", "lower", True,
                     "requires the minimum deviation to reach sqrt(c)/n^3")
    value = (2 * c.n * math.sqrt((2 * c.m + 0.5 * (c.dmax - c.dmin) ** 2) * c.n)
             / (1 + c.n * c.n))
    return _finish("L-COR5", "lower", True, value, c, None, None,
                   {"threshold": threshold})


def _l_thm2(g: Graph, c: _Ctx) -> BoundResult:
    if not c.connected or c.m < 1:
        return _skip("L-THM2", "lower", False,
                     "requires a connected graph with at least one edge")
    if not c.gn_zero:
        return _skip("L-THM2", "lower", False,
                     "requires some eigenvalue to sit at the mean")
    t = 2 * c.m + c.m1 - 4 * c.m * c.m / c.n
    value = t / c.g1
    return _finish("L-THM2", "lower", False, value, c,
                   "balanced complete bipartite graph",
                   is_balanced_complete_bipartite(g), {"gamma_max": c.g1})


def _l_cor2(g: Graph, c: _Ctx) -> BoundResult:
    if not c.connected or c.m < 1:
        return _skip("L-COR2", "lower", False,
                     "requires a connected graph with at least one edge")
    if not c.gn_zero:
        return _skip("L-COR2", "lower", False,
                     "requires some eigenvalue to sit at the mean")
    value = ((2 * c.m + 0.5 * (c.dmax - c.dmin) ** 2)
             / (2 * c.dmax - 2 * c.m / c.n))
    return _finish("L-COR2", "lower", False, value, c,
                   "balanced complete bipartite graph",
                   is_balanced_complete_bipartite(g), {})


def _l_cor3(g: Graph, c: _Ctx) -> BoundResult:
    if not c.connected or c.m < 1 or not c.regular:
        return _skip("L-COR3", "lower", False,
                     "requires a connected regular graph with at least one edge")
    r = c.dmax
    if c.gn_zero:
        value = float(c.n)
        condition = "balanced complete bipartite graph"
        met = is_balanced_complete_bipartite(g)
        details: dict[str, Any] = {"branch": "zero-deviation"}
    else:
        value = 2 * c.n * r * math.sqrt(c.gn) / (r + c.gn)
        condition = "complete graph or crown graph"
        met = is_complete(g) or _is_crown_like(g, c)
        details = {"branch": "positive-deviation", "gamma_min": c.gn}
    return _finish("L-COR3", "lower", False, value, c, condition, met, details)


# -- upper bounds -----------------------------------------------------------------

def _u_abr1(g: Graph, c: _Ctx) -> BoundResult:
    value = 4 * c.m * (1 - 1 / c.n)
    return _finish("U-ABR1", "upper", False, value, c,
                   "edgeless, or a single edge plus isolated vertices",
                   c.m == 0 or is_single_edge_with_isolates(g), {})


def _u_abr2(g: Graph, c: _Ctx) -> BoundResult:
    # disconnected graphs (any union of single edges has M1 = 2m) and the
    # two-vertex graph break this estimate
    if not c.connected or c.n < 3:
        return _skip("U-ABR2", "upper", False,
                     "requires a connected graph on at least three vertices")
    rad = c.m / 2 - (2 * c.m / c.n - 1)
    spread = c.m1 - 2 * c.m
    if rad < 0 or spread < 0:
        return _skip("U-ABR2", "upper", False, "radicand is negative")
    value = (1 + math.sqrt(rad)) * math.sqrt(2 * spread)
    return _finish("U-ABR2", "upper", False, value, c, None, None, {})


def _u_li(g: Graph, c: _Ctx) -> BoundResult:
    if c.m < 1 or c.n < 2:
        return _skip("U-LI", "upper", False,
                     "requires at least one edge and two vertices")
    rad = (c.n - 2) * (2 * c.m * c.m / (c.n - 1)
                       + (8 * c.m * c.dmax - 4 * c.m * c.m) / c.n
                       + c.m * c.n - 4)
    if rad < 0:
        return _skip("U-LI", "upper", False, "radicand is negative")
    value = 2 * c.m / (c.n - 1) + c.n - 2 + math.sqrt(rad)
    return _finish("U-LI", "upper", False, value, c,
                   "single edge", c.n == 2 and c.m == 1, {})


def _u_gan(g: Graph, c: _Ctx) -> BoundResult:
    if not c.connected:
        return _skip("U-GAN", "upper", False, "requires a connected graph")
    value = 2 * (2 * c.m + 1 - c.dmax - 2 * c.m / c.n)
    return _finish("U-GAN", "upper", False, value, c, None, None, {})


def _u_thm3(g: Graph, c: _Ctx) -> BoundResult:
    if c.m < 1:
        return _skip("U-THM3", "upper", False, "requires at least one edge")
    t = 2 * c.m + c.m1 - 4 * c.m * c.m / c.n
    # integer case test: n (2m + M1) <= 8 m^2
    mean_dominant = c.n * (2 * c.m + c.m1) <= 8 * c.m * c.m
    if mean_dominant:
        value = (2 * c.m / c.n
                 + math.sqrt((c.n - 1) * (t - (2 * c.m / c.n) ** 2)))
        return _finish(
            "U-THM3", "upper", False, value, c,
            "complete graph, perfect matching, or regular graph with constant "
            "common-neighbour count", _thm3_family(g, c),
            {"branch": "mean-at-least-rms", "strict_branch": False})
    value = math.sqrt(t / c.n) + math.sqrt((c.n - 1) * t * (1 - 1 / c.n))
    res = _finish("U-THM3", "upper", True, value, c, None, None,
                  {"branch": "mean-below-rms", "strict_branch": True})
    return res


def _u_cor6(g: Graph, c: _Ctx) -> BoundResult:
    if not c.connected or c.regular:
        return _skip("U-COR6", "upper", True,
                     "requires a connected irregular graph")
    dd = (c.dmax - c.dmin) ** 2
    # integer case test: (n dd + 4m)^2 <= 16 m^2 (1 + dd)
    inside = (c.n * dd + 4 * c.m) ** 2 <= 16 * c.m * c.m * (1 + dd)
    if inside:
        value = (2 * c.m / c.n
                 + math.sqrt((c.n - 1) * (2 * c.m + c.n * dd / 4
                                          - (2 * c.m / c.n) ** 2)))
        branch = "below-degree-spread-threshold"
    else:
        value = (math.sqrt(2 * c.m / c.n + dd / 4)
                 + math.sqrt((c.n - 1) * (2 * c.m + (c.n - 1) * dd / 4
                                          - 2 * c.m / c.n)))
        branch = "above-degree-spread-threshold"
    return _finish("U-COR6", "upper", True, value, c, None, None,
                   {"branch": branch})


def _u_cor7(g: Graph, c: _Ctx) -> BoundResult:
    if not c.regular or c.m < 1:
        return _skip("U-COR7", "upper", False,
                     "requires a regular graph with at least one edge")
    value = (2 * c.m / c.n
             + math.sqrt((c.n - 1) * (2 * c.m - (2 * c.m / c.n) ** 2)))
    return _finish("U-COR7", "upper", False, value, c,
                   "complete graph, perfect matching, or regular graph with "
                   "constant common-neighbour count", _thm3_family(g, c), {})


_EVALUATORS = {
    "L-GAN1": _l_gan1, "L-GAN2": _l_gan2, "L-GAN3": _l_gan3,
    "L-GAN4": _l_gan4, "L-GAN5": _l_gan5,
    "L-THM1": _l_thm1, "L-COR4": _l_cor4, "L-COR5": _l_cor5,
    "L-THM2": _l_thm2, "L-COR2": _l_cor2, "L-COR3": _l_cor3,
    "U-ABR1": _u_abr1, "U-ABR2": _u_abr2, "U-LI": _u_li, "U-GAN": _u_gan,
    "U-THM3": _u_thm3, "U-COR6": _u_cor6, "U-COR7": _u_cor7,
}

assert tuple(_EVALUATORS) == BOUND_IDS


def evaluate_bound(g: Graph, bound_id: str) -> BoundResult:
    try:
        fn = _EVALUATORS[bound_id]
    except KeyError:
        raise ValueError(f"unknown bound id {bound_id!r}; "
                         f"known ids: {', '.join(BOUND_IDS)}") from None
    return fn(g, _ctx(g))


def all_bounds(g: Graph) -> tuple[BoundResult, ...]:
    c = _ctx(g)
    return tuple(fn(g, c) for fn in _EVALUATORS.values())
