"""Search for uniquely K_r-saturated graphs without a dominating vertex.

A graph qualifies when it has no K_r subgraph and adding any missing edge
creates exactly one K_r. The search family relaxes "exactly one" to "at
most one", which is ear-monotone, and prunes on dominating vertices since
those are excluded from the target anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .engine import FamilySpec
from .graph import CAP, Graph


@dataclass(frozen=True, slots=True)
class SatConfig:
    """clique_size is the forbidden K_r; dominating-vertex pruning can be
    switched off to probe its soundness empirically."""

    clique_size: int
    max_n: int
    prune_dominating: bool = True

    def __post_init__(self) -> None:
        if self.clique_size < 3:
            raise ValueError("clique size must be at least 3")
        if not 3 <= self.max_n <= CAP:
            raise ValueError(f"max_n must be in 3..{CAP}")


def _count_cliques(adj: tuple[int, ...], cand: int, k: int, limit: int) -> int:
    """Number of k-cliques inside the vertex set ``cand``, stopping early
    at ``limit``."""
    if k == 0:
        return 1
    if k == 1:
        return cand.bit_count()
    count = 0
    while cand:
        b = cand & -cand
        cand ^= b
        count += _count_cliques(adj, cand & adj[b.bit_length() - 1], k - 1, limit - count)
        if count >= limit:
            return count
    return count


def has_clique(g: Graph, k: int) -> bool:
    return _count_cliques(g.adj, (1 << g.n) - 1, k, 1) >= 1


def count_clique_completions(g: Graph, u: int, v: int, r: int) -> int:
    """Number of K_r created by adding the missing edge uv, i.e. the number
    of (r-2)-cliques in the common neighborhood of u and v."""
    if g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is an edge; completions are defined for non-edges")
    common = g.adj[u] & g.adj[v]
    return _count_cliques(g.adj, common, r - 2, 1 << 30)


def _completions_capped(g: Graph, u: int, v: int, r: int, limit: int) -> int:
    return _count_cliques(g.adj, g.adj[u] & g.adj[v], r - 2, limit)


def is_saturation_candidate(g: Graph, r: int) -> bool:
    """Membership in the search family: K_r-free and no non-edge completes
    more than one K_r. Both properties survive ear deletion."""
    if has_clique(g, r):
        return False
    adj = g.adj
    n = g.n
    full = (1 << n) - 1
    for u in range(n):
        others = full & ~adj[u] & ~((1 << (u + 1)) - 1)
        while others:
            b = others & -others
            others ^= b
            v = b.bit_length() - 1
            if _count_cliques(adj, adj[u] & adj[v], r - 2, 2) >= 2:
                return False
    return True


def has_dominating_vertex(g: Graph) -> bool:
    n = g.n
    return any(g.adj[v].bit_count() == n - 1 for v in range(n))


def is_uniquely_saturated(g: Graph, r: int) -> bool:
    """Independent verifier: K_r-free and every non-edge has exactly one
    completion."""
    if has_clique(g, r):
        return False
    for u, v in g.non_edges():
        if _completions_capped(g, u, v, r, 2) != 1:
            return False
    return True


def unique_saturation_family(cfg: SatConfig) -> FamilySpec:
    r = cfg.clique_size
    if cfg.prune_dominating:
        prune = has_dominating_vertex
    else:
        prune = lambda g: False
    return FamilySpec(
        name=f"uniquely-K{r}-saturated(n<={cfg.max_n})",
        is_member=lambda g: is_saturation_candidate(g, r),
        prune=prune,
        is_solution=lambda g: not has_dominating_vertex(g) and is_uniquely_saturated(g, r),
    )


def is_k_connected(g: Graph, k: int) -> bool:
    """No set of k-1 vertices whose removal disconnects the graph or
    leaves a single vertex."""
    if g.n - (k - 1) < 2:
        return False
    full = (1 << g.n) - 1
    for cut in combinations(range(g.n), k - 1):
        mask = full
        for v in cut:
            mask &= ~(1 << v)
        if not _connected_masked(g.adj, mask):
            return False
    return True


def _connected_masked(adj: tuple[int, ...], mask: int) -> bool:
    if mask == 0:
        return True
    reach = mask & -mask
    frontier = reach
    while frontier:
        acc = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            acc |= adj[b.bit_length() - 1]
        frontier = acc & mask & ~reach
        reach |= frontier
    return reach == mask


@dataclass(slots=True)
class SolutionReport:
    """Post-hoc verification record for one reported solution."""

    degrees: list[int]
    regular: bool
    dominating: bool
    uniquely_saturated: bool
    connectivity_ok: bool
    completion_histogram: dict[int, int]

    @property
    def ok(self) -> bool:
        return self.uniquely_saturated and not self.dominating and self.connectivity_ok


def verify_solution(g: Graph, r: int) -> SolutionReport:
    """Re-check a solution independently of the search path: unique
    saturation, no dominating vertex, and (r-2)-connectivity whenever the
    graph has at least r+1 vertices."""
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    hist: dict[int, int] = {}
    for u, v in g.non_edges():
        c = count_clique_completions(g, u, v, r)
        hist[c] = hist.get(c, 0) + 1
    connectivity_ok = True
    if g.n >= r + 1:
        connectivity_ok = is_k_connected(g, r - 2)
    return SolutionReport(
        degrees=degrees,
        regular=len(set(degrees)) <= 1,
        dominating=has_dominating_vertex(g),
        uniquely_saturated=is_uniquely_saturated(g, r),
        connectivity_ok=connectivity_ok,
        completion_histogram=dict(sorted(hist.items())),
    )


def format_report(g: Graph, r: int, report: SolutionReport) -> str:
    from .graph6 import encode

    hist = ",".join(f"{k}:{v}" for k, v in report.completion_histogram.items())
    return (
        f"{encode(g)} n={g.n} degrees={report.degrees} regular={report.regular} "
        f"dominating={report.dominating} completions={{{hist}}} verified={report.ok}"
    )
