"""Built-in family of all 2-connected graphs, with optional vertex and
edge budgets."""

from __future__ import annotations

from dataclasses import dataclass

from .engine import FamilySpec
from .graph import CAP, Graph


@dataclass(frozen=True, slots=True)
class TwoConnConfig:
    """max_n caps vertices; max_e (optional) caps edges; exact makes only
    graphs hitting the caps count as solutions."""

    max_n: int
    max_e: int | None = None
    exact: bool = False

    def __post_init__(self) -> None:
        if not 3 <= self.max_n <= CAP:
            raise ValueError(f"max_n must be in 3..{CAP}")
        if self.max_e is not None and self.max_e < self.max_n:
            raise ValueError("max_e below max_n admits no 2-connected graph at max_n")


def edge_budget_prune(g: Graph, cfg: TwoConnConfig) -> bool:
    """Prune when the edge budget is blown or cannot survive growing to
    max_n vertices: reaching max_n from n < max_n costs at least
    max_n - n + 1 more edges."""
    if cfg.max_e is None:
        return False
    if g.m > cfg.max_e:
        return True
    return g.n < cfg.max_n and g.m + (cfg.max_n - g.n + 1) > cfg.max_e


def is_counted_solution(g: Graph, cfg: TwoConnConfig) -> bool:
    if cfg.exact:
        return g.n == cfg.max_n and (cfg.max_e is None or g.m == cfg.max_e)
    return cfg.max_e is None or g.m <= cfg.max_e


def two_connected_family(cfg: TwoConnConfig) -> FamilySpec:
    if cfg.max_e is None:
        member = lambda g: True
    else:
        member = lambda g: g.m <= cfg.max_e
    return FamilySpec(
        name=f"two-connected(n<={cfg.max_n}"
        + (f", e<={cfg.max_e}" if cfg.max_e is not None else "")
        + (", exact)" if cfg.exact else ")"),
        is_member=member,
        prune=lambda g: edge_budget_prune(g, cfg),
        is_solution=lambda g: is_counted_solution(g, cfg),
    )
