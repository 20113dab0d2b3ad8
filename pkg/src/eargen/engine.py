"""Isomorph-free generation core.

The search walks a rooted tree whose first level is the cycles C_3..C_N.
Each node expands by ear augmentations, one per (vertex-pair orbit, order);
a child survives only if the ear it was built from is equivalent, under the
child's automorphism group, to the child's canonical ear deletion. That
guarantees every isomorphism class in the family is reached by exactly one
augmentation chain. Disjoint subtrees are independent, which makes
splitting by depth-d child index a communication-free parallelization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .canon import GraphAnalysis, PairOrbits, analyse, vertex_pair_orbits
from .graph import CAP, Ear, Graph, _ear_deletion_two_connected, ear_augment, enumerate_ears


@dataclass(slots=True)
class DeletionChoice:
    """A canonical ear deletion: endpoint pair (x < y), ear order, the
    (order, label-key) tag it won with, and a concrete ear realizing it."""

    x: int
    y: int
    order: int
    tag: tuple
    ear: Ear

    @property
    def pair(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(slots=True)
class DeleterVerdict:
    """Outcome of a canonical-deletion scan at the minimum deletable order.

    ``pairs`` holds every endpoint pair still in the running. When
    ``select_all`` is set each pair counts as canonical (a deck-based
    deleter may certify several); otherwise the canonical one is the pair
    with the least label under the canonical labeling, resolved lazily.
    """

    order: int
    pairs: list[tuple[int, int]]
    select_all: bool
    analysis: Optional[GraphAnalysis]
    ear_by_pair: dict[tuple[int, int], Ear]


@dataclass(frozen=True, slots=True)
class JobSpec:
    """Restriction of a run to one slice of the search tree: the accepted
    children at ``depth`` below the root cycles are assigned round-robin to
    residue classes mod ``modulus`` and a job explores only its own class.
    Solutions above the split depth are emitted by residue 0 alone, so the
    union over all residues reproduces the full run exactly once each.
    ``root`` optionally restricts to a single root cycle length."""

    depth: int = 1
    modulus: int = 1
    residue: int = 0
    root: int | None = None


@dataclass(slots=True)
class RunStats:
    nodes: int = 0
    pruned: int = 0
    attempts: int = 0
    accepted: int = 0
    solutions: int = 0
    multi_canonical: int = 0

    def merge(self, other: "RunStats") -> None:
        self.nodes += other.nodes
        self.pruned += other.pruned
        self.attempts += other.attempts
        self.accepted += other.accepted
        self.solutions += other.solutions
        self.multi_canonical += other.multi_canonical


def _always(g: Graph) -> bool:
    return True


def _never(g: Graph) -> bool:
    return False


def _keep_all(g: Graph, ear: Ear) -> bool:
    return True


# A deleter maps (graph, family, order cap) to a verdict, or None when no
# ear deletion stays in the family or the minimum deletable order is below
# the cap (which lets augmentation checks bail out before any labeling).
Deleter = Callable[[Graph, "FamilySpec", Optional[int]], Optional[DeleterVerdict]]


@dataclass(slots=True)
class FamilySpec:
    """Callbacks defining a deletion-closed family of 2-connected graphs.

    ``deletion_filter`` restricts which ear deletions stay inside the
    family beyond 2-connectivity (must be label-invariant). A non-cycle
    member must always admit at least one deletable ear, or its subtree is
    silently lost. ``custom_deleter`` overrides the default canonical
    deletion; ``sibling_hook`` receives each expanded node together with
    its accepted (child, ear order) pairs once expansion completes."""

    name: str
    is_member: Callable[[Graph], bool] = _always
    prune: Callable[[Graph], bool] = _never
    is_solution: Callable[[Graph], bool] = _always
    deletion_filter: Callable[[Graph, Ear], bool] = _keep_all
    custom_deleter: Optional[Deleter] = None
    sibling_hook: Optional[Callable[[Graph, list[tuple[Graph, int]]], None]] = None


def _default_deleter(g: Graph, fam: FamilySpec, r_cap: int | None) -> DeleterVerdict | None:
    """Scan for deletable ears of minimum order. With ``r_cap`` set, give
    up as soon as some ear of strictly smaller order is deletable."""
    ears = enumerate_ears(g)
    if not ears:
        return None
    groups: dict[int, list[Ear]] = {}
    for e in ears:
        groups.setdefault(e.order, []).append(e)
    for order in sorted(groups):
        if r_cap is not None and order > r_cap:
            return None
        reject_early = r_cap is not None and order < r_cap
        found: dict[tuple[int, int], Ear] = {}
        for e in groups[order]:
            if fam.deletion_filter(g, e) and _ear_deletion_two_connected(g, e):
                if reject_early:
                    return None
                found.setdefault(e.endpoints, e)
        if found:
            return DeleterVerdict(order, list(found), False, None, found)
    return None


def _label_key(pi: tuple[int, ...], n: int, pair: tuple[int, int]) -> int:
    a, b = pi[pair[0]], pi[pair[1]]
    return n * a + b if a < b else n * b + a


def _finalize_choices(g: Graph, verdict: DeleterVerdict) -> list[DeletionChoice]:
    """Resolve a verdict into explicit canonical choices."""
    order = verdict.order
    if verdict.select_all:
        return [
            DeletionChoice(*p, order, (order, None), verdict.ear_by_pair[p])
            for p in verdict.pairs
        ]
    if len(verdict.pairs) == 1:
        p = verdict.pairs[0]
        return [DeletionChoice(*p, order, (order, None), verdict.ear_by_pair[p])]
    analysis = verdict.analysis or analyse(g)
    pi = analysis.form.perm
    best = min(verdict.pairs, key=lambda p: _label_key(pi, g.n, p))
    return [
        DeletionChoice(*best, order, (order, _label_key(pi, g.n, best)), verdict.ear_by_pair[best])
    ]


def default_canonical_delete(g: Graph, fam: FamilySpec) -> DeletionChoice | None:
    """The canonical ear deletion: minimum order among ears whose deletion
    stays 2-connected and in the family, ties broken by the least
    endpoint-pair label under the canonical labeling. None signals a dead
    node (no ear deletion stays in the family)."""
    verdict = _default_deleter(g, fam, None)
    if verdict is None:
        return None
    return _finalize_choices(g, verdict)[0]


def orbit_augmentations(g: Graph, max_n: int) -> list[tuple[tuple[int, int], int]]:
    """One (pair-orbit representative, order) entry per augmentation the
    search would attempt from g, capped at ``max_n`` total vertices."""
    orbits = vertex_pair_orbits(g)
    out = []
    for x, y in orbits.reps:
        start = 1 if g.has_edge(x, y) else 0
        for r in range(start, max_n - g.n + 1):
            out.append(((x, y), r))
    return out


def _acceptance(
    child: Graph,
    added_pair: tuple[int, int],
    verdict: DeleterVerdict,
) -> tuple[bool, Optional[GraphAnalysis], Optional[PairOrbits]]:
    """Does the canonical deletion of ``child`` invert the augmentation
    that added an ear over ``added_pair``?  Equivalence is taken under the
    child's automorphism group: the added pair must share a pair orbit with
    the canonical deletion pair. Returns the analysis and orbits when they
    had to be computed so the caller can reuse them."""
    pairs = verdict.pairs
    if added_pair in pairs and (verdict.select_all or len(pairs) == 1):
        return True, verdict.analysis, None
    analysis = verdict.analysis or analyse(child)
    orbits = vertex_pair_orbits(child, analysis.gens)
    oid = orbits.orbit_id
    aid = oid.get(added_pair)
    if verdict.select_all:
        return any(oid.get(p) == aid for p in pairs), analysis, orbits
    cand_orbits = {oid.get(p) for p in pairs}
    if len(cand_orbits) == 1:
        return aid in cand_orbits, analysis, orbits
    pi = analysis.form.perm
    best = min(pairs, key=lambda p: _label_key(pi, child.n, p))
    return oid.get(best) == aid, analysis, orbits


def _ear_deletable(g: Graph, fam: FamilySpec, ear: Ear) -> bool:
    return fam.deletion_filter(g, ear) and _ear_deletion_two_connected(g, ear)


def _accept_default(
    child: Graph,
    fam: FamilySpec,
    added_pair: tuple[int, int],
    r: int,
) -> tuple[bool, Optional[GraphAnalysis], Optional[PairOrbits]]:
    """Acceptance against the default canonical deletion, exploiting that
    deleting the just-added ear restores the 2-connected parent, so the
    added pair is deletable for free: the child is accepted iff no
    deletable pair of the same order beats it in canonical-label order.
    Deletability is shared across a pair orbit and across parallel
    equal-order ears (automorphic images)."""
    ears = enumerate_ears(child)
    if not ears:
        return False, None, None
    groups: dict[int, list[Ear]] = {}
    for e in ears:
        groups.setdefault(e.order, []).append(e)
    for order in sorted(groups):
        if order > r:
            return False, None, None
        group = groups[order]
        if order < r:
            for e in group:
                if _ear_deletable(child, fam, e):
                    return False, None, None
            continue
        by_pair: dict[tuple[int, int], Ear] = {}
        for e in group:
            by_pair.setdefault(e.endpoints, e)
        pairs = list(by_pair)
        if len(pairs) == 1:
            # necessarily the added pair, and it is deletable
            return fam.deletion_filter(child, by_pair[added_pair]), None, None
        pair_status: dict[tuple[int, int], bool] | None = None
        if len(pairs) <= 3:
            # cheap attempt to settle without a labeling: if no competitor
            # pair is deletable the added one wins outright
            pair_status = {
                p: _ear_deletable(child, fam, by_pair[p]) for p in pairs if p != added_pair
            }
            if not any(pair_status.values()):
                return fam.deletion_filter(child, by_pair[added_pair]), None, None
        analysis = analyse(child)
        orbits = vertex_pair_orbits(child, analysis.gens)
        oid = orbits.orbit_id
        aid = oid[added_pair]
        pi = analysis.form.perm
        n = child.n
        pairs.sort(key=lambda p: _label_key(pi, n, p))
        status: dict[int, bool] = {aid: fam.deletion_filter(child, by_pair[added_pair])}
        for p in pairs:
            o = oid[p]
            st = status.get(o)
            if st is None:
                if pair_status is not None and p in pair_status:
                    st = pair_status[p]
                else:
                    st = _ear_deletable(child, fam, by_pair[p])
                status[o] = st
            if st:
                return o == aid, analysis, orbits
        return False, analysis, orbits
    return False, None, None


def accept_child(
    child: Graph,
    fam: FamilySpec,
    parent_orbits: PairOrbits,
    used_orbit: int,
    used_order: int,
) -> bool:
    """Acceptance test for a child built by augmenting the representative
    pair of ``used_orbit`` with an ear of ``used_order``."""
    added_pair = parent_orbits.reps[used_orbit]
    if fam.custom_deleter is None:
        ok, _, _ = _accept_default(child, fam, added_pair, used_order)
        return ok
    verdict = fam.custom_deleter(child, fam, used_order)
    if verdict is None or verdict.order != used_order:
        return False
    ok, _, _ = _acceptance(child, added_pair, verdict)
    return ok


def _expand(
    g: Graph,
    analysis: GraphAnalysis | None,
    orbits: PairOrbits | None,
    depth: int,
    fam: FamilySpec,
    max_n: int,
    job: JobSpec | None,
    stats: RunStats,
    counter: list[int],
) -> Iterator[Graph]:
    stats.nodes += 1
    if fam.prune(g):
        stats.pruned += 1
        return
    own_level = job is None or depth >= job.depth or job.residue == 0
    if own_level and fam.is_solution(g):
        stats.solutions += 1
        yield g
    if orbits is None:
        if analysis is None:
            analysis = analyse(g)
        orbits = vertex_pair_orbits(g, analysis.gens)
    adj = g.adj
    custom = fam.custom_deleter
    bucket: list[tuple[Graph, int]] | None = [] if fam.sibling_hook is not None else None
    max_r = max_n - g.n
    for x, y in orbits.reps:
        start = 1 if adj[x] >> y & 1 else 0
        for r in range(start, max_r + 1):
            stats.attempts += 1
            child = ear_augment(g, x, y, r)
            if not fam.is_member(child):
                continue
            if custom is None:
                ok, child_analysis, child_orbits = _accept_default(child, fam, (x, y), r)
                if not ok:
                    continue
            else:
                verdict = custom(child, fam, r)
                if verdict is None:
                    continue
                ok, child_analysis, child_orbits = _acceptance(child, (x, y), verdict)
                if not ok:
                    continue
                if verdict.select_all and len(verdict.pairs) > 1:
                    stats.multi_canonical += 1
            stats.accepted += 1
            if bucket is not None:
                bucket.append((child, r))
            if job is not None and depth + 1 == job.depth:
                idx = counter[0]
                counter[0] += 1
                if idx % job.modulus != job.residue:
                    continue
            yield from _expand(
                child, child_analysis, child_orbits, depth + 1, fam, max_n, job, stats, counter
            )
    if bucket and own_level:
        fam.sibling_hook(g, bucket)


def search(g: Graph, fam: FamilySpec, max_n: int, stats: RunStats | None = None) -> Iterator[Graph]:
    """Every solution in the subtree rooted at g, each isomorphism class
    exactly once (up to a custom deleter's documented ambiguity)."""
    if stats is None:
        stats = RunStats()
    yield from _expand(g, None, None, 0, fam, max_n, None, stats, [0])


def run(
    fam: FamilySpec,
    max_n: int,
    job: JobSpec | None = None,
    stats: RunStats | None = None,
) -> Iterator[Graph]:
    """Full run over root cycles C_3..C_max_n, restricted to ``job`` if
    given. The union of a run over all residues of a modulus equals the
    unrestricted run as a multiset."""
    if not 3 <= max_n <= CAP:
        raise ValueError(f"max_n must be in 3..{CAP}")
    if job is not None:
        if job.modulus < 1 or not 0 <= job.residue < job.modulus:
            raise ValueError(f"invalid job residue {job.residue}/{job.modulus}")
        if job.depth < 1:
            raise ValueError("job split depth must be >= 1")
    if stats is None:
        stats = RunStats()
    counter = [0]
    for k in range(3, max_n + 1):
        if job is not None and job.root is not None and k != job.root:
            continue
        root = Graph.cycle(k)
        if not fam.is_member(root):
            continue
        yield from _expand(root, None, None, 0, fam, max_n, job, stats, counter)
