"""Canonical labeling, automorphism generators, and vertex-pair orbits.

Individualization-refinement: start from the degree partition, refine by
neighbor counts per cell, branch on the first smallest non-singleton cell.
The canonical form is the lexicographically least packed upper-triangle
adjacency string over the discovered leaves; automorphisms fall out of
leaf pairs with equal strings and prune the branch exploration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Label-invariant encoding: equal bytes iff isomorphic.

    ``bytes`` is the vertex count followed by the upper-triangle bits of
    the adjacency matrix under ``perm``, packed big-endian in column-major
    pair order (0,1),(0,2),(1,2),(0,3),...; ``perm[v]`` is the canonical
    label of vertex v.
    """

    bytes: bytes
    perm: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class AutomorphismGens:
    gens: tuple[tuple[int, ...], ...]


@dataclass(slots=True)
class PairOrbits:
    """Orbits of unordered vertex pairs under the automorphism group."""

    orbit_id: dict[tuple[int, int], int]
    reps: tuple[tuple[int, int], ...]


@dataclass(slots=True)
class GraphAnalysis:
    form: CanonicalForm
    gens: tuple[tuple[int, ...], ...]


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable partition refining ``cells``; subcell order is by
    (parent cell position, neighbor-count key), so the result is invariant
    under relabeling."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            buckets: dict[int, list[int]] = {}
            for v in c:
                av = adj[v]
                key = 0
                for m in masks:
                    key = key << 5 | (av & m).bit_count()
                got = buckets.get(key)
                if got is None:
                    buckets[key] = [v]
                else:
                    got.append(v)
            if len(buckets) == 1:
                out.append(c)
            else:
                changed = True
                for key in sorted(buckets):
                    out.append(buckets[key])
        if not changed:
            return out
        cells = out


def _pack_code(rows: list[int], n: int) -> int:
    code = 0
    for j in range(1, n):
        col = 0
        for i in range(j):
            col = col << 1 | (rows[i] >> j & 1)
        code = code << j | col
    return code


class _Labeler:
    def __init__(self, adj: tuple[int, ...], n: int, prune: bool = True):
        self.adj = adj
        self.n = n
        self.prune = prune
        self.best_code: int | None = None
        self.best_pos: list[int] | None = None
        self.first_by_code: dict[int, tuple[list[int], list[int]]] = {}
        self.auts: list[tuple[int, ...]] = []
        self.prefix: list[int] = []

    def run(self) -> None:
        n = self.n
        by_degree: dict[int, list[int]] = {}
        for v in range(n):
            by_degree.setdefault(self.adj[v].bit_count(), []).append(v)
        cells = [by_degree[d] for d in sorted(by_degree)]
        self._explore(cells)

    def _leaf(self, cells: list[list[int]]) -> None:
        adj = self.adj
        n = self.n
        pos = [0] * n
        order = [0] * n
        for i, c in enumerate(cells):
            v = c[0]
            pos[v] = i
            order[i] = v
        rows = [0] * n
        for v in range(n):
            row = 0
            av = adj[v]
            while av:
                b = av & -av
                row |= 1 << pos[b.bit_length() - 1]
                av ^= b
            rows[pos[v]] = row
        code = _pack_code(rows, n)
        prev = self.first_by_code.get(code)
        if prev is None:
            self.first_by_code[code] = (pos, order)
        else:
            porder = prev[1]
            gamma = tuple(porder[pos[v]] for v in range(n))
            if any(gamma[v] != v for v in range(n)):
                self.auts.append(gamma)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_pos = pos

    def _skip(self, v: int, tried: list[int]) -> bool:
        prefix = self.prefix
        fixers = []
        for gm in self.auts:
            for p in prefix:
                if gm[p] != p:
                    break
            else:
                fixers.append(gm)
        if not fixers:
            return False
        n = self.n
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for gm in fixers:
            for a in range(n):
                ra, rb = find(a), find(gm[a])
                if ra != rb:
                    parent[rb] = ra
        rv = find(v)
        return any(find(t) == rv for t in tried)

    def _explore(self, cells: list[list[int]]) -> None:
        cells = _refine(self.adj, cells)
        target = -1
        tsize = self.n + 1
        for i, c in enumerate(cells):
            lc = len(c)
            if 1 < lc < tsize:
                target = i
                tsize = lc
        if target < 0:
            self._leaf(cells)
            return
        cell = cells[target]
        pre = cells[:target]
        post = cells[target + 1 :]
        tried: list[int] = []
        for v in sorted(cell):
            if tried and self.prune and self._skip(v, tried):
                continue
            rest = [w for w in cell if w != v]
            self.prefix.append(v)
            self._explore(pre + [[v], rest] + post)
            self.prefix.pop()
            tried.append(v)


def analyse(g: Graph, prune: bool = True) -> GraphAnalysis:
    """One labeling run returning both the canonical form and automorphism
    generators. ``prune=False`` disables orbit pruning (slow; for tests)."""
    n = g.n
    if n < 1:
        raise ValueError("canonical labeling needs at least one vertex")
    if n == 1:
        form = CanonicalForm(bytes([1]), (0,))
        return GraphAnalysis(form, ())
    lab = _Labeler(g.adj, n, prune=prune)
    lab.run()
    assert lab.best_code is not None and lab.best_pos is not None
    npairs = n * (n - 1) // 2
    packed = bytes([n]) + lab.best_code.to_bytes((npairs + 7) // 8, "big")
    form = CanonicalForm(packed, tuple(lab.best_pos))
    return GraphAnalysis(form, tuple(lab.auts))


def canonical_form(g: Graph) -> CanonicalForm:
    return analyse(g).form


def canonical_bytes(g: Graph) -> bytes:
    return analyse(g).form.bytes


def automorphism_generators(g: Graph) -> AutomorphismGens:
    return AutomorphismGens(analyse(g).gens)


def vertex_pair_orbits(g: Graph, gens: tuple[tuple[int, ...], ...] | None = None) -> PairOrbits:
    """Partition of all unordered vertex pairs into automorphism orbits,
    computed as the union-find closure of pair images under the generators.
    Representatives are the lexicographically least pair of each orbit."""
    n = g.n
    if n < 2:
        raise ValueError("pair orbits need at least two vertices")
    if gens is None:
        gens = analyse(g).gens
    pairs: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            index[(u, v)] = len(pairs)
            pairs.append((u, v))
    if not gens:
        return PairOrbits(index, tuple(pairs))
    parent = list(range(len(pairs)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for gm in gens:
        for idx, (u, v) in enumerate(pairs):
            a, b = gm[u], gm[v]
            if a > b:
                a, b = b, a
            ra, rb = find(idx), find(index[(a, b)])
            if ra != rb:
                parent[rb] = ra
    orbit_id: dict[tuple[int, int], int] = {}
    root_to_id: dict[int, int] = {}
    reps: list[tuple[int, int]] = []
    for idx, pair in enumerate(pairs):
        root = find(idx)
        oid = root_to_id.get(root)
        if oid is None:
            oid = len(reps)
            root_to_id[root] = oid
            reps.append(pair)
        orbit_id[pair] = oid
    return PairOrbits(orbit_id, tuple(reps))
