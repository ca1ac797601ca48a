"""Isomorph-free generation of small graphs by canonical augmentation.

A graph on j+1 vertices is produced from its parent on j vertices by adding
vertex j.  The child is kept only when the added vertex is equivalent to the
child's canonical deletion vertex: among vertices with the largest
(degree, neighbour-degree) key, the one placed last by the canonical
labelling.  Equivalence is first tested through automorphism orbits found by
the labelling, and otherwise by comparing the canonical forms of the two
one-vertex-deleted graphs.  Siblings from one parent are deduplicated by
certificate.  Each isomorphism class is then produced exactly once, from the
one parent isomorphic to its canonical deletion.

Family-freeness is hereditary, so it prunes every level.  The minimum degree
filter is checked at the last level only; earlier levels drop a graph when
some vertex could not reach the bound even if joined to every later vertex.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .canon import canonical_form
from .family import OddFamily
from .graph import Graph, GraphError, bits
from .graph6 import graph6_decode, graph6_encode

EXHAUSTIVE_CAP = 10
_SPLIT_LEVEL = 5


@dataclass(frozen=True)
class EnumSpec:
    n: int
    min_degree: int | None = None
    family: OddFamily | None = None

    def __post_init__(self):
        if not 0 <= self.n <= EXHAUSTIVE_CAP:
            raise GraphError(f"exhaustive enumeration is capped at n={EXHAUSTIVE_CAP}, got {self.n}")


def worker_count() -> int:
    env = os.environ.get("ODDSPAN_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _closes_cycle(rows, nbrs: int, length: int) -> bool:
    """Whether a new vertex joined to ``nbrs`` lies on a cycle of ``length``.

    That needs a path on length-1 vertices between two members of ``nbrs``.
    """
    edges_needed = length - 2

    def walk(cur, start, visited, steps):
        if steps == edges_needed:
            return bool(nbrs >> cur & 1) and cur > start
        for w in bits(rows[cur] & ~visited):
            if walk(w, start, visited | 1 << w, steps + 1):
                return True
        return False

    for a in bits(nbrs):
        if length == 3:
            if rows[a] & nbrs:
                return True
        elif walk(a, a, 1 << a, 0):
            return True
    return False


def _vertex_keys(rows):
    degs = [r.bit_count() for r in rows]
    return [(degs[v], sum(degs[u] for u in bits(rows[v]))) for v in range(len(rows))]


def _children(parent: Graph, spec: EnumSpec) -> list[Graph]:
    j = parent.n
    rows = parent.rows
    lengths = sorted(spec.family.lengths) if spec.family else []
    slack = spec.n - (j + 1)
    need = spec.min_degree or 0
    parent_cert = rows  # parents are always in canonical form
    seen: set[tuple[int, ...]] = set()
    out = []
    for nbrs in range(1 << j):
        if need:
            if nbrs.bit_count() + slack < need:
                continue
            if any(rows[x].bit_count() + (nbrs >> x & 1) + slack < need for x in range(j)):
                continue
        if any(_closes_cycle(rows, nbrs, L) for L in lengths if L <= j + 1):
            continue
        child = parent.add_vertex(nbrs)
        keys = _vertex_keys(child.rows)
        top = max(keys)
        if keys[j] != top:
            continue
        canon = canonical_form(child)
        pos = canon.position
        w_star = max((v for v in range(j + 1) if keys[v] == top), key=lambda v: pos[v])
        if w_star != j:
            roots = canon.orbits()
            if roots[w_star] != roots[j]:
                rest = [v for v in range(j + 1) if v != w_star]
                if canonical_form(child.induced(rest)).certificate != parent_cert:
                    continue
        if canon.certificate in seen:
            continue
        seen.add(canon.certificate)
        out.append(canon.graph())
    return out


def _descend(g: Graph, spec: EnumSpec) -> Iterator[Graph]:
    if g.n == spec.n:
        if not spec.min_degree or (g.n and min(r.bit_count() for r in g.rows) >= spec.min_degree):
            yield g
        return
    for child in _children(g, spec):
        yield from _descend(child, spec)


def _frontier(g: Graph, spec: EnumSpec, level: int) -> Iterator[Graph]:
    if g.n == level:
        yield g
        return
    for child in _children(g, spec):
        yield from _frontier(child, spec, level)


def _branch(args) -> list[bytes]:
    g6, spec = args
    return [graph6_encode(h) for h in _descend(graph6_decode(g6), spec)]


def enumerate_graphs(spec: EnumSpec, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class passing the filters.

    With ``workers > 1`` the subtrees below a fixed level are farmed out to
    processes; results are yielded in the same order as a sequential run.
    """
    root = Graph(0, [])
    if workers <= 1 or spec.n <= _SPLIT_LEVEL:
        yield from _descend(root, spec)
        return
    prefixes = [graph6_encode(g) for g in _frontier(root, spec, _SPLIT_LEVEL)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(_branch, [(p, spec) for p in prefixes]):
            for g6 in batch:
                yield graph6_decode(g6)
