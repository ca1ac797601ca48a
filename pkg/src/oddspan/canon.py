"""Canonical labelling by partition refinement and individualization.

The search tree is the usual one: refine the unit partition to an equitable
one, individualize each vertex of the first non-singleton cell in turn, and
recurse.  Leaves are discrete partitions; the canonical form is the relabelled
graph with the lexicographically largest row tuple.  Automorphisms found when
two leaves give the same certificate prune sibling subtrees, and a leaf
matching the first leaf backjumps to the first-path node where it diverged.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, bits

ISOMORPHISM_CAP = 64


@dataclass(frozen=True)
class Canon:
    order: tuple[int, ...]  # order[p] is the vertex placed at position p
    certificate: tuple[int, ...]  # rows of the relabelled graph
    generators: tuple[tuple[int, ...], ...]  # automorphisms found, as vertex maps

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for p, v in enumerate(self.order):
            pos[v] = p
        return pos

    def graph(self) -> Graph:
        return Graph._trusted(len(self.order), self.certificate)

    def orbits(self) -> list[int]:
        """Orbit representative (smallest member) for each vertex."""
        return _orbit_roots(len(self.order), self.generators)


def _mask(cell) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(rows, cells, queue):
    while queue:
        splitter = queue.popleft()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for x in cell:
                groups.setdefault((rows[x] & splitter).bit_count(), []).append(x)
            if len(groups) == 1:
                out.append(cell)
                continue
            for key in sorted(groups):
                frag = groups[key]
                out.append(frag)
                queue.append(_mask(frag))
        cells = out
    return cells


def _orbit_roots(n, generators):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v, w in enumerate(gen):
            a, b = find(v), find(w)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.first_order = None
        self.first_cert = None
        self.first_prefix = None
        self.best_order = None
        self.best_cert = None
        self.generators: list[tuple[int, ...]] = []

    def _certificate(self, order):
        pos = [0] * self.n
        for p, v in enumerate(order):
            pos[v] = p
        cert = []
        for v in order:
            acc = 0
            for u in bits(self.rows[v]):
                acc |= 1 << pos[u]
            cert.append(acc)
        return tuple(cert)

    def _automorphism(self, order_a, order_b):
        gen = [0] * self.n
        for a, b in zip(order_a, order_b):
            gen[a] = b
        return tuple(gen)

    def _leaf(self, cells, prefix):
        order = tuple(c[0] for c in cells)
        cert = self._certificate(order)
        if self.first_cert is None:
            self.first_order = self.best_order = order
            self.first_cert = self.best_cert = cert
            self.first_prefix = list(prefix)
            return None
        if cert == self.first_cert:
            self.generators.append(self._automorphism(self.first_order, order))
            for level, (a, b) in enumerate(zip(prefix, self.first_prefix)):
                if a != b:
                    return level
            return None
        if cert == self.best_cert:
            self.generators.append(self._automorphism(self.best_order, order))
        elif cert > self.best_cert:
            self.best_cert = cert
            self.best_order = order
        return None

    def _pruned(self, v, explored, prefix):
        fixing = [g for g in self.generators if all(g[x] == x for x in prefix)]
        if not fixing:
            return False
        roots = _orbit_roots(self.n, fixing)
        return any(roots[v] == roots[w] for w in explored)

    def visit(self, cells, prefix):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self._leaf(cells, prefix)
        level = len(prefix)
        cell = cells[target]
        explored: list[int] = []
        for v in sorted(cell):
            if explored and self._pruned(v, explored, prefix):
                continue
            explored.append(v)
            rest = [x for x in cell if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child = _refine(self.rows, child, deque([1 << v]))
            prefix.append(v)
            jump = self.visit(child, prefix)
            prefix.pop()
            if jump is not None and jump < level:
                return jump
        return None


def canonical_form(g: Graph) -> Canon:
    if g.n == 0:
        return Canon((), (), ())
    search = _Search(g)
    cells = _refine(g.rows, [list(range(g.n))], deque([g.vertex_mask()]))
    search.visit(cells, [])
    return Canon(search.best_order, search.best_cert, tuple(search.generators))


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n > ISOMORPHISM_CAP or h.n > ISOMORPHISM_CAP:
        raise GraphError(f"isomorphism test is capped at {ISOMORPHISM_CAP} vertices")
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).certificate == canonical_form(h).certificate
