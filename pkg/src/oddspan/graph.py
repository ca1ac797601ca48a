"""Immutable simple graphs stored as bit rows.

Row ``v`` of a :class:`Graph` is a Python int whose bit ``u`` is set iff
``u`` and ``v`` are adjacent.  Python ints are arbitrary width, so a row is a
bitset of any size; the 512 vertex cap exists to keep rows a handful of
machine words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512


class GraphError(ValueError):
    """Raised for malformed graph input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(rows) != n:
            raise GraphError("row count does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        self._n = n
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> Graph:
        # skips validation; callers guarantee symmetry and no loops
        g = object.__new__(cls)
        g._n = n
        g._rows = tuple(rows)
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self._rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self._rows]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._rows[u] >> (u + 1) << (u + 1))]

    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            acc = 0
            for u in bits(row):
                acc |= 1 << perm[u]
            rows[perm[v]] = acc
        return Graph._trusted(self._n, rows)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``, renumbered in ascending order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        mask = 0
        for v in keep:
            mask |= 1 << v
        rows = []
        for v in keep:
            acc = 0
            for u in bits(self._rows[v] & mask):
                acc |= 1 << index[u]
            rows.append(acc)
        return Graph._trusted(len(keep), rows)

    def add_vertex(self, neighborhood: int) -> Graph:
        """Append vertex ``n`` adjacent to the vertices in bitmask ``neighborhood``."""
        n = self._n
        if neighborhood >> n:
            raise GraphError("neighborhood references a missing vertex")
        rows = [r | (1 << n) if neighborhood >> v & 1 else r for v, r in enumerate(self._rows)]
        rows.append(neighborhood)
        return Graph._trusted(n + 1, rows)

    def with_edges(self, added: Iterable[tuple[int, int]] = (), removed: Iterable[tuple[int, int]] = ()) -> Graph:
        rows = list(self._rows)
        for u, v in removed:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in added:
            _check_pair(self._n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._trusted(self._n, rows)

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self._rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(bits(comp)))
        return out


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"self-loop at {u}")


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


@dataclass(frozen=True)
class Bipartition:
    part_a: frozenset[int]
    part_b: frozenset[int]

    def is_valid_for(self, g: Graph) -> bool:
        if self.part_a & self.part_b or len(self.part_a) + len(self.part_b) != g.n:
            return False
        return all((u in self.part_a) != (v in self.part_a) for u, v in g.edges())


def bipartition_or_odd_cycle(g: Graph) -> Bipartition | list[int]:
    """Two-colour ``g`` by BFS layers.

    Returns a :class:`Bipartition`, or a simple odd cycle (vertex sequence)
    closed by the first edge found inside a BFS layer.
    """
    depth = [-1] * g.n
    parent = [-1] * g.n
    rows = g.rows
    for root in range(g.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(rows[v]):
                if depth[u] < 0:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif depth[u] == depth[v]:
                    return _close_layer_edge(v, u, parent)
    side_a = frozenset(v for v in range(g.n) if depth[v] % 2 == 0)
    return Bipartition(side_a, frozenset(range(g.n)) - side_a)


def _close_layer_edge(v: int, u: int, parent: list[int]) -> list[int]:
    # v and u sit at equal depth; walk both up to their common ancestor
    left, right = [v], [u]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return left + right[-2::-1]


def is_bipartite(g: Graph) -> Bipartition | None:
    result = bipartition_or_odd_cycle(g)
    return result if isinstance(result, Bipartition) else None


def blow_up(g: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``v`` by an independent set of ``sizes[v]`` vertices.

    Copies of ``v`` are numbered consecutively, in vertex order.
    """
    if len(sizes) != g.n:
        raise GraphError(f"expected {g.n} part sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    total = offsets[-1]
    if total > MAX_VERTICES:
        raise GraphError(f"blow-up has {total} vertices, cap is {MAX_VERTICES}")
    part_mask = [((1 << sizes[v]) - 1) << offsets[v] for v in range(g.n)]
    rows = [0] * total
    for v in range(g.n):
        joined = 0
        for u in bits(g.rows[v]):
            joined |= part_mask[u]
        for x in range(offsets[v], offsets[v + 1]):
            rows[x] = joined
    return Graph._trusted(total, rows)


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists distinct vertices forming a cycle of ``g``."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.has_edge(cycle[i - 1], cycle[i]) for i in range(len(cycle)))


def biconnected_components(g: Graph) -> tuple[list[list[int]], set[int]]:
    """Blocks (as sorted vertex lists) and cut vertices, by iterative Tarjan.

    Isolated vertices belong to no block; a bridge is a two-vertex block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    cuts: set[int] = set()
    clock = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, bits(g.rows[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, bits(g.rows[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (u, v):
                        break
                blocks.append(sorted(comp))
                if u != root:
                    cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts
