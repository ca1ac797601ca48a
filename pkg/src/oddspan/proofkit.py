"""Reusable ingredients of the minimum-degree argument, made executable.

* dense-core extraction (a subgraph with minimum degree at least m/n),
* longest paths and the Erdős–Gallai edge bound for path-free graphs,
* paths of prescribed order and end sides in a bipartite host,
* recognizers for balanced cycle blow-ups and BC graphs.

Ties are always broken by ascending vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, biconnected_components, bits, is_bipartite

LONGEST_PATH_CAP = 20


def min_degree_core(g: Graph) -> list[int]:
    """Vertices kept by deleting, in ascending order, any vertex whose current
    degree d satisfies d * n < m; n and m are those of the input and stay fixed.
    """
    m = g.edge_count()
    if m == 0:
        raise GraphError("dense-core extraction needs at least one edge")
    n = g.n
    rows = g.rows
    alive = g.vertex_mask()
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if (rows[v] & alive).bit_count() * n < m:
                alive &= ~(1 << v)
                changed = True
    # nonempty: each deletion removes fewer than m/n edges
    assert alive
    return list(bits(alive))


def min_degree_subgraph(g: Graph) -> Graph:
    return g.induced(min_degree_core(g))


def longest_path_order(g: Graph) -> int:
    """Number of vertices on a longest simple path.

    Subset DP: ``ends[mask]`` holds the possible last vertices of paths whose
    vertex set is exactly ``mask``.
    """
    n = g.n
    if n == 0:
        raise GraphError("longest path of the empty graph is undefined")
    if n > LONGEST_PATH_CAP:
        raise GraphError(f"longest_path_order is capped at {LONGEST_PATH_CAP} vertices")
    rows = g.rows
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    best = 1
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        size = mask.bit_count()
        if size > best:
            best = size
            if best == n:
                break
        for v in bits(e):
            for w in bits(rows[v] & ~mask):
                ends[mask | 1 << w] |= 1 << w
    return best


def erdos_gallai_holds(g: Graph, k: int) -> bool:
    """If ``g`` has no path on k+1 vertices then 2 e(g) <= (k-1) n."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if longest_path_order(g) > k:
        return True
    return 2 * g.edge_count() <= (k - 1) * g.n


@dataclass(frozen=True)
class PathRequest:
    host: Graph
    side_x: frozenset[int]
    side_y: frozenset[int]
    order: int
    end_a: str  # "X" or "Y"
    end_b: str

    def __post_init__(self):
        if self.end_a not in ("X", "Y") or self.end_b not in ("X", "Y"):
            raise ValueError("path ends must be on side 'X' or 'Y'")
        if self.side_x & self.side_y:
            raise ValueError("sides X and Y must be disjoint")
        if self.order < 1:
            raise ValueError("path order must be positive")
        if (self.end_a == self.end_b) != (self.order % 2 == 1):
            raise ValueError(
                f"parity violation: order {self.order} with ends on {self.end_a} and {self.end_b}"
            )


def greedy_bipartite_path(req: PathRequest) -> list[int] | None:
    """Path on ``req.order`` vertices alternating between the two sides.

    First tries pure greedy extension (lowest unvisited neighbour on the other
    side) from the lowest start, then exhaustive backtracking over all starts.
    """
    g = req.host
    mask_x = sum(1 << v for v in req.side_x)
    mask_y = sum(1 << v for v in req.side_y)
    start_mask, other_mask = (mask_x, mask_y) if req.end_a == "X" else (mask_y, mask_x)
    p = req.order
    if start_mask.bit_count() < (p + 1) // 2 or other_mask.bit_count() < p // 2:
        return None
    side_masks = (start_mask, other_mask)
    rows = g.rows

    first = next(bits(start_mask), None)
    if first is None:
        return None
    path = [first]
    used = 1 << first
    while len(path) < p:
        nxt = rows[path[-1]] & side_masks[len(path) & 1] & ~used
        if not nxt:
            break
        w = (nxt & -nxt).bit_length() - 1
        path.append(w)
        used |= 1 << w
    if len(path) == p:
        return path

    def extend(path, used):
        if len(path) == p:
            return True
        for w in bits(rows[path[-1]] & side_masks[len(path) & 1] & ~used):
            path.append(w)
            if extend(path, used | 1 << w):
                return True
            path.pop()
        return False

    for s in bits(start_mask):
        path = [s]
        if extend(path, 1 << s):
            return path
    return None


def recognize_cycle_blowup(g: Graph) -> tuple[int, list[int]] | None:
    """``(m, sizes)`` if ``g`` is a blow-up of C_m with m >= 5, else ``None``.

    Vertices with equal open neighbourhoods form the classes; the quotient on
    classes must be a single cycle.  Sizes run around the cycle starting at
    the class of vertex 0, towards the neighbouring class with the smaller
    least vertex.
    """
    if g.n == 0:
        return None
    rows = g.rows
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        if rows[v] == 0:
            return None
        classes.setdefault(rows[v], []).append(v)
    members = list(classes.values())
    m = len(members)
    if m < 5:
        return None
    class_of = {}
    for c, vs in enumerate(members):
        for v in vs:
            class_of[v] = c
    quotient = []
    for vs in members:
        nbr = sorted({class_of[u] for u in bits(rows[vs[0]])}, key=lambda c: members[c][0])
        if len(nbr) != 2:
            return None
        quotient.append(nbr)
    order = [class_of[0]]
    prev, cur = class_of[0], quotient[class_of[0]][0]
    while cur != order[0]:
        order.append(cur)
        a, b = quotient[cur]
        prev, cur = cur, (b if a == prev else a)
        if len(order) > m:
            return None
    if len(order) != m:
        return None
    return m, [len(members[c]) for c in order]


def _complete_bipartite_side(g: Graph, block: list[int]) -> int | None:
    """t if the induced graph on ``block`` is K_{t,t}, else None."""
    h = g.induced(block)
    parts = is_bipartite(h)
    if parts is None:
        return None
    a, b = len(parts.part_a), len(parts.part_b)
    if a != b or h.edge_count() != a * b:
        return None
    return a


def recognize_bc_graph(g: Graph, min_ell: int = 1) -> tuple[int, int] | None:
    """``(ell, t)`` if ``g`` is BC_{2ell+1} with K_{t,t} blocks, else ``None``.

    BC_3 is the Häggkvist graph; pass ``min_ell=2`` to reject it, as the
    BC equality case of the threshold theorem does.

    Structural check on the block/cut-vertex decomposition: one odd-cycle
    block (the spine), every spine vertex a cut vertex, and one K_{t,t}
    block hanging off each spine vertex with no further cut vertices.
    """
    n = g.n
    if n < 6 or len(g.components()) != 1:
        return None
    blocks, cuts = biconnected_components(g)
    spine = None
    for block in blocks:
        h = g.induced(block)
        if len(block) % 2 == 1 and len(block) >= 3 and all(d == 2 for d in h.degrees()):
            if spine is not None:
                return None
            spine = block
    if spine is None:
        return None
    s = len(spine)
    if s < 2 * min_ell + 1:
        return None
    spine_set = set(spine)
    if cuts != spine_set or len(blocks) != s + 1:
        return None
    t = None
    attached = set()
    for block in blocks:
        if block is spine:
            continue
        cut_here = spine_set.intersection(block)
        if len(cut_here) != 1:
            return None
        side = _complete_bipartite_side(g, block)
        if side is None or (t is not None and side != t):
            return None
        t = side
        attached |= cut_here
    if attached != spine_set or n != 2 * s * t:
        return None
    return (s - 1) // 2, t
