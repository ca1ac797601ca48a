"""Odd girth, exact-length cycle detection and cycle spectra.

Every positive answer carries a witness: a list of distinct vertices
``v0 .. v_{L-1}`` with ``v_{i-1} ~ v_i`` and ``v_{L-1} ~ v0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, biconnected_components, bits, is_bipartite


def shortest_odd_cycle(g: Graph) -> tuple[int, list[int]] | None:
    """Odd girth with a witness cycle, or ``None`` when ``g`` is bipartite.

    For each start vertex, a layered BFS on the bipartite double cover finds
    the shortest odd closed walk through it.  The shortest such walk over all
    starts cannot repeat a vertex, so it is a simple cycle.
    """
    if is_bipartite(g) is not None:
        return None
    rows = g.rows
    best_len = g.n + 1
    best_start = -1
    best_layers = None
    for s in range(g.n):
        # layers[d] = (vertices reachable by a walk of length d from s)
        layers = [1 << s]
        seen = [1 << s, 0]  # by walk parity
        frontier = 1 << s
        d = 0
        while frontier and d + 1 < best_len:
            d += 1
            reach = 0
            for v in bits(frontier):
                reach |= rows[v]
            frontier = reach & ~seen[d & 1]
            seen[d & 1] |= frontier
            layers.append(frontier)
            if d & 1 and frontier >> s & 1:
                best_len, best_start, best_layers = d, s, layers
                break
    return best_len, _walk_back(rows, best_start, best_layers)


def _walk_back(rows, s, layers):
    # step from s at the last layer down to layer 1; the result is s, v_{L-1}, ..., v_1
    walk = [s]
    cur = s
    for d in range(len(layers) - 2, 0, -1):
        cur = next(bits(rows[cur] & layers[d]))
        walk.append(cur)
    return [s] + walk[:0:-1]


def _search_block(rows, block_mask, length):
    """Find a cycle of exactly ``length`` vertices inside ``block_mask``."""
    for s in bits(block_mask):
        allowed = block_mask & ~((2 << s) - 1)
        if (rows[s] & allowed).bit_count() < 2:
            continue
        # BFS distance back to s inside allowed + {s}
        dist = {s: 0}
        frontier = 1 << s
        reached = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & allowed & ~reached
            reached |= frontier
            for v in bits(frontier):
                dist[v] = d
        if (reached & allowed).bit_count() + 1 < length:
            continue
        path = [s]
        found = _extend(rows, s, allowed, 1 << s, path, length, dist)
        if found:
            return path
    return None


def _extend(rows, s, allowed, visited, path, length, dist):
    cur = path[-1]
    if len(path) == length:
        return bool(rows[cur] >> s & 1)
    remaining = length - len(path)  # edges from the next vertex back to s
    candidates = rows[cur] & allowed & ~visited
    seen_rows = set()
    for w in bits(candidates):
        if dist.get(w, length) > remaining:
            continue
        if rows[w] in seen_rows:
            continue
        seen_rows.add(rows[w])
        path.append(w)
        if _extend(rows, s, allowed, visited | (1 << w), path, length, dist):
            return True
        path.pop()
    return False


def _conflict_edges(rows, block_mask):
    """Edges whose removal leaves the block bipartite; every odd cycle uses one.

    Starts from BFS-layer parity, then flips any vertex with more neighbours
    of its own colour than of the other until none is left.  That keeps the
    set small for nearly bipartite blocks, where it decides the search cost.
    """
    root = (block_mask & -block_mask).bit_length() - 1
    colour = 0  # mask of colour-1 vertices
    frontier = 1 << root
    seen = frontier
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & block_mask & ~seen
        seen |= frontier
        if level & 1:
            colour |= frontier
    changed = True
    while changed:
        changed = False
        for v in bits(block_mask):
            nbrs = rows[v] & block_mask
            same = nbrs & colour if colour >> v & 1 else nbrs & ~colour
            if 2 * same.bit_count() > nbrs.bit_count():
                colour ^= 1 << v
                changed = True
    out = []
    for u in bits(block_mask):
        for v in bits(rows[u] & block_mask & ~((2 << u) - 1)):
            if (colour >> u & 1) == (colour >> v & 1):
                out.append((u, v))
    return out


def _path_between(rows, allowed, u, v, edges):
    """Simple u-v path with exactly ``edges`` edges inside ``allowed``.

    ``dist[p][x]`` is the shortest walk of parity ``p`` from x to v; a path
    with ``left`` edges to go needs a walk of that parity no longer than it.
    """
    dist = ({v: 0}, {})
    frontier = [1 << v, 0]
    reached = [1 << v, 0]
    d = 0
    while frontier[0] or frontier[1]:
        d += 1
        p = d & 1
        nxt = 0
        for x in bits(frontier[1 - p]):
            nxt |= rows[x]
        new = nxt & allowed & ~reached[p]
        reached[p] |= new
        frontier = [0, 0]
        frontier[p] = new
        for x in bits(new):
            dist[p][x] = d
    if dist[edges & 1].get(u, edges + 1) > edges or (reached[0] | reached[1]).bit_count() < edges + 1:
        return None
    inner = allowed & ~(1 << v)
    path = [u]

    def extend(cur, visited, left):
        if left == 1:
            return bool(rows[cur] >> v & 1)
        need = dist[(left - 1) & 1]
        seen_rows = set()
        for w in bits(rows[cur] & inner & ~visited):
            if need.get(w, left) >= left or rows[w] in seen_rows:
                continue
            seen_rows.add(rows[w])
            path.append(w)
            if extend(w, visited | 1 << w, left - 1):
                return True
            path.pop()
        return False

    if extend(u, 1 << u, edges):
        return path + [v]
    return None


def _odd_cycle_in_block(rows, block_mask, length):
    rows = list(rows)
    for u, v in _conflict_edges(rows, block_mask):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        found = _path_between(rows, block_mask, u, v, length - 1)
        if found:
            return found
    return None


def has_cycle_of_length(g: Graph, length: int) -> list[int] | None:
    """Witness cycle with exactly ``length`` vertices, or ``None``.

    Exact depth-bounded search run per biconnected block, pruned whenever
    the closing vertex is out of reach in the remaining budget; vertices
    with equal open neighbourhoods are interchangeable and tried once per
    step.  Odd lengths are searched as paths closing one conflict edge of a
    fixed 2-colouring at a time, each edge dropped once it is done; even
    lengths start from the least vertex of the cycle.
    """
    if length < 3 or length > g.n:
        return None
    rows = g.rows
    blocks, _ = biconnected_components(g)
    for block in blocks:
        if len(block) < length:
            continue
        mask = 0
        for v in block:
            mask |= 1 << v
        if length & 1:
            found = _odd_cycle_in_block(rows, mask, length)
        else:
            found = _search_block(rows, mask, length)
        if found:
            return found
    return None


@dataclass(frozen=True)
class CycleSpectrum:
    present: frozenset[int]
    cap: int

    @property
    def odd(self) -> frozenset[int]:
        return frozenset(x for x in self.present if x & 1)

    @property
    def even(self) -> frozenset[int]:
        return frozenset(x for x in self.present if not x & 1)


def cycle_spectrum(g: Graph, cap: int | None = None) -> CycleSpectrum:
    if cap is None:
        cap = g.n
    cap = min(cap, g.n)
    present = frozenset(L for L in range(3, cap + 1) if has_cycle_of_length(g, L) is not None)
    return CycleSpectrum(present, cap)


def odd_girth(g: Graph) -> int | None:
    found = shortest_odd_cycle(g)
    return None if found is None else found[0]
