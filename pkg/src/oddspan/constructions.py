"""Named graphs: Turán graphs, complete bipartite graphs, cycles, and the
two extremal families for odd-cycle-free bipartiteness thresholds.

BC and Häggkvist graphs number the spine vertices first (0..s-1), then the
K_{t,t} blocks in spine order.  Inside block ``i`` the spine vertex ``i`` is
on the A side together with ``t-1`` fresh vertices; the B side follows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, blow_up, graph_from_edges


def turan_graph(n: int, r: int) -> Graph:
    if n < 1 or r < 1:
        raise GraphError("turan_graph needs n >= 1 and r >= 1")
    if r > n:
        raise GraphError(f"turan_graph needs r <= n, got r={r}, n={n}")
    return blow_up(complete_graph(r), turan_part_sizes(n, r))


def turan_part_sizes(n: int, r: int) -> list[int]:
    q, extra = divmod(n, r)
    return [q + 1] * extra + [q] * (r - extra)


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete_bipartite needs a, b >= 1")
    return graph_from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {m}")
    return graph_from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(p: int) -> Graph:
    return graph_from_edges(p, [(i, i + 1) for i in range(p - 1)])


def balanced_cycle_blowup(m: int, t: int) -> Graph:
    """C_m with every vertex replaced by an independent set of size ``t``."""
    if t < 1:
        raise GraphError("part size must be positive")
    return blow_up(cycle_graph(m), [t] * m)


def _spined_blocks(spine_edges: list[tuple[int, int]], s: int, t: int) -> Graph:
    edges = list(spine_edges)
    nxt = s
    for i in range(s):
        side_a = [i] + list(range(nxt, nxt + t - 1))
        nxt += t - 1
        side_b = list(range(nxt, nxt + t))
        nxt += t
        edges.extend((a, b) for a in side_a for b in side_b)
    return graph_from_edges(nxt, edges)


def bc_graph(ell: int, t: int) -> Graph:
    """2ℓ+1 disjoint K_{t,t} whose selected vertices form a (2ℓ+1)-cycle."""
    if ell < 1 or t < 1:
        raise GraphError("bc_graph needs ell >= 1 and t >= 1")
    s = 2 * ell + 1
    return _spined_blocks([(i, (i + 1) % s) for i in range(s)], s, t)


def haggkvist_graph(t: int) -> Graph:
    if t < 1:
        raise GraphError("haggkvist_graph needs t >= 1")
    return _spined_blocks([(0, 1), (1, 2), (0, 2)], 3, t)


def bc_graph_on(n: int, ell: int) -> Graph:
    """BC_{2ℓ+1}(n); ``n`` must be a multiple of 2(2ℓ+1)."""
    if n % (2 * (2 * ell + 1)):
        raise GraphError(f"BC_{2 * ell + 1}(n) needs 2(2ell+1) | n, got n={n}")
    return bc_graph(ell, n // (2 * (2 * ell + 1)))


def cycle_blowup_on(n: int, m: int) -> Graph:
    """C_m(n/m); ``n`` must be a multiple of ``m``."""
    if n % m:
        raise GraphError(f"C_{m}(n/{m}) needs {m} | n, got n={n}")
    return balanced_cycle_blowup(m, n // m)


KINDS = ("turan", "complete-bipartite", "cycle", "cycle-blowup", "bc", "haggkvist")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown construction kind {self.kind!r}")

    def build(self) -> Graph:
        p = self.params
        try:
            if self.kind == "turan":
                return turan_graph(p["n"], p["r"])
            if self.kind == "complete-bipartite":
                return complete_bipartite(p["a"], p["b"])
            if self.kind == "cycle":
                return cycle_graph(p["m"])
            if self.kind == "cycle-blowup":
                if "t" in p:
                    return balanced_cycle_blowup(p["m"], p["t"])
                return cycle_blowup_on(p["n"], p["m"])
            if self.kind == "bc":
                if "t" in p:
                    return bc_graph(p["ell"], p["t"])
                return bc_graph_on(p["n"], p["ell"])
            if "t" in p:
                return haggkvist_graph(p["t"])
            if p["n"] % 6:
                raise GraphError(f"Häggkvist graph needs 6 | n, got n={p['n']}")
            return haggkvist_graph(p["n"] // 6)
        except KeyError as exc:
            raise GraphError(f"{self.kind} construction is missing parameter {exc.args[0]!r}") from None
