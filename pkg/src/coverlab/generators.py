"""Deterministic constructors for the named graph families.

Every generator documents its vertex index layout so that certificates
referring to vertex indices are reproducible run to run.
"""

from __future__ import annotations

import random

from .errors import BadParameter, ParseError
from .graph import Graph, build_graph, is_connected


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameter("complete: n >= 1 required")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)],
                       label=f"K_{n}")


def empty_complement(n: int) -> Graph:
    if n < 1:
        raise BadParameter("empty: n >= 1 required")
    return build_graph(n, [], label=f"Kbar_{n}")


def star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    if n < 1:
        raise BadParameter("star: n >= 1 required")
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)], label=f"K_1,{n}")


def path(n: int) -> Graph:
    """P_n: vertices 0..n-1 in path order."""
    if n < 1:
        raise BadParameter("path: n >= 1 required")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], label=f"P_{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter("cycle: n >= 3 required")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], label=f"C_{n}")


# -- spider-type forbidden graphs --------------------------------------
#
# Layout convention for the S/F families: the x-block first, then the
# y-block, then the z-block, each in subscript order.  (Chosen from the
# formal edge lists, not the figure drawings.)


def s_star(n: int) -> Graph:
    """S*_n: x_1=0, y_i=i, z_i=n+i.  Edges x_1 y_i and y_i z_i."""
    if n < 2:
        raise BadParameter("sstar: n >= 2 required")
    edges = []
    for i in range(1, n + 1):
        edges.append((0, i))
        edges.append((i, n + i))
    return build_graph(2 * n + 1, edges, label=f"S*_{n}")


def s_tilde(n: int) -> Graph:
    """S~_n: S*_n plus the n edges x_1 z_i."""
    if n < 2:
        raise BadParameter("stilde: n >= 2 required")
    g = s_star(n)
    edges = g.edges() + [(0, n + i) for i in range(1, n + 1)]
    return build_graph(2 * n + 1, edges, label=f"S~_{n}")


def f1(n: int) -> Graph:
    """F^(1)_n: x_1=0, x_2=1, y_i=1+i, z_i=1+n+i.

    Edges x_1 x_2, x_1 y_1, x_1 z_1 plus the two paths on the y- and
    z-blocks.
    """
    if n < 2:
        raise BadParameter("f1: n >= 2 required")
    y = lambda i: 1 + i
    z = lambda i: 1 + n + i
    edges = [(0, 1), (0, y(1)), (0, z(1))]
    for i in range(1, n):
        edges.append((y(i), y(i + 1)))
        edges.append((z(i), z(i + 1)))
    return build_graph(2 * n + 2, edges, label=f"F1_{n}")


def f2(n: int) -> Graph:
    """F^(2)_n: x_1=0, y_i=i, z_i=n+i; triangle x_1 y_1 z_1 plus two paths."""
    if n < 2:
        raise BadParameter("f2: n >= 2 required")
    y = lambda i: i
    z = lambda i: n + i
    edges = [(0, y(1)), (0, z(1)), (y(1), z(1))]
    for i in range(1, n):
        edges.append((y(i), y(i + 1)))
        edges.append((z(i), z(i + 1)))
    return build_graph(2 * n + 1, edges, label=f"F2_{n}")


def f3(n: int) -> Graph:
    """F^(3)_n: x_i=i-1, y_i=n+i-1, z_i=2n+i-1.

    Every x_i is adjacent to y_1 and z_1; the y- and z-blocks are paths.
    """
    if n < 2:
        raise BadParameter("f3: n >= 2 required")
    y = lambda i: n + i - 1
    z = lambda i: 2 * n + i - 1
    edges = []
    for i in range(n):
        edges.append((i, y(1)))
        edges.append((i, z(1)))
    for i in range(1, n):
        edges.append((y(i), y(i + 1)))
        edges.append((z(i), z(i + 1)))
    return build_graph(3 * n, edges, label=f"F3_{n}")


def f4(n: int) -> Graph:
    """F^(4)_n: F^(3)_n with x_3..x_n deleted.  x_1=0, x_2=1, y_i=1+i, z_i=1+n+i."""
    if n < 2:
        raise BadParameter("f4: n >= 2 required")
    y = lambda i: 1 + i
    z = lambda i: 1 + n + i
    edges = []
    for x in (0, 1):
        edges.append((x, y(1)))
        edges.append((x, z(1)))
    for i in range(1, n):
        edges.append((y(i), y(i + 1)))
        edges.append((z(i), z(i + 1)))
    return build_graph(2 * n + 2, edges, label=f"F4_{n}")


def f5(n: int) -> Graph:
    """F^(5)_n: F^(4)_n plus the edge x_1 x_2."""
    if n < 2:
        raise BadParameter("f5: n >= 2 required")
    g = f4(n)
    return build_graph(g.order, g.edges() + [(0, 1)], label=f"F5_{n}")


def k_star(n: int) -> Graph:
    """K*_n: K_n on 0..n-1 with pendant i+n attached to each vertex i."""
    if n < 1:
        raise BadParameter("kstar: n >= 1 required")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges, label=f"K*_{n}")


# -- chained extremal families -----------------------------------------
#
# Layout for H^(i)_{m,n}: the m paths Q_1..Q_m concatenated first
# (u^(j)_i at index (i-1)*n + (j-1)), then the connector vertices in
# definition order.


def _q_paths(m: int, n: int) -> tuple[list[tuple[int, int]], "function"]:
    u = lambda i, j: (i - 1) * n + (j - 1)
    edges = []
    for i in range(1, m + 1):
        for j in range(1, n):
            edges.append((u(i, j), u(i, j + 1)))
    return edges, u


def _check_h_params(name: str, m: int, n: int) -> None:
    if m < 2 or n < 3:
        raise BadParameter(f"{name}: m >= 2 and n >= 3 required")


def h1(m: int, n: int) -> Graph:
    """H^(1)_{m,n}: Q-paths, then v_1,w_1,...,v_{m-1},w_{m-1}."""
    _check_h_params("h1", m, n)
    edges, u = _q_paths(m, n)
    base = m * n
    for i in range(1, m):
        v = base + 2 * (i - 1)
        w = v + 1
        edges += [(v, w), (v, u(i, n)), (v, u(i + 1, 1))]
    return build_graph(m * n + 2 * (m - 1), edges, label=f"H1_{m},{n}")


def h2(m: int, n: int) -> Graph:
    """H^(2)_{m,n}: Q-paths, then v_1..v_{m-1}; junctions are triangles."""
    _check_h_params("h2", m, n)
    edges, u = _q_paths(m, n)
    base = m * n
    for i in range(1, m):
        v = base + (i - 1)
        edges += [(v, u(i, n)), (v, u(i + 1, 1)), (u(i, n), u(i + 1, 1))]
    return build_graph(m * n + (m - 1), edges, label=f"H2_{m},{n}")


def h3(m: int, n: int) -> Graph:
    """H^(3)_{m,n}: Q-paths, then v_{i,j} at base + (i-1)*m + (j-1)."""
    _check_h_params("h3", m, n)
    edges, u = _q_paths(m, n)
    base = m * n
    for i in range(1, m):
        for j in range(1, m + 1):
            v = base + (i - 1) * m + (j - 1)
            edges += [(v, u(i, n)), (v, u(i + 1, 1))]
    return build_graph(m * n + (m - 1) * m, edges, label=f"H3_{m},{n}")


def h4(m: int, n: int) -> Graph:
    """H^(4)_{m,n}: H^(3) keeping only v_{i,1},v_{i,2} (at base+2(i-1)+{0,1})."""
    _check_h_params("h4", m, n)
    edges, u = _q_paths(m, n)
    base = m * n
    for i in range(1, m):
        for j in (0, 1):
            v = base + 2 * (i - 1) + j
            edges += [(v, u(i, n)), (v, u(i + 1, 1))]
    return build_graph(m * n + 2 * (m - 1), edges, label=f"H4_{m},{n}")


def h5(m: int, n: int) -> Graph:
    """H^(5)_{m,n}: H^(4) plus the m-1 edges v_{i,1} v_{i,2}."""
    _check_h_params("h5", m, n)
    g = h4(m, n)
    base = m * n
    extra = [(base + 2 * (i - 1), base + 2 * (i - 1) + 1) for i in range(1, m)]
    return build_graph(g.order, g.edges() + extra, label=f"H5_{m},{n}")


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.order))
    return Graph(g.order, rows,
                 label=None if g.label is None else f"co-{g.label}")


def random_connected(order: int, p: float, rng: random.Random) -> Graph:
    """A connected G(order, p) sample (rejection sampling)."""
    if order < 1:
        raise BadParameter("order >= 1 required")
    while True:
        edges = [(i, j) for i in range(order) for j in range(i + 1, order)
                 if rng.random() < p]
        g = build_graph(order, edges)
        if is_connected(g):
            return g


_ONE_PARAM = {
    "complete": complete, "k": complete,
    "kbar": empty_complement, "empty": empty_complement,
    "star": star, "k1": star,
    "path": path, "p": path,
    "cycle": cycle, "c": cycle,
    "sstar": s_star, "stilde": s_tilde,
    "f1": f1, "f2": f2, "f3": f3, "f4": f4, "f5": f5,
    "kstar": k_star,
}

_TWO_PARAM = {"h1": h1, "h2": h2, "h3": h3, "h4": h4, "h5": h5}


def generate(spec: str) -> Graph:
    """Build a named graph from a spec string like "sstar:3" or "h1:2,3"."""
    if ":" not in spec:
        raise ParseError(f"bad graph spec {spec!r}: expected family:params")
    family, _, params = spec.partition(":")
    family = family.strip().lower()
    try:
        args = [int(t) for t in params.split(",")]
    except ValueError:
        raise ParseError(f"bad parameters in graph spec {spec!r}") from None
    if family in _ONE_PARAM:
        if len(args) != 1:
            raise ParseError(f"{family} takes one parameter")
        return _ONE_PARAM[family](args[0])
    if family in _TWO_PARAM:
        if len(args) != 2:
            raise ParseError(f"{family} takes two parameters (m,n)")
        return _TWO_PARAM[family](args[0], args[1])
    raise ParseError(f"unknown graph family {family!r}")
