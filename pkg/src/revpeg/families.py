"""Named graph families and shape detectors.

Families follow fixed labelings: paths and cycles are numbered along the
line, stars put the center on vertex 1, double stars put the two centers on
1 and 2, and the claw-with-subdivided-edge graph H uses 1..5 for a..e with
edges 1-3, 2-3, 3-4, 4-5.
"""

from __future__ import annotations

from .errors import ValidationError
from .model import Graph, is_connected


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValidationError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: center 1 joined to 2..n."""
    if n < 2:
        raise ValidationError(f"star needs n >= 2, got {n}")
    return Graph(n, [(1, v) for v in range(2, n + 1)])


def double_star(left: int, right: int) -> Graph:
    """Centers 1 and 2 joined by an edge; `left` pendants on 1, `right` on 2."""
    if left < 0 or right < 0:
        raise ValidationError("pendant counts must be non-negative")
    n = 2 + left + right
    edges = [(1, 2)]
    edges += [(1, 2 + i) for i in range(1, left + 1)]
    edges += [(2, 2 + left + i) for i in range(1, right + 1)]
    return Graph(n, edges)


def h_graph() -> Graph:
    """The claw with one subdivided edge, on vertices a..e = 1..5."""
    return Graph(5, [(1, 3), (2, 3), (3, 4), (4, 5)])


def paw_graph() -> Graph:
    """Triangle 1-2-3 with pendant 4 attached to 3."""
    return Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])


def is_star_shape(g: Graph) -> bool:
    """K_{1,n-1} with n >= 3 under any labeling."""
    if g.n < 3 or len(g.edges) != g.n - 1:
        return False
    return g.max_degree() == g.n - 1


def path_order(g: Graph) -> list[int] | None:
    """Vertices of g in line order if g is a path, else None.

    Starts from the smaller endpoint, so the result is deterministic.
    """
    if g.n == 1:
        return [1] if not g.edges else None
    if len(g.edges) != g.n - 1:
        return None
    ends = [v for v in g.vertices() if g.degree(v) == 1]
    if len(ends) != 2 or any(g.degree(v) != 2 for v in g.vertices() if v not in ends):
        return None
    order = [min(ends)]
    prev = 0
    while len(order) < g.n:
        nxt = [w for w in g.neighbors(order[-1]) if w != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order if len(set(order)) == g.n else None


def cycle_order(g: Graph) -> list[int] | None:
    """Vertices of g in cyclic order if g is a cycle, else None.

    Starts at vertex 1 and turns toward its smaller neighbor.
    """
    if g.n < 3 or len(g.edges) != g.n:
        return None
    if any(g.degree(v) != 2 for v in g.vertices()):
        return None
    if not is_connected(g):
        return None
    order = [1, min(g.neighbors(1))]
    while len(order) < g.n:
        a, b = order[-2], order[-1]
        nxt = [w for w in g.neighbors(b) if w != a]
        if len(nxt) != 1:
            return None
        order.append(nxt[0])
    return order
