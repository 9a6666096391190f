"""Algebraic certificates and closed-form path/cycle classification.

Four independent obstruction arguments live here:

* the star certificate (leaf-peg count is conserved, the center toggles);
* quaternion weights on paths, with vertex v weighted i/j/k by v mod 3;
* the lift of a cycle configuration onto the triple cycle, where each
  cycle move corresponds to three synchronized moves and the quaternion
  weight becomes move-invariant;
* the mod-3 binary weighting whose conservation blocks doubly-free
  solvability when all high-degree vertices sit at mutual distances
  divisible by 3.

The closed-form classifiers for paths and cycles package the resulting
start-hole/end-peg constraints; the exact oracle must reproduce them
verbatim, which the acceptance suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllDefined, PreconditionFailed
from .families import star_graph
from .model import Configuration, Graph, Move, apply_move, is_connected, legal_moves
from .oracle import Verdict
from .quaternion import I, J, K, Quaternion, q_product

# ---------------------------------------------------------------------------
# Quaternion weights on paths and lifted cycles
# ---------------------------------------------------------------------------

_WEIGHT_BY_RESIDUE = {1: I, 2: J, 0: K}


def vertex_weight(v: int) -> Quaternion:
    return _WEIGHT_BY_RESIDUE[v % 3]


def path_weight(n: int, c: Configuration) -> Quaternion:
    """Ordered product of peg weights on the path 1..n, smallest first."""
    if c.n != n:
        raise PreconditionFailed(f"configuration is on {c.n} vertices, expected {n}")
    return q_product(vertex_weight(v) for v in c.peg_vertices())


def lifted_cycle_weight(n: int, c: Configuration) -> Quaternion:
    """Weight of the configuration repeated three times around a 3n-cycle.

    Each peg x becomes pegs x, x+n, x+2n; a single move on the n-cycle maps
    to three synchronized moves on the 3n-cycle, which is what makes this
    weight invariant even though n itself may not be divisible by 3.
    """
    if c.n != n:
        raise PreconditionFailed(f"configuration is on {c.n} vertices, expected {n}")
    labels = sorted(x + t * n for x in c.peg_vertices() for t in range(3))
    return q_product(vertex_weight(v) for v in labels)


# ---------------------------------------------------------------------------
# Star certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarCertificateReport:
    moves_checked: int
    leaf_count_always_preserved: bool
    center_always_toggled: bool
    start_leaf_counts: frozenset[int]
    single_peg_leaf_counts: frozenset[int]

    @property
    def proves_not_solvable(self) -> bool:
        return (
            self.leaf_count_always_preserved
            and self.center_always_toggled
            and not self.start_leaf_counts & self.single_peg_leaf_counts
        )


@dataclass(frozen=True)
class StarCertificate:
    """Checkable facts about K_{1,n-1} with center 1: every legal move
    keeps the number of pegs on leaves and flips the center's state."""

    n: int

    def __post_init__(self):
        if self.n < 4:
            raise PreconditionFailed("the star certificate applies for n >= 4")

    def leaf_peg_count(self, c: Configuration) -> int:
        return c.peg_count() - (1 if c.has_peg(1) else 0)

    def move_preserves_leaf_count(self, c: Configuration, m: Move) -> bool:
        return self.leaf_peg_count(apply_move(c, m)) == self.leaf_peg_count(c)

    def move_toggles_center(self, c: Configuration, m: Move) -> bool:
        return apply_move(c, m).has_peg(1) != c.has_peg(1)

    def verify(self) -> StarCertificateReport:
        """Apply both predicates to every legal move of every configuration
        and compare the conserved quantity of starts against single-peg
        states: disjoint leaf counts mean no one-hole start can ever reach
        one peg."""
        g = star_graph(self.n)
        checked = 0
        leaves_ok = True
        center_ok = True
        for mask in range(1 << self.n):
            c = Configuration(self.n, mask)
            for m in legal_moves(g, c):
                checked += 1
                leaves_ok &= self.move_preserves_leaf_count(c, m)
                center_ok &= self.move_toggles_center(c, m)
        starts = frozenset(
            self.leaf_peg_count(Configuration.with_hole(self.n, h))
            for h in range(1, self.n + 1)
        )
        singles = frozenset(
            self.leaf_peg_count(Configuration.single_peg(self.n, p))
            for p in range(1, self.n + 1)
        )
        return StarCertificateReport(checked, leaves_ok, center_ok, starts, singles)


def star_certificate(n: int) -> StarCertificate:
    return StarCertificate(n)


# ---------------------------------------------------------------------------
# Binary (mod 2) weighting from mod-3 path lengths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryWeighting:
    base: int
    weight: dict[int, int]

    def total(self, c: Configuration) -> int:
        return sum(self.weight[v] for v in c.peg_vertices()) % 2

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "weights": {str(v): w for v, w in sorted(self.weight.items())},
        }


def _simple_path_residues(g: Graph, start: int) -> dict[int, set[int]]:
    """For each vertex, the set of lengths mod 3 over simple paths from start."""
    residues: dict[int, set[int]] = {v: set() for v in g.vertices()}
    residues[start].add(0)
    on_path = [False] * (g.n + 1)
    on_path[start] = True

    def walk(u: int, depth: int) -> None:
        for w in g.adj[u]:
            if not on_path[w]:
                on_path[w] = True
                residues[w].add((depth + 1) % 3)
                walk(w, depth + 1)
                on_path[w] = False

    walk(start, 0)
    return residues


def binary_weighting(g: Graph, v: int) -> BinaryWeighting:
    """Weight 0 for vertices reachable from v by a simple path of length
    divisible by 3, weight 1 otherwise.

    Raises IllDefined unless every 3-path in the graph carries exactly two
    weight-1 vertices, the condition that makes the mod-2 peg-weight sum
    move-invariant and which fails exactly when some pair of degree-3
    vertices is joined by a path of length not divisible by 3.
    """
    if g.degree(v) < 3:
        raise PreconditionFailed(f"base vertex {v} must have degree >= 3")
    residues = _simple_path_residues(g, v)
    weight = {w: 0 if 0 in residues[w] else 1 for w in g.vertices()}
    for y in g.vertices():
        nb = g.adj[y]
        for i, x in enumerate(nb):
            for z in nb[i + 1 :]:
                if weight[x] + weight[y] + weight[z] != 2:
                    raise IllDefined(
                        f"3-path {x}-{y}-{z} carries weights "
                        f"{weight[x]},{weight[y]},{weight[z]}; the mod-3 "
                        "weighting from vertex "
                        f"{v} is ambiguous on this graph"
                    )
    return BinaryWeighting(v, weight)


def total_binary_weight(w: BinaryWeighting, c: Configuration) -> int:
    return w.total(c)


# ---------------------------------------------------------------------------
# Doubly-free predicate
# ---------------------------------------------------------------------------


def doubly_free_predicate(g: Graph) -> bool:
    """True iff two degree-3 vertices are joined by a simple path whose
    length is not divisible by 3.

    The two endpoints may coincide: a cycle through a single degree-3
    vertex counts, with the cycle length as the path length. Search is
    exhaustive over simple paths (desk scale).
    """
    if not is_connected(g):
        raise PreconditionFailed("predicate requires a connected graph")
    if g.max_degree() < 3:
        raise PreconditionFailed("predicate requires a vertex of degree >= 3")
    if len(g.edges) == g.n - 1 and g.max_degree() == g.n - 1:
        raise PreconditionFailed("predicate does not apply to stars")
    high = [v for v in g.vertices() if g.degree(v) >= 3]
    high_set = set(high)

    found = False

    def walk(start: int, u: int, depth: int, on_path: list[bool]) -> None:
        nonlocal found
        if found:
            return
        for w in g.adj[u]:
            if w == start and depth >= 2:
                if (depth + 1) % 3 != 0:  # closed path back to the base
                    found = True
                    return
                continue
            if not on_path[w]:
                if w in high_set and (depth + 1) % 3 != 0:
                    found = True
                    return
                on_path[w] = True
                walk(start, w, depth + 1, on_path)
                on_path[w] = False
                if found:
                    return

    for s in high:
        on_path = [False] * (g.n + 1)
        on_path[s] = True
        walk(s, s, 0, on_path)
        if found:
            return True
    return False


# ---------------------------------------------------------------------------
# Closed-form path and cycle classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathCycleVerdict:
    solvable: bool
    admissible_starts: frozenset[int]
    end_pegs: dict[int, frozenset[int]]
    level: Verdict


def _residue_class(n: int, r: int) -> frozenset[int]:
    return frozenset(v for v in range(1, n + 1) if v % 3 == r)


def classify_path(n: int) -> PathCycleVerdict:
    """Start holes and end pegs for the n-vertex path.

    The admissible mod-3 start classes come from the quaternion weight of
    the three canonical hole positions; shifting a lone hole or peg by
    distance 3 fills out each class.
    """
    if n < 2:
        raise PreconditionFailed("paths need n >= 2")
    if n == 2:
        return PathCycleVerdict(
            True,
            frozenset({1, 2}),
            {1: frozenset({2}), 2: frozenset({1})},
            Verdict.FREELY_SOLVABLE,
        )
    r = n % 6
    if r in (1, 5):
        return PathCycleVerdict(False, frozenset(), {}, Verdict.NOT_SOLVABLE)
    pairing = {
        0: {2: 2},  # start residue -> end residue
        2: {1: 2, 2: 1},
        3: {1: 1, 0: 0},
        4: {2: 0, 0: 2},
    }[r]
    ends: dict[int, frozenset[int]] = {}
    starts: set[int] = set()
    for sr, er in pairing.items():
        for h in _residue_class(n, sr):
            starts.add(h)
            ends[h] = _residue_class(n, er)
    return PathCycleVerdict(True, frozenset(starts), ends, Verdict.SOLVABLE)


def classify_cycle(n: int) -> PathCycleVerdict:
    """Start holes and end pegs for the n-vertex cycle."""
    if n < 3:
        raise PreconditionFailed("cycles need n >= 3")
    r = n % 6
    everything = frozenset(range(1, n + 1))
    if r in (1, 5):
        return PathCycleVerdict(False, frozenset(), {}, Verdict.NOT_SOLVABLE)
    if r in (0, 3):
        ends = {h: frozenset(v for v in everything if v % 3 == h % 3) for h in everything}
        return PathCycleVerdict(True, everything, ends, Verdict.FREELY_SOLVABLE)
    ends = {h: everything for h in everything}
    return PathCycleVerdict(True, everything, ends, Verdict.DOUBLY_FREELY_SOLVABLE)
