"""Constructive solvers: explicit move sequences without exhaustive search.

The general routine works on a spanning tree containing a degree-3 vertex,
fixes an embedded copy of H there, shifts the start hole onto H, then
repeatedly absorbs the outside peg closest to H while keeping the H
restriction inside class A or B. Every absorption picks a staging
configuration (equivalent within the current class) chosen by which H
vertex the peg approaches and at what distance, then carries the peg in
with a single 4-path macro. When no outside pegs remain, a last within-H
walk parks the final peg on the class representative.

Paths and cycles have no degree-3 vertex and get dedicated routines built
from the classical even-path jump sweep plus hole shifting; cycles reduce
to paths by rotating the hole onto the path routine's entry position.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    EmbeddingNotFound,
    InvariantViolation,
    NotDoublyFree,
    NotSolvableStart,
    PatternMismatch,
    PreconditionFailed,
)
from .families import is_star_shape
from .hclasses import HClass, LETTERS, h_class_of, h_route
from .invariants import classify_path, classify_cycle, doubly_free_predicate
from .model import (
    JUMP,
    UNJUMP,
    Configuration,
    Graph,
    Move,
    MoveSequence,
    apply_move,
    is_connected,
)
from .oracle import solve_from


@dataclass(frozen=True)
class WorkingTree:
    """A spanning tree of the input graph whose root has tree-degree >= 3."""

    tree: Graph
    root: int


@dataclass(frozen=True)
class HEmbedding:
    """Five distinct vertices with the edges a-c, b-c, c-d, d-e present in
    whatever graph the configuration is played on."""

    a: int
    b: int
    c: int
    d: int
    e: int

    def vertex(self, letter: str) -> int:
        return getattr(self, letter)

    def letter(self, v: int) -> str:
        for ch in LETTERS:
            if getattr(self, ch) == v:
                return ch
        raise ValueError(f"vertex {v} is not part of the embedding")

    @property
    def vertices(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e)

    def mask_of(self, c: Configuration) -> int:
        """The restriction of a configuration to H, as a 5-bit abstract mask."""
        m = 0
        for i, v in enumerate(self.vertices):
            if c.has_peg(v):
                m |= 1 << i
        return m

    def pegs_from_letters(self, letters: str) -> frozenset[int]:
        return frozenset(self.vertex(ch) for ch in letters)


# ---------------------------------------------------------------------------
# The 4-path macro
# ---------------------------------------------------------------------------


def p4_move(
    g: Graph, c: Configuration, path: tuple[int, int, int, int]
) -> tuple[Configuration, tuple[Move, Move]]:
    """Carry a lone peg (or lone hole) across a 4-path by distance 3.

    Peg on path[0] with three holes ahead: unjump onto the two middle
    vertices, then jump to the far endpoint. Hole on path[0] with three pegs
    ahead: jump into the hole, then unjump to push the hole to the far end.
    Vertices off the path are untouched.
    """
    v0, v1, v2, v3 = path
    if len({v0, v1, v2, v3}) != 4:
        raise PatternMismatch(f"path {path} repeats a vertex")
    for u, w in ((v0, v1), (v1, v2), (v2, v3)):
        if not g.has_edge(u, w):
            raise PatternMismatch(f"{u}-{w} is not an edge; {path} is not a 4-path")
    states = tuple(c.has_peg(v) for v in path)
    if states == (True, False, False, False):
        moves = (Move(UNJUMP, v2, v1, v0), Move(JUMP, v1, v2, v3))
    elif states == (False, True, True, True):
        moves = (Move(JUMP, v2, v1, v0), Move(UNJUMP, v1, v2, v3))
    else:
        raise PatternMismatch(
            f"path {path} holds pegs {states}; need peg+3 holes or hole+3 pegs"
        )
    out = apply_move(apply_move(c, moves[0], g), moves[1], g)
    return out, moves


# ---------------------------------------------------------------------------
# Spanning tree and H embedding
# ---------------------------------------------------------------------------


def find_spanning_tree(g: Graph) -> WorkingTree:
    """BFS tree from the smallest degree-3 vertex; if that tree degenerates
    to a star, swap one center-leaf edge for a leaf-leaf edge of g."""
    if not is_connected(g):
        raise PreconditionFailed("graph must be connected")
    if g.n < 5:
        raise PreconditionFailed("spanning-tree routine needs n >= 5")
    if is_star_shape(g):
        raise PreconditionFailed("stars have no working tree")
    if g.max_degree() < 3:
        raise PreconditionFailed("need a vertex of degree >= 3")
    root = min(v for v in g.vertices() if g.degree(v) >= 3)
    parent = {root: 0}
    order = deque((root,))
    edges = set()
    while order:
        u = order.popleft()
        for w in g.adj[u]:
            if w not in parent:
                parent[w] = u
                edges.add((min(u, w), max(u, w)))
                order.append(w)
    if len(edges) == g.n - 1 and all(root in e for e in edges):
        # BFS tree is a star, so root is adjacent to everything; g is not a
        # star, so it has an edge avoiding root. Reattach one endpoint.
        u, v = min(e for e in g.sorted_edges() if root not in e)
        edges.remove((min(root, u), max(root, u)))
        edges.add((u, v))
    tree = Graph(g.n, sorted(edges))
    if tree.degree(root) < 3 or is_star_shape(tree):
        raise InvariantViolation("working tree construction failed")
    return WorkingTree(tree, root)


def find_h_embedding(t: WorkingTree) -> HEmbedding:
    """Smallest eligible center c, then lexicographically smallest (a,b,d,e).

    c needs tree-degree >= 3 and a neighbor d that continues one step
    further to some e; in a tree e is automatically distinct from a, b, c.
    """
    tree = t.tree
    for c0 in tree.vertices():
        nb = tree.adj[c0]
        if len(nb) < 3:
            continue
        for ia, a0 in enumerate(nb):
            for b0 in nb[ia + 1 :]:
                for d0 in nb:
                    if d0 in (a0, b0):
                        continue
                    ext = [w for w in tree.adj[d0] if w != c0]
                    if ext:
                        return HEmbedding(a0, b0, c0, d0, min(ext))
    raise EmbeddingNotFound(
        "no claw-with-subdivided-edge in the working tree; "
        "the tree invariants should make this impossible"
    )


# ---------------------------------------------------------------------------
# Within-H transformations
# ---------------------------------------------------------------------------


def transform_within_h(
    emb: HEmbedding, c: Configuration, target_pegs
) -> tuple[Configuration, MoveSequence]:
    """Move the H restriction of c to the requested H configuration using
    only moves inside H. Raises NotSameClass if the target lies in the
    other class."""
    target = frozenset(target_pegs)
    stray = target - set(emb.vertices)
    if stray:
        raise PreconditionFailed(f"target pegs {sorted(stray)} are outside H")
    src = emb.mask_of(c)
    dst = 0
    for i, v in enumerate(emb.vertices):
        if v in target:
            dst |= 1 << i
    route = h_route(src, dst)
    moves = tuple(
        Move(m.kind, emb.vertices[m.x - 1], emb.vertices[m.y - 1], emb.vertices[m.z - 1])
        for m in route
    )
    out = c
    for m in moves:
        out = apply_move(out, m)
    return out, MoveSequence(c, moves)


# ---------------------------------------------------------------------------
# Routing toward H inside the tree
# ---------------------------------------------------------------------------


def _bfs_to_h(tree: Graph, emb: HEmbedding):
    """Multi-source BFS from H in letter order a..e.

    Returns (dist, toward, attach): `toward[v]` is the next vertex on the
    unique tree path from v to H and `attach[v]` the H vertex it reaches;
    equidistant vertices are claimed by the earlier letter.
    """
    dist = [-1] * (tree.n + 1)
    toward = [0] * (tree.n + 1)
    attach = [0] * (tree.n + 1)
    queue = deque()
    for v in emb.vertices:
        dist[v] = 0
        attach[v] = v
        queue.append(v)
    h_set = set(emb.vertices)
    while queue:
        u = queue.popleft()
        for w in tree.adj[u]:
            if dist[w] == -1 and w not in h_set:
                dist[w] = dist[u] + 1
                toward[w] = u
                attach[w] = attach[u]
                queue.append(w)
    return dist, toward, attach


def _path_toward_h(toward, v: int, steps: int) -> list[int]:
    out = [v]
    for _ in range(steps):
        v = toward[v]
        out.append(v)
    return out


# Entry tables for carrying a peg at distance r from its nearest H vertex
# into H: (attachment letter, class) -> r -> (staging letters, the H part of
# the final 4-path). Distances 1..3 are the x1/x2/x3 positions; approaches
# from further away are first shortened with the 4-path macro.
_ABSORB = {
    ("a", HClass.A): {1: ("b", "acd"), 2: ("b", "ac"), 3: ("b", "a")},
    ("a", HClass.B): {1: ("de", "acb"), 2: ("de", "ac"), 3: ("de", "a")},
    ("b", HClass.A): {1: ("a", "bcd"), 2: ("a", "bc"), 3: ("a", "b")},
    ("b", HClass.B): {1: ("de", "bca"), 2: ("de", "bc"), 3: ("de", "b")},
    ("c", HClass.A): {1: ("b", "cde"), 2: ("b", "cd"), 3: ("b", "c")},
    ("c", HClass.B): {1: ("ab", "cde"), 2: ("be", "ca"), 3: ("ab", "c")},
    ("d", HClass.A): {1: ("b", "dca"), 2: ("b", "dc"), 3: ("b", "d")},
    ("d", HClass.B): {1: ("be", "dca"), 2: ("be", "dc"), 3: ("be", "d")},
    ("e", HClass.A): {1: ("b", "edc"), 2: ("b", "ed"), 3: ("b", "e")},
    ("e", HClass.B): {1: ("ab", "edc"), 2: ("c", "ed"), 3: ("ab", "e")},
}

# Hole-entry paths: the H part of the 4-path that pushes the start hole's
# final step into H, by attachment letter and remaining distance mod 3.
_HOLE_ENTRY = {
    ("a", 1): "acd",
    ("a", 2): "ac",
    ("b", 1): "bcd",
    ("b", 2): "bc",
    ("c", 1): "cde",
    ("c", 2): "ca",
    ("d", 1): "dca",
    ("d", 2): "dc",
    ("e", 1): "edc",
    ("e", 2): "ed",
}


def shift_hole_onto_h(
    t: WorkingTree, emb: HEmbedding, c: Configuration
) -> tuple[Configuration, MoveSequence]:
    """Walk the unique hole of an all-pegs-but-one configuration onto H."""
    holes = c.hole_vertices()
    if len(holes) != 1:
        raise PreconditionFailed("expected exactly one hole")
    hole = holes[0]
    if hole in emb.vertices:
        return c, MoveSequence(c, ())
    tree = t.tree
    dist, toward, attach = _bfs_to_h(tree, emb)
    moves: list[Move] = []
    cur = c
    k = dist[hole]
    w = attach[hole]
    while k >= 3:
        path = tuple(_path_toward_h(toward, hole, 3))
        cur, pair = p4_move(tree, cur, path)  # hole case: hole travels 3 inward
        moves += pair
        hole = path[3]
        k -= 3
    if k:
        prefix = _path_toward_h(toward, hole, k - 1)
        suffix = [emb.vertex(ch) for ch in _HOLE_ENTRY[(emb.letter(w), k)]]
        path = tuple(prefix + suffix)
        cur, pair = p4_move(tree, cur, path)
        moves += pair
    if all(v not in emb.vertices for v in cur.hole_vertices()):
        raise InvariantViolation("hole failed to land on H")
    return cur, MoveSequence(c, tuple(moves))


def absorb_nearest_peg(
    t: WorkingTree, emb: HEmbedding, c: Configuration
) -> tuple[Configuration, MoveSequence]:
    """Bring the outside peg closest to H into H, preserving class A/B.

    Ties on distance break toward the smaller vertex. The peg is first
    marched to within distance 3 by 4-path macros (its path is all holes
    because it is a closest peg), the H restriction is staged inside its
    class per the attachment vertex and distance, and one final macro
    carries the peg in.
    """
    h_set = set(emb.vertices)
    before_class = h_class_of(emb.mask_of(c))
    if before_class not in (HClass.A, HClass.B):
        raise PreconditionFailed(f"H restriction is {before_class.value}, need A or B")
    outside = [v for v in c.peg_vertices() if v not in h_set]
    if not outside:
        raise PreconditionFailed("no pegs outside H")
    tree = t.tree
    dist, toward, attach = _bfs_to_h(tree, emb)
    peg = min(outside, key=lambda v: (dist[v], v))
    for v in _path_toward_h(toward, peg, dist[peg] - 1)[1:]:
        if c.has_peg(v):
            raise PreconditionFailed("a closer peg sits between the chosen peg and H")
    moves: list[Move] = []
    cur = c
    k = dist[peg]
    while k > 3:
        path = tuple(_path_toward_h(toward, peg, 3))
        cur, pair = p4_move(tree, cur, path)  # peg case: peg travels 3 inward
        moves += pair
        peg = path[3]
        k -= 3
    w_letter = emb.letter(attach[peg])
    stage_letters, entry_letters = _ABSORB[(w_letter, h_class_of(emb.mask_of(cur)))][k]
    cur, staging = transform_within_h(emb, cur, emb.pegs_from_letters(stage_letters))
    moves += staging.moves
    prefix = _path_toward_h(toward, peg, k - 1)
    suffix = [emb.vertex(ch) for ch in entry_letters]
    path = tuple(prefix + suffix)
    cur, pair = p4_move(tree, cur, path)
    moves += pair
    after_class = h_class_of(emb.mask_of(cur))
    if after_class not in (HClass.A, HClass.B):
        raise InvariantViolation(
            f"absorption left H in {after_class.value}; expected class A or B"
        )
    outside_after = sum(1 for v in cur.peg_vertices() if v not in h_set)
    if outside_after != len(outside) - 1:
        raise InvariantViolation("absorption did not remove exactly one outside peg")
    return cur, MoveSequence(c, tuple(moves))


# ---------------------------------------------------------------------------
# Full constructive solver
# ---------------------------------------------------------------------------


def _solve_paw_four(g: Graph, hole: int) -> MoveSequence:
    """n = 4 base case: restrict to a triangle-with-pendant subgraph and
    search its 16 configurations."""
    center = min(v for v in g.vertices() if g.degree(v) == 3)
    others = [v for v in g.vertices() if v != center]
    spokes = [(min(center, o), max(center, o)) for o in others]
    chords = [e for e in g.sorted_edges() if center not in e]
    if not chords:
        raise PreconditionFailed("no triangle with a pendant edge (graph is a star)")
    paw = Graph(4, spokes + [chords[0]])
    res = solve_from(paw, hole)
    if res is None:
        raise InvariantViolation("triangle with pendant failed to solve")
    return res.witness


def solve_constructive(g: Graph, hole: int) -> MoveSequence:
    """Replay-valid sequence from all-pegs-except-hole down to a single peg,
    for any connected non-star graph with a vertex of degree >= 3."""
    if not is_connected(g):
        raise PreconditionFailed("graph must be connected")
    if not 1 <= hole <= g.n:
        raise PreconditionFailed(f"hole {hole} outside 1..{g.n}")
    if is_star_shape(g) and g.n >= 4:
        raise PreconditionFailed("stars are not solvable")
    if g.max_degree() < 3:
        raise PreconditionFailed(
            "no vertex of degree >= 3; use the path/cycle routines"
        )
    if g.n == 4:
        return _solve_paw_four(g, hole)
    t = find_spanning_tree(g)
    emb = find_h_embedding(t)
    start = Configuration.with_hole(g.n, hole)
    moves: list[Move] = []
    cur, seq = shift_hole_onto_h(t, emb, start)
    moves += seq.moves
    h_set = set(emb.vertices)
    while any(v not in h_set for v in cur.peg_vertices()):
        cur, seq = absorb_nearest_peg(t, emb, cur)
        moves += seq.moves
    rep = "a" if h_class_of(emb.mask_of(cur)) is HClass.A else "c"
    cur, seq = transform_within_h(emb, cur, {emb.vertex(rep)})
    moves += seq.moves
    if cur.peg_count() != 1:
        raise InvariantViolation("constructive solve did not end at one peg")
    return MoveSequence(start, tuple(moves))


# ---------------------------------------------------------------------------
# Doubly-free: park the final peg anywhere
# ---------------------------------------------------------------------------


def _lone_peg_hops(g: Graph):
    """Transitions available to a lone peg: 4-path hops, and teleports among
    the four class-A singleton positions of any embedded H."""
    hops: dict[int, list[tuple[int, tuple]]] = {v: [] for v in g.vertices()}
    for u in g.vertices():
        for p1 in g.adj[u]:
            for p2 in g.adj[p1]:
                if p2 == u:
                    continue
                for w in g.adj[p2]:
                    if w not in (u, p1):
                        hops[u].append((w, ("p4", (u, p1, p2, w))))
    for c0 in g.vertices():
        if g.degree(c0) < 3:
            continue
        for d0 in g.adj[c0]:
            for e0 in g.adj[d0]:
                if e0 == c0:
                    continue
                rest = [x for x in g.adj[c0] if x not in (d0, e0)]
                if len(rest) < 2:
                    continue
                embs = [HEmbedding(rest[0], rest[1], c0, d0, e0)]
                embs += [HEmbedding(rest[0], x, c0, d0, e0) for x in rest[2:]]
                for emb in embs:
                    singles = (emb.a, emb.b, emb.d, emb.e)
                    for u in singles:
                        for w in singles:
                            if u != w:
                                hops[u].append((w, ("h", emb, w)))
    return hops


def solve_constructive_to(g: Graph, hole: int, target: int) -> MoveSequence:
    """Solve with the final peg exactly on `target`.

    First solves normally, then routes the lone peg: 4-path hops cover
    distance-3 steps along any path, and an embedded H lets the peg move
    freely among that copy's four class-A singleton positions, the
    class-switch that exists precisely when two degree-3 vertices are
    joined by a path of length not divisible by 3.
    """
    if not 1 <= target <= g.n:
        raise PreconditionFailed(f"target {target} outside 1..{g.n}")
    if not doubly_free_predicate(g):
        raise NotDoublyFree(
            "all degree-3 vertices sit at mutual path lengths divisible by 3"
        )
    seq = solve_constructive(g, hole)
    cur = seq.start
    for m in seq.moves:
        cur = apply_move(cur, m)
    peg = cur.peg_vertices()[0]
    if peg == target:
        return seq
    hops = _lone_peg_hops(g)
    parent: dict[int, tuple[int, tuple]] = {peg: None}  # type: ignore[dict-item]
    queue = deque((peg,))
    while queue and target not in parent:
        u = queue.popleft()
        for w, label in hops[u]:
            if w not in parent:
                parent[w] = (u, label)
                queue.append(w)
    if target not in parent:
        raise InvariantViolation(
            "lone-peg routing failed although the doubly-free predicate holds"
        )
    chain = []
    v = target
    while v != peg:
        u, label = parent[v]
        chain.append(label)
        v = u
    chain.reverse()
    moves = list(seq.moves)
    for label in chain:
        if label[0] == "p4":
            cur, pair = p4_move(g, cur, label[1])
            moves += pair
        else:
            _, emb, w = label
            cur, sub = transform_within_h(emb, cur, {w})
            moves += sub.moves
    if cur.peg_vertices() != (target,):
        raise InvariantViolation("routing did not end on the requested target")
    return MoveSequence(seq.start, tuple(moves))


# ---------------------------------------------------------------------------
# Paths and cycles
# ---------------------------------------------------------------------------


def _hole_shift_line(
    c: Configuration, hole: int, to: int, moves: list[Move]
) -> tuple[Configuration, int]:
    """Shift a lone hole along consecutive integers by steps of 3."""
    step = 3 if to > hole else -3
    cur = c
    while hole != to:
        d = 1 if step > 0 else -1
        path = (hole, hole + d, hole + 2 * d, hole + 3 * d)
        states = tuple(cur.has_peg(v) for v in path)
        if states != (False, True, True, True):
            raise InvariantViolation(f"hole shift blocked at {path}")
        m1 = Move(JUMP, path[2], path[1], path[0])
        m2 = Move(UNJUMP, path[1], path[2], path[3])
        cur = apply_move(apply_move(cur, m1), m2)
        moves += [m1, m2]
        hole += step
    return cur, hole


def _even_sweep(vs: list[int]) -> list[Move]:
    """Jump-only solution of an even path given as a vertex list, with the
    hole adjacent to the first endpoint (on vs[1]). Final peg: vs[-2]."""
    if len(vs) == 2:
        return []  # hole + peg: already down to one peg
    moves = [Move(JUMP, vs[3], vs[2], vs[1]), Move(JUMP, vs[0], vs[1], vs[2])]
    k = 2
    while k + 3 <= len(vs) - 1:
        moves.append(Move(JUMP, vs[k + 3], vs[k + 2], vs[k + 1]))
        moves.append(Move(JUMP, vs[k], vs[k + 1], vs[k + 2]))
        k += 2
    return moves


def _solve_path_canonical(n: int, hole: int) -> list[Move]:
    """Hole in the canonical class: residue 2 for even n (entry hole 2),
    residue 0 for odd multiples of 3 (entry hole 3)."""
    c = Configuration.with_hole(n, hole)
    moves: list[Move] = []
    if n % 2 == 0:
        c, _ = _hole_shift_line(c, hole, 2, moves)
        moves += _even_sweep(list(range(1, n + 1)))
        return moves
    # n = 3l with l odd: hole to 3, jump 1 over 2, push the new hole at 2 to
    # n-1, then sweep the even path on vertices 2..n from its far end.
    c, _ = _hole_shift_line(c, hole, 3, moves)
    first = Move(JUMP, 1, 2, 3)
    c = apply_move(c, first)
    moves.append(first)
    c, _ = _hole_shift_line(c, 2, n - 1, moves)
    moves += _even_sweep(list(range(n, 1, -1)))
    return moves


def solve_path(n: int, hole: int) -> MoveSequence:
    """Explicit solution for the n-vertex path, entered anywhere the
    closed-form classifier admits."""
    verdict = classify_path(n)
    if hole not in verdict.admissible_starts:
        raise NotSolvableStart(f"path on {n} vertices is not solvable from hole {hole}")
    start = Configuration.with_hole(n, hole)
    if n == 2:
        return MoveSequence(start, ())
    canonical = hole % 3 == (2 if n % 2 == 0 else 0)
    if canonical:
        moves = _solve_path_canonical(n, hole)
    else:
        mirrored = _solve_path_canonical(n, n + 1 - hole)
        moves = [Move(m.kind, n + 1 - m.x, n + 1 - m.y, n + 1 - m.z) for m in mirrored]
    return MoveSequence(start, tuple(moves))


def solve_cycle(n: int, hole: int) -> MoveSequence:
    """Explicit solution for the n-vertex cycle: rotate the hole onto the
    path routine's entry position and run the path solution along the
    cycle."""
    verdict = classify_cycle(n)
    if hole not in verdict.admissible_starts:
        raise NotSolvableStart(f"cycle on {n} vertices is not solvable from hole {hole}")
    entry = 2 if n % 2 == 0 or n % 3 != 0 else 3
    rot = (entry - hole) % n

    def unrotate(v: int) -> int:
        return (v - 1 - rot) % n + 1

    path_seq = solve_path(n, entry)
    moves = tuple(
        Move(m.kind, unrotate(m.x), unrotate(m.y), unrotate(m.z))
        for m in path_seq.moves
    )
    return MoveSequence(Configuration.with_hole(n, hole), moves)
