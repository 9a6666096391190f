"""Graphs, peg configurations, moves, and replay.

Vertices are the integers 1..n. A configuration is a bitmask where bit
(v - 1) set means a peg on vertex v; moves flip exactly three bits. A jump
takes pegs on x and y and a hole on z (x-y-z a path) to a single peg on z;
an unjump is the exact inverse, carrying a peg from z back to x and
re-creating the peg on y. Everything here is an immutable value and every
operation is a pure function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityExceeded, IllegalMove, IllegalMoveAt, ValidationError

#: Hard cap on vertex count: one machine word of configuration bits.
CAPACITY = 64


class Graph:
    """Simple undirected graph on vertices 1..n with sorted adjacency lists."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValidationError(f"vertex count must be >= 1, got {n}")
        if n > CAPACITY:
            raise CapacityExceeded(f"graphs are capped at {CAPACITY} vertices, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValidationError(f"edge ({u},{v}) leaves the vertex range 1..{n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValidationError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
        self.edges: frozenset[tuple[int, int]] = frozenset(seen)
        self.n = n
        lists: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in seen:
            lists[u].append(v)
            lists[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(l)) for l in lists
        )
        self._hash = hash((n, self.edges))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def max_degree(self) -> int:
        return max(len(self.adj[v]) for v in self.vertices())

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability of every vertex from vertex 1."""
    if g.n == 1:
        return True
    seen = [False] * (g.n + 1)
    seen[1] = True
    stack = [1]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


@dataclass(frozen=True)
class Configuration:
    """Peg subset of 1..n packed into an int; bit (v-1) set = peg on v."""

    n: int
    pegs: int

    def __post_init__(self):
        if not (1 <= self.n <= CAPACITY):
            raise CapacityExceeded(
                f"configurations support 1..{CAPACITY} vertices, got n={self.n}"
            )
        if self.pegs < 0 or self.pegs >> self.n:
            raise ValidationError(
                f"peg mask {self.pegs:#x} has bits outside 1..{self.n}"
            )

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "Configuration":
        mask = 0
        for v in vertices:
            if not 1 <= v <= n:
                raise ValidationError(f"peg vertex {v} outside 1..{n}")
            mask |= 1 << (v - 1)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "Configuration":
        return cls(n, (1 << n) - 1)

    @classmethod
    def with_hole(cls, n: int, hole: int) -> "Configuration":
        """All pegs except one hole: the game's start position."""
        if not 1 <= hole <= n:
            raise ValidationError(f"hole {hole} outside 1..{n}")
        return cls(n, ((1 << n) - 1) ^ (1 << (hole - 1)))

    @classmethod
    def single_peg(cls, n: int, peg: int) -> "Configuration":
        if not 1 <= peg <= n:
            raise ValidationError(f"peg {peg} outside 1..{n}")
        return cls(n, 1 << (peg - 1))

    def has_peg(self, v: int) -> bool:
        return bool(self.pegs >> (v - 1) & 1)

    def peg_count(self) -> int:
        return self.pegs.bit_count()

    def peg_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.pegs >> (v - 1) & 1)

    def hole_vertices(self) -> tuple[int, ...]:
        return tuple(
            v for v in range(1, self.n + 1) if not self.pegs >> (v - 1) & 1
        )

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.peg_vertices())) + "}"


class MoveKind(enum.Enum):
    JUMP = "jump"
    UNJUMP = "unjump"

    @property
    def order(self) -> int:
        return 0 if self is MoveKind.JUMP else 1


JUMP = MoveKind.JUMP
UNJUMP = MoveKind.UNJUMP


@dataclass(frozen=True)
class Move:
    """Directed move on the 3-path x-y-z.

    Jump: pegs on x,y and hole on z; the x-peg lands on z, the y-peg is
    removed. Unjump: holes on x,y and peg on z; the z-peg lands on x and a
    new peg appears on y. x is always where the travelling peg ends up after
    an unjump.
    """

    kind: MoveKind
    x: int
    y: int
    z: int

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.y, self.x, self.z, self.kind.order)

    def mask(self) -> int:
        return (1 << (self.x - 1)) | (1 << (self.y - 1)) | (1 << (self.z - 1))

    def inverse(self) -> "Move":
        """The move that restores the configuration this one came from."""
        kind = UNJUMP if self.kind is JUMP else JUMP
        return Move(kind, self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.x},{self.y},{self.z})"


def jump(x: int, y: int, z: int) -> Move:
    return Move(JUMP, x, y, z)


def unjump(x: int, y: int, z: int) -> Move:
    return Move(UNJUMP, x, y, z)


def _geometry_ok(g: Graph, m: Move) -> bool:
    return (
        len({m.x, m.y, m.z}) == 3
        and g.has_edge(m.x, m.y)
        and g.has_edge(m.y, m.z)
    )


def _pattern_ok(c: Configuration, m: Move) -> bool:
    px = c.pegs >> (m.x - 1) & 1
    py = c.pegs >> (m.y - 1) & 1
    pz = c.pegs >> (m.z - 1) & 1
    if m.kind is JUMP:
        return px == 1 and py == 1 and pz == 0
    return px == 0 and py == 0 and pz == 1


def is_legal(g: Graph, c: Configuration, m: Move) -> bool:
    return _geometry_ok(g, m) and _pattern_ok(c, m)


def legal_moves(g: Graph, c: Configuration) -> list[Move]:
    """All legal moves, sorted by (y, x, z, kind).

    Every 3-path x-y-z contributes up to two jump candidates and two unjump
    candidates (x and z swap roles); for a fixed ordered triple at most one
    kind is legal, so generating in (y, x, z) order already yields the
    documented ordering.
    """
    if c.n != g.n:
        raise ValidationError(f"configuration is on {c.n} vertices, graph on {g.n}")
    pegs = c.pegs
    out: list[Move] = []
    for y in g.vertices():
        nb = g.adj[y]
        py = pegs >> (y - 1) & 1
        for x in nb:
            px = pegs >> (x - 1) & 1
            for z in nb:
                if z == x:
                    continue
                pz = pegs >> (z - 1) & 1
                if px and py and not pz:
                    out.append(Move(JUMP, x, y, z))
                elif not px and not py and pz:
                    out.append(Move(UNJUMP, x, y, z))
    return out


def apply_move(c: Configuration, m: Move, g: Graph | None = None) -> Configuration:
    """Apply one move, returning a new configuration.

    The peg/hole pattern is always validated; pass ``g`` to also validate the
    path geometry (callers that generated the move from ``legal_moves`` can
    skip it).
    """
    if g is not None and not _geometry_ok(g, m):
        raise IllegalMove(f"{m}: x-y-z is not a 3-path in the graph")
    if not _pattern_ok(c, m):
        raise IllegalMove(f"{m}: peg/hole pattern does not match in {c}")
    return Configuration(c.n, c.pegs ^ m.mask())


@dataclass(frozen=True)
class MoveSequence:
    """A start configuration plus an ordered list of moves."""

    start: Configuration
    moves: tuple[Move, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def unjump_count(self) -> int:
        return sum(1 for m in self.moves if m.kind is UNJUMP)

    def extended(self, more: Iterable[Move]) -> "MoveSequence":
        return MoveSequence(self.start, self.moves + tuple(more))


def replay(g: Graph, seq: MoveSequence) -> Configuration:
    """Re-apply every move with full validation; the trusted verifier.

    Raises IllegalMoveAt(index) at the first step whose geometry or
    peg/hole pattern fails.
    """
    c = seq.start
    if c.n != g.n:
        raise IllegalMoveAt(0, f"start configuration is on {c.n} vertices, graph on {g.n}")
    for i, m in enumerate(seq.moves):
        if not _geometry_ok(g, m):
            raise IllegalMoveAt(i, f"{m}: x-y-z is not a 3-path in the graph")
        if not _pattern_ok(c, m):
            raise IllegalMoveAt(i, f"{m}: peg/hole pattern does not match")
        c = Configuration(c.n, c.pegs ^ m.mask())
    return c


def trace(g: Graph, seq: MoveSequence) -> list[Configuration]:
    """Configurations after every move of a valid sequence (start excluded)."""
    out = []
    c = seq.start
    for i, m in enumerate(seq.moves):
        if not _geometry_ok(g, m) or not _pattern_ok(c, m):
            raise IllegalMoveAt(i, f"{m}: illegal")
        c = Configuration(c.n, c.pegs ^ m.mask())
        out.append(c)
    return out
