"""Exhaustive ground-truth solver over the 2^n configuration space.

States are raw peg bitmasks. For every ordered triple (x, y, z) with x-y-z
a path in the graph, both the jump and the unjump flip the same three bits,
so a transition is "xor with the triple mask" guarded by the peg/hole
pattern. Because every move is invertible, reachability is symmetric and
reachable sets are exactly the equivalence classes of mutual reachability;
classification exploits this by exploring each class once and reading off
every one-hole start it contains.

Witness searches keep flat parent arrays (predecessor state plus the triple
index that produced it) so move sequences can be rebuilt without storing
Move objects per state.
"""

from __future__ import annotations

import enum
from array import array
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityExceeded, DisconnectedGraph, PreconditionFailed
from .model import (
    JUMP,
    UNJUMP,
    Configuration,
    Graph,
    Move,
    MoveSequence,
    is_connected,
)

#: Default state-table budget: 2 GiB.
DEFAULT_MEMORY_BUDGET = 2 << 30

# Rough bytes-per-state costs used for the up-front budget check. They cover
# the visited table, queue slack, and (for witness searches) parent arrays.
_BYTES_PER_STATE_SCAN = 24
_BYTES_PER_STATE_WITNESS = 48


class Verdict(enum.Enum):
    NOT_SOLVABLE = "NotSolvable"
    SOLVABLE = "Solvable"
    FREELY_SOLVABLE = "FreelySolvable"
    DOUBLY_FREELY_SOLVABLE = "DoublyFreelySolvable"


@dataclass(frozen=True)
class Classification:
    """Verdict plus the start-hole -> reachable-end-peg matrix."""

    verdict: Verdict
    matrix: dict[int, frozenset[int]]

    def is_solvable(self) -> bool:
        return self.verdict is not Verdict.NOT_SOLVABLE


@dataclass(frozen=True)
class SolveResult:
    end_pegs: frozenset[int]
    witness: MoveSequence


@dataclass(frozen=True)
class MinUnjumpResult:
    count: int
    witness: MoveSequence


@dataclass(frozen=True)
class EquivalencePartition:
    """Partition of all 2^n peg masks into mutual-reachability classes.

    Blocks hold raw masks (ints); use block_of / blocks_as_configurations
    for the Configuration view. Blocks are ordered by their smallest mask.
    """

    n: int
    blocks: tuple[frozenset[int], ...]

    def block_of(self, c: Configuration) -> frozenset[int]:
        for b in self.blocks:
            if c.pegs in b:
                return b
        raise ValueError(f"mask {c.pegs} outside the partition")

    def blocks_as_configurations(self) -> tuple[frozenset[Configuration], ...]:
        return tuple(
            frozenset(Configuration(self.n, m) for m in b) for b in self.blocks
        )


@lru_cache(maxsize=256)
def _directed_triples(g: Graph) -> tuple[tuple[int, int, int, int], ...]:
    """(mask, bx, by, bz) per ordered path triple, sorted by (y, x, z).

    For one triple at most one of jump/unjump is legal in a given state, so
    scanning triples in this order reproduces the deterministic move order
    of legal_moves.
    """
    out = []
    for y in g.vertices():
        nb = g.adj[y]
        for x in nb:
            for z in nb:
                if z == x:
                    continue
                bx, by, bz = 1 << (x - 1), 1 << (y - 1), 1 << (z - 1)
                out.append((bx | by | bz, bx, by, bz))
    return tuple(out)


@lru_cache(maxsize=256)
def _triple_moves(g: Graph) -> tuple[tuple[int, int, int], ...]:
    """(x, y, z) aligned with _directed_triples, for move reconstruction."""
    out = []
    for y in g.vertices():
        nb = g.adj[y]
        for x in nb:
            for z in nb:
                if z != x:
                    out.append((x, y, z))
    return tuple(out)


def check_budget(n: int, memory_budget: int | None, witness: bool = False) -> None:
    budget = DEFAULT_MEMORY_BUDGET if memory_budget is None else memory_budget
    per_state = _BYTES_PER_STATE_WITNESS if witness else _BYTES_PER_STATE_SCAN
    need = (1 << n) * per_state
    if need > budget:
        raise CapacityExceeded(
            f"2^{n} states need ~{need} bytes (budget {budget}); "
            "raise --memory-budget or use a closed-form classifier"
        )


def estimate_state_bytes(n: int, witness: bool = False) -> int:
    per_state = _BYTES_PER_STATE_WITNESS if witness else _BYTES_PER_STATE_SCAN
    return (1 << n) * per_state


def _explore(start: int, triples, visited: bytearray) -> list[int]:
    """BFS the mutual-reachability class of `start`; returns members in
    discovery order. `visited` is shared across calls."""
    visited[start] = 1
    queue = deque((start,))
    members = [start]
    push = queue.append
    while queue:
        s = queue.popleft()
        for mask, bx, by, bz in triples:
            if s & bx:
                if not (s & by) or (s & bz):
                    continue
            elif (s & by) or not (s & bz):
                continue
            t = s ^ mask
            if not visited[t]:
                visited[t] = 1
                members.append(t)
                push(t)
    return members


def reachable_set(
    g: Graph, c: Configuration, memory_budget: int | None = None
) -> frozenset[Configuration]:
    """Exact set of configurations reachable from c (including c itself)."""
    if c.n != g.n:
        raise PreconditionFailed("configuration and graph sizes differ")
    check_budget(g.n, memory_budget)
    visited = bytearray(1 << g.n)
    members = _explore(c.pegs, _directed_triples(g), visited)
    return frozenset(Configuration(g.n, m) for m in members)


def equivalence_partition(
    g: Graph, memory_budget: int | None = None
) -> EquivalencePartition:
    """Partition all 2^n configurations by mutual reachability."""
    check_budget(g.n, memory_budget)
    triples = _directed_triples(g)
    visited = bytearray(1 << g.n)
    blocks = []
    for s in range(1 << g.n):
        if not visited[s]:
            blocks.append(frozenset(_explore(s, triples, visited)))
    return EquivalencePartition(g.n, tuple(blocks))


def _witness_bfs(g: Graph, start: int, memory_budget: int | None):
    """Parent-pointer BFS from `start`.

    Returns (visited, parent_state, parent_triple) flat arrays indexed by
    state mask; parent_triple holds the index into _triple_moves(g).
    """
    check_budget(g.n, memory_budget, witness=True)
    triples = _directed_triples(g)
    size = 1 << g.n
    visited = bytearray(size)
    parent_state = array("q", [-1]) * size
    parent_triple = array("i", [-1]) * size
    visited[start] = 1
    queue = deque((start,))
    while queue:
        s = queue.popleft()
        for idx, (mask, bx, by, bz) in enumerate(triples):
            if s & bx:
                if not (s & by) or (s & bz):
                    continue
            elif (s & by) or not (s & bz):
                continue
            t = s ^ mask
            if not visited[t]:
                visited[t] = 1
                parent_state[t] = s
                parent_triple[t] = idx
                queue.append(t)
    return visited, parent_state, parent_triple


def _rebuild(g: Graph, start: int, target: int, parent_state, parent_triple) -> MoveSequence:
    moves_xyz = _triple_moves(g)
    chain = []
    t = target
    while t != start:
        s = parent_state[t]
        x, y, z = moves_xyz[parent_triple[t]]
        # A scanned triple (x,y,z) fires either as Jump(x,y,z) (pegs on x,y)
        # or as Unjump(x,y,z) (peg on z only); the x bit of s decides.
        kind = JUMP if s >> (x - 1) & 1 else UNJUMP
        chain.append(Move(kind, x, y, z))
        t = s
    chain.reverse()
    return MoveSequence(Configuration(g.n, start), tuple(chain))


def _single_peg_states(n: int):
    return [(1 << (v - 1), v) for v in range(1, n + 1)]


def solve_from(
    g: Graph, hole: int, memory_budget: int | None = None
) -> SolveResult | None:
    """All end pegs reachable from the one-hole start, plus one witness.

    The witness goes to the smallest reachable end-peg vertex; it is a
    fewest-moves sequence by construction (plain BFS). Returns None when no
    single-peg state is reachable.
    """
    if not is_connected(g):
        raise DisconnectedGraph("solve_from requires a connected graph")
    if not 1 <= hole <= g.n:
        raise PreconditionFailed(f"hole {hole} outside 1..{g.n}")
    start = ((1 << g.n) - 1) ^ (1 << (hole - 1))
    visited, parent_state, parent_triple = _witness_bfs(g, start, memory_budget)
    end_pegs = frozenset(v for mask, v in _single_peg_states(g.n) if visited[mask])
    if not end_pegs:
        return None
    target = 1 << (min(end_pegs) - 1)
    witness = _rebuild(g, start, target, parent_state, parent_triple)
    return SolveResult(end_pegs, witness)


def witness_to(
    g: Graph, hole: int, peg: int, memory_budget: int | None = None
) -> MoveSequence | None:
    """Witness from the one-hole start to the single peg on `peg`, if that
    end position is reachable."""
    if not is_connected(g):
        raise DisconnectedGraph("witness_to requires a connected graph")
    if not 1 <= hole <= g.n or not 1 <= peg <= g.n:
        raise PreconditionFailed("hole and peg must lie in 1..n")
    start = ((1 << g.n) - 1) ^ (1 << (hole - 1))
    visited, parent_state, parent_triple = _witness_bfs(g, start, memory_budget)
    target = 1 << (peg - 1)
    if not visited[target]:
        return None
    return _rebuild(g, start, target, parent_state, parent_triple)


def classify(g: Graph, memory_budget: int | None = None) -> Classification:
    """Verdict and full start-hole -> end-peg matrix.

    Each mutual-reachability class is explored once; every one-hole start
    found inside it shares the class's single-peg set.
    """
    if g.n < 2:
        raise PreconditionFailed("classification needs n >= 2")
    if not is_connected(g):
        raise DisconnectedGraph("classify requires a connected graph")
    check_budget(g.n, memory_budget)
    triples = _directed_triples(g)
    visited = bytearray(1 << g.n)
    full = (1 << g.n) - 1
    matrix: dict[int, frozenset[int]] = {}
    for h in range(1, g.n + 1):
        if h in matrix:
            continue  # class containing this start was already swept
        s0 = full ^ (1 << (h - 1))
        members = _explore(s0, triples, visited)
        pegs = frozenset(
            mask.bit_length() for mask in members if mask and not mask & (mask - 1)
        )
        for m in members:
            holes = full ^ m
            if holes and not holes & (holes - 1):
                matrix[holes.bit_length()] = pegs
    full_set = frozenset(range(1, g.n + 1))
    if all(not v for v in matrix.values()):
        verdict = Verdict.NOT_SOLVABLE
    elif all(matrix[h] == full_set for h in matrix):
        verdict = Verdict.DOUBLY_FREELY_SOLVABLE
    elif all(matrix[h] for h in matrix):
        verdict = Verdict.FREELY_SOLVABLE
    else:
        verdict = Verdict.SOLVABLE
    return Classification(verdict, matrix)


def min_unjumps(
    g: Graph, hole: int, memory_budget: int | None = None
) -> MinUnjumpResult | None:
    """Minimum unjumps over all solving sequences from the one-hole start.

    0/1-cost shortest path over the state space (jumps free, unjumps cost
    one) with a deque; the witness attains the minimum. Returns None when
    the start is not solvable at all.
    """
    if not is_connected(g):
        raise DisconnectedGraph("min_unjumps requires a connected graph")
    if not 1 <= hole <= g.n:
        raise PreconditionFailed(f"hole {hole} outside 1..{g.n}")
    check_budget(g.n, memory_budget, witness=True)
    triples = _directed_triples(g)
    size = 1 << g.n
    INF = size + 1
    dist = array("i", [INF]) * size
    parent_state = array("q", [-1]) * size
    parent_triple = array("i", [-1]) * size
    start = ((1 << g.n) - 1) ^ (1 << (hole - 1))
    dist[start] = 0
    dq = deque(((0, start),))
    while dq:
        d, s = dq.popleft()
        if d > dist[s]:
            continue
        for idx, (mask, bx, by, bz) in enumerate(triples):
            if s & bx:
                if not (s & by) or (s & bz):
                    continue
                cost = 0  # jump
            elif (s & by) or not (s & bz):
                continue
            else:
                cost = 1  # unjump
            t = s ^ mask
            nd = d + cost
            if nd < dist[t]:
                dist[t] = nd
                parent_state[t] = s
                parent_triple[t] = idx
                if cost:
                    dq.append((nd, t))
                else:
                    dq.appendleft((nd, t))
    best = None
    for mask, v in _single_peg_states(g.n):
        if dist[mask] < INF and (best is None or dist[mask] < dist[best[0]]):
            best = (mask, v)
    if best is None:
        return None
    target = best[0]
    witness = _rebuild(g, start, target, parent_state, parent_triple)
    return MinUnjumpResult(dist[target], witness)
