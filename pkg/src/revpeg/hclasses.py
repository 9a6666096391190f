"""The two equivalence classes of configurations on the 5-vertex graph H.

H is the claw with one subdivided edge: letters a..e map to vertices 1..5
with edges a-c, b-c, c-d, d-e. All 32 peg configurations on H fall into two
14-element mutual-reachability classes (single-peg representatives: a for
class A, c for class B) plus four frozen configurations (empty, full, abd,
ce). Rather than hard-coding the chains, the table and all within-H routes
are produced by exhaustive search over the 32 states; the known chains
serve as test vectors.
"""

from __future__ import annotations

import enum
from collections import deque
from functools import lru_cache

from .errors import NotSameClass
from .families import h_graph
from .model import Configuration, Move, apply_move, legal_moves

LETTERS = "abcde"


def letter_mask(letters: str) -> int:
    """5-bit peg mask from letter notation, e.g. 'ace' -> pegs on a, c, e."""
    mask = 0
    for ch in letters:
        mask |= 1 << LETTERS.index(ch)
    return mask


def mask_letters(mask: int) -> str:
    return "".join(ch for i, ch in enumerate(LETTERS) if mask >> i & 1)


class HClass(enum.Enum):
    A = "A"
    B = "B"
    ISOLATED = "Isolated"
    EMPTY_OR_FULL = "Empty-or-Full"


@lru_cache(maxsize=1)
def _h_reach() -> dict[int, frozenset[int]]:
    """mask -> its mutual-reachability class over within-H moves."""
    g = h_graph()
    out: dict[int, frozenset[int]] = {}
    for start in range(32):
        if start in out:
            continue
        seen = {start}
        queue = deque((start,))
        while queue:
            s = queue.popleft()
            c = Configuration(5, s)
            for m in legal_moves(g, c):
                t = apply_move(c, m).pegs
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        block = frozenset(seen)
        for s in block:
            out[s] = block
    return out


@lru_cache(maxsize=1)
def class_table() -> dict[int, HClass]:
    reach = _h_reach()
    class_a = reach[letter_mask("a")]
    class_b = reach[letter_mask("c")]
    table = {}
    for mask in range(32):
        if mask in class_a:
            table[mask] = HClass.A
        elif mask in class_b:
            table[mask] = HClass.B
        elif mask in (0, 31):
            table[mask] = HClass.EMPTY_OR_FULL
        else:
            table[mask] = HClass.ISOLATED
    return table


def h_class_of(mask: int) -> HClass:
    return class_table()[mask]


@lru_cache(maxsize=1024)
def h_route(src: int, dst: int) -> tuple[Move, ...]:
    """Shortest within-H move sequence from peg-mask src to dst.

    Moves are on the abstract labels 1..5 (= a..e); raises NotSameClass when
    the two masks are not mutually reachable.
    """
    if src == dst:
        return ()
    reach = _h_reach()
    if dst not in reach[src]:
        raise NotSameClass(
            f"{mask_letters(src) or 'empty'} and {mask_letters(dst) or 'empty'} "
            "lie in different H classes"
        )
    g = h_graph()
    parent: dict[int, tuple[int, Move]] = {src: None}  # type: ignore[dict-item]
    queue = deque((src,))
    while queue:
        s = queue.popleft()
        c = Configuration(5, s)
        for m in legal_moves(g, c):
            t = apply_move(c, m).pegs
            if t not in parent:
                parent[t] = (s, m)
                if t == dst:
                    queue.clear()
                    break
                queue.append(t)
    chain = []
    t = dst
    while t != src:
        s, m = parent[t]
        chain.append(m)
        t = s
    chain.reverse()
    return tuple(chain)
