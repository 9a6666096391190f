import random

import pytest

from revpeg.model import Configuration, Graph


def random_connected_graph(rng: random.Random, n: int, extra: int = 2) -> Graph:
    """Random tree (random attachment) plus up to `extra` chords."""
    edges = set()
    for v in range(2, n + 1):
        u = rng.randrange(1, v)
        edges.add((u, v))
    non_edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if (u, v) not in edges
    ]
    rng.shuffle(non_edges)
    for e in non_edges[: rng.randint(0, extra)]:
        edges.add(e)
    return Graph(n, sorted(edges))


def random_configuration(rng: random.Random, n: int) -> Configuration:
    return Configuration(n, rng.randrange(1 << n))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
