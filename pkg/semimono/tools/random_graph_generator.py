import logging
from itertools import combinations
from typing import Iterator

import numpy as np

from semimono.graph import Graph
from semimono.utils.errors import SamplingError

MAX_REJECTIONS = 1000

PRNG_DESCRIPTION = (
    'numpy.random.Generator(PCG64(seed)) (64-bit PCG XSL-RR, 53-bit doubles); per draw, one random(N) vector over the '
    'N = n(n-1)/2 pairs (i, j) with i < j in lexicographic order, pair kept iff its double < p; disconnected draws '
    'are rejected and redrawn from the same stream'
)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Samples G(n, p) until the draw is connected; identical (n, p, seed) always give the identical graph."""
    return next(random_connected_graphs(n, p, count=1, seed=seed))


def random_connected_graphs(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """`count` consecutive connected draws from one seeded stream."""
    if n < 1:
        raise ValueError(f'n must be at least 1, got {n}.')

    if not 0 < p <= 1:
        raise ValueError(f'p must lie in (0, 1], got {p}.')

    if seed < 0:
        raise ValueError(f'seed must be non-negative, got {seed}.')

    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))

    for _ in range(count):
        yield draw_connected(rng, n, p, pairs)


def draw_connected(rng: np.random.Generator, n: int, p: float, pairs: list[tuple[int, int]]) -> Graph:
    for attempt in range(1, MAX_REJECTIONS + 1):
        kept = rng.random(len(pairs)) < p
        g = Graph.from_edges(n, [pair for pair, keep in zip(pairs, kept) if keep])
        if g.is_connected():
            if attempt > 1:
                logging.debug(f'G({n}, {p}) accepted after {attempt} draws')
            return g

    raise SamplingError(
        f'No connected G({n}, {p}) in {MAX_REJECTIONS} consecutive draws; use a larger p.'
    )
