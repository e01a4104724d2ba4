from itertools import combinations
from typing import Iterator

from semimono.graph import Graph

MAX_ENUMERATION_ORDER = 7


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Yields every connected labeled simple graph on `n` vertices.

    Walks all 2^(n(n-1)/2) edge bitmasks in increasing order (bit k stands for the k-th pair of
    `itertools.combinations(range(n), 2)`) and keeps the connected ones; no isomorphism reduction.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f'Exhaustive enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got n={n}.')

    pairs = list(combinations(range(n), 2))
    everyone = (1 << n) - 1

    for mask in range(1 << len(pairs)):
        neighbor_bits = [0] * n
        edges = []
        for index, (u, v) in enumerate(pairs):
            if mask >> index & 1:
                neighbor_bits[u] |= 1 << v
                neighbor_bits[v] |= 1 << u
                edges.append((u, v))

        if reaches_everyone(neighbor_bits, everyone):
            yield Graph.from_edges(n, edges)


def reaches_everyone(neighbor_bits: list[int], everyone: int) -> bool:
    reached = frontier = 1
    while frontier:
        expanded = 0
        for v in range(len(neighbor_bits)):
            if frontier >> v & 1:
                expanded |= neighbor_bits[v]

        frontier = expanded & ~reached
        reached |= frontier

    return reached == everyone


def count_connected_graphs(n: int) -> int:
    return sum(1 for _ in enumerate_connected_graphs(n))
