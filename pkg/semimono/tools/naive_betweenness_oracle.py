from collections import Counter
from fractions import Fraction

from semimono.centrality import ScoreVector
from semimono.graph import Graph, UNREACHABLE
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.errors import OracleLimitError

MAX_ORACLE_ORDER = 12


def naive_betweenness_oracle(g: Graph, max_order: int = MAX_ORACLE_ORDER) -> ScoreVector:
    """Betweenness by listing every geodesic of every unordered pair and counting its interior vertices.

    Exponential in the worst case, so only meant for cross-validating the fast path on small graphs.
    Graphs above `max_order` vertices are refused; callers that know the geodesic count stays small (diameter-2
    graphs, say) may raise the limit.
    """
    if g.n > max_order:
        raise OracleLimitError(f'The geodesic-enumeration oracle is limited to n <= {max_order}, got n={g.n}.')

    totals = [Fraction(0)] * g.n

    for j in range(g.n):
        to_j = g.bfs_distances(j)
        for i in range(j):
            if to_j[i] is UNREACHABLE:
                continue

            geodesics = list_geodesics(g, i, j, to_j)
            interior_visits = Counter(v for path in geodesics for v in path[1:-1])
            for v, visits in interior_visits.items():
                totals[v] += Fraction(visits, len(geodesics))

    return ScoreVector(kind=CentralityKind.BETWEENNESS, labels=g.labels, scores=tuple(totals))


def list_geodesics(g: Graph, source: int, target: int, to_target: tuple) -> list[tuple[int, ...]]:
    """Depth-first walk from `source` that only steps to a neighbor one hop closer to `target`."""
    geodesics = []
    stack = [(source,)]

    while stack:
        path = stack.pop()
        tip = path[-1]
        if tip == target:
            geodesics.append(path)
            continue

        for w in g.adjacency[tip]:
            if to_target[w] == to_target[tip] - 1:
                stack.append(path + (w,))

    return geodesics
