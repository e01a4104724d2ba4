"""Parameterized counterexample families and self-checking reports of what is claimed about them."""
import logging
from itertools import combinations
from typing import NamedTuple

from semimono.centrality import betweenness
from semimono.graph import Graph
from semimono.scenario import EdgeAdditionScenario
from semimono.tools.naive_betweenness_oracle import naive_betweenness_oracle
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.claim_info import ClaimReport
from semimono.utils.errors import ClaimPreconditionError

MIN_CLOSENESS_CLAIM_K = 10


class ClosenessFamily(NamedTuple):
    graph: Graph
    x: int
    y: int
    u: int
    w: int


class BetweennessFamily(NamedTuple):
    graph: Graph
    x: int
    y: int
    u: int


def build_closeness_family(k: int) -> ClosenessFamily:
    """Two stars joined through x: y with k leaves, w with k+4 leaves.

    y reaches x through a1 and a2; x reaches w through b1, b2 and u; a1 is also adjacent to b1.
    The graph has 2k+12 vertices and 2k+15 edges.
    """
    if k < 1:
        raise ValueError(f'The closeness family needs k >= 1, got k={k}.')

    labels = ['x', 'y', 'u', 'w', 'a1', 'a2', 'b1', 'b2']
    labels += [f'y{i}' for i in range(1, k + 1)] + [f'w{j}' for j in range(1, k + 5)]
    v = {label: index for index, label in enumerate(labels)}

    named_edges = [
        ('y', 'a1'), ('y', 'a2'), ('a1', 'x'), ('a2', 'x'), ('a1', 'b1'),
        ('x', 'b1'), ('x', 'b2'), ('x', 'u'), ('b1', 'w'), ('b2', 'w'), ('u', 'w'),
    ]
    named_edges += [('y', f'y{i}') for i in range(1, k + 1)] + [('w', f'w{j}') for j in range(1, k + 5)]

    graph = Graph.from_edges(len(labels), [(v[a], v[b]) for a, b in named_edges], labels=labels)
    return ClosenessFamily(graph, v['x'], v['y'], v['u'], v['w'])


def build_betweenness_family(m: int) -> BetweennessFamily:
    """A clique on m vertices plus three pairwise non-adjacent vertices x, y, u, each adjacent to the whole clique."""
    if m < 1:
        raise ValueError(f'The betweenness family needs m >= 1, got m={m}.')

    labels = ['x', 'y', 'u'] + [f'c{i}' for i in range(1, m + 1)]
    clique = range(3, m + 3)
    edges = list(combinations(clique, 2)) + [(outer, c) for outer in (0, 1, 2) for c in clique]

    return BetweennessFamily(Graph.from_edges(m + 3, edges, labels=labels), 0, 1, 2)


def closeness_closed_forms(k: int) -> dict[str, int]:
    """Peripheralities of u, x, y before and after adding x-y, as functions of k."""
    return {
        'p(u)': 2 * (k + 4) + 4 * k + 13,
        'p(x)': 3 * (k + 4) + 3 * k + 9,
        'p(y)': 4 * (k + 4) + k + 15,
        "p'(u)": 2 * (k + 4) + 3 * k + 12,
        "p'(x)": 3 * (k + 4) + 2 * k + 8,
        "p'(y)": 4 * (k + 4) + k + 12,
    }


def validate_closeness_claims(k: int) -> ClaimReport:
    """Recomputes everything claimed about the closeness family from scratch (BFS) and records each claim.

    Raises:
        ClaimPreconditionError: for k < 10, where the claims are not stated.
    """
    if k < MIN_CLOSENESS_CLAIM_K:
        raise ClaimPreconditionError(f'Closeness family claims hold for k >= {MIN_CLOSENESS_CLAIM_K}, got k={k}.')

    graph, x, y, u, _ = build_closeness_family(k)
    report = ClaimReport(family='closeness', parameter=k)

    report.expect('vertex count = 2k+12', 2 * k + 12, graph.n)
    report.expect('edge count = 2k+15', 2 * k + 15, graph.edge_count)
    report.expect('connected', True, graph.is_connected())
    report.expect('x, y non-adjacent', False, graph.has_edge(x, y))

    s = EdgeAdditionScenario(graph, x, y)
    p = s.scores(CentralityKind.CLOSENESS).peripheralities
    p_prime = s.scores_prime(CentralityKind.CLOSENESS).peripheralities
    computed = {
        'p(u)': p[u], 'p(x)': p[x], 'p(y)': p[y], "p'(u)": p_prime[u], "p'(x)": p_prime[x], "p'(y)": p_prime[y],
    }
    for name, closed_form in closeness_closed_forms(k).items():
        report.expect(f'{name} closed form', closed_form, computed[name])

    report.expect('p(x) = p(u)', True, p[x] == p[u])
    report.expect("p'(x) = p'(u)", True, p_prime[x] == p_prime[u])
    report.expect('p(y) <= p(u)', True, p[y] <= p[u])
    report.expect("p'(y) > p'(u)", True, p_prime[y] > p_prime[u])

    partition = s.basins()
    report.expect('|K_xy| = k+11', k + 11, len(partition.k_xy))
    report.expect('|K_yx| = k+3', k + 3, len(partition.k_yx))
    report.expect('basin overlap = {a1, a2}', ['a1', 'a2'], partition.overlap)

    rank = s.rank_semi_monotone(CentralityKind.CLOSENESS)
    report.expect('rank semi-monotone at x', True, rank.holds_at_x)
    report.expect('rank semi-monotone at y', False, rank.holds_at_y)
    report.expect('u witnesses the failure at y', True, u in {witness.vertex for witness in rank.witnesses_at('y')})

    strict_rank = s.strict_rank_semi_monotone(CentralityKind.CLOSENESS)
    report.expect('strictly rank semi-monotone at x', False, strict_rank.holds_at_x)
    report.expect('strictly rank semi-monotone at y', False, strict_rank.holds_at_y)

    identity = s.peripherality_identity()
    report.expect("p'(x) - p'(y) = |K_yx| - |K_xy|", identity.rhs, identity.lhs)

    log_failures(report)
    return report


def validate_betweenness_claims(m: int) -> ClaimReport:
    """Checks the zero scores (fast path, geodesic oracle and ego cliques) and the failed verdicts of the family."""
    graph, x, y, u = build_betweenness_family(m)
    report = ClaimReport(family='betweenness', parameter=m)

    report.expect('vertex count = m+3', m + 3, graph.n)
    report.expect('edge count = m(m-1)/2 + 3m', m * (m - 1) // 2 + 3 * m, graph.edge_count)

    s = EdgeAdditionScenario(graph, x, y)
    for name, g in (('G', s.g), ("G'", s.g_prime)):
        # diameter 2, so every pair has at most m geodesics
        fast, oracle = betweenness(g), naive_betweenness_oracle(g, max_order=g.n)
        for label, v in (('x', x), ('y', y), ('u', u)):
            report.expect(f'b({label}) = 0 in {name}', 0, fast[v])
            report.expect(f'oracle b({label}) = 0 in {name}', 0, oracle[v])

        for label, v in (('x', x), ('y', y)):
            report.expect(f'ego network of {label} is a clique in {name}', True, g.ego_is_clique(v))

    score = s.score_semi_monotone(CentralityKind.BETWEENNESS)
    report.expect('score semi-monotone', False, score.holds)

    strict_rank = s.strict_rank_semi_monotone(CentralityKind.BETWEENNESS)
    report.expect('strictly rank semi-monotone at x', False, strict_rank.holds_at_x)
    report.expect('strictly rank semi-monotone at y', False, strict_rank.holds_at_y)

    log_failures(report)
    return report


def log_failures(report: ClaimReport) -> None:
    for claim in report.failed_claims:
        logging.warning(
            f'{report.family} family ({report.parameter}): claim `{claim.name}` failed, '
            f'expected {claim.expected}, got {claim.actual}'
        )
