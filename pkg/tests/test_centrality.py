from fractions import Fraction

import pytest
from pydantic import ValidationError

from semimono.centrality import ScoreVector, betweenness, closeness, harmonic, pair_dependency, score_vector
from semimono.graph import Graph
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.errors import DisconnectedGraphError
from semimono.utils.exact_rational import format_exact, parse_exact


class TestCloseness:
    def test_path(self, path3):
        scores = closeness(path3)

        assert scores.peripheralities == (3, 2, 3)
        assert scores.scores == (Fraction(1, 3), Fraction(1, 2), Fraction(1, 3))

    def test_closeness_family(self, closeness_family):
        g, x, y, u, _ = closeness_family
        p = closeness(g).peripheralities
        p_prime = closeness(g.add_edge(x, y)).peripheralities

        assert (p[x], p[u], p[y]) == (81, 81, 81)
        assert (p_prime[x], p_prime[u], p_prime[y]) == (70, 70, 78)

    def test_single_vertex_scores_zero(self):
        scores = closeness(Graph.from_edges(1, []))

        assert scores.scores == (0,)
        assert scores.peripheralities == (0,)

    def test_disconnected_graph_names_a_pair(self):
        g = Graph.from_edge_list('a b\nc d\n')

        with pytest.raises(DisconnectedGraphError) as excinfo:
            closeness(g)

        assert excinfo.value.pair == ('a', 'c')

    def test_payload(self, path3):
        assert closeness(path3).to_payload() == {
            'kind': 'closeness',
            'scores': [
                {'vertex': 'a', 'value': '1/3'}, {'vertex': 'b', 'value': '1/2'}, {'vertex': 'c', 'value': '1/3'},
            ],
            'peripheralities': [3, 2, 3],
        }


class TestHarmonic:
    def test_path(self, path3):
        assert harmonic(path3).scores == (Fraction(3, 2), Fraction(2), Fraction(3, 2))

    def test_isolated_vertices_contribute_nothing(self):
        assert harmonic(Graph.from_edges(2, [])).scores == (0, 0)

    def test_complete_graph(self, k4):
        assert set(harmonic(k4).scores) == {Fraction(3)}

    def test_payload_has_no_peripheralities(self, path3):
        payload = harmonic(path3).to_payload()

        assert 'peripheralities' not in payload
        assert payload['scores'][1] == {'vertex': 'b', 'value': '2/1'}


class TestBetweenness:
    def test_path(self, path3):
        assert betweenness(path3).scores == (0, 1, 0)

    def test_cycle(self, cycle4):
        assert set(betweenness(cycle4).scores) == {Fraction(1, 2)}

    def test_star(self, star):
        # every pair of the four leaves is joined through the hub
        assert betweenness(star).scores == (6, 0, 0, 0, 0)

    def test_betweenness_family_zeros(self, betweenness_family):
        g, x, y, u = betweenness_family

        for graph in (g, g.add_edge(x, y)):
            scores = betweenness(graph)
            assert (scores[x], scores[y], scores[u]) == (0, 0, 0)

    def test_disconnected_graph_sums_per_component(self):
        g = Graph.from_edge_list('a b\nb c\nd e\ne f\n')

        assert betweenness(g).scores == (0, 1, 0, 0, 1, 0)

    @pytest.mark.parametrize('g', [
        Graph.from_edge_list('a b\nb c\nc d\nd a\na c\n'),
        Graph.from_edge_list('1 2\n2 3\n3 4\n4 5\n5 1\n1 6\n6 3\n'),
    ])
    def test_sum_of_pair_dependencies(self, g):
        scores = betweenness(g)
        for u in range(g.n):
            others = [v for v in range(g.n) if v != u]
            expected = sum(
                (pair_dependency(g, u, i, j) for index, i in enumerate(others) for j in others[index + 1:]),
                Fraction(0),
            )
            assert scores[u] == expected


class TestPairDependency:
    def test_path(self, path3):
        assert pair_dependency(path3, 1, 0, 2) == 1

    def test_cycle_middle_vertex(self, cycle4):
        b, a, c = (cycle4.vertex(label) for label in 'bac')

        assert pair_dependency(cycle4, b, a, c) == Fraction(1, 2)

    def test_vertex_off_every_geodesic(self, path3):
        assert pair_dependency(path3, 0, 1, 2) == 0

    @pytest.mark.parametrize('u, i, j', [(0, 0, 2), (1, 0, 0)])
    def test_invalid_arguments(self, path3, u, i, j):
        with pytest.raises(ValueError):
            pair_dependency(path3, u, i, j)

    def test_unreachable_pair(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2)])

        with pytest.raises(DisconnectedGraphError):
            pair_dependency(g, 1, 0, 3)


class TestScoreVector:
    def test_closeness_needs_peripheralities(self):
        with pytest.raises(ValidationError):
            ScoreVector(kind=CentralityKind.CLOSENESS, labels=('a',), scores=(Fraction(0),))

    def test_scores_must_be_reciprocals(self):
        with pytest.raises(ValidationError):
            ScoreVector(
                kind=CentralityKind.CLOSENESS, labels=('a', 'b'), scores=(Fraction(1), Fraction(1, 2)),
                peripheralities=(1, 1),
            )

    def test_dispatch_is_memoized(self, path3):
        assert score_vector(path3, CentralityKind.HARMONIC) is score_vector(path3, 'harmonic')


class TestExactRendering:
    @pytest.mark.parametrize('value, text', [(Fraction(1, 3), '1/3'), (Fraction(4, 2), '2/1'), (0, '0/1')])
    def test_format(self, value, text):
        assert format_exact(value) == text
        assert parse_exact(text) == value

    def test_decimals_are_rejected(self):
        with pytest.raises(ValueError):
            parse_exact('0.5')
