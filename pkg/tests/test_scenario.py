from fractions import Fraction

import pytest

from semimono.graph import Graph
from semimono.scenario import EdgeAdditionScenario
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.errors import DisconnectedGraphError, ScenarioError, VertexError


@pytest.fixture
def closeness_scenario(closeness_family) -> EdgeAdditionScenario:
    g, x, y, _, _ = closeness_family
    return EdgeAdditionScenario(g, x, y)


@pytest.fixture
def betweenness_scenario(betweenness_family) -> EdgeAdditionScenario:
    g, x, y, _ = betweenness_family
    return EdgeAdditionScenario(g, x, y)


class TestPreconditions:
    def test_same_endpoint(self, path3):
        with pytest.raises(ScenarioError, match='differ'):
            EdgeAdditionScenario(path3, 0, 0)

    def test_adjacent_pair(self, path3):
        with pytest.raises(ScenarioError, match='already adjacent'):
            EdgeAdditionScenario.from_labels(path3, 'a', 'b')

    def test_disconnected_graph(self):
        g = Graph.from_edge_list('a b\nb c\nd e\n')

        with pytest.raises(DisconnectedGraphError):
            EdgeAdditionScenario.from_labels(g, 'a', 'c')

    def test_two_vertices_without_the_edge(self):
        with pytest.raises(DisconnectedGraphError):
            EdgeAdditionScenario(Graph.from_edges(2, []), 0, 1)

    def test_unknown_label(self, path3):
        with pytest.raises(VertexError):
            EdgeAdditionScenario.from_labels(path3, 'a', 'z')

    def test_all_of_lists_non_adjacent_pairs(self, cycle4):
        pairs = [(s.x, s.y) for s in EdgeAdditionScenario.all_of(cycle4)]

        assert pairs == [(0, 2), (1, 3)]

    def test_receiver_graph_is_untouched(self, path3):
        s = EdgeAdditionScenario.from_labels(path3, 'a', 'c')

        assert s.g_prime.edge_count == 3
        assert path3.edge_count == 2


class TestBasins:
    def test_path(self, path3):
        partition = EdgeAdditionScenario.from_labels(path3, 'a', 'c').basins()
        dumped = partition.model_dump(mode='json')

        assert (dumped['k_xy'], dumped['k_yx'], dumped['overlap']) == (['a', 'b'], ['b', 'c'], ['b'])

    def test_closeness_family(self, closeness_scenario):
        partition = closeness_scenario.basins()

        assert (len(partition.k_xy), len(partition.k_yx)) == (21, 13)
        assert partition.overlap == ['a1', 'a2']

    def test_symmetric_pair_gives_equal_basins(self, cycle4):
        partition = EdgeAdditionScenario.from_labels(cycle4, 'a', 'c').basins()

        assert len(partition.k_xy) == len(partition.k_yx) == 3


class TestBasinDominance:
    def test_closeness_family_ties_at_u(self, closeness_scenario, closeness_family):
        report = closeness_scenario.basin_dominance(CentralityKind.CLOSENESS)
        tie_at_u = [violation for violation in report.violations if violation.vertex == closeness_family.u]

        assert report.nonstrict_holds
        assert not report.strict_holds
        assert len(tie_at_u) == 1
        assert tie_at_u[0].delta == tie_at_u[0].endpoint_delta == Fraction(1, 70) - Fraction(1, 81)

    def test_harmonic_is_strict_on_the_closeness_family(self, closeness_scenario):
        assert closeness_scenario.basin_dominance(CentralityKind.HARMONIC).strict_holds

    def test_betweenness_family(self, betweenness_scenario):
        assert betweenness_scenario.basin_dominance(CentralityKind.BETWEENNESS).nonstrict_holds


class TestScoreSemiMonotonicity:
    @pytest.mark.parametrize('kind', [CentralityKind.CLOSENESS, CentralityKind.HARMONIC])
    def test_geometric_measures_gain_at_both_endpoints(self, closeness_scenario, kind):
        verdict = closeness_scenario.score_semi_monotone(kind)

        assert verdict.holds_at_both
        assert verdict.witnesses == []

    def test_betweenness_family_fails(self, betweenness_scenario):
        verdict = betweenness_scenario.score_semi_monotone(CentralityKind.BETWEENNESS)

        assert not verdict.holds
        assert [(w.side, w.before, w.after) for w in verdict.witnesses] == [('x', 0, 0), ('y', 0, 0)]

    def test_betweenness_endpoint_deltas_are_nonnegative(self, betweenness_scenario):
        assert betweenness_scenario.endpoint_deltas_nonnegative(CentralityKind.BETWEENNESS).holds_at_both


class TestRankSemiMonotonicity:
    def test_closeness_family(self, closeness_scenario, closeness_family):
        verdict = closeness_scenario.rank_semi_monotone(CentralityKind.CLOSENESS)

        assert verdict.holds_at_x
        assert not verdict.holds_at_y
        assert verdict.holds
        assert closeness_family.u in {witness.vertex for witness in verdict.witnesses_at('y')}

    def test_betweenness_family_holds_at_both(self, betweenness_scenario):
        assert betweenness_scenario.rank_semi_monotone(CentralityKind.BETWEENNESS).holds_at_both

    def test_strict_closeness_family_fails_at_both(self, closeness_scenario):
        verdict = closeness_scenario.strict_rank_semi_monotone(CentralityKind.CLOSENESS)

        assert not verdict.holds_at_x
        assert not verdict.holds_at_y

    def test_strict_betweenness_family_fails_at_both(self, betweenness_scenario, betweenness_family):
        verdict = betweenness_scenario.strict_rank_semi_monotone(CentralityKind.BETWEENNESS)

        assert not verdict.holds
        assert betweenness_family.u in {witness.vertex for witness in verdict.witnesses_at('x')}

    def test_verdict_payload(self, closeness_scenario):
        payload = closeness_scenario.rank_semi_monotone(CentralityKind.CLOSENESS).model_dump(mode='json')

        assert payload['definition'] == 'rank'
        assert payload['holds'] is True
        assert payload['holds_at_both'] is False
        witness = next(w for w in payload['witnesses'] if w['z'] == 'u')
        assert (witness['before'], witness['after']) == ('1/81', '1/70')
        assert (witness['endpoint_before'], witness['endpoint_after']) == ('1/81', '1/78')


class TestDistanceIdentities:
    def test_peripherality_identity_on_the_closeness_family(self, closeness_scenario):
        identity = closeness_scenario.peripherality_identity()

        assert (identity.lhs, identity.rhs) == (-8, -8)
        assert identity.holds

    def test_peripherality_identity_on_a_symmetric_pair(self, cycle4):
        identity = EdgeAdditionScenario.from_labels(cycle4, 'a', 'c').peripherality_identity()

        assert (identity.lhs, identity.rhs) == (0, 0)

    def test_equidistant_vertices_keep_their_score(self, closeness_scenario):
        assert closeness_scenario.equidistant_stability(CentralityKind.CLOSENESS) == []
        assert closeness_scenario.equidistant_stability(CentralityKind.HARMONIC) == []

    def test_equidistant_stability_is_geometric_only(self, closeness_scenario):
        with pytest.raises(ValueError):
            closeness_scenario.equidistant_stability(CentralityKind.BETWEENNESS)
