import pytest

from semimono.centrality import closeness
from semimono.families import build_betweenness_family, build_closeness_family, closeness_closed_forms, \
    validate_betweenness_claims, validate_closeness_claims
from semimono.graph import Graph
from semimono.utils.errors import ClaimPreconditionError


class TestClosenessFamily:
    def test_k10(self):
        g, x, y, u, w = build_closeness_family(10)

        assert (g.n, g.edge_count) == (32, 35)
        assert [g.labels[v] for v in (x, y, u, w)] == ['x', 'y', 'u', 'w']
        assert g.is_connected()
        assert not g.has_edge(x, y)

    @pytest.mark.parametrize('k', range(1, 31))
    def test_closed_forms(self, k):
        g, x, y, u, _ = build_closeness_family(k)
        p = closeness(g).peripheralities
        p_prime = closeness(g.add_edge(x, y)).peripheralities

        assert (g.n, g.edge_count) == (2 * k + 12, 2 * k + 15)
        assert closeness_closed_forms(k) == {
            'p(u)': p[u], 'p(x)': p[x], 'p(y)': p[y], "p'(u)": p_prime[u], "p'(x)": p_prime[x], "p'(y)": p_prime[y],
        }

    def test_closed_forms_at_k10(self):
        assert closeness_closed_forms(10) == {
            'p(u)': 81, 'p(x)': 81, 'p(y)': 81, "p'(u)": 70, "p'(x)": 70, "p'(y)": 78,
        }

    def test_builder_is_deterministic(self):
        assert build_closeness_family(12) == build_closeness_family(12)

    def test_edge_list_round_trip(self):
        g = build_closeness_family(10).graph

        assert Graph.from_edge_list(g.to_edge_list()).edge_count == g.edge_count

    def test_invalid_parameter(self):
        with pytest.raises(ValueError):
            build_closeness_family(0)


class TestValidateClosenessClaims:
    @pytest.mark.parametrize('k', range(10, 31))
    def test_all_claims_pass(self, k):
        report = validate_closeness_claims(k)

        assert report.passed, report.failed_claims

    def test_equality_branch_at_k10(self):
        claims = {claim.name: claim for claim in validate_closeness_claims(10).claims}

        assert claims['p(y) closed form'].actual == claims['p(u) closed form'].actual == '81'

    def test_strict_branch_at_k11(self):
        claims = {claim.name: claim for claim in validate_closeness_claims(11).claims}

        assert claims['p(y) closed form'].actual == '86'
        assert claims['p(u) closed form'].actual == '87'

    def test_below_the_hypothesis(self):
        with pytest.raises(ClaimPreconditionError):
            validate_closeness_claims(9)


class TestBetweennessFamily:
    def test_m4(self):
        g, x, y, u = build_betweenness_family(4)

        assert (g.n, g.edge_count) == (7, 18)
        assert not any(g.has_edge(a, b) for a, b in ((x, y), (x, u), (y, u)))

    def test_invalid_parameter(self):
        with pytest.raises(ValueError):
            build_betweenness_family(0)

    @pytest.mark.parametrize('m', range(1, 11))
    def test_all_claims_pass(self, m):
        report = validate_betweenness_claims(m)

        assert report.passed, report.failed_claims

    def test_oracle_claims_reach_thirteen_vertices(self):
        report = validate_betweenness_claims(10)

        assert {"oracle b(x) = 0 in G", "oracle b(u) = 0 in G'"} <= {claim.name for claim in report.claims}
        assert report.passed

    def test_report_payload(self):
        payload = validate_betweenness_claims(4).model_dump(mode='json')

        assert payload['family'] == 'betweenness'
        assert payload['parameter'] == 4
        assert payload['passed'] is True
        assert all(claim['passed'] for claim in payload['claims'])
