import pytest

from semimono.graph import Graph, UNREACHABLE
from semimono.utils.errors import GraphInputError, VertexError


class TestFromEdgeList:
    def test_path(self):
        g = Graph.from_edge_list('a b\nb c')

        assert g.n == 3
        assert g.edge_count == 2
        assert g.labels == ('a', 'b', 'c')
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_self_loop_names_the_line(self):
        with pytest.raises(GraphInputError, match='line 1') as excinfo:
            Graph.from_edge_list('a a')

        assert excinfo.value.line_number == 1

    def test_duplicates_collapse(self):
        g = Graph.from_edge_list('a b\na b\nb a\n')

        assert g.n == 2
        assert g.edge_count == 1

    def test_comments_and_blank_lines_are_skipped(self):
        g = Graph.from_edge_list('# header\n\n  a b  \n# a c\nb c\n')

        assert g.labels == ('a', 'b', 'c')
        assert g.edge_count == 2

    @pytest.mark.parametrize('text', ['', '\n\n', '# only a comment\n'])
    def test_empty_document(self, text):
        with pytest.raises(GraphInputError, match='Empty'):
            Graph.from_edge_list(text)

    @pytest.mark.parametrize('line', ['a', 'a b c'])
    def test_malformed_line(self, line):
        with pytest.raises(GraphInputError, match='line 2'):
            Graph.from_edge_list(f'x y\n{line}\n')

    def test_hash_label_names_the_line(self):
        with pytest.raises(GraphInputError, match='line 2') as excinfo:
            Graph.from_edge_list('x y\na #b\n#b c\n')

        assert excinfo.value.line_number == 2

    def test_edge_list_round_trip(self, cycle4):
        def labeled_edges(g: Graph) -> set[frozenset[str]]:
            return {frozenset((g.labels[u], g.labels[v])) for u, v in g.edges()}

        again = Graph.from_edge_list(cycle4.to_edge_list())

        assert set(again.labels) == set(cycle4.labels)
        assert labeled_edges(again) == labeled_edges(cycle4)


class TestConstruction:
    def test_asymmetric_adjacency_is_rejected(self):
        with pytest.raises(GraphInputError, match='symmetric'):
            Graph(n=2, adjacency=((1,), ()))

    def test_out_of_range_edge(self):
        with pytest.raises(VertexError):
            Graph.from_edges(2, [(0, 2)])

    def test_labels_must_be_unique(self):
        with pytest.raises(GraphInputError, match='unique'):
            Graph.from_edges(2, [(0, 1)], labels=['a', 'a'])

    def test_default_labels_are_ids(self):
        assert Graph.from_edges(3, [(0, 1)]).labels == ('0', '1', '2')

    def test_unknown_label(self, path3):
        with pytest.raises(VertexError, match="'z'"):
            path3.vertex('z')


class TestAddEdge:
    def test_adds_exactly_one_edge(self, closeness_family):
        g, x, y, _, _ = closeness_family
        g_prime = g.add_edge(x, y)

        assert (g.edge_count, g_prime.edge_count) == (35, 36)
        assert g_prime.distances[x, y] == 1
        assert not g.has_edge(x, y)

    def test_existing_edge(self, k4):
        with pytest.raises(GraphInputError, match='already present'):
            k4.add_edge(0, 1)

    def test_self_loop(self, path3):
        with pytest.raises(GraphInputError):
            path3.add_edge(1, 1)


class TestDistances:
    def test_path(self, path3):
        assert path3.bfs_distances(0) == (0, 1, 2)

    def test_star_center(self, star):
        assert star.bfs_distances(star.vertex('hub')) == (0, 1, 1, 1, 1)

    def test_closeness_family_from_u(self, closeness_family):
        g, _, y, u, w = closeness_family
        distances = g.bfs_distances(u)

        assert distances[y] == 3
        assert distances[w] == 1

    def test_unreachable(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])

        assert g.bfs_distances(0) == (0, 1, UNREACHABLE, UNREACHABLE)
        assert not g.distances.is_finite(1, 3)
        assert g.path_counts[1, 3] == 0

    def test_cycle_opposite_corners(self, cycle4):
        distances, path_counts = cycle4.all_pairs()
        a, c = cycle4.vertex('a'), cycle4.vertex('c')

        assert distances[a, c] == 2
        assert path_counts[a, c] == 2

    def test_path_count_of_path(self, path3):
        assert path3.path_counts[0, 2] == 1
        assert path3.path_counts[1, 1] == 1

    def test_complete_graph(self, k4):
        distances, path_counts = k4.all_pairs()

        for i in range(4):
            for j in range(4):
                if i != j:
                    assert (distances[i, j], path_counts[i, j]) == (1, 1)


class TestPredicates:
    def test_connected(self, path3):
        assert path3.is_connected()

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])

        assert not g.is_connected()
        assert g.first_unreachable_pair() == (0, 2)

    def test_single_vertex(self):
        assert Graph.from_edges(1, []).is_connected()

    def test_ego_clique(self, star, path3, betweenness_family):
        assert star.ego_is_clique(star.vertex('l1'))
        assert not path3.ego_is_clique(path3.vertex('b'))
        assert betweenness_family.graph.ego_is_clique(betweenness_family.x)
