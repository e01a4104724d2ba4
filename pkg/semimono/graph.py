from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Literal

from semimono.utils.errors import GraphInputError, VertexError


class Unreachable(Enum):
    """Distance between two vertices lying in different components."""
    UNREACHABLE = 'unreachable'

    def __repr__(self) -> str:
        return 'UNREACHABLE'


UNREACHABLE = Unreachable.UNREACHABLE

Distance = int | Literal[Unreachable.UNREACHABLE]


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances between every two vertices; `UNREACHABLE` across components."""
    rows: tuple[tuple[Distance, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> Distance:
        i, j = pair
        return self.rows[i][j]

    @property
    def n(self) -> int:
        return len(self.rows)

    def row(self, s: int) -> tuple[Distance, ...]:
        return self.rows[s]

    def is_finite(self, i: int, j: int) -> bool:
        return self.rows[i][j] is not UNREACHABLE


@dataclass(frozen=True)
class PathCountMatrix:
    """Number of geodesics between every two vertices (1 on the diagonal, 0 across components)."""
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.rows[i][j]

    @property
    def n(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on the dense vertex ids 0..n-1.

    `adjacency[v]` is the sorted tuple of neighbors of `v`; `labels[v]` is the external name of `v` (defaults to
    the id itself rendered as a string). Adding an edge returns a new graph.
    """
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f'Vertex count must be non-negative, got {self.n}.')

        if len(self.adjacency) != self.n:
            raise GraphInputError(f'Expected {self.n} adjacency rows, got {len(self.adjacency)}.')

        if not self.labels:
            object.__setattr__(self, 'labels', tuple(str(v) for v in range(self.n)))

        elif len(self.labels) != self.n:
            raise GraphInputError(f'Expected {self.n} labels, got {len(self.labels)}.')

        if len(set(self.labels)) != self.n:
            raise GraphInputError('Vertex labels must be unique.')

        if any(not label or label.split() != [label] or label.startswith('#') for label in self.labels):
            raise GraphInputError('Vertex labels must be non-empty, whitespace-free and must not start with `#`.')

        for v, neighbors in enumerate(self.adjacency):
            if list(neighbors) != sorted(set(neighbors)):
                raise GraphInputError(f'Neighbors of vertex {v} must be sorted and free of duplicates.')

            if v in neighbors:
                raise GraphInputError(f'Self-loop at vertex {self.labels[v]!r}.')

            for w in neighbors:
                if not 0 <= w < self.n:
                    raise VertexError(f'Vertex {v} lists out-of-range neighbor {w}.')

                if v not in self.neighbor_sets[w]:
                    raise GraphInputError(f'Adjacency is not symmetric: {v}-{w} listed only at {v}.')

    # ----- CONSTRUCTION -----

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Iterable[str] | None = None) -> 'Graph':
        """Builds a graph from vertex-id pairs; duplicate edges (in either orientation) collapse."""
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]

        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexError(f'Edge ({u}, {v}) has an endpoint outside 0..{n - 1}.')

            if u == v:
                raise GraphInputError(f'Self-loop at vertex {u}.')

            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)

        return cls(
            n=n,
            adjacency=tuple(tuple(sorted(neighbors)) for neighbors in neighbor_sets),
            labels=tuple(labels) if labels is not None else (),
        )

    @classmethod
    def from_edge_list(cls, text: str) -> 'Graph':
        """Parses the edge-list text format.

        One edge per line as two whitespace-separated labels; blank lines and lines starting with `#` are ignored.
        Labels get dense ids in first-seen order and duplicate edges collapse silently.

        Raises:
            GraphInputError: on a self-loop, on a line without exactly two labels, on a label starting with `#`, or
                when no edge is found.
        """
        label_ids: dict[str, int] = {}
        edges = []

        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.strip()
            if not line or line.startswith('#'):
                continue

            tokens = line.split()
            if len(tokens) != 2:
                raise GraphInputError(
                    f'Malformed edge at line {line_number}: expected two labels, found {len(tokens)}.', line_number
                )

            first, second = tokens
            if second.startswith('#'):
                raise GraphInputError(
                    f'Label {second!r} at line {line_number} starts with `#` and would read back as a comment.',
                    line_number,
                )

            if first == second:
                raise GraphInputError(f'Self-loop at line {line_number}: {first!r}.', line_number)

            edges.append((label_ids.setdefault(first, len(label_ids)), label_ids.setdefault(second, len(label_ids))))

        if not edges:
            raise GraphInputError('Empty edge list: the document holds no edges.')

        return cls.from_edges(len(label_ids), edges, labels=label_ids)

    def add_edge(self, x: int, y: int) -> 'Graph':
        """Returns a new graph with the edge x-y added; the receiver is left untouched."""
        self.check_vertex(x)
        self.check_vertex(y)

        if x == y:
            raise GraphInputError(f'Cannot add self-loop at {self.labels[x]!r}.')

        if self.has_edge(x, y):
            raise GraphInputError(f'Edge {self.labels[x]}-{self.labels[y]} is already present.')

        adjacency = list(self.adjacency)
        adjacency[x] = tuple(sorted(adjacency[x] + (y,)))
        adjacency[y] = tuple(sorted(adjacency[y] + (x,)))

        return Graph(n=self.n, adjacency=tuple(adjacency), labels=self.labels)

    # ----- STRUCTURE -----

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(neighbors) for neighbors in self.adjacency)

    @cached_property
    def label_ids(self) -> dict[str, int]:
        return {label: v for v, label in enumerate(self.labels)}

    @property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending order."""
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexError(f'Vertex id {v} is outside 0..{self.n - 1}.')

    def vertex(self, label: str) -> int:
        try:
            return self.label_ids[label]
        except KeyError:
            raise VertexError(f'Unknown vertex label {label!r}.') from None

    def to_edge_list(self) -> str:
        """Renders the edge-list text format; isolated vertices cannot be expressed and are dropped."""
        return ''.join(f'{self.labels[u]} {self.labels[v]}\n' for u, v in self.edges())

    # ----- DISTANCES & GEODESICS -----

    def bfs_distances(self, s: int) -> tuple[Distance, ...]:
        self.check_vertex(s)
        return self.single_source_geodesics(s)[0]

    def single_source_geodesics(self, s: int) -> tuple[tuple[Distance, ...], tuple[int, ...]]:
        """BFS from `s` returning hop distances and geodesic counts, accumulated along BFS DAG edges."""
        distances: list[Distance] = [UNREACHABLE] * self.n
        path_counts = [0] * self.n
        distances[s] = 0
        path_counts[s] = 1

        queue = deque([s])
        while queue:
            v = queue.popleft()
            next_distance = distances[v] + 1
            for w in self.adjacency[v]:
                if distances[w] is UNREACHABLE:
                    distances[w] = next_distance
                    queue.append(w)

                if distances[w] == next_distance:
                    path_counts[w] += path_counts[v]

        return tuple(distances), tuple(path_counts)

    @cached_property
    def shortest_paths(self) -> tuple[DistanceMatrix, PathCountMatrix]:
        rows = [self.single_source_geodesics(s) for s in range(self.n)]
        return DistanceMatrix(tuple(row[0] for row in rows)), PathCountMatrix(tuple(row[1] for row in rows))

    def all_pairs(self) -> tuple[DistanceMatrix, PathCountMatrix]:
        """Distance and geodesic-count matrices, computed once per graph."""
        return self.shortest_paths

    @property
    def distances(self) -> DistanceMatrix:
        return self.shortest_paths[0]

    @property
    def path_counts(self) -> PathCountMatrix:
        return self.shortest_paths[1]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True

        return UNREACHABLE not in self.bfs_distances(0)

    def first_unreachable_pair(self) -> tuple[int, int] | None:
        if self.n <= 1:
            return None

        for v, distance in enumerate(self.bfs_distances(0)):
            if distance is UNREACHABLE:
                return 0, v

        return None

    def ego_is_clique(self, u: int) -> bool:
        """True iff every two distinct neighbors of `u` are adjacent (the ego network of `u` is complete)."""
        self.check_vertex(u)
        neighbors = self.adjacency[u]

        return all(
            self.has_edge(v, w)
            for index, v in enumerate(neighbors)
            for w in neighbors[index + 1:]
        )
