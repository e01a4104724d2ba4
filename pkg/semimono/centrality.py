from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import lcm

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from semimono.graph import Graph, UNREACHABLE
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.errors import DisconnectedGraphError
from semimono.utils.exact_rational import format_exact

ExactScore = Fraction


class ScoreVector(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: CentralityKind
    labels: tuple[str, ...] = Field(exclude=True, description='External label of every vertex, by id')
    scores: tuple[Fraction, ...] = Field(description='Exact score of every vertex, by id')
    peripheralities: tuple[int, ...] | None = Field(
        default=None, description='Sum of distances of every vertex; present for closeness only'
    )

    @model_validator(mode='after')
    def validate_shape(self):
        if len(self.scores) != len(self.labels):
            raise ValueError(f'{len(self.scores)} scores given for {len(self.labels)} vertices.')

        if (self.kind is CentralityKind.CLOSENESS) != (self.peripheralities is not None):
            raise ValueError('Peripheralities must be present exactly when the kind is closeness.')

        if self.peripheralities is not None:
            if len(self.peripheralities) != len(self.scores):
                raise ValueError('Peripheralities and scores must have the same length.')

            if any(score != (Fraction(1, p) if p else 0) for score, p in zip(self.scores, self.peripheralities)):
                raise ValueError('Closeness scores must be the reciprocals of the peripheralities.')

        return self

    @field_serializer('scores')
    def serialize_scores(self, scores: tuple[Fraction, ...]) -> list[dict[str, str]]:
        return [{'vertex': label, 'value': format_exact(value)} for label, value in zip(self.labels, scores)]

    def __getitem__(self, v: int) -> Fraction:
        return self.scores[v]

    def __len__(self) -> int:
        return len(self.scores)

    def to_payload(self) -> dict:
        return self.model_dump(mode='json', exclude_none=True)


def closeness(g: Graph) -> ScoreVector:
    """Reciprocal of the peripherality (sum of distances); a single vertex scores 0.

    Raises:
        DisconnectedGraphError: naming a pair of vertices that cannot reach each other.
    """
    unreachable_pair = g.first_unreachable_pair()
    if unreachable_pair is not None:
        source, target = (g.labels[v] for v in unreachable_pair)
        raise DisconnectedGraphError(
            f'Closeness is undefined on a disconnected graph: {source!r} cannot reach {target!r}.',
            pair=(source, target),
        )

    peripheralities = tuple(sum(row) for row in g.distances.rows)
    return ScoreVector(
        kind=CentralityKind.CLOSENESS,
        labels=g.labels,
        scores=tuple(Fraction(1, p) if p else Fraction(0) for p in peripheralities),
        peripheralities=peripheralities,
    )


def harmonic(g: Graph) -> ScoreVector:
    """Sum of reciprocal distances; unreachable vertices contribute nothing."""
    scores = []
    for row in g.distances.rows:
        vertices_per_distance = Counter(d for d in row if d is not UNREACHABLE and d > 0)
        scores.append(sum((Fraction(count, d) for d, count in vertices_per_distance.items()), Fraction(0)))

    return ScoreVector(kind=CentralityKind.HARMONIC, labels=g.labels, scores=tuple(scores))


def betweenness(g: Graph) -> ScoreVector:
    """Exact betweenness summed over unordered pairs {i, j} with both endpoints distinct from the vertex.

    Brandes' dependency accumulation, run in integers: for a source `s` every dependency is scaled by the least
    common multiple `L` of the geodesic counts from `s`, which keeps every intermediate value integral.
    """
    totals = [Fraction(0)] * g.n

    for s in range(g.n):
        distances, path_counts = g.single_source_geodesics(s)
        reachable = sorted((v for v in range(g.n) if distances[v] is not UNREACHABLE), key=distances.__getitem__)
        scale = lcm(*(path_counts[v] for v in reachable))
        scaled_dependency = [0] * g.n

        for w in reversed(reachable):
            carried = scale + scaled_dependency[w]
            for v in g.adjacency[w]:
                if distances[v] is not UNREACHABLE and distances[v] == distances[w] - 1:
                    scaled_dependency[v] += path_counts[v] * carried // path_counts[w]

        for v in reachable:
            if v != s and scaled_dependency[v]:
                totals[v] += Fraction(scaled_dependency[v], scale)

    # every unordered pair was reached once from each of its endpoints
    return ScoreVector(kind=CentralityKind.BETWEENNESS, labels=g.labels, scores=tuple(total / 2 for total in totals))


def pair_dependency(g: Graph, u: int, i: int, j: int) -> ExactScore:
    """Fraction of the geodesics between `i` and `j` passing through `u`.

    Uses the identity σ_ij(u) = σ_iu·σ_uj whenever d_iu + d_uj = d_ij, and 0 otherwise.
    """
    for v in (u, i, j):
        g.check_vertex(v)

    if i == j or u in (i, j):
        raise ValueError(f'Pair dependency needs i != j and u outside the pair, got u={u}, i={i}, j={j}.')

    distances, path_counts = g.shortest_paths
    if not distances.is_finite(i, j):
        raise DisconnectedGraphError(
            f'No geodesic joins {g.labels[i]!r} and {g.labels[j]!r}.', pair=(g.labels[i], g.labels[j])
        )

    if not (distances.is_finite(i, u) and distances.is_finite(u, j)):
        return Fraction(0)

    if distances[i, u] + distances[u, j] != distances[i, j]:
        return Fraction(0)

    return Fraction(path_counts[i, u] * path_counts[u, j], path_counts[i, j])


SCORE_FUNCTIONS = {
    CentralityKind.CLOSENESS: closeness,
    CentralityKind.HARMONIC: harmonic,
    CentralityKind.BETWEENNESS: betweenness,
}


@lru_cache(maxsize=256)
def score_vector(g: Graph, kind: CentralityKind) -> ScoreVector:
    """Scores of `g` for `kind`, memoized on the (immutable) graph."""
    return SCORE_FUNCTIONS[CentralityKind(kind)](g)
