from fractions import Fraction
from functools import cached_property
from typing import Iterator

from semimono.centrality import ScoreVector, score_vector
from semimono.graph import DistanceMatrix, Graph, PathCountMatrix
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.errors import DisconnectedGraphError, ScenarioError
from semimono.utils.verdict_info import BasinPartition, Definition, DominanceReport, DominanceViolation, \
    MonotonicityVerdict, PeripheralityIdentity, Side, Witness


class EdgeAdditionScenario:
    """A connected graph G, two non-adjacent vertices x and y, and G' = G + x-y.

    Matrices and score vectors of both graphs are computed on first use and then only read, so the verdict methods
    can share one scenario.
    """

    def __init__(self, g: Graph, x: int, y: int):
        g.check_vertex(x)
        g.check_vertex(y)

        if x == y:
            raise ScenarioError(f'The endpoints must differ, got {g.labels[x]!r} twice.')

        if g.has_edge(x, y):
            raise ScenarioError(f'{g.labels[x]!r} and {g.labels[y]!r} are already adjacent.')

        unreachable_pair = g.first_unreachable_pair()
        if unreachable_pair is not None:
            source, target = (g.labels[v] for v in unreachable_pair)
            raise DisconnectedGraphError(
                f'The graph must be connected: {source!r} cannot reach {target!r}.', pair=(source, target)
            )

        self.g = g
        self.x = x
        self.y = y

    def __repr__(self) -> str:
        return f'EdgeAdditionScenario(n={self.g.n}, x={self.g.labels[self.x]!r}, y={self.g.labels[self.y]!r})'

    @classmethod
    def from_labels(cls, g: Graph, x_label: str, y_label: str) -> 'EdgeAdditionScenario':
        return cls(g, g.vertex(x_label), g.vertex(y_label))

    @classmethod
    def all_of(cls, g: Graph) -> Iterator['EdgeAdditionScenario']:
        """Every scenario of a connected graph, one per non-adjacent pair x < y in ascending order."""
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if not g.has_edge(x, y):
                    yield cls(g, x, y)

    # ----- CACHED STATE -----

    @cached_property
    def g_prime(self) -> Graph:
        return self.g.add_edge(self.x, self.y)

    @property
    def distances(self) -> DistanceMatrix:
        return self.g.distances

    @property
    def distances_prime(self) -> DistanceMatrix:
        return self.g_prime.distances

    @property
    def path_counts(self) -> PathCountMatrix:
        return self.g.path_counts

    @property
    def path_counts_prime(self) -> PathCountMatrix:
        return self.g_prime.path_counts

    def scores(self, kind: CentralityKind) -> ScoreVector:
        return score_vector(self.g, CentralityKind(kind))

    def scores_prime(self, kind: CentralityKind) -> ScoreVector:
        return score_vector(self.g_prime, CentralityKind(kind))

    def delta(self, kind: CentralityKind, v: int) -> Fraction:
        """c'(v) - c(v)."""
        return self.scores_prime(kind)[v] - self.scores(kind)[v]

    def endpoints(self) -> tuple[tuple[int, Side], tuple[int, Side]]:
        return (self.x, 'x'), (self.y, 'y')

    # ----- BASINS -----

    @cached_property
    def basin_partition(self) -> BasinPartition:
        d = self.distances
        return BasinPartition(
            x=self.x,
            y=self.y,
            k_xy=frozenset(u for u in range(self.g.n) if d[u, self.x] <= d[u, self.y]),
            k_yx=frozenset(u for u in range(self.g.n) if d[u, self.y] <= d[u, self.x]),
            labels=self.g.labels,
        )

    def basins(self) -> BasinPartition:
        """K_xy and K_yx, from the distances of G (never G')."""
        return self.basin_partition

    def basin_of(self, side: Side) -> frozenset[int]:
        partition = self.basin_partition
        return partition.k_xy if side == 'x' else partition.k_yx

    def basin_dominance(self, kind: CentralityKind) -> DominanceReport:
        """Compares the score gain of every basin member with the gain of the basin's endpoint."""
        violations = []

        for endpoint, side in self.endpoints():
            endpoint_delta = self.delta(kind, endpoint)
            for u in sorted(self.basin_of(side) - {endpoint}):
                delta = self.delta(kind, u)
                if delta >= endpoint_delta:
                    violations.append(DominanceViolation(
                        vertex=u, u=self.g.labels[u], side=side, delta=delta, endpoint_delta=endpoint_delta
                    ))

        return DominanceReport(
            kind=kind,
            strict_holds=not violations,
            nonstrict_holds=all(violation.is_tie for violation in violations),
            violations=violations,
        )

    # ----- SEMI-MONOTONICITY VERDICTS -----

    def score_semi_monotone(self, kind: CentralityKind) -> MonotonicityVerdict:
        """Holds when at least one endpoint strictly gains score; `holds_at_both` is score monotonicity."""
        return self.endpoint_verdict(kind, Definition.SCORE, lambda before, after: before < after)

    def endpoint_deltas_nonnegative(self, kind: CentralityKind) -> MonotonicityVerdict:
        """Per endpoint: the score does not decrease. The property of interest is `holds_at_both`."""
        return self.endpoint_verdict(kind, Definition.ENDPOINT_NONNEGATIVE, lambda before, after: before <= after)

    def endpoint_verdict(self, kind: CentralityKind, definition: Definition, passes) -> MonotonicityVerdict:
        before, after = self.scores(kind), self.scores_prime(kind)
        holds = {}
        witnesses = []

        for endpoint, side in self.endpoints():
            holds[side] = passes(before[endpoint], after[endpoint])
            if not holds[side]:
                witnesses.append(Witness(
                    vertex=endpoint, z=self.g.labels[endpoint], side=side, before=before[endpoint],
                    after=after[endpoint], endpoint_before=before[endpoint], endpoint_after=after[endpoint],
                ))

        return MonotonicityVerdict(
            definition=definition, kind=kind, holds_at_x=holds['x'], holds_at_y=holds['y'], witnesses=witnesses
        )

    def rank_semi_monotone(self, kind: CentralityKind) -> MonotonicityVerdict:
        """Per endpoint: every strictly dominated z stays strictly dominated, every tied z stays weakly dominated."""
        def fails(z_before, endpoint_before, z_after, endpoint_after) -> bool:
            if z_before < endpoint_before:
                return not z_after < endpoint_after

            if z_before == endpoint_before:
                return not z_after <= endpoint_after

            return False

        return self.rank_verdict(kind, Definition.RANK, fails)

    def strict_rank_semi_monotone(self, kind: CentralityKind) -> MonotonicityVerdict:
        """Per endpoint: every weakly dominated z ends up strictly dominated."""
        def fails(z_before, endpoint_before, z_after, endpoint_after) -> bool:
            return z_before <= endpoint_before and not z_after < endpoint_after

        return self.rank_verdict(kind, Definition.STRICT_RANK, fails)

    def rank_verdict(self, kind: CentralityKind, definition: Definition, fails) -> MonotonicityVerdict:
        before, after = self.scores(kind), self.scores_prime(kind)
        witnesses = []

        for endpoint, side in self.endpoints():
            for z in range(self.g.n):
                if z in (self.x, self.y):
                    continue

                if fails(before[z], before[endpoint], after[z], after[endpoint]):
                    witnesses.append(Witness(
                        vertex=z, z=self.g.labels[z], side=side, before=before[z], after=after[z],
                        endpoint_before=before[endpoint], endpoint_after=after[endpoint],
                    ))

        return MonotonicityVerdict(
            definition=definition,
            kind=kind,
            holds_at_x=not any(witness.side == 'x' for witness in witnesses),
            holds_at_y=not any(witness.side == 'y' for witness in witnesses),
            witnesses=witnesses,
        )

    # ----- DISTANCE IDENTITIES -----

    def peripherality_identity(self) -> PeripheralityIdentity:
        """p'(x) - p'(y) against |K_yx| - |K_xy|; the two are always equal."""
        peripheralities = self.scores_prime(CentralityKind.CLOSENESS).peripheralities
        partition = self.basin_partition

        return PeripheralityIdentity(
            lhs=peripheralities[self.x] - peripheralities[self.y],
            rhs=len(partition.k_yx) - len(partition.k_xy),
        )

    def equidistant_stability(self, kind: CentralityKind) -> list[int]:
        """Vertices equidistant from x and y whose geometric score changed (expected: none)."""
        kind = CentralityKind(kind)
        if not kind.is_geometric:
            raise ValueError(f'{kind} is not a geometric measure; equidistant vertices may change score.')

        return [u for u in sorted(self.basin_partition.equidistant) if self.delta(kind, u) != 0]
