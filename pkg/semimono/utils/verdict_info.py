from enum import StrEnum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_serializer, model_validator

from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.exact_rational import ExactRational

Side = Literal['x', 'y']


class Definition(StrEnum):
    SCORE = 'score'
    RANK = 'rank'
    STRICT_RANK = 'strict-rank'
    ENDPOINT_NONNEGATIVE = 'endpoint-nonnegative'


class BasinPartition(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: int
    y: int
    k_xy: frozenset[int] = Field(description='Vertices not farther from x than from y')
    k_yx: frozenset[int] = Field(description='Vertices not farther from y than from x')
    labels: tuple[str, ...] = Field(exclude=True)

    @model_validator(mode='after')
    def validate_coverage(self):
        if self.k_xy | self.k_yx != frozenset(range(len(self.labels))):
            raise ValueError('The two basins must cover every vertex.')

        if self.x not in self.k_xy or self.y not in self.k_yx:
            raise ValueError('Each endpoint must belong to its own basin.')

        return self

    @property
    def equidistant(self) -> frozenset[int]:
        """Vertices lying in both basins."""
        return self.k_xy & self.k_yx

    @field_serializer('x', 'y')
    def serialize_endpoint(self, v: int) -> str:
        return self.labels[v]

    @field_serializer('k_xy', 'k_yx')
    def serialize_basin(self, basin: frozenset[int]) -> list[str]:
        return [self.labels[v] for v in sorted(basin)]

    @computed_field
    @property
    def overlap(self) -> list[str]:
        return [self.labels[v] for v in sorted(self.equidistant)]


class Witness(BaseModel):
    """A vertex `z` breaking one side of a definition, with the scores that break it."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    vertex: int = Field(exclude=True)
    z: str = Field(description='Label of the offending vertex (the endpoint itself for score definitions)')
    side: Side
    before: ExactRational = Field(description='Score of z before the edge addition')
    after: ExactRational = Field(description='Score of z after the edge addition')
    endpoint_before: ExactRational
    endpoint_after: ExactRational


class MonotonicityVerdict(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    definition: Definition
    kind: CentralityKind
    holds_at_x: bool
    holds_at_y: bool
    witnesses: list[Witness] = Field(default=[])

    @model_validator(mode='after')
    def validate_witnesses(self):
        for side, holds in (('x', self.holds_at_x), ('y', self.holds_at_y)):
            if holds == any(witness.side == side for witness in self.witnesses):
                raise ValueError(f'Side {side} must carry witnesses exactly when it fails.')

        return self

    @computed_field
    @property
    def holds(self) -> bool:
        """The semi-monotone reading: at least one endpoint satisfies the definition."""
        return self.holds_at_x or self.holds_at_y

    @computed_field
    @property
    def holds_at_both(self) -> bool:
        """The monotone reading: both endpoints satisfy the definition."""
        return self.holds_at_x and self.holds_at_y

    def witnesses_at(self, side: Side) -> list[Witness]:
        return [witness for witness in self.witnesses if witness.side == side]


class DominanceViolation(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    vertex: int = Field(exclude=True)
    u: str = Field(description='Label of the basin member whose score gained at least as much as its endpoint')
    side: Side = Field(description='Basin the member belongs to')
    delta: ExactRational = Field(description="c'(u) - c(u)")
    endpoint_delta: ExactRational = Field(description="c'(endpoint) - c(endpoint)")

    @property
    def is_tie(self) -> bool:
        """Violates strict dominance only."""
        return self.delta == self.endpoint_delta


class DominanceReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: CentralityKind
    strict_holds: bool
    nonstrict_holds: bool
    violations: list[DominanceViolation] = Field(
        default=[], description='Every basin member breaking strict dominance, ties included'
    )

    @model_validator(mode='after')
    def validate_consistency(self):
        if self.strict_holds and not self.nonstrict_holds:
            raise ValueError('Strict dominance implies dominance.')

        if self.strict_holds != (not self.violations):
            raise ValueError('Strict dominance holds exactly when no violation is recorded.')

        if self.nonstrict_holds != all(violation.is_tie for violation in self.violations):
            raise ValueError('Dominance holds exactly when every recorded violation is a tie.')

        return self


class PeripheralityIdentity(BaseModel):
    lhs: int = Field(description="p'(x) - p'(y)")
    rhs: int = Field(description='|K_yx| - |K_xy|')

    @computed_field
    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


class PointwiseViolation(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    inequality: Literal['closeness-distance', 'harmonic-reciprocal', 'harmonic-strict', 'betweenness-pair']
    side: Side
    u: str | None = Field(default=None, description='Basin member compared with its endpoint')
    z: str | None = Field(default=None, description='Target vertex of the distance terms')
    pair: tuple[str, str] | None = Field(default=None, description='Geodesic endpoints of the dependency terms')
    lhs: ExactRational
    rhs: ExactRational
