from enum import StrEnum
from typing import Annotated, Literal

from pydantic import BaseModel, Field, computed_field, model_validator

from semimono.utils.centrality_kind import CentralityKind


class CheckName(StrEnum):
    SCORE_SEMI = 'score_semi'
    SCORE_MONOTONE = 'score_monotone'
    ENDPOINT_NONNEGATIVE = 'endpoint_nonnegative'
    RANK_SEMI = 'rank_semi'
    STRICT_RANK_SEMI = 'strict_rank_semi'
    DOMINANCE = 'dominance'
    STRICT_DOMINANCE = 'strict_dominance'
    DOMINANCE_IMPLIES_RANK = 'dominance_implies_rank'
    STRICT_DOMINANCE_IMPLIES_STRICT_RANK = 'strict_dominance_implies_strict_rank'
    POINTWISE_INEQS = 'pointwise_ineqs'
    PERIPHERALITY_IDENTITY = 'peripherality_identity'
    EQUIDISTANT_STABILITY = 'equidistant_stability'
    CLIQUE_LEMMA = 'clique_lemma'
    ORACLE_EQUIVALENCE = 'oracle_equivalence'

    @property
    def is_graph_level(self) -> bool:
        """Tallied once per graph instead of once per scenario."""
        return self in (CheckName.CLIQUE_LEMMA, CheckName.ORACLE_EQUIVALENCE)

    def applies_to(self, kind: CentralityKind) -> bool:
        if self is CheckName.PERIPHERALITY_IDENTITY:
            return kind is CentralityKind.CLOSENESS

        if self is CheckName.EQUIDISTANT_STABILITY:
            return kind.is_geometric

        if self.is_graph_level:
            return kind is CentralityKind.BETWEENNESS

        return True


_ALWAYS_EXPECTED = {
    CheckName.ENDPOINT_NONNEGATIVE, CheckName.RANK_SEMI, CheckName.DOMINANCE, CheckName.DOMINANCE_IMPLIES_RANK,
    CheckName.STRICT_DOMINANCE_IMPLIES_STRICT_RANK, CheckName.POINTWISE_INEQS, CheckName.PERIPHERALITY_IDENTITY,
    CheckName.EQUIDISTANT_STABILITY, CheckName.CLIQUE_LEMMA, CheckName.ORACLE_EQUIVALENCE,
}


def is_expected_to_hold(check: CheckName, kind: CentralityKind) -> bool:
    """Whether a failure of `check` for `kind` contradicts a proven result (otherwise the tally is observational)."""
    if check in _ALWAYS_EXPECTED:
        return True

    if check in (CheckName.SCORE_SEMI, CheckName.SCORE_MONOTONE):
        return kind.is_geometric

    # strict rank semi-monotonicity and strict dominance are proven for harmonic centrality only
    return kind is CentralityKind.HARMONIC


class EnumerateSource(BaseModel):
    kind: Literal['enumerate'] = 'enumerate'
    n_max: int = Field(ge=1, le=7, description='Largest vertex count; every size from n_min up to it is swept')
    n_min: int = Field(default=1, ge=1, description='Smallest vertex count')
    allow_n7: bool = Field(default=False, description='Seven-vertex enumeration takes hours and must be asked for')

    @model_validator(mode='after')
    def validate_range(self):
        if self.n_min > self.n_max:
            raise ValueError(f'n_min ({self.n_min}) cannot exceed n_max ({self.n_max}).')

        if self.n_max == 7 and not self.allow_n7:
            raise ValueError('Enumerating n = 7 needs `allow_n7: true`.')

        return self


class RandomSource(BaseModel):
    kind: Literal['random'] = 'random'
    n: int = Field(ge=1)
    p: float = Field(gt=0, le=1, description='Edge probability of G(n, p)')
    count: int = Field(ge=1, description='Number of connected graphs to draw')
    seed: int = Field(ge=0, description='Seed of the documented PRNG; mandatory so sweeps reproduce')


class SweepConfig(BaseModel):
    source: Annotated[EnumerateSource | RandomSource, Field(discriminator='kind')]
    centralities: list[CentralityKind] = Field(default=list(CentralityKind))
    checks: list[CheckName] = Field(default=list(CheckName))
    exemplars_per_check: int = Field(default=3, ge=0, description='Failure exemplars kept per (check, centrality)')
    batch_size: int = Field(default=256, ge=1, description='Graphs handed to a worker at a time')

    @model_validator(mode='after')
    def validate_selection(self):
        if not self.centralities or not self.checks:
            raise ValueError('At least one centrality and one check must be selected.')

        # canonical order keeps reports independent of how the config lists them
        self.centralities = [kind for kind in CentralityKind if kind in self.centralities]
        self.checks = [check for check in CheckName if check in self.checks]
        return self

    def selected_pairs(self) -> list[tuple[CheckName, CentralityKind]]:
        return [(check, kind) for check in self.checks for kind in self.centralities if check.applies_to(kind)]


class CheckTally(BaseModel):
    check: CheckName
    centrality: CentralityKind
    scenarios_checked: int = Field(default=0, description='Scenarios (graphs, for graph-level checks) examined')
    holds: int = 0
    fails: int = 0

    @model_validator(mode='after')
    def validate_total(self):
        if self.holds + self.fails != self.scenarios_checked:
            raise ValueError('holds + fails must equal scenarios_checked.')

        return self

    @computed_field
    @property
    def expected_to_hold(self) -> bool:
        return is_expected_to_hold(self.check, self.centrality)


class FailureExemplar(BaseModel):
    check: CheckName
    centrality: CentralityKind
    edge_list: str = Field(description='The graph, in edge-list format')
    x: str | None = Field(default=None, description='Label of x (absent for graph-level checks)')
    y: str | None = None
    witness: str = Field(description='Human-readable description of what failed')


class SummaryRow(BaseModel):
    centrality: CentralityKind
    score: str | None = Field(default=None, description='monotone / semi-monotone / not semi-monotone')
    rank: str | None = Field(default=None, description='strictly semi-monotone / semi-monotone / not semi-monotone')


class SweepReport(BaseModel):
    config: SweepConfig
    prng: str | None = Field(default=None, description='PRNG description, for random sources')
    graphs_checked: int = 0
    scenarios_checked: int = 0
    tallies: list[CheckTally] = Field(default=[])
    exemplars: list[FailureExemplar] = Field(default=[])
    wall_time_seconds: float = Field(default=0.0, exclude=True, description='Only printed in the text footer')

    def tally(self, check: CheckName, kind: CentralityKind) -> CheckTally:
        for tally in self.tallies:
            if tally.check == check and tally.centrality == kind:
                return tally

        raise KeyError(f'No tally for {check} / {kind}.')

    def unexpected_failures(self) -> list[CheckTally]:
        return [tally for tally in self.tallies if tally.fails and tally.expected_to_hold]

    @computed_field
    @property
    def summary(self) -> list[SummaryRow]:
        """Score and rank verdict per centrality, read off the tallies like a summary table of results."""
        fails = {(tally.check, tally.centrality): tally.fails for tally in self.tallies}
        rows = []

        for kind in self.config.centralities:
            if fails.get((CheckName.SCORE_MONOTONE, kind)) == 0:
                score = 'monotone'
            elif (CheckName.SCORE_SEMI, kind) in fails:
                score = 'semi-monotone' if fails[CheckName.SCORE_SEMI, kind] == 0 else 'not semi-monotone'
            else:
                score = None

            if fails.get((CheckName.STRICT_RANK_SEMI, kind)) == 0:
                rank = 'strictly semi-monotone'
            elif (CheckName.RANK_SEMI, kind) in fails:
                rank = 'semi-monotone' if fails[CheckName.RANK_SEMI, kind] == 0 else 'not semi-monotone'
            else:
                rank = None

            rows.append(SummaryRow(centrality=kind, score=score, rank=rank))

        return rows
