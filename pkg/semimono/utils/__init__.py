from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.claim_info import ClaimReport, ClaimResult
from semimono.utils.errors import ClaimPreconditionError, DisconnectedGraphError, GraphInputError, OracleLimitError, \
    SamplingError, ScenarioError, SemimonoError, VertexError
from semimono.utils.exact_rational import ExactRational, format_exact, parse_exact
from semimono.utils.report_info import ReportEnvelope
from semimono.utils.settings import RuntimeSettings
from semimono.utils.sweep_info import CheckName, CheckTally, EnumerateSource, FailureExemplar, RandomSource, \
    SweepConfig, SweepReport

from semimono.utils.verdict_info import BasinPartition, DominanceReport, DominanceViolation, MonotonicityVerdict, \
    PeripheralityIdentity, PointwiseViolation, Witness
