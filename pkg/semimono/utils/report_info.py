from typing import Any, Literal

from pydantic import BaseModel, Field

PayloadKind = Literal[
    'scores', 'basins', 'verdict', 'dominance', 'pointwise', 'peripherality', 'family', 'count', 'sweep'
]


class ReportEnvelope(BaseModel):
    """What every subcommand emits: provenance around a JSON-mode payload."""
    tool_version: str
    command: list[str] = Field(description='The argv the report was produced from')
    prng: str | None = Field(default=None, description='PRNG description, present when the run was randomized')
    payload_kind: PayloadKind
    payload: dict[str, Any] = Field(description='Already dumped in JSON mode; rationals are `num/den` strings')
    wall_time_seconds: float | None = Field(
        default=None, exclude=True, description='Only printed in the text footer so JSON and CSV stay bit-stable'
    )
