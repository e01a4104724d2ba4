from pydantic import BaseModel, Field, computed_field


class ClaimResult(BaseModel):
    name: str = Field(description='What is claimed, e.g. "p(x) = 3(k+4) + 3k + 9"')
    expected: str
    actual: str
    passed: bool


class ClaimReport(BaseModel):
    family: str = Field(description='`closeness` or `betweenness`')
    parameter: int = Field(description='k for the closeness family, m for the betweenness family')
    claims: list[ClaimResult] = Field(default=[])

    @computed_field
    @property
    def passed(self) -> bool:
        return all(claim.passed for claim in self.claims)

    @property
    def failed_claims(self) -> list[ClaimResult]:
        return [claim for claim in self.claims if not claim.passed]

    def expect(self, name: str, expected, actual) -> bool:
        """Records `actual == expected` under `name` and returns the outcome."""
        passed = actual == expected
        self.claims.append(ClaimResult(name=name, expected=str(expected), actual=str(actual), passed=passed))
        return passed
