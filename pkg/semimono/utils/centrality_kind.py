from enum import StrEnum


class CentralityKind(StrEnum):
    CLOSENESS = 'closeness'
    HARMONIC = 'harmonic'
    BETWEENNESS = 'betweenness'

    @property
    def is_geometric(self) -> bool:
        """Geometric measures depend on distances only."""
        return self is not CentralityKind.BETWEENNESS
