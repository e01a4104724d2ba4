from fractions import Fraction
from itertools import combinations
from typing import Iterable

from semimono.centrality import pair_dependency
from semimono.scenario import EdgeAdditionScenario
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.verdict_info import PointwiseViolation


def verify_pointwise_inequalities(
        s: EdgeAdditionScenario,
        kinds: Iterable[CentralityKind] = tuple(CentralityKind),
) -> list[PointwiseViolation]:
    """Checks the per-target inequalities that add up to basin dominance; returns the violations (none expected).

    Args:
        s: The scenario to inspect.
        kinds: Which measures to check. Closeness: for u in K_xy and z outside {u, x},
            d_uz - d'_uz <= d_xz - d'_xz. Harmonic: 1/d'_uz - 1/d_uz <= 1/d'_xz - 1/d_xz, strictly at z = y.
            Betweenness: the dependency of every pair on x (on y) does not decrease. All mirrored for K_yx.
    """
    kinds = {CentralityKind(kind) for kind in kinds}
    violations = []

    if CentralityKind.CLOSENESS in kinds:
        violations += check_distance_gains(s)

    if CentralityKind.HARMONIC in kinds:
        violations += check_reciprocal_gains(s)

    if CentralityKind.BETWEENNESS in kinds:
        violations += check_endpoint_dependencies(s)

    return violations


def basin_members(s: EdgeAdditionScenario):
    """(u, endpoint, other endpoint, side) for every basin member other than its endpoint."""
    for endpoint, side in s.endpoints():
        other = s.y if side == 'x' else s.x
        for u in sorted(s.basin_of(side) - {endpoint}):
            yield u, endpoint, other, side


def check_distance_gains(s: EdgeAdditionScenario) -> list[PointwiseViolation]:
    d, d_prime, labels = s.distances, s.distances_prime, s.g.labels
    violations = []

    for u, endpoint, _, side in basin_members(s):
        for z in range(s.g.n):
            if z in (u, endpoint):
                continue

            lhs = d[u, z] - d_prime[u, z]
            rhs = d[endpoint, z] - d_prime[endpoint, z]
            if lhs > rhs:
                violations.append(PointwiseViolation(
                    inequality='closeness-distance', side=side, u=labels[u], z=labels[z],
                    lhs=Fraction(lhs), rhs=Fraction(rhs),
                ))

    return violations


def check_reciprocal_gains(s: EdgeAdditionScenario) -> list[PointwiseViolation]:
    d, d_prime, labels = s.distances, s.distances_prime, s.g.labels
    violations = []

    for u, endpoint, other, side in basin_members(s):
        for z in range(s.g.n):
            if z in (u, endpoint):
                continue

            lhs = Fraction(1, d_prime[u, z]) - Fraction(1, d[u, z])
            rhs = Fraction(1, d_prime[endpoint, z]) - Fraction(1, d[endpoint, z])
            if lhs > rhs:
                violations.append(PointwiseViolation(
                    inequality='harmonic-reciprocal', side=side, u=labels[u], z=labels[z], lhs=lhs, rhs=rhs
                ))

            elif z == other and lhs == rhs:
                violations.append(PointwiseViolation(
                    inequality='harmonic-strict', side=side, u=labels[u], z=labels[z], lhs=lhs, rhs=rhs
                ))

    return violations


def check_endpoint_dependencies(s: EdgeAdditionScenario) -> list[PointwiseViolation]:
    labels = s.g.labels
    violations = []

    for endpoint, side in s.endpoints():
        others = [v for v in range(s.g.n) if v != endpoint]
        for i, j in combinations(others, 2):
            before = pair_dependency(s.g, endpoint, i, j)
            after = pair_dependency(s.g_prime, endpoint, i, j)
            if after < before:
                violations.append(PointwiseViolation(
                    inequality='betweenness-pair', side=side, pair=(labels[i], labels[j]), lhs=after - before,
                    rhs=Fraction(0),
                ))

    return violations
