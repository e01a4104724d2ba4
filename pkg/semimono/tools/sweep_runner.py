import logging
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import batched
from typing import Iterable, Iterator

from semimono.centrality import score_vector
from semimono.graph import Graph
from semimono.scenario import EdgeAdditionScenario
from semimono.tools.connected_graph_enumerator import enumerate_connected_graphs
from semimono.tools.naive_betweenness_oracle import MAX_ORACLE_ORDER, naive_betweenness_oracle
from semimono.tools.pointwise_inequality_checker import verify_pointwise_inequalities
from semimono.tools.random_graph_generator import PRNG_DESCRIPTION, random_connected_graphs
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.settings import RuntimeSettings
from semimono.utils.sweep_info import CheckName, CheckTally, EnumerateSource, FailureExemplar, SweepConfig, \
    SweepReport
from semimono.utils.verdict_info import MonotonicityVerdict


def run_sweep(cfg: SweepConfig, workers: int | None = None) -> SweepReport:
    """Runs the configured checks on every scenario of every generated graph.

    Graphs are processed in ordered batches, optionally on a process pool; results merge in generation order, so
    the report does not depend on scheduling.

    Args:
        cfg: What to generate and what to check.
        workers: Process count; defaults to the `SEMIMONO_THREADS` setting. 1 runs in-process.
    """
    started = time.perf_counter()
    workers = workers or RuntimeSettings.from_env().workers
    report = SweepReport(
        config=cfg,
        prng=None if isinstance(cfg.source, EnumerateSource) else PRNG_DESCRIPTION,
        tallies=[CheckTally(check=check, centrality=kind) for check, kind in cfg.selected_pairs()],
    )
    check_batch = partial(check_graphs, cfg=cfg)

    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n, graphs in graph_streams(cfg):
            graphs_before, scenarios_before = report.graphs_checked, report.scenarios_checked
            for partial_report in ordered_map(check_batch, batched(graphs, cfg.batch_size), executor, workers):
                merge(report, partial_report, cfg.exemplars_per_check)

            logging.info(
                f'n={n}: {report.graphs_checked - graphs_before} graphs, '
                f'{report.scenarios_checked - scenarios_before} scenarios'
            )
    finally:
        if executor is not None:
            executor.shutdown()

    for tally in report.unexpected_failures():
        logging.warning(f'{tally.check} failed {tally.fails} time(s) for {tally.centrality}')

    report.wall_time_seconds = time.perf_counter() - started
    return report


def graph_streams(cfg: SweepConfig) -> Iterator[tuple[int, Iterable[Graph]]]:
    source = cfg.source
    if isinstance(source, EnumerateSource):
        for n in range(source.n_min, source.n_max + 1):
            yield n, enumerate_connected_graphs(n)
    else:
        yield source.n, random_connected_graphs(source.n, source.p, source.count, source.seed)


def ordered_map(fn, batches: Iterable, executor: ProcessPoolExecutor | None, workers: int) -> Iterator:
    """`map` that keeps at most `2 * workers` batches in flight and yields results in submission order."""
    if executor is None:
        yield from map(fn, batches)
        return

    in_flight = deque()
    for batch in batches:
        in_flight.append(executor.submit(fn, batch))
        if len(in_flight) >= 2 * workers:
            yield in_flight.popleft().result()

    while in_flight:
        yield in_flight.popleft().result()


def merge(report: SweepReport, partial_report: SweepReport, exemplar_cap: int) -> None:
    report.graphs_checked += partial_report.graphs_checked
    report.scenarios_checked += partial_report.scenarios_checked

    for tally, partial_tally in zip(report.tallies, partial_report.tallies):
        tally.scenarios_checked += partial_tally.scenarios_checked
        tally.holds += partial_tally.holds
        tally.fails += partial_tally.fails

    for exemplar in partial_report.exemplars:
        kept = sum(1 for e in report.exemplars if e.check == exemplar.check and e.centrality == exemplar.centrality)
        if kept < exemplar_cap:
            report.exemplars.append(exemplar)


def check_graphs(graphs: tuple[Graph, ...], cfg: SweepConfig) -> SweepReport:
    """Worker entry point: the partial report of one batch of graphs."""
    report = SweepReport(
        config=cfg, tallies=[CheckTally(check=check, centrality=kind) for check, kind in cfg.selected_pairs()]
    )
    tallies = {(tally.check, tally.centrality): tally for tally in report.tallies}

    def record(check: CheckName, kind: CentralityKind, failure: str | None, g: Graph, s=None):
        tally = tallies[check, kind]
        tally.scenarios_checked += 1
        if failure is None:
            tally.holds += 1
            return

        tally.fails += 1
        kept = sum(1 for e in report.exemplars if e.check == check and e.centrality == kind)
        if kept < cfg.exemplars_per_check:
            report.exemplars.append(FailureExemplar(
                check=check, centrality=kind, edge_list=g.to_edge_list(), witness=failure,
                x=g.labels[s.x] if s else None, y=g.labels[s.y] if s else None,
            ))

    for g in graphs:
        report.graphs_checked += 1
        for check in cfg.checks:
            if check.is_graph_level and (check, CentralityKind.BETWEENNESS) in tallies:
                failure = check_graph(g, check)
                if failure != SKIPPED:
                    record(check, CentralityKind.BETWEENNESS, failure, g)

        for s in EdgeAdditionScenario.all_of(g):
            report.scenarios_checked += 1
            for check, kind in cfg.selected_pairs():
                if not check.is_graph_level:
                    record(check, kind, check_scenario(s, check, kind), g, s)

    return report


SKIPPED = 'skipped'


def check_graph(g: Graph, check: CheckName) -> str | None:
    """Graph-level checks; None when the check holds, a description of the failure otherwise."""
    scores = score_vector(g, CentralityKind.BETWEENNESS)

    if check is CheckName.CLIQUE_LEMMA:
        mismatches = [g.labels[u] for u in range(g.n) if (scores[u] == 0) != g.ego_is_clique(u)]
        return f'b(u) = 0 disagrees with the ego-clique test at {mismatches}' if mismatches else None

    if check is CheckName.ORACLE_EQUIVALENCE:
        if g.n > MAX_ORACLE_ORDER:
            return SKIPPED

        oracle = naive_betweenness_oracle(g)
        mismatches = [g.labels[u] for u in range(g.n) if scores[u] != oracle[u]]
        return f'fast and geodesic-enumeration betweenness differ at {mismatches}' if mismatches else None

    raise ValueError(f'{check} is not a graph-level check.')


def check_scenario(s: EdgeAdditionScenario, check: CheckName, kind: CentralityKind) -> str | None:
    """Scenario-level checks; None when the check holds, a description of the failure otherwise."""
    match check:
        case CheckName.SCORE_SEMI:
            return describe_verdict(s.score_semi_monotone(kind), need_both=False)

        case CheckName.SCORE_MONOTONE:
            return describe_verdict(s.score_semi_monotone(kind), need_both=True)

        case CheckName.ENDPOINT_NONNEGATIVE:
            return describe_verdict(s.endpoint_deltas_nonnegative(kind), need_both=True)

        case CheckName.RANK_SEMI:
            return describe_verdict(s.rank_semi_monotone(kind), need_both=False)

        case CheckName.STRICT_RANK_SEMI:
            return describe_verdict(s.strict_rank_semi_monotone(kind), need_both=False)

        case CheckName.DOMINANCE | CheckName.STRICT_DOMINANCE:
            dominance = s.basin_dominance(kind)
            holds = dominance.strict_holds if check is CheckName.STRICT_DOMINANCE else dominance.nonstrict_holds
            if holds:
                return None

            return '; '.join(
                f'u={violation.u} ({violation.side}-basin) gains {violation.delta}, endpoint {violation.endpoint_delta}'
                for violation in dominance.violations
                if check is CheckName.STRICT_DOMINANCE or not violation.is_tie
            )

        case CheckName.DOMINANCE_IMPLIES_RANK:
            if s.basin_dominance(kind).nonstrict_holds and not s.rank_semi_monotone(kind).holds:
                return 'basin dominant but not rank semi-monotone'
            return None

        case CheckName.STRICT_DOMINANCE_IMPLIES_STRICT_RANK:
            if s.basin_dominance(kind).strict_holds and not s.strict_rank_semi_monotone(kind).holds:
                return 'strictly basin dominant but not strictly rank semi-monotone'
            return None

        case CheckName.POINTWISE_INEQS:
            violations = verify_pointwise_inequalities(s, kinds=[kind])
            return '; '.join(
                f'{violation.inequality} ({violation.side}): u={violation.u} z={violation.z} pair={violation.pair} '
                f'{violation.lhs} vs {violation.rhs}'
                for violation in violations
            ) or None

        case CheckName.PERIPHERALITY_IDENTITY:
            identity = s.peripherality_identity()
            return None if identity.holds else f"p'(x) - p'(y) = {identity.lhs} but |K_yx| - |K_xy| = {identity.rhs}"

        case CheckName.EQUIDISTANT_STABILITY:
            changed = s.equidistant_stability(kind)
            return f'equidistant vertices changed score: {[s.g.labels[u] for u in changed]}' if changed else None

    raise ValueError(f'{check} is not a scenario-level check.')


def describe_verdict(verdict: MonotonicityVerdict, need_both: bool) -> str | None:
    if verdict.holds_at_both or (verdict.holds and not need_both):
        return None

    return '; '.join(
        f'{witness.side}-side z={witness.z}: {witness.before} -> {witness.after} '
        f'(endpoint {witness.endpoint_before} -> {witness.endpoint_after})'
        for witness in verdict.witnesses
    )
