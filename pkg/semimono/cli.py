"""Command-line surface: `semimono {centrality,basins,check,family,enumerate,sweep}`.

Exit codes: 0 on success, 1 when `--strict-exit` is set and the requested check failed, 2 on usage or input errors.
"""
import argparse
import json
import logging
import sys
from typing import Callable

from pydantic import ValidationError

from semimono.centrality import score_vector
from semimono.families import build_betweenness_family, build_closeness_family, validate_betweenness_claims, \
    validate_closeness_claims
from semimono.graph import Graph
from semimono.scenario import EdgeAdditionScenario
from semimono.tools.connected_graph_enumerator import MAX_ENUMERATION_ORDER, count_connected_graphs
from semimono.tools.pointwise_inequality_checker import verify_pointwise_inequalities
from semimono.tools.report_writer import write_report
from semimono.tools.sweep_runner import run_sweep
from semimono.utils.centrality_kind import CentralityKind
from semimono.utils.errors import SemimonoError
from semimono.utils.report_info import ReportEnvelope
from semimono.utils.settings import RuntimeSettings
from semimono.utils.sweep_info import SweepConfig
from semimono.version import __version__

DEFINITIONS = ('score', 'rank', 'strict-rank', 'dominance', 'strict-dominance', 'pointwise', 'lemma3')

DEFINITION_ALIASES = {'peripherality': 'lemma3'}

CSV_COMMANDS = {'centrality': 'scores', 'sweep': 'sweep'}

# (envelope, whether the requested check failed)
CommandResult = tuple[ReportEnvelope, bool]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('json', 'csv', 'text'), default=None,
                        help='Report format (default: json; text for `enumerate`)')
    common.add_argument('--output', metavar='PATH', default=None, help='Write the report here instead of stdout')
    common.add_argument('--strict-exit', action='store_true', help='Exit with 1 when the requested check fails')
    common.add_argument('--verbose', action='store_true', help='Log debug messages to stderr')

    parser = argparse.ArgumentParser(
        prog='semimono', description='Exact centrality scores and semi-monotonicity checks under edge addition.'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    centrality = subparsers.add_parser('centrality', parents=[common], help='Score every vertex of an edge list')
    centrality.add_argument('--kind', type=CentralityKind, choices=list(CentralityKind), required=True)
    centrality.add_argument('edgelist', help='Edge-list file, `-` for stdin')

    basins = subparsers.add_parser('basins', parents=[common], help='Basins of a non-adjacent pair')
    add_pair_arguments(basins)

    check = subparsers.add_parser('check', parents=[common], help='Evaluate one definition on a scenario')
    add_pair_arguments(check)
    check.add_argument('--kind', type=CentralityKind, choices=list(CentralityKind), default=None,
                       help='Centrality measure (not needed for `lemma3`)')
    check.add_argument('--definition', type=definition_name, choices=DEFINITIONS, required=True,
                       help='`lemma3` checks the peripherality identity; `peripherality` is accepted as an alias')

    family = subparsers.add_parser('family', parents=[common], help='Build a counterexample family member')
    which = family.add_mutually_exclusive_group(required=True)
    which.add_argument('--closeness-k', type=positive_int, metavar='K')
    which.add_argument('--betweenness-m', type=positive_int, metavar='M')
    family.add_argument('--validate', action='store_true', help='Recompute and report every claim about the graph')

    enumerate_ = subparsers.add_parser('enumerate', parents=[common], help='Count connected labeled graphs')
    enumerate_.add_argument('--n', type=int, required=True, choices=range(1, MAX_ENUMERATION_ORDER + 1),
                            metavar='N')

    sweep = subparsers.add_parser('sweep', parents=[common], help='Run a verification sweep from a JSON config')
    sweep.add_argument('--config', required=True, metavar='PATH')
    sweep.add_argument('--threads', type=int, default=None,
                       help='Worker processes; overrides SEMIMONO_THREADS (0 = one per CPU)')

    return parser


def add_pair_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--x', required=True, metavar='LABEL')
    parser.add_argument('--y', required=True, metavar='LABEL')
    parser.add_argument('edgelist', help='Edge-list file, `-` for stdin')


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'must be at least 1, got {value}')

    return value


def definition_name(text: str) -> str:
    return DEFINITION_ALIASES.get(text, text)


def read_graph(path: str) -> Graph:
    if path == '-':
        return Graph.from_edge_list(sys.stdin.read())

    with open(path, 'r', encoding='utf-8') as f:
        return Graph.from_edge_list(f.read())


def envelope(argv: list[str], payload_kind: str, payload: dict, **kwargs) -> ReportEnvelope:
    return ReportEnvelope(
        tool_version=__version__, command=['semimono', *argv], payload_kind=payload_kind, payload=payload, **kwargs
    )


# ----- SUBCOMMANDS -----

def run_centrality(args: argparse.Namespace, argv: list[str]) -> CommandResult:
    scores = score_vector(read_graph(args.edgelist), args.kind)
    return envelope(argv, 'scores', scores.to_payload()), False


def run_basins(args: argparse.Namespace, argv: list[str]) -> CommandResult:
    s = EdgeAdditionScenario.from_labels(read_graph(args.edgelist), args.x, args.y)
    return envelope(argv, 'basins', s.basins().model_dump(mode='json')), False


def run_check(args: argparse.Namespace, argv: list[str]) -> CommandResult:
    s = EdgeAdditionScenario.from_labels(read_graph(args.edgelist), args.x, args.y)
    pair = {'x': args.x, 'y': args.y}
    kind = args.kind

    if args.definition == 'lemma3':
        identity = s.peripherality_identity()
        return envelope(argv, 'peripherality', {**pair, **identity.model_dump(mode='json')}), not identity.holds

    if args.definition == 'pointwise':
        violations = verify_pointwise_inequalities(s, kinds=[kind])
        payload = {
            **pair, 'kind': kind.value, 'holds': not violations,
            'violations': [violation.model_dump(mode='json', exclude_none=True) for violation in violations],
        }
        return envelope(argv, 'pointwise', payload), bool(violations)

    if args.definition in ('dominance', 'strict-dominance'):
        dominance = s.basin_dominance(kind)
        holds = dominance.strict_holds if args.definition == 'strict-dominance' else dominance.nonstrict_holds
        return envelope(argv, 'dominance', {**pair, **dominance.model_dump(mode='json')}), not holds

    verdicts: dict[str, Callable] = {
        'score': s.score_semi_monotone, 'rank': s.rank_semi_monotone, 'strict-rank': s.strict_rank_semi_monotone,
    }
    verdict = verdicts[args.definition](kind)
    return envelope(argv, 'verdict', {**pair, **verdict.model_dump(mode='json')}), not verdict.holds


def run_family(args: argparse.Namespace, argv: list[str]) -> CommandResult:
    if args.closeness_k is not None:
        graph, *distinguished = build_closeness_family(args.closeness_k)
        payload = {'family': 'closeness', 'parameter': args.closeness_k}
        names = ('x', 'y', 'u', 'w')
        validate = validate_closeness_claims
    else:
        graph, *distinguished = build_betweenness_family(args.betweenness_m)
        payload = {'family': 'betweenness', 'parameter': args.betweenness_m}
        names = ('x', 'y', 'u')
        validate = validate_betweenness_claims

    payload |= {
        'vertices': graph.n,
        'edges': graph.edge_count,
        'distinguished': {name: graph.labels[v] for name, v in zip(names, distinguished)},
        'edge_list': graph.to_edge_list(),
    }

    failed = False
    if args.validate:
        report = validate(payload['parameter'])
        payload['claims'] = report.model_dump(mode='json')
        failed = not report.passed

    return envelope(argv, 'family', payload), failed


def run_enumerate(args: argparse.Namespace, argv: list[str]) -> CommandResult:
    return envelope(argv, 'count', {'n': args.n, 'count': count_connected_graphs(args.n)}), False


def run_sweep_command(args: argparse.Namespace, argv: list[str]) -> CommandResult:
    with open(args.config, 'r', encoding='utf-8') as f:
        cfg = SweepConfig.model_validate_json(f.read())

    workers = RuntimeSettings(threads=args.threads).workers if args.threads is not None else None
    report = run_sweep(cfg, workers=workers)
    env = envelope(
        argv, 'sweep', report.model_dump(mode='json'), prng=report.prng, wall_time_seconds=report.wall_time_seconds
    )
    return env, bool(report.unexpected_failures())


COMMANDS: dict[str, Callable[[argparse.Namespace, list[str]], CommandResult]] = {
    'centrality': run_centrality,
    'basins': run_basins,
    'check': run_check,
    'family': run_family,
    'enumerate': run_enumerate,
    'sweep': run_sweep_command,
}


# ----- ENTRY POINTS -----

def describe_error(e: Exception) -> str:
    if isinstance(e, ValidationError):
        first = e.errors()[0]
        location = '.'.join(str(part) for part in first['loc'])
        return f'invalid {e.title}: {location + ": " if location else ""}{first["msg"]}'

    if isinstance(e, OSError) and e.filename:
        return f'{e.filename}: {e.strerror or e}'

    return str(e).splitlines()[0] if str(e) else type(e).__name__


def run_cli(argv: list[str] | None = None) -> int:
    """Runs one subcommand and returns its exit code; the report goes to stdout or `--output`."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s: %(message)s')

    report_format = args.format or ('text' if args.command == 'enumerate' else 'json')
    if report_format == 'csv' and args.command not in CSV_COMMANDS:
        print(f'error: --format csv is available for {" and ".join(CSV_COMMANDS)} only', file=sys.stderr)
        return 2

    if args.command == 'check' and args.definition != 'lemma3' and args.kind is None:
        print(f'error: --kind is required for --definition {args.definition}', file=sys.stderr)
        return 2

    try:
        env, failed = COMMANDS[args.command](args, argv)

        if args.output is None:
            write_report(env, report_format, sys.stdout)
        else:
            with open(args.output, 'w', encoding='utf-8', newline='') as sink:
                write_report(env, report_format, sink)

    except (SemimonoError, OSError, ValidationError, json.JSONDecodeError) as e:
        print(f'error: {describe_error(e)}', file=sys.stderr)
        return 2

    return 1 if args.strict_exit and failed else 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
