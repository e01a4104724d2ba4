import csv
import json
from typing import Literal, TextIO

from semimono.utils.report_info import ReportEnvelope

ReportFormat = Literal['json', 'csv', 'text']

CSV_PAYLOADS = ('scores', 'sweep')


def write_report(env: ReportEnvelope, format: ReportFormat, sink: TextIO) -> None:
    """Writes the envelope to `sink`.

    JSON (keys sorted) and CSV carry no timestamps, so identical inputs give identical bytes; the wall time only
    shows up in the text footer. CSV exists for score vectors (vertex,value) and sweeps (one row per tally).

    Raises:
        ValueError: CSV requested for another payload, or an unknown format.
    """
    if format == 'json':
        sink.write(json.dumps(env.model_dump(mode='json', exclude_none=True), sort_keys=True, indent=2) + '\n')

    elif format == 'csv':
        write_csv(env, sink)

    elif format == 'text':
        sink.write(render_text(env))

    else:
        raise ValueError(f'Unknown report format {format!r}.')


def write_csv(env: ReportEnvelope, sink: TextIO) -> None:
    writer = csv.writer(sink, lineterminator='\n')

    if env.payload_kind == 'scores':
        writer.writerow(['vertex', 'value'])
        writer.writerows([score['vertex'], score['value']] for score in env.payload['scores'])

    elif env.payload_kind == 'sweep':
        writer.writerow(['check', 'centrality', 'scenarios', 'holds', 'fails'])
        writer.writerows(
            [tally['check'], tally['centrality'], tally['scenarios_checked'], tally['holds'], tally['fails']]
            for tally in env.payload['tallies']
        )

    else:
        raise ValueError(f'CSV output is available for {" and ".join(CSV_PAYLOADS)} only, not {env.payload_kind}.')


def render_text(env: ReportEnvelope) -> str:
    payload = env.payload
    lines = []

    match env.payload_kind:
        case 'count':
            lines.append(f'{payload["count"]} connected labeled graphs')

        case 'scores':
            lines.append(f'{payload["kind"]} centrality')
            lines += [f'  {score["vertex"]}\t{score["value"]}' for score in payload['scores']]

        case 'basins':
            lines.append(f'K_xy ({len(payload["k_xy"])}): {" ".join(payload["k_xy"])}')
            lines.append(f'K_yx ({len(payload["k_yx"])}): {" ".join(payload["k_yx"])}')
            lines.append(f'overlap ({len(payload["overlap"])}): {" ".join(payload["overlap"])}')

        case 'verdict':
            lines.append(
                f'{payload["kind"]} {payload["definition"]}: holds at x = {payload["holds_at_x"]}, '
                f'holds at y = {payload["holds_at_y"]}'
            )
            lines += [
                f'  {w["side"]}: z={w["z"]} {w["before"]} -> {w["after"]} '
                f'(endpoint {w["endpoint_before"]} -> {w["endpoint_after"]})'
                for w in payload['witnesses']
            ]

        case 'dominance':
            lines.append(
                f'{payload["kind"]} basin dominance: strict = {payload["strict_holds"]}, '
                f'non-strict = {payload["nonstrict_holds"]}'
            )
            lines += [
                f'  {v["side"]}-basin u={v["u"]}: delta {v["delta"]} vs endpoint {v["endpoint_delta"]}'
                for v in payload['violations']
            ]

        case 'pointwise':
            lines.append(f'{len(payload["violations"])} pointwise violation(s)')
            lines += [
                f'  {v["inequality"]} ({v["side"]}-basin) u={v.get("u")} z={v.get("z")} pair={v.get("pair")}: '
                f'{v["lhs"]} vs {v["rhs"]}'
                for v in payload['violations']
            ]

        case 'peripherality':
            lines.append(f"p'(x) - p'(y) = {payload['lhs']}, |K_yx| - |K_xy| = {payload['rhs']}")

        case 'family':
            lines.append(f'# {payload["family"]} family, parameter {payload["parameter"]}')
            lines.append(payload['edge_list'].rstrip('\n'))
            if 'claims' in payload:
                lines += [
                    f'# {"PASS" if claim["passed"] else "FAIL"} {claim["name"]}: '
                    f'expected {claim["expected"]}, got {claim["actual"]}'
                    for claim in payload['claims']['claims']
                ]

        case 'sweep':
            lines.append(f'{payload["graphs_checked"]} graphs, {payload["scenarios_checked"]} scenarios')
            for tally in payload['tallies']:
                marker = '!' if tally['fails'] and tally['expected_to_hold'] else ' '
                lines.append(
                    f'{marker} {tally["check"]:<38} {tally["centrality"]:<12} '
                    f'{tally["holds"]}/{tally["scenarios_checked"]} hold, {tally["fails"]} fail'
                )

            lines.append('summary:')
            lines += [f'  {row["centrality"]}: score {row["score"]}, rank {row["rank"]}' for row in payload['summary']]
            lines += [
                f'  exemplar {e["check"]}/{e["centrality"]} x={e.get("x")} y={e.get("y")}: {e["witness"]}'
                for e in payload['exemplars']
            ]

    if env.prng:
        lines.append(f'prng: {env.prng}')

    if env.wall_time_seconds is not None:
        lines.append(f'wall time: {env.wall_time_seconds:.2f}s')

    return '\n'.join(lines) + '\n'
