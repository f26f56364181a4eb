"""
CSV and JSON renderings of command results.

CSV values are fixed to ``DISPLAY_DECIMALS`` places; JSON keeps full
precision.
"""

import csv
from typing import Sequence

from django.conf import settings
from rest_framework.renderers import JSONRenderer

from metrics.params import DistanceReport
from metrics.serializers import DistanceReportSerializer, MeasureParamsSerializer


def format_value(value):
    if isinstance(value, float):
        return f"{value:.{settings.FUZZY_DISTANCE['DISPLAY_DECIMALS']}f}"
    return value


def render_json(data) -> str:
    return JSONRenderer().render(data, renderer_context={"indent": 2}).decode("utf-8") + "\n"


def write_rows(stream, header: Sequence[str], rows: Sequence[Sequence]):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(value) for value in row])


# --- distance ---
def write_distance(stream, report: DistanceReport, output_format):
    if output_format == "json":
        stream.write(render_json(DistanceReportSerializer(report).data))
    else:
        write_rows(stream, ["measure", "a", "b", "value"], [[report.measure.value, *report.operands, report.value]])


# --- matrix ---
def write_matrix(stream, reports: Sequence[Sequence[DistanceReport]], output_format):
    labels = [row[0].operands[0] for row in reports]
    values = [[report.value for report in row] for row in reports]
    if output_format == "json":
        first = reports[0][0]
        stream.write(render_json({
            "measure": first.measure.value,
            "labels": labels,
            "values": values,
            "params": MeasureParamsSerializer(first.params).data,
        }))
    else:
        write_rows(stream, ["", *labels], [[label, *row] for label, row in zip(labels, values)])


# --- rank ---
def write_ranking(stream, ranking: Sequence[DistanceReport], output_format):
    if output_format == "json":
        data = [
            {"rank": position, **DistanceReportSerializer(report).data}
            for position, report in enumerate(ranking, start=1)
        ]
        stream.write(render_json(data))
    else:
        write_rows(
            stream,
            ["rank", "label", "value"],
            [[position, report.operands[1], report.value] for position, report in enumerate(ranking, start=1)],
        )


# --- reproduce ---
def write_table(stream, table, output_format):
    if output_format == "json":
        stream.write(render_json({"table": table.filename, "header": table.header, "rows": table.rows}))
    else:
        write_rows(stream, table.header, table.rows)
