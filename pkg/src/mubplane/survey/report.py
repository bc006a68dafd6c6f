"""
Survey Reports
==============
CSV, JSON and Markdown renderings of a ``SurveyTable``.

CSV and JSON carry the same six row fields with the same values.
"""
from __future__ import annotations

from importlib import resources

from jinja2 import Environment

from mubplane.survey.table import ROW_FIELDS, SurveyTable
from mubplane.utils.output import dumps_json, rows_to_csv

CSV_HEADER = ",".join(ROW_FIELDS)


def table_to_csv(table: SurveyTable) -> str:
    return rows_to_csv(ROW_FIELDS, (r.values() for r in table.rows))


def table_to_json(table: SurveyTable) -> str:
    return dumps_json(table.to_dict())


def render_markdown(table: SurveyTable) -> str:
    source = resources.files("mubplane").joinpath("templates/survey_report.md.j2").read_text(encoding="utf-8")
    env = Environment(autoescape=False, trim_blocks=True, lstrip_blocks=True)
    return env.from_string(source).render(rows=table.rows, provenance=table.provenance)
