"""The plane/MUB correspondence survey."""
from mubplane.survey.consistency import Consistency, conjecture_consistency
from mubplane.survey.report import render_markdown, table_to_csv, table_to_json
from mubplane.survey.table import SurveyRow, SurveyTable, survey

__all__ = [
    "Consistency",
    "SurveyRow",
    "SurveyTable",
    "conjecture_consistency",
    "render_markdown",
    "survey",
    "table_to_csv",
    "table_to_json",
]
