"""
Tests for the consistency rule, the survey table and its renderings.
"""
import csv
import io
import json

import pytest
from pydantic import ValidationError

from mubplane.algebra.numbers import PlaneStatus
from mubplane.exceptions import DomainError, UsageError
from mubplane.survey.consistency import Consistency, conjecture_consistency
from mubplane.survey.report import CSV_HEADER, render_markdown, table_to_csv, table_to_json
from mubplane.survey.table import SurveyRow, SurveyTable, survey
from mubplane.utils.config import Config


class TestConjectureConsistency:
    def test_prime_power_with_complete_set(self):
        assert conjecture_consistency(4, PlaneStatus.EXISTS_PRIME_POWER, certified_count=5) is Consistency.CONSISTENT

    def test_prime_power_without_evidence(self):
        assert conjecture_consistency(4, PlaneStatus.EXISTS_PRIME_POWER) is Consistency.OPEN

    def test_ruled_out_and_search_falls_short(self):
        result = conjecture_consistency(6, PlaneStatus.RULED_OUT_BRUCK_RYSER, searched_max=3)
        assert result is Consistency.CONSISTENT

    def test_ruled_out_without_search(self):
        assert conjecture_consistency(10, PlaneStatus.RULED_OUT_BY_COMPUTATION) is Consistency.OPEN

    def test_certified_complete_set_against_ruled_out_plane(self):
        result = conjecture_consistency(6, PlaneStatus.RULED_OUT_BRUCK_RYSER, certified_count=7)
        assert result is Consistency.REFUTES

    def test_search_alone_never_refutes(self):
        result = conjecture_consistency(6, PlaneStatus.RULED_OUT_BRUCK_RYSER, searched_max=7)
        assert result is Consistency.OPEN

    def test_bound_below_complete_for_prime_power(self):
        result = conjecture_consistency(4, PlaneStatus.EXISTS_PRIME_POWER, proven_bound=3)
        assert result is Consistency.REFUTES

    def test_proven_bound_for_ruled_out_plane(self):
        result = conjecture_consistency(6, PlaneStatus.RULED_OUT_BRUCK_RYSER, proven_bound=6)
        assert result is Consistency.CONSISTENT

    def test_open_plane(self):
        assert conjecture_consistency(12, PlaneStatus.OPEN, searched_max=3) is Consistency.OPEN


class TestSurveyRow:
    def test_constructed_requires_prime_power(self):
        with pytest.raises(ValidationError):
            SurveyRow(
                d=6,
                prime_power=False,
                plane_status=PlaneStatus.RULED_OUT_BRUCK_RYSER,
                mub_constructed=3,
                consistency=Consistency.OPEN,
            )

    def test_refutes_requires_certified_set(self):
        with pytest.raises(ValidationError):
            SurveyRow(
                d=6,
                prime_power=False,
                plane_status=PlaneStatus.RULED_OUT_BRUCK_RYSER,
                mub_searched=7,
                consistency=Consistency.REFUTES,
            )

    def test_table_must_be_contiguous(self):
        rows = [
            SurveyRow(d=d, prime_power=False, plane_status=PlaneStatus.OPEN, consistency=Consistency.OPEN)
            for d in (12, 14)
        ]
        with pytest.raises(ValidationError):
            SurveyTable(rows=tuple(rows))


class TestSurvey:
    def test_small_prime_powers(self):
        table = survey(2, 5)
        assert [r.d for r in table.rows] == [2, 3, 4, 5]
        for row in table.rows:
            assert row.prime_power
            assert row.plane_status is PlaneStatus.EXISTS_PRIME_POWER
            assert row.mub_constructed == row.d + 1
            assert row.mub_searched is None
            assert row.consistency is Consistency.CONSISTENT
            assert row.certification_deviation < 1e-9
        assert not table.has_refutation

    def test_order_ten_is_open_without_search(self):
        (row,) = survey(10, 10).rows
        assert row.plane_status is PlaneStatus.RULED_OUT_BY_COMPUTATION
        assert row.mub_constructed is None
        assert row.consistency is Consistency.OPEN

    def test_order_six_without_search(self):
        (row,) = survey(6, 6).rows
        assert row.plane_status is PlaneStatus.RULED_OUT_BRUCK_RYSER
        assert row.consistency is Consistency.OPEN

    @pytest.mark.parametrize("d_min,d_max", [(1, 4), (5, 4)])
    def test_bad_range(self, d_min, d_max):
        with pytest.raises(UsageError):
            survey(d_min, d_max)

    def test_provenance(self):
        table = survey(2, 3)
        assert table.provenance["range"] == [2, 3]
        assert table.provenance["search_enabled"] is False
        assert table.provenance["certify_tolerance"] == 1e-9

    def test_search_above_cap_is_skipped(self, caplog):
        config = Config()
        config.set("survey.search_cap", 5)
        table = survey(6, 6, True, config=config)
        assert table.rows[0].mub_searched is None
        assert "above the search cap" in caplog.text

    def test_tolerance_from_config(self):
        config = Config()
        config.set("tolerance.certify", 1e-6)
        table = survey(3, 3, config=config)
        assert table.provenance["certify_tolerance"] == 1e-6
        assert table.rows[0].certified_count == 4

    def test_prime_power_above_mub_cap_is_rejected_up_front(self):
        with pytest.raises(UsageError, match="d=37"):
            survey(30, 40)

    def test_cap_from_config(self):
        config = Config()
        config.set("capacity.mub_dimension_max", 8)
        with pytest.raises(UsageError, match="d=9"):
            survey(2, 9, config=config)
        assert [r.d for r in survey(2, 8, config=config).rows] == list(range(2, 9))
        # only prime powers need a construction
        assert survey(10, 10, config=config).rows[0].consistency is Consistency.OPEN

    def test_field_cap_also_bounds_the_range(self):
        config = Config()
        config.set("capacity.field_order_max", 4)
        with pytest.raises(UsageError, match="d=5"):
            survey(2, 5, config=config)

    def test_construct_tolerance_from_config(self):
        config = Config()
        config.set("tolerance.construct", 0.0)
        with pytest.raises(DomainError):
            survey(2, 2, config=config)
        config.set("tolerance.construct", 1e-6)
        assert survey(2, 3, config=config).rows[1].mub_constructed == 4


class TestReports:
    def test_csv_header(self):
        text = table_to_csv(survey(2, 3))
        assert text.splitlines()[0] == CSV_HEADER
        assert CSV_HEADER == "d,prime_power,plane_status,mub_constructed,mub_searched,consistency"

    def test_csv_matches_json(self):
        table = survey(2, 6)
        csv_rows = list(csv.DictReader(io.StringIO(table_to_csv(table))))
        json_rows = json.loads(table_to_json(table))["rows"]
        assert len(csv_rows) == len(json_rows) == 5
        for c, j in zip(csv_rows, json_rows):
            for key, value in j.items():
                if value is None:
                    expected = ""
                elif isinstance(value, bool):
                    expected = "true" if value else "false"
                else:
                    expected = str(value)
                assert c[key] == expected

    def test_csv_row_for_order_six(self):
        lines = table_to_csv(survey(6, 6)).splitlines()
        assert lines[1] == "6,false,RuledOutBruckRyser,,,Open"

    def test_json_shape(self):
        data = json.loads(table_to_json(survey(2, 2)))
        assert data["rows"][0] == {
            "d": 2,
            "prime_power": True,
            "plane_status": "ExistsPrimePower",
            "mub_constructed": 3,
            "mub_searched": None,
            "consistency": "Consistent",
        }
        assert data["evidence"][0]["certified_count"] == 3

    def test_markdown(self):
        text = render_markdown(survey(5, 6))
        assert text.startswith("# Planes and MUBs, d = 5 to 6")
        assert "| 5 | yes | ExistsPrimePower | 6 | - | **Consistent** |" in text
        assert "| 6 | no | RuledOutBruckRyser | - | - | **Open** |" in text
        assert "Search negatives" not in text


@pytest.mark.slow
class TestSurveyWithSearch:
    OVERRIDES = {"restarts": 5, "max_iterations": 3000}

    def test_order_six(self):
        (row,) = survey(6, 6, True, self.OVERRIDES).rows
        assert row.mub_searched == 3
        assert row.consistency is Consistency.CONSISTENT
        assert set(row.search_costs) == {2, 3, 4}
        assert row.search_costs[4] > 1e-4

    def test_no_refutation_up_to_nine(self):
        table = survey(2, 9, True, self.OVERRIDES)
        assert not table.has_refutation
        assert "Search negatives" in render_markdown(table)
