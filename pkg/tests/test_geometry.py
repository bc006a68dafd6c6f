"""
Tests for incidence structures, plane axioms, PG(2, q), duality and affinization.
"""
import json

import pytest

from mubplane.algebra.field import build_field
from mubplane.exceptions import CapacityError, DomainError, PreconditionError
from mubplane.geometry.axioms import (
    COUNTING,
    PARALLEL,
    QUADRANGLE,
    TRIANGLE,
    TWO_LINES_ONE_POINT,
    TWO_POINTS_ONE_LINE,
    AffineCertificate,
    AxiomFailure,
    PlaneCertificate,
    parallel_classes,
    verify_affine_plane,
    verify_projective_plane,
)
from mubplane.geometry.incidence import IncidenceStructure, dualize, restrict
from mubplane.geometry.pg2 import build_pg2, normalized_vectors
from mubplane.geometry.transforms import affinize, affinize_dual

PLANE_ORDERS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]


class TestIncidenceStructure:
    def test_table_is_read_only(self, fano):
        with pytest.raises(ValueError):
            fano.incidence[0, 0] = True

    def test_json_round_trip(self, fano):
        text = json.dumps(fano.to_dict())
        assert IncidenceStructure.from_dict(json.loads(text)) == fano

    def test_json_format(self, fano):
        data = fano.to_dict()
        assert data["points"] == 7 and data["lines"] == 7
        assert len(data["incidence"]) == 7 and set(sum(data["incidence"], [])) == {0, 1}
        assert len(data["point_labels"]) == 7

    def test_missing_labels_are_null(self):
        s = IncidenceStructure.from_lines(3, [[0, 1], [1, 2]])
        assert s.to_dict()["point_labels"] is None

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            IncidenceStructure.from_dict({"points": 2, "lines": 2, "incidence": [[1, 0]]})

    def test_non_binary_entries(self):
        with pytest.raises(DomainError):
            IncidenceStructure.from_dict({"points": 1, "lines": 1, "incidence": [[2]]})

    def test_from_lines(self):
        s = IncidenceStructure.from_lines(3, [[0, 1], [1, 2]])
        assert s.points_on(1) == [1, 2]
        assert s.lines_through(1) == [0, 1]

    def test_from_lines_out_of_range(self):
        with pytest.raises(DomainError):
            IncidenceStructure.from_lines(2, [[0, 5]])

    def test_restrict_keeps_labels(self, fano):
        sub = restrict(fano, [0, 1], [2])
        assert sub.point_labels == fano.point_labels[:2]
        assert sub.incidence.shape == (2, 1)


class TestBuildPG2:
    """PG(2, q) from GF(q)^3."""

    @pytest.mark.parametrize("p,n", PLANE_ORDERS)
    def test_verifies_with_expected_counts(self, p, n):
        spec = build_field(p, n)
        q = spec.order
        plane = build_pg2(spec)
        result = verify_projective_plane(plane)
        assert isinstance(result, PlaneCertificate)
        assert result.order == q
        assert plane.point_count == plane.line_count == q * q + q + 1
        assert (plane.incidence.sum(axis=0) == q + 1).all()

    def test_normalized_vectors(self):
        reps = normalized_vectors(2)
        assert reps.tolist() == [[0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1]]

    def test_labels(self, fano):
        assert fano.point_labels[0] == "(0,0,1)"
        assert fano.line_labels[0] == "[0,0,1]"

    def test_capacity(self):
        with pytest.raises(CapacityError):
            build_pg2(build_field(3, 2), order_max=8)


class TestVerifyProjectivePlane:
    def test_fano_passes(self, fano):
        result = verify_projective_plane(fano)
        assert result.passed
        assert result.order == 2
        assert [c.axiom for c in result.axioms_checked][-1] == COUNTING

    def test_single_flip_fails_pair_axiom(self, fano):
        for p in range(7):
            for line in range(7):
                result = verify_projective_plane(fano.with_flipped(p, line))
                assert isinstance(result, AxiomFailure)
                assert result.axiom in (TWO_POINTS_ONE_LINE, TWO_LINES_ONE_POINT)
                if result.axiom == TWO_POINTS_ONE_LINE:
                    assert result.witness["common_lines"] in (0, 2)

    def test_near_pencil_fails_quadrangle(self, near_pencil):
        result = verify_projective_plane(near_pencil)
        assert isinstance(result, AxiomFailure)
        assert result.axiom == QUADRANGLE

    def test_single_line_fails_quadrangle(self):
        result = verify_projective_plane(IncidenceStructure.from_lines(3, [[0, 1, 2]]))
        assert result.axiom == QUADRANGLE

    def test_failure_records_checked_axioms(self, near_pencil):
        result = verify_projective_plane(near_pencil)
        assert [c.passed for c in result.axioms_checked] == [True, True, False]
        assert result.to_dict()["failed_axiom"] == QUADRANGLE

    def test_certificate_json(self, pg2_3):
        data = verify_projective_plane(pg2_3).to_dict()
        assert data["order"] == 3 and data["points"] == 13 and data["passed"]


class TestDualize:
    def test_fano_dual(self, fano):
        result = verify_projective_plane(dualize(fano))
        assert result.passed and result.order == 2

    def test_involution(self, pg2_3):
        assert dualize(dualize(pg2_3)) == pg2_3

    def test_labels_swap(self, fano):
        assert dualize(fano).point_labels == fano.line_labels

    @pytest.mark.parametrize("p,n", PLANE_ORDERS)
    def test_dual_of_every_plane(self, p, n):
        plane = build_pg2(build_field(p, n))
        result = verify_projective_plane(dualize(plane))
        assert isinstance(result, PlaneCertificate) and result.order == p**n


class TestAffinize:
    """Deleting a line at infinity."""

    def test_fano_any_line(self, fano):
        for line in range(7):
            affine = affinize(fano, line)
            assert (affine.point_count, affine.line_count) == (4, 6)
            assert (affine.incidence.sum(axis=0) == 2).all()

    def test_fano_parallel_classes(self, fano):
        assert len(parallel_classes(affinize(fano, 0))) == 3

    def test_pg2_3(self, pg2_3):
        affine = affinize(pg2_3, 5)
        assert (affine.point_count, affine.line_count) == (9, 12)

    @pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2)])
    def test_every_line_gives_affine_plane(self, p, n):
        plane = build_pg2(build_field(p, n))
        q = p**n
        for line in range(plane.line_count):
            result = verify_affine_plane(affinize(plane, line))
            assert isinstance(result, AffineCertificate)
            assert result.order == q
            assert result.point_count == q * q
            assert result.line_count == q * q + q
            assert len(result.parallel_classes) == q + 1

    @pytest.mark.parametrize("p,n", PLANE_ORDERS[3:])
    def test_larger_planes_one_line(self, p, n):
        plane = build_pg2(build_field(p, n))
        result = verify_affine_plane(affinize(plane, 0))
        assert isinstance(result, AffineCertificate) and result.order == p**n

    def test_bad_line_id(self, fano):
        with pytest.raises(DomainError):
            affinize(fano, 7)

    def test_requires_plane(self, near_pencil):
        with pytest.raises(PreconditionError):
            affinize(near_pencil, 0)


class TestAffinizeDual:
    def test_dual_is_affine(self, pg2_3):
        for point in (0, 6, 12):
            reduced = affinize_dual(pg2_3, point)
            assert (reduced.point_count, reduced.line_count) == (12, 9)
            result = verify_affine_plane(dualize(reduced))
            assert isinstance(result, AffineCertificate) and result.order == 3

    def test_bad_point_id(self, fano):
        with pytest.raises(DomainError):
            affinize_dual(fano, -1)

    def test_requires_plane(self, near_pencil):
        with pytest.raises(PreconditionError):
            affinize_dual(near_pencil, 0)


class TestVerifyAffinePlane:
    def test_fano_fails_parallel(self, fano):
        result = verify_affine_plane(fano)
        assert isinstance(result, AxiomFailure) and result.axiom == PARALLEL

    def test_playfair_counterexample(self, near_pencil):
        # Every pair of lines in a near-pencil meets, so nothing is parallel.
        result = verify_affine_plane(near_pencil)
        assert isinstance(result, AxiomFailure)
        assert result.axiom == PARALLEL
        assert result.witness["parallels"] == 0
        assert not near_pencil.incidence[result.witness["point"], result.witness["line"]]

    def test_duplicate_parallel(self):
        # Affine plane of order 2 with an extra copy of one line.
        lines = [[0, 1], [2, 3], [0, 2], [1, 3], [0, 3], [1, 2], [0, 1]]
        result = verify_affine_plane(IncidenceStructure.from_lines(4, lines))
        assert isinstance(result, AxiomFailure)

    def test_collinear_points_fail_triangle(self):
        result = verify_affine_plane(IncidenceStructure.from_lines(3, [[0, 1, 2]]))
        assert isinstance(result, AxiomFailure) and result.axiom == TRIANGLE

    def test_order_two_certificate(self, fano):
        result = verify_affine_plane(affinize(fano, 0))
        assert result.passed and result.order == 2
        classes = result.parallel_classes
        assert sorted(len(c) for c in classes) == [2, 2, 2]
        assert sorted(sum(map(list, classes), [])) == list(range(6))
