import numpy as np
import pytest

from psghost.field import FieldSpec
from psghost.plane import (ProjLine, ProjPoint, enumerate_lines,
                           enumerate_points, incidence_matrix, incident,
                           line_points, pencil_lines)


@pytest.mark.parametrize("q,p,h,count", [(2, 2, 1, 7), (3, 3, 1, 13),
                                         (7, 7, 1, 57)])
def test_point_counts(q, p, h, count):
    spec = FieldSpec.of(p, h)
    points = enumerate_points(spec)
    assert len(points) == count == q * q + q + 1
    assert len(set(points)) == count


def test_enumeration_order_q2():
    spec = FieldSpec.of(2)
    encs = [P.encodings() for P in enumerate_points(spec)]
    assert encs == [(0, 0, 1), (0, 1, 0), (0, 1, 1),
                    (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)]


def test_incident_examples():
    spec = FieldSpec.of(2)
    P = ProjPoint.from_encodings(spec, 0, 0, 1)
    assert incident(P, ProjLine.from_encodings(spec, 1, 0, 0))
    assert not incident(P, ProjLine.from_encodings(spec, 0, 0, 1))
    gf7 = FieldSpec.of(7)
    # 1*1 + 2*1 + 3*2 = 9 = 2 != 0 mod 7
    assert not incident(ProjPoint.from_encodings(gf7, 1, 2, 3),
                        ProjLine.from_encodings(gf7, 1, 1, 2))


def test_line_points_q2():
    spec = FieldSpec.of(2)
    pts = line_points(ProjLine.from_encodings(spec, 1, 0, 0), spec)
    assert {P.encodings() for P in pts} == {(0, 0, 1), (0, 1, 0), (0, 1, 1)}
    pts = line_points(ProjLine.from_encodings(spec, 0, 0, 1), spec)
    assert {P.encodings() for P in pts} == {(0, 1, 0), (1, 0, 0), (1, 1, 0)}


def test_line_sizes_q3():
    spec = FieldSpec.of(3)
    for l in enumerate_lines(spec):
        assert len(line_points(l, spec)) == 4


def test_pencil_q2():
    spec = FieldSpec.of(2)
    P = ProjPoint.from_encodings(spec, 0, 0, 1)
    assert len(pencil_lines(P, spec)) == 3


def test_pencil_q7_pairwise_meet_only_at_vertex():
    spec = FieldSpec.of(7)
    P = enumerate_points(spec)[10]
    pencil = pencil_lines(P, spec)
    assert len(pencil) == 8
    for i in range(len(pencil)):
        for j in range(i + 1, len(pencil)):
            common = set(line_points(pencil[i], spec)) & set(
                line_points(pencil[j], spec))
            assert common == {P}


def test_pencil_union_covers_plane_q4():
    spec = FieldSpec.of(2, 2)
    P = enumerate_points(spec)[3]
    pencil = pencil_lines(P, spec)
    assert len(pencil) == 5
    union = {Q for l in pencil for Q in line_points(l, spec)}
    assert len(union) == 21


@pytest.mark.parametrize("p,h", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                 (2, 3), (3, 2)])
def test_incidence_invariants(p, h):
    spec = FieldSpec.of(p, h)
    q = spec.q
    inc = incidence_matrix(spec)
    n = q * q + q + 1
    assert inc.shape == (n, n)
    assert np.all(inc.sum(axis=0) == q + 1)  # points per line
    assert np.all(inc.sum(axis=1) == q + 1)  # lines per point
    # two distinct points lie on exactly one common line
    common = inc @ inc.T
    off_diag = common - np.diag(np.diag(common))
    assert np.all(off_diag + np.eye(n, dtype=np.int64) * (q + 1)
                  == np.where(np.eye(n) > 0, q + 1, 1))


def test_duality():
    for p, h in [(2, 1), (3, 1), (2, 2)]:
        spec = FieldSpec.of(p, h)
        pts = {P.encodings() for P in enumerate_points(spec)}
        lns = {l.encodings() for l in enumerate_lines(spec)}
        assert pts == lns


def test_normalization_idempotent():
    spec = FieldSpec.of(7)
    P = ProjPoint.from_encodings(spec, 1, 2, 3)
    for lam in range(1, 7):
        s = spec.element(lam)
        Q = ProjPoint.make(s * P.coords[0], s * P.coords[1], s * P.coords[2])
        assert Q == P


def test_all_zero_rejected():
    spec = FieldSpec.of(3)
    with pytest.raises(ValueError):
        ProjPoint.from_encodings(spec, 0, 0, 0)
