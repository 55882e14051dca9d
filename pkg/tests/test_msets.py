import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from psghost.field import FieldSpec
from psghost.msets import (PointMultiset, complement, minverse, mset_from_text,
                           mset_to_text, msum, phi)
from psghost.plane import ProjPoint, line_points, ProjLine
from psghost.poly import add_poly

GF2 = FieldSpec.of(2)
GF3 = FieldSpec.of(3)


def single(spec, enc, m=1):
    mult = [0] * (spec.q**2 + spec.q + 1)
    from psghost.plane import point_index
    P = ProjPoint.from_encodings(spec, *enc)
    mult[point_index(spec)[P]] = m % spec.p
    return PointMultiset(spec, tuple(mult))


def test_msum_characteristic_two():
    S = single(GF2, (0, 0, 1))
    assert msum(S, S) == PointMultiset.empty(GF2)


def test_msum_identity():
    S = single(GF3, (1, 0, 2), 2)
    assert msum(S, PointMultiset.empty(GF3)) == S


def test_msum_wraps_mod_p():
    A = single(GF3, (0, 0, 1), 2)
    assert msum(A, A) == single(GF3, (0, 0, 1), 1)  # 4 mod 3


def test_minverse():
    assert minverse(single(GF2, (1, 1, 1))) == single(GF2, (1, 1, 1))
    gf5 = FieldSpec.of(5)
    assert minverse(single(gf5, (0, 0, 1), 2)) == single(gf5, (0, 0, 1), 3)
    assert minverse(PointMultiset.empty(GF3)) == PointMultiset.empty(GF3)


def test_complement():
    full = PointMultiset.full_plane(GF2)
    line = PointMultiset.from_points(
        GF2, line_points(ProjLine.from_encodings(GF2, 1, 0, 0), GF2))
    affine = complement(line, full)
    assert affine.size == 4
    assert complement(PointMultiset.empty(GF2), full) == full
    assert complement(full, full) == PointMultiset.empty(GF2)


def test_complement_containment_error():
    with pytest.raises(ValueError):
        complement(single(GF3, (0, 0, 1), 2), single(GF3, (0, 0, 1), 1))


def test_phi_identity_and_example():
    assert phi(PointMultiset.empty(GF2)).is_zero()
    from psghost.poly import HomPoly
    assert phi(single(GF2, (0, 0, 1))) == HomPoly.from_terms(GF2, {(1, 0): 1})


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_phi_homomorphism_q3(data):
    n = 13
    vec = st.lists(st.integers(0, 2), min_size=n, max_size=n)
    A = PointMultiset(GF3, tuple(data.draw(vec)))
    B = PointMultiset(GF3, tuple(data.draw(vec)))
    assert phi(msum(A, B)) == add_poly(phi(A), phi(B))


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_group_axioms_q3(data):
    n = 13
    vec = st.lists(st.integers(0, 2), min_size=n, max_size=n)
    A = PointMultiset(GF3, tuple(data.draw(vec)))
    B = PointMultiset(GF3, tuple(data.draw(vec)))
    C = PointMultiset(GF3, tuple(data.draw(vec)))
    assert msum(msum(A, B), C) == msum(A, msum(B, C))
    assert msum(A, B) == msum(B, A)
    assert msum(A, minverse(A)) == PointMultiset.empty(GF3)
    # every non-identity element has order p
    acc = A
    for _ in range(2):
        acc = msum(acc, A)
    assert acc == PointMultiset.empty(GF3)


def test_group_order_formula():
    for p, h in [(2, 1), (3, 1), (2, 2)]:
        spec = FieldSpec.of(p, h)
        q = spec.q
        # |p^PG(2,q)| = p^(q^2+q+1), as a formula
        assert p**(q * q + q + 1) == p**len(PointMultiset.empty(spec).mult)
    # exhaustive at q = 2: 128 distinct multisets
    all_sets = {PointMultiset(GF2, bits)
                for bits in itertools.product((0, 1), repeat=7)}
    assert len(all_sets) == 128


def test_size_reporting():
    S = single(GF3, (0, 0, 1), 2)
    assert S.size == 2 and S.size_mod_p == 2
    full = PointMultiset.full_plane(GF3)
    assert full.size == 13 and full.size_mod_p == 1


def test_text_round_trip():
    spec = FieldSpec.of(5)
    rng = random.Random(2)
    S = PointMultiset.from_vector(spec, [rng.randrange(5) for _ in range(31)])
    assert mset_from_text(mset_to_text(S), spec) == S


def test_text_plain_set_omits_multiplicity():
    S = single(GF2, (0, 0, 1))
    text = mset_to_text(S)
    assert ":" not in text.splitlines()[1]
    assert mset_from_text("0 0 1\n", GF2) == S


def test_text_parse_error_line_number():
    with pytest.raises(ValueError, match="line 2"):
        mset_from_text("# mset q=2\n0 0\n", GF2)
