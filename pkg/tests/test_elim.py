import pytest

from psghost import elim
from psghost.field import multinomial_int

# Hand-transcribed step matrices for p = 7 (non-pivotal rows only).
# Columns of the interior block, in order:
# 1, b, b2, b3, b4, c, bc, b2c, b3c, c2, bc2, b2c2, c3, bc3, c4
STEP1_P7 = {
    (1, 2): [0, 0, 0, 0, 0, 1, 1, 1, 1, 3, 3, 3, 7, 7, 15],
    (2, 2): [0, 0, 0, 0, 0, 1, 2, 4, 8, 3, 6, 12, 7, 14, 15],
    (3, 2): [0, 0, 0, 0, 0, 1, 3, 9, 27, 3, 9, 27, 7, 21, 15],
    (4, 2): [0, 0, 0, 0, 0, 1, 4, 16, 64, 3, 12, 48, 7, 28, 15],
    (1, 3): [0, 0, 0, 0, 0, 2, 2, 2, 2, 8, 8, 8, 26, 26, 80],
    (2, 3): [0, 0, 0, 0, 0, 2, 4, 8, 16, 8, 16, 32, 26, 52, 80],
    (3, 3): [0, 0, 0, 0, 0, 2, 6, 18, 54, 8, 24, 72, 26, 78, 80],
    (1, 4): [0, 0, 0, 0, 0, 3, 3, 3, 3, 15, 15, 15, 63, 63, 255],
    (2, 4): [0, 0, 0, 0, 0, 3, 6, 12, 24, 15, 30, 60, 63, 126, 255],
    (1, 5): [0, 0, 0, 0, 0, 4, 4, 4, 4, 24, 24, 24, 124, 124, 624],
}
# Trailing ten columns (c ... c4) of the step-2 rows.
STEP2_P7 = {
    (1, 3): [0, 0, 0, 0, 1, 1, 1, 6, 6, 25],
    (2, 3): [0, 0, 0, 0, 1, 2, 4, 6, 12, 25],
    (3, 3): [0, 0, 0, 0, 1, 3, 9, 6, 18, 25],
    (1, 4): [0, 0, 0, 0, 2, 2, 2, 14, 14, 70],
    (2, 4): [0, 0, 0, 0, 2, 4, 8, 14, 28, 70],
    (1, 5): [0, 0, 0, 0, 3, 3, 3, 24, 24, 141],
}
# Trailing six columns (c2 ... c4) of the step-3 rows.
STEP3_P7 = {
    (1, 4): [0, 0, 0, 1, 1, 10],
    (2, 4): [0, 0, 0, 1, 2, 10],
    (1, 5): [0, 0, 0, 2, 2, 22],
}
# Trailing three columns (c3, bc3, c4) of the step-4 row.
STEP4_P7 = {
    (1, 5): [0, 0, 1],
}


def test_base_points_p3():
    assert elim.base_points(3) == [(1, 0, 0), (1, 0, 1), (1, 0, 2),
                                   (1, 1, 0), (1, 1, 1), (1, 2, 0)]


def test_base_points_p7():
    pts = elim.base_points(7)
    assert len(pts) == 28
    interior = [(b, c) for (_, b, c) in pts if b >= 1 and c >= 1]
    assert len(interior) == 15


def test_base_points_p2_fallback():
    assert elim.base_points(2) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_initial_matrix_spot_entries():
    p = 7
    M = elim.initial_matrix(p)
    rows = elim.table2_row_labels(p)
    cols = elim.table2_col_labels(p)
    assert M[rows.index((2, 0))][cols.index((2, 0))] == 4      # row (1,2,0), b^2
    assert M[rows.index((0, 0))] == [1] + [0] * (len(cols) - 1)
    assert M[rows.index((5, 1))][cols.index((1, 1))] == 5      # row (1,p-2,1), bc


def test_fourth_block_shapes():
    assert len(elim.fourth_block(7)) == 15
    assert len(elim.fourth_block(7)[0]) == 15
    assert len(elim.fourth_block(5)) == 6
    assert len(elim.fourth_block(3)) == 1


def test_fourth_block_spot_entries():
    p = 7
    B = elim.fourth_block(p)
    rows = elim.fourth_block_row_labels(p)
    cols = elim.fourth_block_col_labels(p)
    assert B[rows.index((2, 2))][cols.index((1, 1))] == 4      # (1,2,2) at bc
    assert B[rows.index((1, 5))][cols.index((0, 4))] == 625    # (1,1,5) at c^4


def test_initial_block_matches_printed_example_p7():
    # first row of the p=7 interior block is all ones
    B = elim.fourth_block(7)
    assert B[0] == [1] * 15
    rows = elim.fourth_block_row_labels(7)
    assert B[rows.index((1, 2))] == [1, 1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4,
                                     8, 8, 16]


def _state_at(p, n):
    states = elim.run_elimination(p)
    return states[n]


@pytest.mark.parametrize("n,fixture,tail", [
    (1, STEP1_P7, 15), (2, STEP2_P7, 10), (3, STEP3_P7, 6), (4, STEP4_P7, 3)])
def test_example7_step_fixtures(n, fixture, tail):
    state = _state_at(7, n)
    for (b, c), expected in fixture.items():
        row = state.row(b, c)
        assert row[-tail:] == expected, f"row (1,{b},{c}) at step {n}"


def test_closed_form_examples():
    assert elim.closed_form_entry(1, 1, 2, 0, 4) == 15
    assert elim.closed_form_entry(2, 1, 3, 0, 3) == 6
    assert elim.closed_form_entry(2, 1, 3, 0, 1) == 0  # empty summation


def test_closed_form_step3_step4():
    assert elim.closed_form_entry(3, 1, 4, 0, 4) == 10
    assert elim.closed_form_entry(3, 1, 5, 0, 4) == 22
    assert elim.closed_form_entry(4, 1, 5, 0, 4) == 1
    assert elim.closed_form_entry(4, 1, 5, 0, 3) == 0


def test_division_exactness_enforced():
    state = elim.initial_state(7)
    bad = elim.StepState(7, 1, [[x + 1 for x in row] for row in state.matrix],
                         state.row_labels, state.col_labels)
    with pytest.raises(elim.IntegrityError):
        elim.elimination_step(bad)


def test_column_scaling_values():
    p = 5
    scaling = elim.column_scaling(p)
    cols = elim.table2_col_labels(p)
    assert scaling[cols.index((0, 0))] == 1
    assert scaling[cols.index((1, 1))] == multinomial_int(4, 1, 1)  # 12


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_verify_procedure(p):
    report = elim.verify_procedure(p)
    assert report.ok, report.summary()
    assert report.steps_run == p - 2


def test_verify_rejects_bad_p():
    with pytest.raises(ValueError):
        elim.verify_procedure(4)
    with pytest.raises(ValueError):
        elim.verify_procedure(2)


def test_trace_csv_has_labels():
    csv = elim.initial_state(5).to_csv()
    assert csv.splitlines()[0].startswith("row,b^0c^0")
    assert "(1;1;1)^(0)" in csv
