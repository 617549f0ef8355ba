"""Internal consistency of the transcribed reference tables."""
from pascal_pyramid.reference import COUNTS_Q5, SUMS_Q5, column_inconsistencies, type_one_column

SUM_PARTS = ["a_hat", "b_hat", "c_hat", "d_hat", "e_hat"]


def test_counts_columns_add_up():
    assert column_inconsistencies(COUNTS_Q5, "s", ["a", "b", "c", "d", "e"], type_one_column(10)) == []


def test_sums_table_contradicts_itself_only_at_a_hat_9():
    ones = type_one_column(10)
    assert column_inconsistencies(SUMS_Q5, "s_hat", SUM_PARTS, ones) == [9]
    repaired = {k: list(v) for k, v in SUMS_Q5.items()}
    repaired["a_hat"][9] = 7650
    assert column_inconsistencies(repaired, "s_hat", SUM_PARTS, ones) == []


def test_a_hat_row_recurrence_points_to_7650():
    a = SUMS_Q5["a_hat"]
    # third-order relation for the A sums at q=5, fed only with printed cells
    assert 5 * a[8] - 6 * a[7] + 2 * a[6] == 7650
    assert 5 * 7650 - 6 * a[8] + 2 * a[7] == a[10]
    assert 5 * a[9] - 6 * a[8] + 2 * a[7] != a[10]
