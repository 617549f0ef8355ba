"""Published reference values for PP(4, 5), levels 0..10, transcribed verbatim.

Rows are keyed by sequence name; entry ``n`` is the value on level ``n``.
"""

REFERENCE_Q = 5

COUNTS_Q5 = {
    "a": [0, 0, 1, 2, 4, 9, 22, 56, 145, 378, 988],
    "b": [0, 0, 0, 1, 4, 12, 33, 88, 232, 609, 1596],
    "c": [0, 0, 2, 4, 6, 8, 10, 12, 14, 16, 18],
    "d": [0, 0, 0, 1, 3, 7, 16, 38, 94, 239, 617],
    "e": [0, 0, 0, 0, 1, 5, 17, 50, 138, 370, 979],
    "s": [1, 3, 6, 11, 21, 44, 101, 247, 626, 1615, 4201],
}

SUMS_Q5 = {
    "a_hat": [0, 0, 2, 6, 18, 58, 194, 658, 2242, 7642, 26114],
    "b_hat": [0, 0, 0, 2, 10, 38, 134, 462, 1582, 5406, 18462],
    "c_hat": [0, 0, 4, 12, 28, 60, 124, 252, 508, 1020, 2044],
    "d_hat": [0, 0, 0, 6, 36, 170, 768, 3458, 15596, 70314, 316296],
    "e_hat": [0, 0, 0, 0, 8, 70, 418, 2156, 10388, 48342, 220746],
    "s_hat": [1, 3, 9, 29, 103, 399, 1641, 6989, 30319, 132735, 583665],
}


def column_inconsistencies(table: dict[str, list[int]], total: str, parts: list[str], ones: list[int]) -> list[int]:
    """Levels where the parts plus the type-1 contribution do not add up to the total row."""
    bad = []
    for n, t in enumerate(table[total]):
        if sum(table[p][n] for p in parts) + ones[n] != t:
            bad.append(n)
    return bad


def type_one_column(n_max: int) -> list[int]:
    return [1] + [3] * n_max
