"""Known classification counts used as display reference data.

These totals come from the published exhaustive determination of Costas
cubes for orders up to 29 (itself built on the complete Costas array
databases for those orders).  Orders 2-12 are recomputed from scratch by
the enumeration module and the test suite; the larger orders cannot be
recomputed at desk scale without an externally supplied array database.
"""

# order -> number of equivalence classes of Costas cubes
CUBE_CLASS_COUNTS: dict[int, int] = {
    2: 1, 3: 1, 4: 2, 5: 13, 6: 47, 7: 30, 8: 42, 9: 46, 10: 69,
    11: 66, 12: 34, 13: 11, 14: 6, 15: 33, 16: 6, 17: 19, 18: 0,
    19: 0, 20: 2, 21: 50, 22: 4, 23: 11, 24: 2, 25: 20, 26: 1,
    27: 77, 28: 3, 29: 33,
}
