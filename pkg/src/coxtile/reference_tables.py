"""Reference prototile classifications, kept as data for the verify suite.

Rhombi are listed as unordered angle pairs in units of pi, triangles as
partitions of h.  The h = 11 rhombus row lists only three of the five classes
that the angle rule produces; it is kept verbatim so the difference stays
visible.
"""

from fractions import Fraction as F

RHOMBI = {
    4: [(F(1, 2), F(1, 2))],
    5: [(F(2, 5), F(3, 5)), (F(4, 5), F(1, 5))],
    6: [(F(1, 3), F(2, 3))],
    7: [(F(2, 7), F(5, 7)), (F(4, 7), F(3, 7)), (F(6, 7), F(1, 7))],
    8: [(F(1, 4), F(3, 4)), (F(1, 2), F(1, 2))],
    9: [(F(2, 9), F(7, 9)), (F(4, 9), F(5, 9)), (F(6, 9), F(3, 9)), (F(8, 9), F(1, 9))],
    10: [(F(2, 5), F(3, 5)), (F(1, 5), F(4, 5))],
    11: [(F(2, 11), F(9, 11)), (F(4, 11), F(7, 11)), (F(6, 11), F(5, 11))],
    12: [(F(1, 6), F(5, 6)), (F(1, 3), F(2, 3)), (F(1, 2), F(1, 2))],
}

TRIANGLES = {
    3: [(1, 1, 1)],
    4: [(1, 1, 2)],
    5: [(1, 1, 3), (1, 2, 2)],
    6: [(1, 1, 4), (1, 2, 3), (2, 2, 2)],
    7: [(1, 1, 5), (1, 2, 4), (1, 3, 3), (2, 2, 3)],
    8: [(1, 1, 6), (1, 2, 5), (1, 3, 4), (2, 2, 4), (2, 3, 3)],
    9: [(1, 1, 7), (1, 2, 6), (1, 3, 5), (1, 4, 4), (2, 2, 5), (2, 3, 4), (3, 3, 3)],
    10: [(1, 1, 8), (1, 2, 7), (1, 3, 6), (1, 4, 5), (2, 2, 6), (2, 3, 5), (2, 4, 4),
         (3, 3, 4)],
    11: [(1, 1, 9), (1, 2, 8), (1, 3, 7), (1, 4, 6), (1, 5, 5), (2, 2, 7), (2, 3, 6),
         (2, 4, 5), (3, 3, 5), (3, 4, 4)],
    12: [(1, 1, 10), (1, 2, 9), (1, 3, 8), (1, 4, 7), (1, 5, 6), (2, 2, 8), (2, 3, 7),
         (2, 4, 6), (2, 5, 5), (3, 3, 6), (3, 4, 5), (4, 4, 4)],
}

TRIANGLE_COUNTS = {h: len(v) for h, v in TRIANGLES.items()}

# rows where the listed classes are a strict subset of the rule's output
INCOMPLETE_RHOMBUS_ROWS = {11: 5}
