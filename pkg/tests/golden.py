"""Frozen reference data: the two 11-player worked cases and their printed matrices."""

UNIQUE_SCORES = (2, 2, 2, 2, 2, 5, 6, 7, 9, 9, 9)
UNIQUE_H = (2, 1, 0, -1, -2, 0, 0, 0, 1, 0, -1)
UNIQUE_TUPLE = {(1, 5), (2, 5), (1, 4), (9, 11)}
UNIQUE_MATRIX = """\
00011000000
10001000000
11000000000
01100000000
00110000000
11111000000
11111100000
11111110000
11111111001
11111111100
11111111010
"""

MULTI_SCORES = (2, 2, 2, 2, 3, 5, 6, 8, 8, 8, 9)
MULTI_H = (2, 1, 0, -1, -1, 0, 0, 1, 0, -1, -1)
MULTI_TUPLES = [
    {(1, 4), (1, 5), (2, 10), (8, 11)},
    {(1, 4), (1, 5), (2, 11), (8, 10)},
    {(1, 5), (2, 4), (1, 10), (8, 11)},
    {(1, 5), (2, 4), (1, 11), (8, 10)},
    {(2, 5), (1, 4), (1, 10), (8, 11)},
    {(2, 5), (1, 4), (1, 11), (8, 10)},
]
MULTI_MATRICES = [
    """\
00011000000
10000000010
11000000000
01100000000
01110000000
11111000000
11111100000
11111110001
11111111000
10111111100
11111110110
""",
    """\
00011000000
10000000001
11000000000
01100000000
01110000000
11111000000
11111100000
11111110010
11111111000
11111110100
10111111110
""",
    """\
00001000010
10010000000
11000000000
10100000000
01110000000
11111000000
11111100000
11111110001
11111111000
01111111100
11111110110
""",
    """\
00001000001
10010000000
11000000000
10100000000
01110000000
11111000000
11111100000
11111110010
11111111000
11111110100
01111111110
""",
    """\
00010000010
10001000000
11000000000
01100000000
10110000000
11111000000
11111100000
11111110001
11111111000
01111111100
11111110110
""",
    """\
00010000001
10001000000
11000000000
01100000000
10110000000
11111000000
11111100000
11111110010
11111111000
11111110100
01111111110
""",
]
