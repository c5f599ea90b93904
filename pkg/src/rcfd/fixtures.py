"""Designs shipped with the package.

Reference tables are stored verbatim, in the text format of
:mod:`rcfd.formats`; :func:`get_fixture` parses them on demand. Two further
seeds were found with :mod:`rcfd.oracle` and are re-verified whenever loaded.
"""
from __future__ import annotations

from functools import lru_cache

from .core import Design
from .formats import read_design

_TEXT = {
    # I_4(4,4;2): drug dosages for calves, rows = age groups, columns = breeds
    "TABLE1": """4 4 4 2
1111 0100 0010 1001
0001 1010 1100 0111
1000 0011 0101 1110
0110 1101 1011 0000
""",
    # three 6 x 6 frequency squares on two symbols (each symbol 3 times per line),
    # pairwise orthogonal, but their superposition is not a factorial design
    "THREE_MOFS": """3 6 6 2
000 111 000 101 011 110
111 000 000 011 110 101
000 000 111 110 101 011
101 011 110 010 100 001
011 110 101 100 001 010
110 101 011 001 010 100
""",
    # I_2(6,18;6) as originally tabulated. Cells (2,0) and (5,0) are wrong: column 0
    # lacks symbols 1 and 5 in the second coordinate. See B18.
    "B18_PRINTED": """2 6 18 6
13 24 35 40 51 02 15 24 30 43 51 02 10 24 33 45 51 02
34 43 01 52 20 15 34 45 01 52 23 10 34 40 01 52 25 13
43 32 10 25 04 53 41 32 13 20 04 55 41 32 15 23 04 50
22 11 54 03 45 30 22 11 54 05 40 33 22 11 54 00 43 35
50 05 23 31 12 44 53 00 25 31 12 44 55 03 20 31 12 44
04 50 42 14 33 21 00 53 42 14 35 21 03 55 42 14 30 21
""",
    # B18_PRINTED with (2,0) = 41 and (5,0) = 05, the only two-cell repair
    "B18": """2 6 18 6
13 24 35 40 51 02 15 24 30 43 51 02 10 24 33 45 51 02
34 43 01 52 20 15 34 45 01 52 23 10 34 40 01 52 25 13
41 32 10 25 04 53 41 32 13 20 04 55 41 32 15 23 04 50
22 11 54 03 45 30 22 11 54 05 40 33 22 11 54 00 43 35
50 05 23 31 12 44 53 00 25 31 12 44 55 03 20 31 12 44
05 50 42 14 33 21 00 53 42 14 35 21 03 55 42 14 30 21
""",
    "L23": """1 6 6 6
0 2 4 1 3 5
1 3 5 2 4 0
2 4 0 3 5 1
3 5 1 4 0 2
4 0 2 5 1 3
5 1 3 0 2 4
""",
    # the transpose of EX_D
    "EX_DT": """3 2 4 2
000 011 101 110
111 100 010 001
""",
    # EX_DT read column by column: an I_3(4,2;2)
    "EX_D": """3 4 2 2
000 111
011 100
101 010
110 001
""",
    "EX_Dp": """3 3 9 3
000 011 022 101 112 120 202 210 221
111 122 100 212 220 201 010 021 002
222 200 211 020 001 012 121 102 110
""",
    # EX_D (x) EX_Dp under (a, b) -> 3a + b
    "EX_PROD": """3 12 18 6
000 011 022 101 112 120 202 210 221 333 344 355 434 445 453 535 543 554
111 122 100 212 220 201 010 021 002 444 455 433 545 553 534 343 354 335
222 200 211 020 001 012 121 102 110 555 533 544 353 334 345 454 435 443
033 044 055 134 145 153 235 243 254 300 311 322 401 412 420 502 510 521
144 155 133 245 253 234 043 054 035 411 422 400 512 520 501 310 321 302
255 233 244 053 034 045 154 135 143 522 500 511 320 301 312 421 402 410
303 314 325 404 415 423 505 513 524 030 041 052 131 142 150 232 240 251
414 425 403 515 523 504 313 324 305 141 152 130 242 250 231 040 051 032
525 503 514 323 304 315 424 405 413 252 230 241 050 031 042 151 132 140
330 341 352 431 442 450 532 540 551 003 014 025 104 115 123 205 213 224
441 452 430 542 550 531 340 351 332 114 125 103 215 223 204 013 024 005
552 530 541 350 331 342 451 432 440 225 203 214 023 004 015 124 105 113
""",
    # L23 with every cell blown up into a 2 x 3 block
    "FR1218": """1 12 18 6
0 0 0 2 2 2 4 4 4 1 1 1 3 3 3 5 5 5
0 0 0 2 2 2 4 4 4 1 1 1 3 3 3 5 5 5
1 1 1 3 3 3 5 5 5 2 2 2 4 4 4 0 0 0
1 1 1 3 3 3 5 5 5 2 2 2 4 4 4 0 0 0
2 2 2 4 4 4 0 0 0 3 3 3 5 5 5 1 1 1
2 2 2 4 4 4 0 0 0 3 3 3 5 5 5 1 1 1
3 3 3 5 5 5 1 1 1 4 4 4 0 0 0 2 2 2
3 3 3 5 5 5 1 1 1 4 4 4 0 0 0 2 2 2
4 4 4 0 0 0 2 2 2 5 5 5 1 1 1 3 3 3
4 4 4 0 0 0 2 2 2 5 5 5 1 1 1 3 3 3
5 5 5 1 1 1 3 3 3 0 0 0 2 2 2 4 4 4
5 5 5 1 1 1 3 3 3 0 0 0 2 2 2 4 4 4
""",
    # oracle seed: I_2(6,6;2)
    "S66": """2 6 6 2
00 00 00 11 11 11
00 00 11 01 10 11
01 01 01 10 10 10
10 10 01 10 01 01
11 11 10 00 01 00
11 11 10 01 00 00
""",
    # oracle seed: a pair of orthogonal Latin squares of order 10
    "MOLS10": """2 10 10 10
70 61 32 03 24 45 86 17 98 59
56 80 13 67 48 71 92 35 29 04
49 08 87 95 50 23 74 66 12 31
37 25 58 42 76 99 11 00 84 63
93 34 26 79 07 82 55 41 60 18
02 43 90 16 39 64 27 78 51 85
21 52 44 30 15 06 68 89 73 97
65 19 01 28 83 57 40 94 36 72
88 77 69 54 91 10 33 22 05 46
14 96 75 81 62 38 09 53 47 20
""",
}

FIXTURE_NAMES = tuple(sorted(_TEXT))

#: Seeds the solver may use as base cases, keyed by ``(k, m, n, q)``.
SEEDS = {(2, 6, 6, 2): "S66", (2, 10, 10, 10): "MOLS10"}


@lru_cache(maxsize=None)
def get_fixture(name: str) -> Design:
    try:
        text = _TEXT[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}") from None
    return read_design(text, "text")


def fixture_text(name: str) -> str:
    get_fixture(name)
    return _TEXT[name]
