"""Frozen orbit theories of single automorphisms, written out element by element.

Each entry pins the full superclass partition (as exponent vectors) of the
theory generated by one automorphism a -> a^u, involution part acting by mat.
These literals were transcribed independently and must never be regenerated
from the code under test.
"""

GOLDEN_ORBIT_THEORIES = [
    {
        "name": "p5_square_swap",
        "p": 5,
        "u": 2,
        "mat": ((1, 0), (1, 1)),
        "classes": [
            [(0, 0, 0)],
            [(0, 0, 1), (0, 1, 1)],
            [(0, 1, 0)],
            [(1, 0, 0), (2, 0, 0), (3, 0, 0), (4, 0, 0)],
            [(1, 0, 1), (2, 1, 1), (3, 1, 1), (4, 0, 1)],
            [(1, 1, 0), (2, 1, 0), (3, 1, 0), (4, 1, 0)],
            [(1, 1, 1), (2, 0, 1), (3, 0, 1), (4, 1, 1)],
        ],
    },
    {
        "name": "p7_square_cycle",
        "p": 7,
        "u": 2,
        "mat": ((0, 1), (1, 1)),
        "classes": [
            [(0, 0, 0)],
            [(0, 0, 1), (0, 1, 0), (0, 1, 1)],
            [(1, 0, 0), (2, 0, 0), (4, 0, 0)],
            [(1, 0, 1), (2, 1, 1), (4, 1, 0)],
            [(1, 1, 0), (2, 0, 1), (4, 1, 1)],
            [(1, 1, 1), (2, 1, 0), (4, 0, 1)],
            [(3, 0, 0), (5, 0, 0), (6, 0, 0)],
            [(3, 0, 1), (5, 1, 0), (6, 1, 1)],
            [(3, 1, 0), (5, 1, 1), (6, 0, 1)],
            [(3, 1, 1), (5, 0, 1), (6, 1, 0)],
        ],
    },
    {
        "name": "p7_square_cycle_reversed",
        "p": 7,
        "u": 2,
        "mat": ((1, 1), (1, 0)),
        "classes": [
            [(0, 0, 0)],
            [(0, 0, 1), (0, 1, 0), (0, 1, 1)],
            [(1, 0, 0), (2, 0, 0), (4, 0, 0)],
            [(1, 0, 1), (2, 1, 0), (4, 1, 1)],
            [(1, 1, 0), (2, 1, 1), (4, 0, 1)],
            [(1, 1, 1), (2, 0, 1), (4, 1, 0)],
            [(3, 0, 0), (5, 0, 0), (6, 0, 0)],
            [(3, 0, 1), (5, 1, 1), (6, 1, 0)],
            [(3, 1, 0), (5, 0, 1), (6, 1, 1)],
            [(3, 1, 1), (5, 1, 0), (6, 0, 1)],
        ],
    },
    {
        "name": "p7_order6_cycle",
        "p": 7,
        "u": 5,
        "mat": ((0, 1), (1, 1)),
        "classes": [
            [(0, 0, 0)],
            [(0, 0, 1), (0, 1, 0), (0, 1, 1)],
            [(1, 0, 0), (2, 0, 0), (3, 0, 0), (4, 0, 0), (5, 0, 0), (6, 0, 0)],
            [(1, 0, 1), (2, 1, 1), (3, 1, 0), (4, 1, 0), (5, 1, 1), (6, 0, 1)],
            [(1, 1, 0), (2, 0, 1), (3, 1, 1), (4, 1, 1), (5, 0, 1), (6, 1, 0)],
            [(1, 1, 1), (2, 1, 0), (3, 0, 1), (4, 0, 1), (5, 1, 0), (6, 1, 1)],
        ],
    },
]
