"""Published reference values for the reproduction run.

The optimizer rows list distinct classes; the X_5 and L_3 facet rows are inner
normals in the coordinates ``(nu1, nu2, H, E_1, ...)``.
"""

X5_TABLE = [
    {
        "divisor": (6, -1, -1, -2, -3, -4),
        "optimum": 6,
        "second": 6,
        "nef": [
            (4, -2, 0, -2, -2, -2), (3, -1, -1, -1, -1, -2), (2, -1, -1, -1, 0, -1),
            (2, -1, -1, 0, -1, -1), (2, -1, 0, -1, -1, -1), (4, 0, -2, -2, -2, -2),
            (2, 0, -1, -1, -1, -1), (2, 0, 0, -1, -1, -1), (1, 0, 0, -1, 0, 0),
            (1, 0, 0, 0, -1, 0), (1, 0, 0, 0, 0, -1),
        ],
    },
    {
        "divisor": (6, -1, -3, -1, -2, -3),
        "optimum": 8,
        "second": 8,
        "nef": [
            (2, -1, -1, -1, 0, -1), (2, -1, -1, 0, -1, -1), (2, 0, -1, -1, -1, -1),
            (1, 0, -1, 0, 0, 0), (1, 0, 0, 0, 0, -1),
        ],
    },
    {"divisor": (8, -3, -2, -2, -2, -3), "optimum": 12, "second": 12, "nef": []},
    {
        "divisor": (4, -1, -1, -1, 0, -1),
        "optimum": 8,
        "second": 8,
        "nef": [
            (2, -1, -1, -1, 0, -1), (1, -1, 0, 0, 0, 0), (1, 0, -1, 0, 0, 0),
            (1, 0, 0, -1, 0, 0), (1, 0, 0, 0, 0, -1),
        ],
    },
    {
        "divisor": (7, -4, 0, -2, -3, -3),
        "optimum": 9,
        "second": 9,
        "nef": [
            (3, -2, -1, -1, -1, -1), (2, -1, -1, -1, -1, 0), (2, -1, -1, -1, 0, -1),
            (2, -1, -1, 0, -1, -1), (4, -2, 0, -2, -2, -2), (3, -2, 0, -1, -1, -1),
            (2, -1, 0, -1, -1, -1), (2, -1, 0, -1, -1, 0), (2, -1, 0, -1, 0, -1),
            (2, -1, 0, 0, -1, -1), (1, -1, 0, 0, 0, 0), (1, 0, 0, -1, 0, 0),
            (1, 0, 0, 0, -1, 0), (1, 0, 0, 0, 0, -1),
        ],
    },
]

HILBERT = {
    "S6": ((4, -1, -1, -1, -1, -1, -1), (2, -1, -1, -1, -1, -1, -1), (5, 3, 1)),
    "L3": ((4, -1, -1, -1, -1), (1, -1, -1, -1, 0), (6, 4, 1)),
}

X5_FLAG = (1, -1, -1, 0, 0, 0)
X5_RAY_COUNT = 22
X5_FACETS = [
    (1, 0, 0, 0, 0, 0, 0, 0),
    (1, -1, 1, 1, 1, 0, 0, 0),
    (0, -1, 2, 1, 1, 0, 1, 1),
    (-1, -1, 3, 1, 1, 1, 1, 2),
    (0, -1, 2, 1, 1, 1, 0, 1),
    (-1, -1, 2, 0, 1, 1, 1, 0),
    (0, -1, 1, 0, 1, 0, 0, 0),
    (-1, -1, 3, 1, 1, 2, 1, 1),
    (-1, -1, 3, 1, 1, 1, 2, 1),
    (0, -1, 2, 1, 1, 1, 1, 0),
    (-1, -1, 2, 0, 1, 0, 1, 1),
    (-1, -1, 2, 0, 1, 1, 0, 1),
    (0, -1, 1, 1, 0, 0, 0, 0),
    (-1, -1, 2, 1, 0, 1, 1, 0),
    (-1, -1, 2, 1, 0, 1, 0, 1),
    (-2, -1, 2, 0, 0, 1, 0, 1),
    (-2, -1, 2, 0, 0, 1, 1, 0),
    (-1, -1, 1, 0, 0, 0, 0, 0),
    (-1, -1, 2, 1, 0, 0, 1, 1),
    (-2, -1, 2, 0, 0, 0, 1, 1),
    (-2, -1, 3, 1, 0, 1, 1, 2),
    (-2, -1, 3, 1, 0, 1, 2, 1),
    (-2, -1, 3, 1, 0, 2, 1, 1),
    (-2, -1, 3, 0, 1, 1, 1, 2),
    (-2, -1, 3, 0, 1, 1, 2, 1),
    (-2, -1, 3, 0, 1, 2, 1, 1),
    (-2, -1, 4, 1, 1, 2, 2, 2),
    (-1, 0, 2, 1, 0, 1, 1, 1),
    (0, 1, 0, 0, 0, 0, 0, 0),
    (-1, 0, 1, 0, 0, 1, 0, 0),
    (-1, 0, 1, 0, 0, 0, 0, 1),
    (-1, 0, 1, 0, 0, 0, 1, 0),
    (-1, 0, 2, 0, 1, 1, 1, 1),
    (-3, -1, 4, 0, 1, 2, 2, 2),
    (-3, -1, 4, 1, 0, 2, 2, 2),
    (-4, -1, 4, 0, 0, 2, 2, 2),
    (-3, -1, 3, 0, 0, 2, 1, 1),
    (-3, -1, 3, 0, 0, 1, 1, 2),
    (-3, -1, 3, 0, 0, 1, 2, 1),
]

L3_FLAG = (1, -1, -1, -1, 0)
L3_RAYS = [
    (0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0, -1), (0, 0, 1, 0, -1, 0, -1), (0, 0, 1, 0, 0, -1, -1),
    (0, 1, 1, 0, 0, 0, -1), (1, 0, 1, -1, -1, -1, 0),
]
L3_FACETS = [
    (1, 0, 0, 0, 0, 0, 0),
    (2, -1, 1, 1, 1, 1, 0),
    (1, -1, 1, 0, 1, 1, 0),
    (1, -1, 1, 1, 0, 1, 0),
    (1, -1, 1, 1, 1, 0, 0),
    (-1, -1, 1, 0, 0, 0, 0),
    (0, -1, 1, 0, 0, 1, 0),
    (0, -1, 1, 0, 1, 0, 0),
    (0, -1, 1, 1, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0),
    (-1, 0, 1, 0, 0, 0, 1),
]
L3_COX_EXTRA = (1, 0, 0, 0, -1)
