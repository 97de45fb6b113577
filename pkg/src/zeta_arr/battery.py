"""Small arrangements used for checks: uniform, Boolean and graphic (K_4)."""

from __future__ import annotations

from itertools import combinations

from .realization import Arrangement


def boolean_arrangement(n: int) -> Arrangement:
    return Arrangement([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def graphic_arrangement(num_vertices: int, edges=None) -> Arrangement:
    """Forms ``x_a - x_b`` per edge, with the last vertex grounded (``x = 0``).

    Defaults to the complete graph, whose arrangement is the braid arrangement.
    """
    if edges is None:
        edges = list(combinations(range(num_vertices), 2))
    d = num_vertices - 1
    cols = []
    for a, b in edges:
        c = [0] * d
        if a < d:
            c[a] += 1
        if b < d:
            c[b] -= 1
        cols.append(c)
    # vertex-to-ground edges first, in the order x_1, x_2, ...
    cols.sort(key=lambda c: (sum(1 for x in c if x), [-abs(x) for x in c]))
    return Arrangement([[c[i] for c in cols] for i in range(d)])


def battery() -> dict[str, Arrangement]:
    """Realizations over Q for U_{1,1}, U_{2,3}, U_{2,4}, U_{3,4}, Boolean B_1..B_4 and K_4."""
    return {
        "U11": Arrangement([[1]]),
        "U23": Arrangement([[1, 0, 1], [0, 1, 1]]),
        "U24": Arrangement([[1, 0, 1, 1], [0, 1, 1, 2]]),
        "U34": Arrangement([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]),
        "B1": boolean_arrangement(1),
        "B2": boolean_arrangement(2),
        "B3": boolean_arrangement(3),
        "B4": boolean_arrangement(4),
        "K4": graphic_arrangement(4),
    }
