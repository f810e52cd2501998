#!/usr/bin/env python3
"""Enumerate the extreme points of {p >= 0 : A p = b} with exact rationals.

The built-in credal sets shipped with the library are defined by linear
constraints (fixed marginals, zero conditionals). This script converts those
constraint systems to vertex lists by enumerating basic feasible solutions;
the resulting vertices are frozen into core/src/scenario.cpp. Run it to
regenerate or audit them:

    python3 tools/hrep_vertices.py
"""

from fractions import Fraction
from itertools import combinations


def solve_square(rows, rhs):
    """Gaussian elimination over Fractions; None when singular."""
    n = len(rhs)
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def independent_rows(a, b):
    """Row-reduces [A | b], dropping dependent rows (must stay consistent)."""
    m, n = len(a), len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    kept = []
    pivot_cols = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        p = aug[row][col]
        aug[row] = [v / p for v in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        kept.append(row)
        row += 1
    for r in range(row, m):
        if aug[r][n] != 0:
            raise ValueError("inconsistent constraint system")
    return [aug[r][:n] for r in kept], [aug[r][n] for r in kept]


def vertices(num_vars, equalities):
    """Basic feasible solutions of {p >= 0, A p = b}."""
    a, b = independent_rows([row for row, _ in equalities],
                            [rhs for _, rhs in equalities])
    m = len(a)
    found = []
    for basis in combinations(range(num_vars), m):
        system = [[a[i][j] for j in basis] for i in range(m)]
        sol = solve_square(system, b)
        if sol is None or any(v < 0 for v in sol):
            continue
        point = [Fraction(0)] * num_vars
        for j, v in zip(basis, sol):
            point[j] = v
        if point not in found:
            found.append(point)
    return sorted(found)


def show(name, layout, verts):
    print(f"== {name}: {len(verts)} vertices ==")
    nx, ny = layout
    for v in verts:
        rows = [
            "[" + ", ".join(str(v[x * ny + y]) for y in range(ny)) + "]"
            for x in range(nx)
        ]
        print("  " + " ".join(rows))
    print()


def main():
    f = Fraction

    # example1: X = Y = {0,1}; all joints with Pr(Y=1) = 2/3.
    # Variables p(x,y) in order (0,0),(0,1),(1,0),(1,1).
    show(
        "example1",
        (2, 2),
        vertices(
            4,
            [
                ([f(1), f(1), f(1), f(1)], f(1)),  # total mass
                ([f(0), f(1), f(0), f(1)], f(2, 3)),  # Pr(Y=1)
            ],
        ),
    )

    # monty_hall: X = {G2,G3}, Y = {1,2,3}; uniform Y-marginal and the
    # zero conditionals Pr(Y=2 | X=G2) = 0, Pr(Y=3 | X=G3) = 0 (closed
    # form: the corresponding table entries are 0).
    # Variables p(x,y) row-major: (G2,1),(G2,2),(G2,3),(G3,1),(G3,2),(G3,3).
    show(
        "monty_hall",
        (2, 3),
        vertices(
            6,
            [
                ([f(1)] * 6, f(1)),
                ([f(1), f(0), f(0), f(1), f(0), f(0)], f(1, 3)),  # Pr(Y=1)
                ([f(0), f(1), f(0), f(0), f(1), f(0)], f(1, 3)),  # Pr(Y=2)
                ([f(0), f(0), f(1), f(0), f(0), f(1)], f(1, 3)),  # Pr(Y=3)
                ([f(0), f(1), f(0), f(0), f(0), f(0)], f(0)),  # p(G2,2) = 0
                ([f(0), f(0), f(0), f(0), f(0), f(1)], f(0)),  # p(G3,3) = 0
            ],
        ),
    )

    # walley_coins: X = Y = {H,T}; both tosses fair, dependence arbitrary.
    # Variables p(x,y): (H,H),(H,T),(T,H),(T,T).
    show(
        "walley_coins",
        (2, 2),
        vertices(
            4,
            [
                ([f(1), f(1), f(1), f(1)], f(1)),
                ([f(1), f(1), f(0), f(0)], f(1, 2)),  # first toss fair
                ([f(1), f(0), f(1), f(0)], f(1, 2)),  # second toss fair
            ],
        ),
    )


if __name__ == "__main__":
    main()
