"""Ready-made tables of well-known loops and groups for tests and corpora."""

from __future__ import annotations

from itertools import permutations

from .table import LoopTable


def cyclic(n: int) -> LoopTable:
    """The cyclic group of order n, written additively."""
    rows = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return LoopTable(rows, 0)


def direct_product(a: LoopTable, b: LoopTable) -> LoopTable:
    """Componentwise product on pairs, encoded as i*|b| + j."""
    nb = b.order
    n = a.order * nb
    rows = [[0] * n for _ in range(n)]
    for i1 in a.elements:
        for j1 in b.elements:
            x = i1 * nb + j1
            for i2 in a.elements:
                for j2 in b.elements:
                    y = i2 * nb + j2
                    rows[x][y] = a.rows[i1][i2] * nb + b.rows[j1][j2]
    return LoopTable(tuple(tuple(r) for r in rows), a.identity * nb + b.identity)


def klein_four() -> LoopTable:
    return direct_product(cyclic(2), cyclic(2))


def symmetric_3() -> LoopTable:
    """The symmetric group on 3 letters, elements ordered lexicographically."""
    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    rows = []
    for p in perms:
        # composition (p then q applied to p): (p*q)(i) = p[q[i]]
        rows.append(tuple(index[tuple(p[q[i]] for i in range(3))] for q in perms))
    return LoopTable.from_rows(rows)


def frobenius_21() -> LoopTable:
    """The nonabelian group of order 21: Z7 extended by Z3 acting as x -> 2x.

    Elements are pairs (a, b) with a mod 7 and b mod 3, encoded a*3 + b;
    (a1,b1)*(a2,b2) = (a1 + 2^b1 * a2 mod 7, b1 + b2 mod 3).
    """
    n = 21
    rows = [[0] * n for _ in range(n)]
    for a1 in range(7):
        for b1 in range(3):
            twist = pow(2, b1, 7)
            for a2 in range(7):
                for b2 in range(3):
                    a = (a1 + twist * a2) % 7
                    b = (b1 + b2) % 3
                    rows[a1 * 3 + b1][a2 * 3 + b2] = a * 3 + b
    return LoopTable(tuple(tuple(r) for r in rows), 0)
