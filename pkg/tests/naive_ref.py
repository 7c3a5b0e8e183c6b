"""Independent reference implementations used only as test oracles.

Everything here is deliberately written without the package's search
machinery: brute-force generation, pairwise isomorphism by permutation
trial, and bracketing enumeration.  Keep it that way - these functions
exist to cross-check the fast paths, so they must not share code with
them.
"""

from __future__ import annotations

from itertools import permutations


def naive_normalized_tables(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All order-n tables with identity 0, by row-wise brute force."""
    if n == 1:
        return [((0,),)]
    first = tuple(range(n))
    results: list[tuple[tuple[int, ...], ...]] = []

    def extend(rows: list[tuple[int, ...]]):
        r = len(rows)
        if r == n:
            results.append(tuple(rows))
            return
        used_cols = [{row[j] for row in rows} for j in range(n)]
        for tail in permutations([v for v in range(n) if v != r]):
            row = (r,) + tail
            if all(row[j] not in used_cols[j] for j in range(1, n)):
                rows.append(row)
                extend(rows)
                rows.pop()

    extend([first])
    return results


def relabel_rows(rows: tuple[tuple[int, ...], ...], perm: tuple[int, ...]):
    n = len(rows)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[rows[i][j]]
    return tuple(tuple(r) for r in out)


def are_isomorphic(a: tuple[tuple[int, ...], ...], b: tuple[tuple[int, ...], ...]) -> bool:
    """Isomorphism of normalized tables by trying every identity-fixing map."""
    n = len(a)
    if len(b) != n:
        return False
    for tail in permutations(range(1, n)):
        if relabel_rows(a, (0,) + tail) == b:
            return True
    return False


def iso_classes(tables) -> list[tuple[tuple[int, ...], ...]]:
    """Partition normalized tables into isomorphism classes; one rep per class."""
    reps: list[tuple[tuple[int, ...], ...]] = []
    for rows in tables:
        if not any(are_isomorphic(rows, rep) for rep in reps):
            reps.append(rows)
    return reps


def all_bracketings(rows: tuple[tuple[int, ...], ...], x: int, k: int) -> set[int]:
    """Values of every bracketing of the k-fold product of x with itself."""
    if k == 1:
        return {x}
    out: set[int] = set()
    for split in range(1, k):
        for a in all_bracketings(rows, x, split):
            for b in all_bracketings(rows, x, k - split):
                out.add(rows[a][b])
    return out
