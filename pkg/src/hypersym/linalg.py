"""Exact Gaussian elimination over Q(w) (or Q)."""

from __future__ import annotations

from typing import Sequence


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int], int]:
    """Reduce a copy of ``rows`` to row echelon form.

    Pivot rule: first nonzero entry in column order, no reordering heuristics.
    Returns the reduced rows, the pivot columns and the number of row swaps.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, [], 0
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    swaps = 0
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pr = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
            swaps += 1
        inv = 1 / m[r][c]
        for i in range(r + 1, n_rows):
            if m[i][c] == 0:
                continue
            f = m[i][c] * inv
            row_i, row_r = m[i], m[r]
            for j in range(c, n_cols):
                if row_r[j] != 0:
                    row_i[j] = row_i[j] - f * row_r[j]
        pivots.append(c)
        r += 1
    return m, pivots, swaps


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def det(rows: Sequence[Sequence], one=1):
    """Determinant of a square matrix; ``one`` fixes the scalar type of the empty product."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    m, pivots, swaps = row_echelon(rows)
    if len(pivots) < n:
        return one * 0
    out = one
    for i in range(n):
        out = out * m[i][i]
    return -out if swaps % 2 else out
