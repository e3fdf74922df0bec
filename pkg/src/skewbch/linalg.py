"""Exact Gaussian elimination over any field whose elements support ``+ - * /``.

Pivots are simply the first nonzero entry in the column; with exact
arithmetic there is nothing to gain from pivoting heuristics.
"""

from __future__ import annotations

from typing import Any, Sequence

from .errors import SingularSystem


def det(matrix: Sequence[Sequence[Any]]):
    rows = [list(r) for r in matrix]
    size = len(rows)
    if size == 0:
        raise ValueError("determinant of an empty matrix")
    if any(len(r) != size for r in rows):
        raise ValueError("determinant of a non-square matrix")
    result = None
    sign_flip = False
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return rows[0][0] - rows[0][0]
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign_flip = not sign_flip
        p = rows[col][col]
        result = p if result is None else result * p
        inv = 1 / p
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b if j > col else a for j, (a, b) in enumerate(zip(rows[r], rows[col]))]
    return -result if sign_flip else result


def solve(matrix: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> list:
    """Unique solution of ``matrix @ x = rhs``; raises SingularSystem otherwise."""
    size = len(matrix)
    if len(rhs) != size or any(len(r) != size for r in matrix):
        raise ValueError("solve expects a square system")
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv if j >= col else x for j, x in enumerate(rows[col])]
        for r in range(size):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b if j >= col else a for j, (a, b) in enumerate(zip(rows[r], rows[col]))]
    return [rows[i][size] for i in range(size)]
