"""Exact linear algebra over the rationals.

Everything is tolerance-free: inputs are int or Fraction, results are exact,
and pivoting is deterministic (first nonzero pivot).  Matrices are row-major
lists of lists.  The largest lattices in this project are ~70x70, so plain
Gaussian elimination and Bareiss fraction-free elimination are plenty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

UNIQUE = "unique"
NO_SOLUTION = "no_solution"
NON_UNIQUE = "non_unique"


@dataclass(frozen=True)
class SolveOutcome:
    """Outcome of an exact linear solve; ``solution`` is set only when unique."""

    status: str
    solution: tuple[Fraction, ...] | None = None


def _dimensions(matrix):
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    for row in matrix:
        if len(row) != cols:
            raise ValueError("matrix is not rectangular")
    return rows, cols


def _check_square(matrix):
    rows, cols = _dimensions(matrix)
    if rows != cols:
        raise ValueError("matrix must be square")
    return rows


def _check_symmetric(matrix):
    n = _check_square(matrix)
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise ValueError("matrix must be symmetric")
    return n


def solve_linear(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly for square ``matrix``.

    Returns a SolveOutcome whose status is "unique" (with the solution),
    "no_solution", or "non_unique" (rank-deficient but consistent).
    """
    n = _check_square(matrix)
    if len(rhs) != n:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivot_cols = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        lead = aug[row][col]
        aug[row] = [x / lead for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        row += 1
    if any(aug[r][n] != 0 for r in range(row, n)):
        return SolveOutcome(NO_SOLUTION)
    if row < n:
        return SolveOutcome(NON_UNIQUE)
    x = [Fraction(0)] * n
    for r, col in enumerate(pivot_cols):
        x[col] = aug[r][n]
    return SolveOutcome(UNIQUE, tuple(x))


def determinant(matrix):
    """Exact determinant via fraction-free Bareiss elimination with row swaps."""
    n = _check_square(matrix)
    if n == 0:
        return Fraction(1)
    integral = all(isinstance(x, int) for row in matrix for x in row)
    work = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if work[r][k] != 0), None)
            if swap is None:
                return 0 if integral else Fraction(0)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = work[i][j] * pivot - work[i][k] * work[k][j]
                work[i][j] = value // prev if integral else value / prev
        prev = pivot
    det = sign * work[n - 1][n - 1]
    return det if integral else Fraction(det)


def leading_principal_minors(matrix):
    """The n leading principal minors, in order of size 1..n."""
    n = _check_square(matrix)
    return [determinant([row[: k + 1] for row in matrix[: k + 1]]) for k in range(n)]


def is_negative_definite(matrix):
    """True iff the k-th leading principal minor has sign (-1)^k for every k.

    Uses Bareiss elimination, whose k-th pivot is exactly the k-th leading
    principal minor, with early exit on the first wrong sign.
    """
    n = _check_symmetric(matrix)
    if n == 0:
        return True
    integral = all(isinstance(x, int) for row in matrix for x in row)
    work = [list(row) for row in matrix]
    prev = 1
    for k in range(n):
        pivot = work[k][k]
        wanted_negative = k % 2 == 0
        if pivot == 0 or (pivot < 0) != wanted_negative:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = work[i][j] * pivot - work[i][k] * work[k][j]
                work[i][j] = value // prev if integral else value / prev
        prev = pivot
    return True


def rank(matrix):
    """Exact rank over the rationals."""
    rows, cols = _dimensions(matrix)
    work = [[Fraction(x) for x in row] for row in matrix]
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][col]
        work[r] = [x / lead for x in work[r]]
        for i in range(rows):
            if i != r and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == rows:
            break
    return r


def signature(matrix):
    """Inertia (positive, negative, zero) of a symmetric matrix, exact.

    Congruence diagonalization; zero diagonal pivots are repaired with the
    usual row+column addition trick, so hyperbolic blocks are fine.
    """
    n = _check_symmetric(matrix)
    work = [[Fraction(x) for x in row] for row in matrix]
    pos = neg = zero = 0
    for k in range(n):
        if work[k][k] == 0:
            diag = next((j for j in range(k + 1, n) if work[j][j] != 0), None)
            if diag is not None:
                work[k], work[diag] = work[diag], work[k]
                for row in work:
                    row[k], row[diag] = row[diag], row[k]
            else:
                # all remaining diagonal entries vanish, so adding row+column
                # ``fix`` makes the new pivot 2*work[k][fix] != 0
                fix = next((j for j in range(k + 1, n) if work[k][j] != 0), None)
                if fix is None:
                    zero += 1
                    continue
                for j in range(n):
                    work[k][j] += work[fix][j]
                for i in range(n):
                    work[i][k] += work[i][fix]
        pivot = work[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if work[i][k] == 0:
                continue
            factor = work[i][k] / pivot
            for j in range(n):
                work[i][j] -= factor * work[k][j]
            for j in range(n):
                work[j][i] -= factor * work[j][k]
    return pos, neg, zero
