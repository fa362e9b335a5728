"""Exact equilibria of symmetric zero-sum games over the rationals.

The games of interest come from tournaments: the payoff matrix is skew
symmetric with entries in {-1, 0, 1}, although any skew-symmetric matrix
of rationals is accepted.  Such a game has value zero, so its maximin
strategies are exactly the solutions of

    p >= 0,  sum(p) = 1,  M^T p >= 0.

The solver finds one by a phase-1 simplex run entirely over
``fractions.Fraction`` with Bland's anti-cycling pivot rule.  No floating
point is involved anywhere, so a returned weight is positive iff it is
exactly positive.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

__all__ = [
    "equilibrium_slacks",
    "solve_symmetric_zero_sum",
    "verify_equilibrium",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_skew_matrix(matrix: Sequence[Sequence[object]]) -> list[list[Fraction]]:
    n = len(matrix)
    if n == 0:
        raise ValueError("empty payoff matrix")
    m = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("payoff matrix is not square")
        m.append([Fraction(cell) for cell in row])
    for x in range(n):
        for y in range(x, n):
            if m[x][y] != -m[y][x]:
                raise ValueError(f"matrix is not skew-symmetric at ({x}, {y})")
    return m


def solve_symmetric_zero_sum(matrix: Sequence[Sequence[object]]) -> tuple[Fraction, ...]:
    """One optimal mixed strategy of the symmetric zero-sum game ``matrix``.

    Deterministic: identical input yields an identical tuple.  For payoff
    matrices arising from tournaments the equilibrium is unique, so the
    returned strategy is *the* equilibrium and its support is well defined.
    """
    m = _as_skew_matrix(matrix)
    n = len(m)

    # Equality form.  Row y (for y < n) encodes (M^T p)_y - s_y = 0, written
    # with the sign flipped so the slack column carries +1 and can start in
    # the basis:  sum_x M[y][x] p_x + s_y = 0.  The last row is sum(p) = 1
    # with one artificial variable; phase 1 minimises that artificial.
    # Columns: p_0..p_{n-1}, s_0..s_{n-1}, artificial, rhs.
    width = 2 * n + 2
    rows: list[list[Fraction]] = []
    for y in range(n):
        row = [_ZERO] * width
        for x in range(n):
            row[x] = m[y][x]
        row[n + y] = _ONE
        rows.append(row)
    sum_row = [_ONE] * n + [_ZERO] * n + [_ONE, _ONE]
    rows.append(sum_row)
    basis = [n + y for y in range(n)] + [2 * n]

    # Reduced-cost row for minimising the artificial variable.  Subtracting
    # the row where it is basic leaves cost -1 on every p column.
    cost = [_ZERO - v for v in sum_row]
    cost[2 * n] = _ZERO

    ncols = width - 1
    while True:
        enter = -1
        for j in range(ncols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = _ZERO
        for i in range(n + 1):
            coeff = rows[i][enter]
            if coeff > 0:
                ratio = rows[i][-1] / coeff
                if leave < 0 or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise RuntimeError("phase-1 objective unbounded; solver invariant broken")
        pivot_row = rows[leave]
        piv = pivot_row[enter]
        if piv != 1:
            rows[leave] = pivot_row = [v / piv for v in pivot_row]
        for i in range(n + 1):
            if i == leave:
                continue
            f = rows[i][enter]
            if f != 0:
                target = rows[i]
                rows[i] = [target[k] - f * pivot_row[k] for k in range(width)]
        f = cost[enter]
        if f != 0:
            cost = [cost[k] - f * pivot_row[k] for k in range(width)]
        basis[leave] = enter

    if -cost[-1] != 0:
        raise RuntimeError("no feasible strategy found; input was not a valid skew game")

    weights = [_ZERO] * n
    for i, col in enumerate(basis):
        if col < n:
            weights[col] = rows[i][-1]
    result = tuple(weights)
    if not verify_equilibrium(m, result):
        raise RuntimeError("solver produced a non-equilibrium; internal error")
    return result


def equilibrium_slacks(
    matrix: Sequence[Sequence[object]], weights: Sequence[Fraction]
) -> tuple[Fraction, ...]:
    """Expected payoff of each pure reply against ``weights``, negated.

    Entry y is sum_x weights[x] * matrix[x][y]; at an equilibrium every
    entry is nonnegative and entries on the support are exactly zero.
    """
    n = len(matrix)
    if len(weights) != n:
        raise ValueError("weight vector length does not match the matrix")
    out = []
    for y in range(n):
        acc = _ZERO
        for x in range(n):
            w = weights[x]
            if w:
                acc += w * Fraction(matrix[x][y])
        out.append(acc)
    return tuple(out)


def verify_equilibrium(
    matrix: Sequence[Sequence[object]], weights: Sequence[Fraction]
) -> bool:
    """Exact check that ``weights`` is an optimal strategy of the skew game."""
    n = len(matrix)
    if len(weights) != n:
        raise ValueError("weight vector length does not match the matrix")
    total = _ZERO
    for w in weights:
        if w < 0:
            return False
        total += w
    if total != 1:
        return False
    return all(s >= 0 for s in equilibrium_slacks(matrix, weights))
