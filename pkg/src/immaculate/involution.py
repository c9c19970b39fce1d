"""Sign-reversing involution machinery on the tableau family behind the left
Pieri rule: the row-straightening correspondence, nefarious cells, the
two-row tail swap, and the involutions indexed by rows.

Straight-shape images are represented as plain tuples of rows so that empty
rows (which carry bookkeeping information) survive untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import Permutation, check_composition
from .errors import PreconditionError
from .tableaux import SkewTableau, content, is_immaculate, sigma_of

Rows = tuple


@dataclass(frozen=True)
class CellRef:
    """1-based (row, column) reference into a straight-shape tableau."""

    row: int
    column: int


def y_map(t: SkewTableau, beta):
    """Straighten T: an entry r in row i becomes an entry i in row sigma(r)
    of the image, rows sorted non-decreasingly.  Returns (rows, sigma)."""
    sigma = sigma_of(t, beta)
    if sigma is None or not is_immaculate(t):
        raise PreconditionError("tableau is not in the family for this beta")
    m = len(beta)
    rows = [[] for _ in range(m)]
    for i, row in enumerate(t.rows, 1):
        for r in row:
            rows[sigma(r) - 1].append(i)
    return tuple(tuple(sorted(row)) for row in rows), sigma


def y_inverse(t_rows: Rows, sigma: Permutation, alpha) -> SkewTableau:
    """Reverse construction: an entry r in row i becomes an entry
    sigma^{-1}(i) in row r of the output, whose inner shape is ``alpha``.
    The output may fail to be immaculate."""
    alpha = check_composition(alpha)
    m = len(sigma)
    if len(t_rows) != m:
        raise PreconditionError(f"expected {m} rows, got {len(t_rows)}")
    inv = sigma.inverse()
    n_rows = max([len(alpha)] + [max(row) for row in t_rows if row], default=len(alpha))
    out = [[] for _ in range(n_rows)]
    for i, row in enumerate(t_rows, 1):
        value = inv(i)
        for r in row:
            if r < 1:
                raise PreconditionError(f"bad row index {r} in straightened rows")
            out[r - 1].append(value)
    return SkewTableau(alpha, tuple(tuple(sorted(row)) for row in out))


def nefarious_cells(t_rows: Rows):
    """Cells below row 1 whose upper neighbour is absent or carries a value
    at least as large, in row-major order."""
    out = []
    for r in range(2, len(t_rows) + 1):
        above = t_rows[r - 2]
        for j, a in enumerate(t_rows[r - 1], 1):
            if j > len(above) or above[j - 1] >= a:
                out.append(CellRef(r, j))
    return out


def theta_x(t_rows: Rows, x: CellRef) -> Rows:
    """Two-row tail swap pivoted at the nefarious cell ``x``.

    With x in row r at column c: if the cell above exists, the cells strictly
    right of x move up while the cell above and everything right of it move
    down after x; otherwise the cells strictly right of x move up and x
    becomes the end of its row.
    """
    if x not in nefarious_cells(t_rows):
        raise PreconditionError(f"{x} is not a nefarious cell")
    r, c = x.row, x.column
    up, down = t_rows[r - 2], t_rows[r - 1]
    if len(up) >= c:
        new_up = up[: c - 1] + down[c:]
        new_down = down[:c] + up[c - 1:]
    else:
        new_up = up + down[c:]
        new_down = down[:c]
    rows = list(t_rows)
    rows[r - 2] = new_up
    rows[r - 1] = new_down
    return tuple(rows)


def _first_column(t: SkewTableau) -> tuple:
    return t.first_column()


def phi_r(t: SkewTableau, beta, r: int) -> SkewTableau:
    """Involution acting through row ``r`` of the straightened image.

    Scans the nefarious cells of that row left to right; the first one whose
    swap, pulled back, is immaculate with the first column of ``t`` unchanged
    acts.  If none acts, ``t`` is a fixed point.
    """
    if r < 1:
        raise PreconditionError(f"row index must be >= 1, got {r}")
    beta = check_composition(beta)
    y_rows, sigma = y_map(t, beta)
    if r < 2 or r > len(y_rows):
        return t
    m = len(beta)
    for x in nefarious_cells(y_rows):
        if x.row != r:
            continue
        swapped = theta_x(y_rows, x)
        new_sigma = Permutation.transposition(m, r - 1).compose(sigma)
        candidate = y_inverse(swapped, new_sigma, t.inner)
        if (
            is_immaculate(candidate)
            and _first_column(candidate) == _first_column(t)
            and sigma_of(candidate, beta) == new_sigma
        ):
            return candidate
    return t
