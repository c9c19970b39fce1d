"""Skew tableaux: predicates, reading words, enumeration, and the signed product.

A skew tableau stores its inner shape plus, for each row, the sequence of
filled entries to the right of the inner cells.  Rows are indexed from 1, top
to bottom.  Rows beyond the inner shape may only be empty at the very bottom
(and such rows are kept only for images of the straightening map used by the
involution machinery).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compositions import (
    MAX_PERMUTATION_SIZE,
    Permutation,
    check_composition,
    check_partition,
    permutations,
    right_pieri_successors,
)
from .errors import InvalidVectorError, PreconditionError, ResourceLimitError
from .linear import LinComb

# Node budget for backtracking enumerations.
DEFAULT_SEARCH_LIMIT = 2_000_000


@dataclass(frozen=True)
class SkewTableau:
    """Inner shape plus row-wise filled entries."""

    inner: tuple
    rows: tuple

    def __post_init__(self):
        inner = check_composition(self.inner)
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) < len(inner):
            rows = rows + ((),) * (len(inner) - len(rows))
        for row in rows:
            if any(not isinstance(e, int) or e < 1 for e in row):
                raise PreconditionError(f"bad entries in row {row!r}")
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)

    @property
    def outer_shape(self) -> tuple:
        """Row lengths including inner cells; may end in zeros for padded rows."""
        inner = self.inner + (0,) * (len(self.rows) - len(self.inner))
        return tuple(i + len(r) for i, r in zip(inner, self.rows))

    def shape_composition(self) -> tuple:
        """Outer shape as a composition; trailing empty rows are dropped."""
        shape = self.outer_shape
        while shape and shape[-1] == 0:
            shape = shape[:-1]
        if any(p == 0 for p in shape):
            raise PreconditionError(f"empty row inside shape {shape!r}")
        return shape

    def inner_at(self, row: int) -> int:
        return self.inner[row - 1] if row <= len(self.inner) else 0

    @property
    def n_cells(self) -> int:
        return sum(len(r) for r in self.rows)

    def first_column(self) -> tuple:
        """Entries actually occupying column 1, top to bottom."""
        return tuple(
            row[0]
            for r, row in enumerate(self.rows, 1)
            if self.inner_at(r) == 0 and row
        )


def reading_word(t: SkewTableau) -> tuple:
    """Rows read right to left, top to bottom."""
    word = []
    for row in t.rows:
        word.extend(reversed(row))
    return tuple(word)


def content(t: SkewTableau, m: int) -> tuple:
    """Length-m multiplicity vector of the entries of ``t``."""
    counts = [0] * m
    for row in t.rows:
        for e in row:
            if e > m:
                raise InvalidVectorError(f"entry {e} exceeds content length {m}")
            counts[e - 1] += 1
    return tuple(counts)


def is_immaculate(t: SkewTableau) -> bool:
    """Rows weakly increase; the filled first column strictly increases."""
    for row in t.rows:
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
    col = t.first_column()
    return all(col[i] < col[i + 1] for i in range(len(col) - 1))


def is_semistandard(t: SkewTableau) -> bool:
    """Rows weakly increase; every column strictly increases."""
    for row in t.rows:
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
    for r in range(2, len(t.rows) + 1):
        off = t.inner_at(r)
        off_above = t.inner_at(r - 1)
        for j, e in enumerate(t.rows[r - 1]):
            column = off + j + 1
            pos_above = column - off_above - 1
            if 0 <= pos_above < len(t.rows[r - 2]):
                if t.rows[r - 2][pos_above] >= e:
                    return False
    return True


def _word_is_yamanouchi(word) -> bool:
    seen = {}
    for letter in word:
        seen[letter] = seen.get(letter, 0) + 1
        if letter > 1 and seen[letter] > seen.get(letter - 1, 0):
            return False
    return True


def is_yamanouchi(t: SkewTableau) -> bool:
    """Every reading-word prefix has at least as many j's as (j+1)'s."""
    return _word_is_yamanouchi(reading_word(t))


def enumerate_skew_immaculate(inner, content_vec, shape=None,
                              search_limit=DEFAULT_SEARCH_LIMIT):
    """All immaculate skew tableaux with the given inner shape and exact content.

    A row of an immaculate tableau is determined by its multiset of entries,
    so rows are chosen as sub-multisets of the remaining content, constrained
    by first-column strictness (and by ``shape`` when given).  Emission order
    is deterministic: lexicographic in the per-row count vectors.
    """
    inner = check_composition(inner)
    content_vec = tuple(content_vec)
    if any(c < 0 for c in content_vec):
        raise InvalidVectorError(f"negative content entry in {content_vec!r}")
    m = len(content_vec)
    if shape is not None:
        shape = check_composition(shape)
        if len(shape) < len(inner) or any(
            shape[i] < inner[i] for i in range(len(inner))
        ):
            return []
        if sum(shape) - sum(inner) != sum(content_vec):
            return []

    budget = [search_limit]
    results = []

    def row_choices(remaining, size=None):
        """Count vectors (k_1..k_m) with k_j <= remaining_j, optionally of
        fixed total size; yields (counts, row)."""
        def rec(j, counts, left):
            if budget[0] <= 0:
                raise ResourceLimitError("tableau enumeration budget exhausted")
            budget[0] -= 1
            if j == m:
                if size is None or left == 0:
                    row = tuple(
                        val
                        for val in range(1, m + 1)
                        for _ in range(counts[val - 1])
                    )
                    yield tuple(counts), row
                return
            top = remaining[j] if size is None else min(remaining[j], left)
            for k in range(top + 1):
                counts[j] = k
                yield from rec(j + 1, counts, left - k if size is not None else left)
                counts[j] = 0

        yield from rec(0, [0] * m, size)

    def extend(r, remaining, rows, prev_first):
        if budget[0] <= 0:
            raise ResourceLimitError("tableau enumeration budget exhausted")
        budget[0] -= 1
        if shape is not None:
            if r > len(shape):
                if all(c == 0 for c in remaining):
                    results.append(SkewTableau(inner, tuple(rows)))
                return
            size = shape[r - 1] - (inner[r - 1] if r <= len(inner) else 0)
        else:
            if r > len(inner) and all(c == 0 for c in remaining):
                results.append(SkewTableau(inner, tuple(rows)))
                return
            size = None
        starts_col1 = r > len(inner)
        for counts, row in row_choices(remaining, size):
            if starts_col1:
                if not row and shape is None:
                    continue
                if row and row[0] <= prev_first:
                    continue
            new_remaining = tuple(a - b for a, b in zip(remaining, counts))
            extend(
                r + 1,
                new_remaining,
                rows + [row],
                row[0] if (starts_col1 and row) else prev_first,
            )

    extend(1, content_vec, [], 0)
    return results


def count_immaculate_LR(alpha, lam, gamma) -> int:
    """Number of skew immaculate Yamanouchi tableaux of shape gamma/alpha and
    content lam (a partition)."""
    lam = check_partition(lam)
    alpha = check_composition(alpha)
    gamma = check_composition(gamma)
    if sum(gamma) != sum(alpha) + sum(lam):
        return 0
    return sum(
        1
        for t in enumerate_skew_immaculate(alpha, lam, shape=gamma)
        if is_yamanouchi(t)
    )


def sigma_of(t: SkewTableau, beta) -> Permutation | None:
    """The permutation c(T) - beta + Id, or None when it is not a permutation."""
    beta = check_composition(beta)
    m = len(beta)
    try:
        c = content(t, m)
    except InvalidVectorError:
        return None
    images = tuple(c[j] - beta[j] + (j + 1) for j in range(m))
    if sorted(images) != list(range(1, m + 1)):
        return None
    return Permutation(images)


def enumerate_T_alpha_beta(alpha, beta):
    """All (T, sigma(T)) with T immaculate of inner shape alpha, entries in
    {1..len(beta)}, and c(T) - beta + Id a permutation."""
    alpha = check_composition(alpha)
    beta = check_composition(beta)
    m = len(beta)
    if m > MAX_PERMUTATION_SIZE:
        raise ResourceLimitError(f"len(beta)={m} exceeds permutation guard")
    out = []
    for sigma in permutations(m):
        c = tuple(beta[j] + sigma.images[j] - (j + 1) for j in range(m))
        if any(e < 0 for e in c):
            continue
        for t in enumerate_skew_immaculate(alpha, c):
            out.append((t, sigma))
    return out


@lru_cache(maxsize=None)
def signed_product(alpha, beta) -> LinComb:
    """S_alpha * S_beta via the signed sum over permutations of iterated
    right Pieri steps; step sizes beta_j + sigma_j - j, zero steps skipped,
    a negative step annihilates the term."""
    alpha = check_composition(alpha)
    beta = check_composition(beta)
    m = len(beta)
    if m > MAX_PERMUTATION_SIZE:
        raise ResourceLimitError(f"len(beta)={m} exceeds permutation guard")
    out = {}
    for sigma in permutations(m):
        steps = [beta[j] + sigma.images[j] - (j + 1) for j in range(m)]
        if any(s < 0 for s in steps):
            continue
        frontier = {alpha: 1}
        for s in steps:
            if s == 0:
                continue
            nxt = {}
            for gamma, mult in frontier.items():
                for succ in right_pieri_successors(gamma, s):
                    nxt[succ] = nxt.get(succ, 0) + mult
            frontier = nxt
        for gamma, mult in frontier.items():
            out[gamma] = out.get(gamma, 0) + sigma.sign * mult
    return LinComb("S", out)


def signed_product_via_tableaux(alpha, beta) -> LinComb:
    """Second route for the same product: direct generation of the tableau
    family and summation of signs by outer shape."""
    out = {}
    for t, sigma in enumerate_T_alpha_beta(alpha, beta):
        gamma = t.shape_composition()
        out[gamma] = out.get(gamma, 0) + sigma.sign
    return LinComb("S", out)
