"""Classical commutative Schur theory used as the cross-checking frame:
the permutation-sum expansion into complete homogeneous functions, both
Littlewood-Richardson routes, the symmetric Pieri rule, and saturation checks.
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import (
    MAX_PERMUTATION_SIZE,
    check_partition,
    grlex_key,
    horizontal_strip_successors,
    is_partition,
    permutations,
    scale,
    sort_composition,
)
from .errors import PreconditionError, ResourceLimitError
from .linear import LinComb
from .nsym import structure_constant, sym_multiply
from .tableaux import count_immaculate_LR


@lru_cache(maxsize=None)
def schur_to_h(lam) -> LinComb:
    """Expand s_lam in the h basis by the signed sum over permutations.

    Index entries are lam_i + sigma_i - i with h_0 = 1 and h_m = 0 for m < 0;
    surviving indices are sorted into partitions and merged.
    """
    lam = check_partition(lam)
    k = len(lam)
    if k > MAX_PERMUTATION_SIZE:
        raise ResourceLimitError(f"len(lam)={k} exceeds permutation guard")
    out = {}
    for sigma in permutations(k):
        entries = [lam[i] + sigma.images[i] - (i + 1) for i in range(k)]
        if any(e < 0 for e in entries):
            continue
        idx = sort_composition(e for e in entries if e > 0)
        out[idx] = out.get(idx, 0) + sigma.sign
    return LinComb("h", out)


def h_to_schur(f: LinComb) -> LinComb:
    """Invert the h expansion of the Schur basis by triangular elimination
    over partitions in graded-lex order."""
    if f.basis != "h":
        raise PreconditionError(f"expected basis 'h', got {f.basis!r}")
    remaining = dict(f.terms)
    out = {}
    while remaining:
        lam = min(remaining, key=grlex_key)
        c = remaining[lam]
        out[lam] = c
        for idx, cc in schur_to_h(lam).terms.items():
            val = remaining.get(idx, 0) - c * cc
            if val:
                remaining[idx] = val
            else:
                remaining.pop(idx, None)
    return LinComb("s", out)


@lru_cache(maxsize=None)
def schur_product_in_s(mu, nu) -> LinComb:
    """s_mu * s_nu expanded in the Schur basis, through the h basis."""
    mu = check_partition(mu)
    nu = check_partition(nu)
    return h_to_schur(sym_multiply(schur_to_h(mu), schur_to_h(nu)))


def lr_coefficient_algebra(mu, nu, lam) -> int:
    """Structure constant extracted from the algebraic product route."""
    lam = check_partition(lam)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    return schur_product_in_s(tuple(mu), tuple(nu)).coefficient(lam)


def lr_coefficient_tableau(mu, nu, lam) -> int:
    """Count of skew semistandard Yamanouchi tableaux of shape lam/mu and
    content nu; an enumeration route independent of the algebra."""
    mu = check_partition(mu)
    nu = check_partition(nu)
    lam = check_partition(lam)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(lam) < len(mu) or any(lam[i] < mu[i] for i in range(len(mu))):
        return 0

    sizes = [lam[r] - (mu[r] if r < len(mu) else 0) for r in range(len(lam))]
    remaining = list(nu)
    count = 0
    rows: list[tuple] = []

    def fill_row(r):
        nonlocal count
        if r == len(lam):
            if all(c == 0 for c in remaining):
                word = [e for row in rows for e in reversed(row)]
                if _yamanouchi_word(word):
                    count += 1
            return
        off = mu[r] if r < len(mu) else 0
        off_above = mu[r - 1] if 0 <= r - 1 < len(mu) else 0

        def lower_bound(pos):
            # strict increase below the cell directly above, when it is filled
            column = off + pos + 1
            if r == 0:
                return 1
            above_pos = column - off_above - 1
            if 0 <= above_pos < len(rows[r - 1]):
                return rows[r - 1][above_pos] + 1
            return 1

        def build(pos, row):
            nonlocal count
            if pos == sizes[r]:
                rows.append(tuple(row))
                fill_row(r + 1)
                rows.pop()
                return
            lo = max(lower_bound(pos), row[-1] if row else 1)
            for val in range(lo, len(nu) + 1):
                if remaining[val - 1] > 0:
                    remaining[val - 1] -= 1
                    row.append(val)
                    build(pos + 1, row)
                    row.pop()
                    remaining[val - 1] += 1

        build(0, [])

    fill_row(0)
    return count


def _yamanouchi_word(word) -> bool:
    seen = {}
    for letter in word:
        seen[letter] = seen.get(letter, 0) + 1
        if letter > 1 and seen[letter] > seen.get(letter - 1, 0):
            return False
    return True


def pieri_sym(mu, n: int) -> LinComb:
    """s_mu * h_n: sum over partitions adding a horizontal n-strip."""
    mu = check_partition(mu)
    return LinComb("s", {nu: 1 for nu in horizontal_strip_successors(mu, n)})


def saturation_check_sym(mu, nu, lam, N: int) -> bool:
    """True iff nonvanishing of the Schur structure constant is equivalent to
    nonvanishing at the N-scaled triple."""
    if N < 1:
        raise PreconditionError(f"N must be >= 1, got {N}")
    if sum(lam) != sum(mu) + sum(nu):
        raise PreconditionError("sizes incompatible: |lam| != |mu| + |nu|")
    base = lr_coefficient_algebra(mu, nu, lam)
    scaled = lr_coefficient_algebra(scale(mu, N), scale(nu, N), scale(lam, N))
    return (base != 0) == (scaled != 0)


def _nsym_coefficient(alpha, beta, gamma) -> int:
    if is_partition(beta):
        return count_immaculate_LR(alpha, beta, gamma)
    return structure_constant(alpha, beta, gamma)


def saturation_check_nsym(alpha, beta, gamma, N: int) -> bool:
    """The analogous check for immaculate structure constants; false on the
    known counterexample."""
    if N < 1:
        raise PreconditionError(f"N must be >= 1, got {N}")
    if sum(gamma) != sum(alpha) + sum(beta):
        raise PreconditionError("sizes incompatible: |gamma| != |alpha| + |beta|")
    base = _nsym_coefficient(tuple(alpha), tuple(beta), tuple(gamma))
    scaled = _nsym_coefficient(scale(alpha, N), scale(beta, N), scale(gamma, N))
    return (base != 0) == (scaled != 0)
