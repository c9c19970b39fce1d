"""Products and basis changes in the algebras on complete homogeneous generators.

The noncommutative algebra has basis ``H`` indexed by compositions with
H_alpha * H_beta = H_{alpha.beta} (concatenation); its commutative image has
basis ``h`` indexed by partitions.  The Schur-like basis ``S`` is defined by a
signed sum over permutations and inverted by triangular elimination: the
identity permutation contributes the index itself and every other permutation
contributes a strictly larger index in graded-lex order.
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import (
    check_composition,
    grlex_key,
    permutations,
    sort_composition,
)
from .errors import PreconditionError
from .linear import LinComb


def _require(f: LinComb, basis: str):
    if f.basis != basis:
        raise PreconditionError(f"expected basis {basis!r}, got {f.basis!r}")


def h_multiply(f: LinComb, g: LinComb) -> LinComb:
    """Product in the H basis: bilinear extension of index concatenation."""
    _require(f, "H")
    _require(g, "H")
    out = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            idx = a + b
            out[idx] = out.get(idx, 0) + ca * cb
    return LinComb("H", out)


def sym_multiply(f: LinComb, g: LinComb) -> LinComb:
    """Product in the commutative h basis: concatenate, then sort the index."""
    _require(f, "h")
    _require(g, "h")
    out = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            idx = sort_composition(a + b)
            out[idx] = out.get(idx, 0) + ca * cb
    return LinComb("h", out)


def forgetful_chi(f: LinComb) -> LinComb:
    """Project H onto h by sorting every index; terms merge after sorting."""
    _require(f, "H")
    out = {}
    for a, c in f.terms.items():
        idx = sort_composition(a)
        out[idx] = out.get(idx, 0) + c
    return LinComb("h", out)


@lru_cache(maxsize=None)
def immaculate_to_H(alpha) -> LinComb:
    """Expand S_alpha in the H basis via the signed permutation sum.

    Each permutation sigma contributes sign(sigma) * H at the index with
    entries alpha_i + sigma_i - i; a zero entry is deleted (H_0 = 1) and a
    negative entry kills the whole term (H_m = 0 for m < 0).
    """
    alpha = check_composition(alpha)
    k = len(alpha)
    out = {}
    for sigma in permutations(k):
        entries = [alpha[i] + sigma.images[i] - (i + 1) for i in range(k)]
        if any(e < 0 for e in entries):
            continue
        idx = tuple(e for e in entries if e > 0)
        out[idx] = out.get(idx, 0) + sigma.sign
    return LinComb("H", out)


def H_to_immaculate(f: LinComb) -> LinComb:
    """Invert the expansion of the S basis by triangular elimination.

    Repeatedly extract the graded-lex-smallest surviving H term; its
    coefficient is the coefficient of that S basis element.
    """
    _require(f, "H")
    remaining = dict(f.terms)
    out = {}
    while remaining:
        gamma = min(remaining, key=grlex_key)
        c = remaining[gamma]
        out[gamma] = c
        for idx, cc in immaculate_to_H(gamma).terms.items():
            val = remaining.get(idx, 0) - c * cc
            if val:
                remaining[idx] = val
            else:
                remaining.pop(idx, None)
    return LinComb("S", out)


def immaculate_comb_to_H(f: LinComb) -> LinComb:
    """Linear extension of the S -> H expansion."""
    _require(f, "S")
    out = LinComb("H")
    for alpha, c in f.terms.items():
        out = out + immaculate_to_H(alpha).scaled(c)
    return out


@lru_cache(maxsize=None)
def product_in_S_oracle(alpha, beta) -> LinComb:
    """Ground-truth product S_alpha * S_beta, expanded back into the S basis."""
    alpha = check_composition(alpha)
    beta = check_composition(beta)
    prod = h_multiply(immaculate_to_H(alpha), immaculate_to_H(beta))
    return H_to_immaculate(prod)


def structure_constant(alpha, beta, gamma) -> int:
    """Coefficient of S_gamma in S_alpha * S_beta."""
    gamma = check_composition(gamma)
    if sum(gamma) != sum(alpha) + sum(beta):
        return 0
    return product_in_S_oracle(tuple(alpha), tuple(beta)).coefficient(gamma)
