"""Exhaustive small-case verification sweeps.

Each sweep compares two independent computation routes over a bounded range
and returns ``None`` on success or a short witness string describing the
first disagreement.  The CLI ``verify`` subcommand and the acceptance tests
both drive these.
"""

from __future__ import annotations

import os

from .compositions import (
    Permutation,
    add_prefix,
    compositions_of,
    partitions_of,
    scale,
)
from .involution import nefarious_cells, phi_r, theta_x, y_inverse, y_map
from .linear import LinComb
from .nsym import (
    H_to_immaculate,
    forgetful_chi,
    immaculate_comb_to_H,
    immaculate_to_H,
    product_in_S_oracle,
)
from .pieri import (
    left_pieri,
    left_pieri_unit_coefficient,
    right_pieri,
    zero_insertion_sign_sum,
)
from .schur import (
    lr_coefficient_algebra,
    lr_coefficient_tableau,
    saturation_check_sym,
    schur_to_h,
)
from .tableaux import count_immaculate_LR, enumerate_T_alpha_beta, sigma_of

DEFAULT_MAX_DEGREE = 7


def default_max_degree() -> int:
    value = os.environ.get("NSYM_MAX_DEGREE")
    return int(value) if value else DEFAULT_MAX_DEGREE


def _all_compositions_up_to(n, max_length=None):
    for size in range(n + 1):
        yield from compositions_of(size, max_length=max_length)


def sweep_roundtrip(max_degree=8):
    """H -> S -> H on monomials and S -> H -> S on basis elements."""
    for alpha in _all_compositions_up_to(max_degree):
        f = LinComb.monomial("H", alpha)
        back = immaculate_comb_to_H(H_to_immaculate(f))
        if back != f:
            return f"H->S->H failed at alpha={alpha}"
        s = H_to_immaculate(immaculate_to_H(alpha))
        if s != LinComb.monomial("S", alpha):
            return f"S->H->S failed at alpha={alpha}"
    return None


def sweep_right_pieri(max_alpha=6, max_s=4):
    """Right Pieri rule against the oracle; H_s = S_(s)."""
    for alpha in _all_compositions_up_to(max_alpha):
        for s in range(1, max_s + 1):
            if right_pieri(alpha, s) != product_in_S_oracle(alpha, (s,)):
                return f"right Pieri failed at alpha={alpha}, s={s}"
    return None


def sweep_left_pieri(max_beta=7, max_len=4, max_s=3):
    """Closed-form left Pieri rule against the oracle, plus multiplicity
    freeness and the zero-insertion cancellation bookkeeping."""
    for beta in _all_compositions_up_to(max_beta, max_length=max_len):
        for s in range(1, max_s + 1):
            closed = left_pieri(s, beta)
            oracle = product_in_S_oracle((s,), beta)
            if closed != oracle:
                return f"left Pieri failed at s={s}, beta={beta}"
            if any(c not in (-1, 1) for c in closed.terms.values()):
                return f"coefficient outside {{-1,0,1}} at s={s}, beta={beta}"
            if s == 1 and beta:
                for gamma in oracle.support():
                    direct = left_pieri_unit_coefficient(beta, gamma)
                    summed = zero_insertion_sign_sum(beta, gamma)
                    if direct != summed:
                        return (
                            "cancellation bookkeeping failed at "
                            f"beta={beta}, gamma={gamma}"
                        )
    return None


def _shift_vectors(max_total=2):
    for size in range(1, max_total + 1):
        yield from compositions_of(size)


def sweep_translation(max_total=6, max_v=2):
    """Structure constants are invariant under admissible prefix shifts."""
    for a in range(max_total + 1):
        for b in range(max_total - a + 1):
            for alpha in compositions_of(a):
                if not alpha:
                    continue
                for beta in compositions_of(b):
                    base = product_in_S_oracle(alpha, beta)
                    for v in _shift_vectors(max_v):
                        if len(v) > len(alpha):
                            continue
                        shifted = product_in_S_oracle(add_prefix(alpha, v), beta)
                        for gamma in base.support():
                            if len(gamma) < len(v):
                                return f"short gamma={gamma} for v={v}"
                            if shifted.coefficient(add_prefix(gamma, v)) != \
                                    base.coefficient(gamma):
                                return (
                                    "translation failed at "
                                    f"alpha={alpha}, beta={beta}, v={v}, gamma={gamma}"
                                )
                        expected = {
                            add_prefix(g, v) for g in base.support()
                        }
                        if set(shifted.support()) != expected:
                            return (
                                "support mismatch at "
                                f"alpha={alpha}, beta={beta}, v={v}"
                            )
    return None


def sweep_lr_partition(max_total=7):
    """Every oracle coefficient with a partition right factor equals the
    immaculate Yamanouchi tableau count (hence is nonnegative)."""
    for a in range(max_total + 1):
        for n in range(max_total - a + 1):
            for alpha in compositions_of(a):
                for lam in partitions_of(n):
                    expansion = product_in_S_oracle(alpha, lam)
                    for gamma in compositions_of(a + n):
                        got = expansion.coefficient(gamma)
                        want = count_immaculate_LR(alpha, lam, gamma)
                        if got != want:
                            return (
                                "LR count mismatch at "
                                f"alpha={alpha}, lam={lam}, gamma={gamma}: "
                                f"oracle {got} vs count {want}"
                            )
    return None


def sweep_involution(max_total=6):
    """Involution, shape preservation, sign reversal, and the left-most
    nefarious cell characterization, over the whole family."""
    for a in range(max_total + 1):
        for b in range(max_total - a + 1):
            for alpha in compositions_of(a):
                for beta in compositions_of(b):
                    family = enumerate_T_alpha_beta(alpha, beta)
                    for t, sigma in family:
                        for r in range(1, len(alpha) + len(beta) + 1):
                            image = phi_r(t, beta, r)
                            if phi_r(image, beta, r) != t:
                                return (
                                    f"phi_{r} not an involution at "
                                    f"alpha={alpha}, beta={beta}, T={t.rows}"
                                )
                            if image.shape_composition() != t.shape_composition():
                                return (
                                    f"phi_{r} changed the shape at "
                                    f"alpha={alpha}, beta={beta}, T={t.rows}"
                                )
                            if image != t:
                                s2 = sigma_of(image, beta)
                                if s2.sign != -sigma.sign:
                                    return (
                                        f"phi_{r} kept the sign at "
                                        f"alpha={alpha}, beta={beta}, T={t.rows}"
                                    )
                                # acting cell must be the left-most nefarious
                                y_rows, _ = y_map(t, beta)
                                row_cells = [
                                    x for x in nefarious_cells(y_rows) if x.row == r
                                ]
                                if not row_cells:
                                    return (
                                        f"phi_{r} moved without nefarious cells at "
                                        f"alpha={alpha}, beta={beta}, T={t.rows}"
                                    )
                                x = row_cells[0]
                                swapped = theta_x(y_rows, x)
                                cand = y_inverse(
                                    swapped,
                                    Permutation.transposition(
                                        len(beta), r - 1
                                    ).compose(sigma),
                                    alpha,
                                )
                                if cand != image:
                                    return (
                                        "acting cell is not the left-most "
                                        f"nefarious cell at alpha={alpha}, "
                                        f"beta={beta}, T={t.rows}, r={r}"
                                    )
    return None


def sweep_saturation_sym(max_size=6, N=2):
    """Saturation holds for Schur structure constants."""
    for n in range(max_size + 1):
        for a in range(n + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(n - a):
                    for lam in partitions_of(n):
                        if not saturation_check_sym(mu, nu, lam, N):
                            return (
                                "symmetric saturation failed at "
                                f"mu={mu}, nu={nu}, lam={lam}, N={N}"
                            )
    return None


COUNTEREXAMPLE = ((1, 1), (3, 2, 2), (3, 3, 1, 1, 1), 2)


def sweep_saturation_nsym():
    """Confirm the documented failure of saturation for immaculate constants.

    Returns None when the counterexample is reproduced exactly (base
    coefficient 0, scaled coefficient 1); otherwise a witness string.
    """
    alpha, beta, gamma, N = COUNTEREXAMPLE
    base = count_immaculate_LR(alpha, beta, gamma)
    scaled = count_immaculate_LR(scale(alpha, N), scale(beta, N), scale(gamma, N))
    if base != 0 or scaled != 1:
        return (
            f"expected coefficients (0, 1) at the counterexample, got "
            f"({base}, {scaled})"
        )
    return None


def sweep_chi(max_n=6):
    """The forgetful projection sends the Schur-like basis at a partition
    index to the Schur function."""
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            if forgetful_chi(immaculate_to_H(lam)) != schur_to_h(lam):
                return f"chi mismatch at lam={lam}"
    return None


def sweep_lr_classical(max_size=8):
    """Tableau-count and algebraic Littlewood-Richardson routes agree."""
    for n in range(max_size + 1):
        for a in range(n + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(n - a):
                    for lam in partitions_of(n):
                        got = lr_coefficient_algebra(mu, nu, lam)
                        want = lr_coefficient_tableau(mu, nu, lam)
                        if got != want:
                            return (
                                "classical LR mismatch at "
                                f"mu={mu}, nu={nu}, lam={lam}: "
                                f"algebra {got} vs tableau {want}"
                            )
    return None


SUITES = {
    "roundtrip": lambda max_size: sweep_roundtrip(max_degree=max_size),
    "right-pieri": lambda max_size: sweep_right_pieri(max_alpha=max_size),
    "left-pieri": lambda max_size: sweep_left_pieri(max_beta=max_size),
    "translation": lambda max_size: sweep_translation(max_total=max_size),
    "lr-partition": lambda max_size: sweep_lr_partition(max_total=max_size),
    "involution": lambda max_size: sweep_involution(max_total=max_size),
    "saturation-sym": lambda max_size: sweep_saturation_sym(max_size=max_size),
    "saturation-nsym": lambda max_size: sweep_saturation_nsym(),
    "chi": lambda max_size: sweep_chi(max_n=max_size),
}
