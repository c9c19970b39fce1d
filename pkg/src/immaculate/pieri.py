"""Right and left Pieri rules, translation reduction, and the closed-form
coefficient for a single-row left factor.

The left rule works through a membership test on candidate row-length vectors
(one more than the filled first-row length, followed by a possibly-zero tail)
and a sign that counts negative entries of beta minus the tail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import (
    check_composition,
    compositions_of,
    right_pieri_successors,
)
from .errors import PreconditionError
from .linear import LinComb


def right_pieri(alpha, s: int) -> LinComb:
    """S_alpha * H_s: multiplicity-free sum over the right cover relation."""
    alpha = check_composition(alpha)
    return LinComb("S", {beta: 1 for beta in right_pieri_successors(alpha, s)})


def translation_reduce(alpha, beta, gamma, v):
    """Strip the prefix ``v`` from alpha and gamma; the structure constant of
    the reduced triple equals that of the original."""
    alpha = check_composition(alpha)
    gamma = check_composition(gamma)
    v = check_composition(v)
    if len(v) > len(alpha):
        raise PreconditionError(f"len(v)={len(v)} exceeds len(alpha)={len(alpha)}")
    if len(v) > len(gamma):
        raise PreconditionError(f"len(v)={len(v)} exceeds len(gamma)={len(gamma)}")
    new_alpha = tuple(a - w for a, w in zip(alpha, v)) + alpha[len(v):]
    new_gamma = tuple(g - w for g, w in zip(gamma, v)) + gamma[len(v):]
    if any(p <= 0 for p in new_alpha) or any(p <= 0 for p in new_gamma):
        raise PreconditionError(f"shift {v!r} does not fit inside {alpha!r}/{gamma!r}")
    return new_alpha, tuple(beta), new_gamma


def sgn(d) -> int:
    """(-1) to the number of strictly negative entries."""
    return -1 if sum(1 for x in d if x < 0) % 2 else 1


@dataclass(frozen=True)
class DeltaVector:
    """Candidate row-length data: filled first-row length plus one, then the
    lengths of the rows starting with 1..n (zeros allowed)."""

    first: int
    tail: tuple

    def __post_init__(self):
        object.__setattr__(self, "tail", tuple(self.tail))
        if self.first < 1:
            raise PreconditionError(f"first must be >= 1, got {self.first}")
        if any(d < 0 for d in self.tail):
            raise PreconditionError(f"negative tail entry in {self.tail!r}")


def z_membership(delta: DeltaVector, beta) -> bool:
    """Fixed-point condition for the candidate ``delta`` against ``beta``.

    With s = delta.first - 1 and running threshold
    t_i = s + sum_{j<i} (delta_j - beta_j):
      beta_i < t_i  requires beta_i < delta_i;
      beta_i > t_i  requires beta_i >= delta_i >= sum_{j<=i} beta_j
                    - sum_{j<i} delta_j - s;
      beta_i = t_i  requires beta_i < delta_i, or delta_i = 0 with
                    beta_j = delta_j for every j > i.
    """
    beta = check_composition(beta)
    n = len(beta)
    if len(delta.tail) != n:
        raise PreconditionError(
            f"tail length {len(delta.tail)} != len(beta) {n}"
        )
    s = delta.first - 1
    threshold = s
    beta_prefix = 0
    delta_prefix = 0
    for i in range(n):
        b, d = beta[i], delta.tail[i]
        beta_prefix += b
        if b < threshold:
            if not b < d:
                return False
        elif b > threshold:
            if not (b >= d >= beta_prefix - delta_prefix - s):
                return False
        else:
            if not (
                b < d
                or (d == 0 and all(beta[j] == delta.tail[j] for j in range(i + 1, n)))
            ):
                return False
        delta_prefix += d
        threshold = s + (delta_prefix - beta_prefix)
    return True


def _zero_inserted_tail(gamma, k: int) -> tuple:
    """Tail of the candidate with the zero row placed at position k (1-based):
    gamma_2..gamma_k, 0, gamma_{k+1}..gamma_n."""
    return gamma[1:k] + (0,) + gamma[k:]


def left_pieri_unit_coefficient(beta, gamma) -> int:
    """Coefficient of S_gamma in S_(1) * S_beta, by the closed form."""
    beta = check_composition(beta)
    gamma = check_composition(gamma)
    n = len(beta)
    if sum(gamma) != 1 + sum(beta):
        return 0
    if len(gamma) == n + 1:
        delta = DeltaVector(gamma[0], gamma[1:])
        if z_membership(delta, beta):
            return sgn(tuple(beta[i] - gamma[i + 1] for i in range(n)))
        return 0
    if len(gamma) == n and n >= 1:
        # smallest k with beta_j = gamma_j for every j > k
        k = n
        while k > 1 and beta[k - 1] == gamma[k - 1]:
            k -= 1
        delta = DeltaVector(gamma[0], _zero_inserted_tail(gamma, k))
        if not z_membership(delta, beta):
            return 0
        # largest r with beta weakly chained upward from k
        r = k
        while r < n and beta[r - 1] < beta[r]:
            r += 1
        if (r - k) % 2:
            return 0
        return sgn(tuple(beta[i - 1] - gamma[i] for i in range(1, k)))
    return 0


def zero_insertion_sign_sum(beta, gamma) -> int:
    """Direct summation of signs over every passing candidate; the
    cancellation-bookkeeping cross-check for the closed form."""
    beta = check_composition(beta)
    gamma = check_composition(gamma)
    n = len(beta)
    if sum(gamma) != 1 + sum(beta):
        return 0
    total = 0
    if len(gamma) == n + 1:
        delta = DeltaVector(gamma[0], gamma[1:])
        if z_membership(delta, beta):
            total += sgn(tuple(b - d for b, d in zip(beta, delta.tail)))
    elif len(gamma) == n and n >= 1:
        seen = set()
        for k in range(1, n + 1):
            tail = _zero_inserted_tail(gamma, k)
            if tail in seen:
                continue
            seen.add(tail)
            delta = DeltaVector(gamma[0], tail)
            if z_membership(delta, beta):
                total += sgn(tuple(b - d for b, d in zip(beta, tail)))
    return total


def left_pieri(s: int, beta) -> LinComb:
    """H_s * S_beta via translation to the single-cell left factor.

    Candidate outer shapes have len(beta) or len(beta)+1 parts, first part at
    least s; each coefficient is the closed-form value at gamma with its first
    part reduced by s - 1.
    """
    if s < 1:
        raise PreconditionError(f"s must be >= 1, got {s}")
    beta = check_composition(beta)
    n = len(beta)
    total = s + sum(beta)
    out = {}
    for length in {n, n + 1}:
        if length < 1:
            continue
        for gamma in compositions_of(total, length=length):
            if gamma[0] < s:
                continue
            reduced = (gamma[0] - (s - 1),) + gamma[1:]
            c = left_pieri_unit_coefficient(beta, reduced)
            if c:
                out[gamma] = c
    return LinComb("S", out)
