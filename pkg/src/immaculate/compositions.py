"""Compositions, partitions, permutations and the two Pieri-type cover relations.

Compositions and partitions are plain tuples of positive integers; the empty
tuple is the unique composition of 0.  Integer vectors (which may contain
zeros or negative entries) are also plain tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidVectorError, PreconditionError, ResourceLimitError

# Permutation enumerations grow as m!; refuse anything past this.
MAX_PERMUTATION_SIZE = 10


def check_composition(alpha) -> tuple:
    alpha = tuple(alpha)
    if not all(isinstance(a, int) and a >= 1 for a in alpha):
        raise PreconditionError(f"not a composition: {alpha!r}")
    return alpha


def check_partition(lam) -> tuple:
    lam = check_composition(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise PreconditionError(f"not weakly decreasing: {lam!r}")
    return lam


def is_partition(alpha) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


def sort_composition(alpha) -> tuple:
    """The partition obtained by reordering the parts of ``alpha``."""
    return tuple(sorted(alpha, reverse=True))


def comp(delta) -> tuple:
    """Drop the zero entries of a nonnegative integer vector, keeping order."""
    delta = tuple(delta)
    if any(d < 0 for d in delta):
        raise InvalidVectorError(f"negative entry in {delta!r}")
    return tuple(d for d in delta if d > 0)


def scale(alpha, n: int) -> tuple:
    """Multiply every part of ``alpha`` by ``n``."""
    if n < 1:
        raise PreconditionError(f"scale factor must be >= 1, got {n}")
    return tuple(n * a for a in alpha)


def add_prefix(alpha, v) -> tuple:
    """Add ``v`` entrywise to the first ``len(v)`` parts of ``alpha``."""
    if len(v) > len(alpha):
        raise PreconditionError(f"prefix {v!r} longer than {alpha!r}")
    return tuple(a + w for a, w in zip(alpha, v)) + tuple(alpha[len(v):])


def grlex_key(alpha):
    """Sort key for the canonical graded, then lexicographic order."""
    return (sum(alpha), alpha)


def right_pieri_successors(alpha, s: int) -> set:
    """All beta covering ``alpha`` by adding ``s`` cells on the right.

    beta must satisfy |beta| = |alpha| + s, beta_j >= alpha_j for
    j <= len(alpha), and len(beta) <= len(alpha) + 1.
    """
    if s < 1:
        raise PreconditionError(f"s must be >= 1, got {s}")
    out = set()
    for extra in weak_compositions(s, len(alpha) + 1):
        beta = tuple(a + e for a, e in zip(alpha, extra))
        if extra[-1] > 0:
            beta += (extra[-1],)
        out.add(beta)
    return out


def is_right_pieri_successor(alpha, s: int, beta) -> bool:
    """Re-check the three defining conditions of the right cover relation."""
    return (
        sum(beta) == sum(alpha) + s
        and len(beta) <= len(alpha) + 1
        and len(beta) >= len(alpha)
        and all(beta[j] >= alpha[j] for j in range(len(alpha)))
    )


def horizontal_strip_successors(mu, n: int) -> set:
    """All partitions obtained from ``mu`` by adding a horizontal n-strip."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    mu = check_partition(mu)

    out = set()

    def extend(row, prefix, remaining):
        if row > len(mu):
            # at most one new row, bounded above by the previous row
            if remaining == 0:
                out.add(tuple(prefix))
            elif not prefix or remaining <= prefix[-1]:
                out.add(tuple(prefix) + (remaining,))
            return
        lo = mu[row - 1]
        hi = remaining + lo
        if row > 1:
            hi = min(hi, prefix[-1])
        for nu_r in range(lo, hi + 1):
            extend(row + 1, prefix + [nu_r], remaining - (nu_r - lo))

    # new cells in row r are limited to columns > mu_r and <= mu_{r-1}
    def ok(nu):
        return all(
            nu[r] <= (mu[r - 1] if r - 1 < len(mu) else 0)
            for r in range(1, len(nu))
        )

    extend(1, [], n)
    return {nu for nu in out if ok(nu)}


def is_horizontal_strip(mu, nu) -> bool:
    """True iff nu/mu is a horizontal strip (interleaving condition)."""
    if len(nu) < len(mu) or len(nu) > len(mu) + 1:
        return False
    for j in range(len(nu)):
        if j < len(mu) and nu[j] < mu[j]:
            return False
        if j + 1 < len(nu) and nu[j + 1] > (mu[j] if j < len(mu) else 0):
            return False
    return True


def weak_compositions(n: int, length: int) -> Iterator[tuple]:
    """All length-``length`` tuples of nonnegative integers summing to ``n``."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, length - 1):
            yield (first,) + rest


def compositions_of(n: int, length: int | None = None,
                    max_length: int | None = None) -> Iterator[tuple]:
    """All compositions of ``n``, optionally with (maximum) length fixed."""
    if length is not None:
        if length == 0:
            if n == 0:
                yield ()
            return
        if n < length:
            return
        for first in range(1, n - length + 2):
            for rest in compositions_of(n - first, length - 1):
                yield (first,) + rest
        return
    if n == 0:
        yield ()
        return
    top = n if max_length is None else min(n, max_length)
    for ln in range(1, top + 1):
        yield from compositions_of(n, length=ln)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple]:
    """All partitions of ``n`` with parts bounded by ``max_part``."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..m} in one-line notation."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PreconditionError(f"not a permutation: {self.images!r}")

    @property
    def sign(self) -> int:
        inv = sum(
            1
            for i, j in itertools.combinations(range(len(self.images)), 2)
            if self.images[i] > self.images[j]
        )
        return -1 if inv % 2 else 1

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, 1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if len(other) != len(self):
            raise PreconditionError("size mismatch in composition")
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def transposition(cls, m: int, r: int) -> "Permutation":
        """Swap r and r+1 inside S_m."""
        if not 1 <= r < m:
            raise PreconditionError(f"transposition ({r},{r + 1}) not in S_{m}")
        images = list(range(1, m + 1))
        images[r - 1], images[r] = images[r], images[r - 1]
        return cls(tuple(images))


@lru_cache(maxsize=None)
def permutations(m: int) -> tuple:
    """All m! permutations of {1..m}, in lexicographic order."""
    if m < 0:
        raise PreconditionError(f"m must be >= 0, got {m}")
    if m > MAX_PERMUTATION_SIZE:
        raise ResourceLimitError(
            f"refusing to enumerate S_{m} (guard is {MAX_PERMUTATION_SIZE})"
        )
    return tuple(
        Permutation(images) for images in itertools.permutations(range(1, m + 1))
    )
