"""Sparse linear combinations over a labelled basis with exact integer coefficients.

Python integers are arbitrary precision, so exact arithmetic never overflows.
Indices are compositions (bases ``H`` and ``S``) or partitions (``h`` and ``s``);
terms iterate in graded lexicographic order so output is deterministic.
"""

from __future__ import annotations

from .compositions import check_composition, check_partition, grlex_key
from .errors import PreconditionError

BASES = ("H", "S", "h", "s")
_PARTITION_BASES = ("h", "s")


class LinComb:
    """A finite integer linear combination of basis elements."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise PreconditionError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for index, coeff in items:
                index = self._check_index(basis, index)
                if coeff:
                    clean[index] = clean.get(index, 0) + coeff
                    if not clean[index]:
                        del clean[index]
        self.terms = clean

    @staticmethod
    def _check_index(basis, index):
        if basis in _PARTITION_BASES:
            return check_partition(index)
        return check_composition(index)

    @classmethod
    def monomial(cls, basis, index, coeff=1):
        return cls(basis, {tuple(index): coeff})

    @classmethod
    def zero(cls, basis):
        return cls(basis)

    def coefficient(self, index) -> int:
        return self.terms.get(tuple(index), 0)

    def items(self):
        """Terms in graded-lex order of the index."""
        return [(idx, self.terms[idx]) for idx in sorted(self.terms, key=grlex_key)]

    def support(self):
        return sorted(self.terms, key=grlex_key)

    def _require_same_basis(self, other):
        if not isinstance(other, LinComb) or other.basis != self.basis:
            raise PreconditionError(
                f"basis mismatch: {self.basis!r} vs {getattr(other, 'basis', other)!r}"
            )

    def __add__(self, other):
        self._require_same_basis(other)
        out = dict(self.terms)
        for idx, c in other.terms.items():
            out[idx] = out.get(idx, 0) + c
        return LinComb(self.basis, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LinComb(self.basis, {idx: -c for idx, c in self.terms.items()})

    def scaled(self, scalar: int):
        return LinComb(self.basis, {idx: scalar * c for idx, c in self.terms.items()})

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return self.scaled(scalar)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for idx, c in self.items():
            body = f"{self.basis}[{','.join(map(str, idx))}]"
            mag = abs(c)
            term = body if mag == 1 else f"{mag}*{body}"
            if not pieces:
                pieces.append(term if c > 0 else f"-{term}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {term}")
        return " ".join(pieces)

    def __repr__(self):
        return f"LinComb({self.basis!r}, {dict(self.items())!r})"

    def to_json_dict(self):
        return {
            "basis": self.basis,
            "terms": [
                {"coefficient": c, "index": list(idx)} for idx, c in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            data["basis"],
            [(tuple(t["index"]), t["coefficient"]) for t in data["terms"]],
        )
