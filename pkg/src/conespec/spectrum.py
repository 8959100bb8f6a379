"""Spectrum vectors: finite-support maps from rational exponents to integer
multiplicities, tagged with the number of variables they live in.

All arithmetic is exact. Exponents are `fractions.Fraction`, multiplicities
are (possibly negative) Python ints. A vector is canonical: entries with
multiplicity 0 are never stored, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

ExponentLike = Union[Fraction, int, str]


def _as_fraction(value: ExponentLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class SpectrumVector:
    """Finite multiset of rational exponents with signed multiplicities."""

    __slots__ = ("_entries", "_ambient_dim")

    def __init__(self, entries=None, ambient_dim: int = 1):
        if ambient_dim < 1:
            raise ValueError("ambient_dim must be a positive integer")
        table: dict[Fraction, int] = {}
        if entries:
            items: Iterable
            if isinstance(entries, Mapping):
                items = entries.items()
            else:
                items = entries
            for exponent, mult in items:
                mult = int(mult)
                if mult == 0:
                    continue
                key = _as_fraction(exponent)
                new = table.get(key, 0) + mult
                if new:
                    table[key] = new
                else:
                    del table[key]
        self._entries = table
        self._ambient_dim = int(ambient_dim)

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    def items(self) -> list[tuple[Fraction, int]]:
        """Entries sorted by increasing exponent."""
        return sorted(self._entries.items())

    def multiplicity(self, exponent: ExponentLike) -> int:
        return self._entries.get(_as_fraction(exponent), 0)

    def total(self) -> int:
        """Sum of all multiplicities (the Milnor number for a genuine germ)."""
        return sum(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectrumVector):
            return NotImplemented
        return (self._ambient_dim == other._ambient_dim
                and self._entries == other._entries)

    def __hash__(self) -> int:
        return hash((self._ambient_dim, frozenset(self._entries.items())))

    def __add__(self, other: "SpectrumVector") -> "SpectrumVector":
        if not isinstance(other, SpectrumVector):
            return NotImplemented
        if self._ambient_dim != other._ambient_dim:
            raise ValueError("cannot add spectra with different ambient dimensions "
                             f"({self._ambient_dim} vs {other._ambient_dim})")
        merged = dict(self._entries)
        for exponent, mult in other._entries.items():
            new = merged.get(exponent, 0) + mult
            if new:
                merged[exponent] = new
            else:
                merged.pop(exponent, None)
        return SpectrumVector(merged, self._ambient_dim)

    def product(self, other: "SpectrumVector") -> "SpectrumVector":
        """Exponent convolution: joining two germs in disjoint variables
        multiplies their spectra, so the result has one entry n_a*n_b at a+b
        for every pair of entries. Requires nonnegative multiplicities."""
        if not isinstance(other, SpectrumVector):
            raise TypeError("product expects a SpectrumVector")
        for vec in (self, other):
            bad = [m for m in vec._entries.values() if m < 0]
            if bad:
                raise ValueError("product requires genuine spectra "
                                 "(nonnegative multiplicities)")
        table: dict[Fraction, int] = {}
        for ea, ma in self._entries.items():
            for eb, mb in other._entries.items():
                key = ea + eb
                table[key] = table.get(key, 0) + ma * mb
        return SpectrumVector(table, self._ambient_dim + other._ambient_dim)

    def dual(self) -> "SpectrumVector":
        """Reflect every exponent a to ambient_dim - a."""
        d = Fraction(self._ambient_dim)
        return SpectrumVector({d - e: m for e, m in self._entries.items()},
                              self._ambient_dim)

    def has_valid_support(self) -> bool:
        """True iff every exponent lies strictly inside (0, ambient_dim)."""
        d = self._ambient_dim
        return all(0 < e < d for e in self._entries)

    def is_symmetric(self) -> bool:
        """True iff the vector equals its own dual."""
        return self.dual() == self

    def min_exponent(self) -> Fraction:
        if not self._entries:
            raise ValueError("empty spectrum has no minimum exponent")
        return min(self._entries)

    def max_exponent(self) -> Fraction:
        if not self._entries:
            raise ValueError("empty spectrum has no maximum exponent")
        return max(self._entries)

    def render(self) -> str:
        """Canonical text form: "p/q:m" entries, increasing exponents."""
        return ", ".join(f"{e}:{m}" for e, m in self.items())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SpectrumVector({{{self.render()}}}, ambient_dim={self._ambient_dim})"


def empty_spectrum(ambient_dim: int) -> SpectrumVector:
    return SpectrumVector(None, ambient_dim)
