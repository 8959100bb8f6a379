"""Local invariants of plane-curve (and hypersurface) germs: quasihomogeneous
spectra, Milnor numbers, lattice counts under a line, and spectral window
counts. Everything is exact integer/rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .spectrum import SpectrumVector


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division in Z[u]; den must have leading coefficient 1."""
    assert den and den[-1] == 1
    rem = list(num)
    if len(rem) < len(den):
        return [0], rem
    quo = [0] * (len(rem) - len(den) + 1)
    for k in range(len(quo) - 1, -1, -1):
        c = rem[k + len(den) - 1]
        if c:
            quo[k] = c
            for j, dj in enumerate(den):
                rem[k + j] -= c * dj
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quo, rem


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights (gcd 1) together with a weighted degree."""

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise ValueError("weight system needs at least one weight")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")
        # gcd 1 is required of a genuine weight system; single-variable
        # systems appear only as factors of the product formula, where the
        # weight may share a factor with the joint degree.
        if len(self.weights) > 1 and math.gcd(*self.weights) != 1:
            raise ValueError("weights must have gcd 1")
        if self.degree < 1:
            raise ValueError("weighted degree must be positive")

    def _require_isolated(self):
        if any(self.degree <= w for w in self.weights):
            raise ValueError(f"degree {self.degree} must exceed every weight "
                             f"{self.weights} for an isolated singularity")


def weighted_spectrum(ws: WeightSystem) -> SpectrumVector:
    """Spectrum of a germ with the given weights and lowest weighted degree.

    In the variable u = t^(1/d) the spectrum is
    u^(w_1+...+w_n) * prod_i (u^(d-w_i) - 1) / (u^(w_i) - 1),
    expanded exactly over the integers. When every w_i divides d each factor
    is a finite geometric sum and the expansion is a plain convolution;
    otherwise the quotient is taken by exact polynomial division, which must
    be remainder-free (it is precisely when the weight data describes an
    isolated germ).
    """
    ws._require_isolated()
    d = ws.degree
    if all(d % w == 0 for w in ws.weights):
        coeffs = [1]
        for w in ws.weights:
            factor = [0] * (d - 2 * w + 1)
            for k in range(0, d - 2 * w + 1, w):
                factor[k] = 1
            coeffs = _poly_mul(coeffs, factor)
    else:
        num = [1]
        den = [1]
        for w in ws.weights:
            num = _poly_mul(num, [-1] + [0] * (d - w - 1) + [1])
            den = _poly_mul(den, [-1] + [0] * (w - 1) + [1])
        coeffs, rem = _poly_divmod(num, den)
        if any(rem):
            raise ValueError(f"weights {ws.weights} with degree {d} do not "
                             "describe an isolated germ (inexact expansion)")
    if any(c < 0 for c in coeffs):
        raise ValueError(f"weights {ws.weights} with degree {d} do not "
                         "describe an isolated germ (negative multiplicity)")
    shift = sum(ws.weights)
    entries = {Fraction(shift + k, d): c for k, c in enumerate(coeffs) if c}
    return SpectrumVector(entries, ambient_dim=len(ws.weights))


def weighted_milnor(ws: WeightSystem) -> int:
    """Milnor number prod_i (d - w_i)/w_i, asserted to be an exact integer."""
    ws._require_isolated()
    value = Fraction(1)
    for w in ws.weights:
        value *= Fraction(ws.degree - w, w)
    if value.denominator != 1:
        raise ValueError(f"non-integral Milnor product for weights {ws.weights} "
                         f"and degree {ws.degree}")
    return value.numerator


def lattice_count(w: int, wp: int, bound: int) -> int:
    """Number of pairs (m1, m2) of positive integers with w*m1 + wp*m2 <= bound."""
    if bound < w + wp:
        return 0
    total = 0
    m1 = 1
    while w * m1 + wp <= bound:
        total += (bound - w * m1) // wp
        m1 += 1
    return total


def window_count(spec: SpectrumVector, beta: Fraction) -> int:
    """Total multiplicity of exponents in the half-open window [beta-1, beta)."""
    beta = Fraction(beta)
    low = beta - 1
    return sum(m for e, m in spec.items() if low <= e < beta)


@dataclass(frozen=True)
class LocalBranch:
    """One local irreducible component: its weighted degree and the
    multiplicity the ambient (possibly non-reduced) curve carries on it."""

    weighted_degree: int
    multiplicity: int

    def __post_init__(self):
        if self.weighted_degree < 1:
            raise ValueError("branch weighted degree must be positive")
        if self.multiplicity < 1:
            raise ValueError("branch multiplicity must be positive")


@dataclass(frozen=True)
class SingularPoint:
    """A singular point of the reduced curve, described by its local weights
    and its branches. Ordinary points have weights (1, 1)."""

    weights: tuple[int, int]
    branches: tuple[LocalBranch, ...]

    def __post_init__(self):
        w, wp = self.weights
        if w < 1 or wp < 1:
            raise ValueError("point weights must be positive")
        if math.gcd(w, wp) != 1:
            raise ValueError(f"point weights {self.weights} must be coprime")
        object.__setattr__(self, "branches", tuple(self.branches))
        if not self.branches:
            raise ValueError("a singular point needs at least one branch")

    @property
    def weighted_degree(self) -> int:
        """Sum of the branch weighted degrees."""
        return sum(b.weighted_degree for b in self.branches)

    @property
    def branch_count(self) -> int:
        return len(self.branches)

    def is_ordinary(self) -> bool:
        return self.weights == (1, 1)

    @property
    def reduced_multiplicity(self) -> int:
        """Multiplicity of the reduced curve at the point; for an ordinary
        point this is just the number of branches."""
        if not self.is_ordinary():
            raise ValueError("reduced multiplicity is only tracked for "
                             "ordinary points")
        return self.branch_count

    def milnor(self) -> int:
        """(d-w)(d-w')/(w*w') for the local weighted degree d, checked to be
        a nonnegative integer."""
        w, wp = self.weights
        d = self.weighted_degree
        value = Fraction((d - w) * (d - wp), w * wp)
        if value.denominator != 1 or value < 0:
            raise ValueError(f"invalid point data: Milnor number ({d}-{w})"
                             f"({d}-{wp})/{w * wp} is not a nonnegative integer")
        return value.numerator

    def local_spectrum(self) -> SpectrumVector:
        """Spectrum of the germ, from its weights and weighted degree."""
        return weighted_spectrum(WeightSystem(self.weights, self.weighted_degree))


def validate_branches(point: SingularPoint) -> bool:
    """True iff every branch weighted degree is one of w, w', w*w' (and all
    equal 1 at an ordinary point)."""
    w, wp = point.weights
    allowed = {w, wp, w * wp}
    if point.is_ordinary():
        allowed = {1}
    return all(b.weighted_degree in allowed for b in point.branches)
