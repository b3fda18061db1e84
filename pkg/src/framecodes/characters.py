"""Graded dimensions of Ising modules, frame modules, and code VOAs.

The three irreducible c=1/2 modules L(1/2,h), h in {0, 1/2, 1/16}, have the
classical free-fermion characters

    ch_0 + ch_{1/2}  =  prod_{k>=1} (1 + q^(k-1/2)),
    ch_0 - ch_{1/2}  =  prod_{k>=1} (1 - q^(k-1/2)),
    ch_{1/16}        =  q^(1/16) prod_{k>=1} (1 + q^k),

expanded here as exact truncated series.  The test suite certifies these
product forms against independent combinatorial oracles (subset sums over
distinct half-odd integers, partitions into distinct parts) before anything
downstream relies on them.

Characters are graded dimensions: no q^(-c/24) prefactor.  Use
``with_prefactor`` for modular-style display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING

from .errors import DomainError, ValidationError
from .gf2 import LinearCode, is_even, weight_enumerator
from .qseries import UNIT, QSeries, qs_add, qs_monomial, qs_mul, qs_pow, qs_zero

if TYPE_CHECKING:
    from .structure import FrameDecomposition

H_VACUUM = Fraction(0)
H_FERMION = Fraction(1, 2)
H_TWIST = Fraction(1, 16)

#: The three admissible coordinate weights, in display order.
ISING_WEIGHTS = (H_VACUUM, H_FERMION, H_TWIST)


def parse_ising_weight(text: str) -> Fraction:
    """Parse one of '0', '1/2', '1/16'."""
    try:
        h = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an Ising weight: {text!r}") from exc
    if h not in ISING_WEIGHTS:
        raise DomainError(f"Ising weight must be 0, 1/2 or 1/16, got {text!r}")
    return h


@dataclass(frozen=True)
class FrameModuleLabel:
    """Coordinatewise weights (h_1, ..., h_n) of an irreducible frame module."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.weights:
            raise DomainError("frame module label must have at least one coordinate")
        for i, h in enumerate(self.weights):
            if h not in ISING_WEIGHTS:
                raise DomainError(
                    f"coordinate {i} has weight {h}, not one of 0, 1/2, 1/16"
                )

    @property
    def length(self) -> int:
        return len(self.weights)

    @property
    def top_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @classmethod
    def from_string(cls, text: str) -> "FrameModuleLabel":
        return cls(tuple(parse_ising_weight(part) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.weights)


def _multiply_factor(coeffs: dict[int, int], exponent: int, sign: int, T: int) -> dict[int, int]:
    # coeffs * (1 + sign * q^exponent), truncated at T
    out = dict(coeffs)
    for e, c in coeffs.items():
        e2 = e + exponent
        if e2 <= T:
            out[e2] = out.get(e2, 0) + sign * c
    return {e: c for e, c in out.items() if c}


def _half_odd_product(sign: int, T: int) -> dict[int, int]:
    # prod_{k>=1} (1 + sign * q^(k - 1/2)) through exponent T (1/48 units)
    coeffs = {0: 1}
    e = UNIT // 2
    while e <= T:
        coeffs = _multiply_factor(coeffs, e, sign, T)
        e += UNIT
    return coeffs


def _distinct_parts_product(T: int) -> dict[int, int]:
    # prod_{k>=1} (1 + q^k) through exponent T (1/48 units)
    coeffs = {0: 1}
    e = UNIT
    while e <= T:
        coeffs = _multiply_factor(coeffs, e, 1, T)
        e += UNIT
    return coeffs


def neveu_schwarz_product(sign: int, truncation: int) -> QSeries:
    """prod_{k>=1} (1 + sign*q^(k-1/2)) truncated; the two-character identity sides."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return QSeries(truncation, _half_odd_product(sign, truncation))


@lru_cache(maxsize=None)
def _ising_character_cached(h: Fraction, truncation: int) -> QSeries:
    if h == H_TWIST:
        shift = UNIT // 16
        base = _distinct_parts_product(truncation - shift)
        return QSeries(truncation, {e + shift: c for e, c in base.items()})
    plus = _half_odd_product(1, truncation)
    minus = _half_odd_product(-1, truncation)
    sign = 1 if h == H_VACUUM else -1
    coeffs = {}
    for e in set(plus) | set(minus):
        c = plus.get(e, 0) + sign * minus.get(e, 0)
        if c:
            assert c % 2 == 0
            coeffs[e] = c // 2
    return QSeries(truncation, coeffs)


def ising_character(h: Fraction | int, truncation: int) -> QSeries:
    """Graded dimension of L(1/2,h); leading term q^h with coefficient 1."""
    h = Fraction(h)
    if h not in ISING_WEIGHTS:
        raise DomainError(f"Ising weight must be 0, 1/2 or 1/16, got {h}")
    return _ising_character_cached(h, truncation)


def frame_module_character(label: FrameModuleLabel, truncation: int) -> QSeries:
    """Product of the coordinate characters; leading exponent sum(h_i)."""
    counts = {h: 0 for h in ISING_WEIGHTS}
    for h in label.weights:
        counts[h] += 1
    result = qs_pow(ising_character(H_VACUUM, truncation), counts[H_VACUUM])
    for h in (H_FERMION, H_TWIST):
        if counts[h]:
            result = qs_mul(result, qs_pow(ising_character(h, truncation), counts[h]))
    return result


def code_voa_character(c: LinearCode, truncation: int) -> QSeries:
    """Graded dimension of the code VOA attached to an even code.

    Grouping codewords by weight turns the codeword-by-codeword sum into
    sum_w A_w * ch_{1/2}^w * ch_0^(n-w), at most n+1 series products.
    """
    if not is_even(c):
        raise ValidationError("code VOA character requires an even code")
    enum = weight_enumerator(c)
    n = c.length
    ch0 = ising_character(H_VACUUM, truncation)
    chf = ising_character(H_FERMION, truncation)
    total = qs_zero(truncation)
    for w, count in enumerate(enum.counts):
        if count == 0:
            continue
        term = qs_mul(qs_pow(chf, w), qs_pow(ch0, n - w))
        total = qs_add(total, qs_mul(qs_monomial(count, 0, truncation), term))
    return total


def frame_decomposition_character(d: "FrameDecomposition", truncation: int) -> QSeries:
    """Multiplicity-weighted sum of frame module characters."""
    total = qs_zero(truncation)
    for label, mult in d.entries:
        term = frame_module_character(label, truncation)
        total = qs_add(total, qs_mul(qs_monomial(mult, 0, truncation), term))
    return total


def with_prefactor(series: QSeries, n: int) -> QSeries:
    """Multiply by q^(-n/48), the modular prefactor q^(-c/24) for c = n/2."""
    return qs_mul(series, qs_monomial(1, -n, series.truncation))
