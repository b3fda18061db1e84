"""Exact truncated q-series on the 1/48 exponent grid.

Exponents are integers in units of 1/48, the common refinement of the 1/16
conformal-weight grid and the q^(-n/48) modular prefactor grid.  Coefficients
are Python integers, so nothing ever overflows or rounds.  A series knows its
truncation order; terms beyond it are dropped and asking for them is an
error, since their value is unknowable rather than zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import TruncationError

#: Exponent units per power of q.
UNIT = 48

#: Series may not reach below q^-2 (characters here never go below q^-1).
MIN_EXPONENT = -2 * UNIT

#: Default truncation: through q^20.
DEFAULT_TRUNCATION = 20 * UNIT


class QSeries:
    """Immutable truncated formal series sum_e c_e q^(e/48)."""

    __slots__ = ("truncation", "_coeffs")

    def __init__(self, truncation: int, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c == 0:
                    continue
                if e > truncation:
                    raise TruncationError(
                        f"exponent {e} exceeds truncation order {truncation}"
                    )
                if e < MIN_EXPONENT:
                    raise TruncationError(
                        f"exponent {e} below the floor {MIN_EXPONENT} (q^-2)"
                    )
                clean[e] = c
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return tuple(sorted(self._coeffs.items()))

    def coefficient(self, e: int) -> int:
        if e > self.truncation:
            raise TruncationError(
                f"coefficient at {e} is beyond truncation order {self.truncation}"
            )
        return self._coeffs.get(e, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def min_exponent(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    def truncated(self, order: int) -> "QSeries":
        """Forget all terms above a smaller truncation order."""
        if order > self.truncation:
            raise TruncationError(
                f"cannot extend truncation {self.truncation} to {order}"
            )
        return QSeries(order, {e: c for e, c in self._coeffs.items() if e <= order})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.truncation == other.truncation and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.truncation, tuple(sorted(self._coeffs.items()))))

    def __add__(self, other: "QSeries") -> "QSeries":
        return qs_add(self, other)

    def __mul__(self, other: "QSeries") -> "QSeries":
        return qs_mul(self, other)

    def __pow__(self, m: int) -> "QSeries":
        return qs_pow(self, m)

    def __str__(self) -> str:
        return render_series(self)

    def __repr__(self) -> str:
        return f"QSeries(T={self.truncation}, {render_series(self)})"


def qs_zero(truncation: int) -> QSeries:
    return QSeries(truncation)


def qs_one(truncation: int) -> QSeries:
    return QSeries(truncation, {0: 1})


def qs_monomial(coeff: int, exponent: int, truncation: int) -> QSeries:
    return QSeries(truncation, {exponent: coeff})


def _require_same_order(a: QSeries, b: QSeries) -> None:
    if a.truncation != b.truncation:
        raise TruncationError(
            f"truncation orders differ: {a.truncation} vs {b.truncation}"
        )


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    _require_same_order(a, b)
    coeffs = dict(a._coeffs)
    for e, c in b._coeffs.items():
        coeffs[e] = coeffs.get(e, 0) + c
    return QSeries(a.truncation, coeffs)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product; terms beyond the shared truncation order are dropped."""
    _require_same_order(a, b)
    T = a.truncation
    bterms = sorted(b._coeffs.items())
    coeffs: dict[int, int] = {}
    for ea, ca in a._coeffs.items():
        for eb, cb in bterms:
            e = ea + eb
            if e > T:
                break
            coeffs[e] = coeffs.get(e, 0) + ca * cb
    return QSeries(T, coeffs)


def qs_pow(a: QSeries, m: int) -> QSeries:
    """Power by repeated squaring; a^0 is the constant 1."""
    if m < 0:
        raise ValueError("negative powers of a truncated series are not defined")
    result = qs_one(a.truncation)
    square = a
    while m:
        if m & 1:
            result = qs_mul(result, square)
        m >>= 1
        if m:
            square = qs_mul(square, square)
    return result


def coefficient_at(a: QSeries, e: int) -> int:
    """Stored coefficient at exponent e (in 1/48 units), zero if absent."""
    return a.coefficient(e)


def _format_power(e: int) -> str:
    frac = Fraction(e, UNIT)
    if frac.denominator == 1:
        n = frac.numerator
        if n == 1:
            return "q"
        return f"q^{n}"
    if frac < 0:
        return f"q^(-{-frac.numerator}/{frac.denominator})"
    return f"q^({frac.numerator}/{frac.denominator})"


def render_series(s: QSeries) -> str:
    """Terms in increasing exponent, exponents as reduced fractions."""
    terms = s.terms()
    if not terms:
        return "0"
    parts = []
    for i, (e, coeff) in enumerate(terms):
        mag = abs(coeff)
        if e == 0:
            body = str(mag)
        else:
            power = _format_power(e)
            body = power if mag == 1 else f"{mag}*{power}"
        if i == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)


def series_from_q_coeffs(coeffs: Iterable[int], truncation: int) -> QSeries:
    """Build a series from integer-grade coefficients c_0, c_1, ... (testing aid)."""
    return QSeries(
        truncation,
        {UNIT * i: c for i, c in enumerate(coeffs) if UNIT * i <= truncation},
    )
