"""Exact linear algebra over GF(2): words, codes, duals, cosets, enumerators.

Words are immutable bitmasks (bit i = coordinate i) of length at most 128,
so inner products and weights are single popcounts.  Codes are kept in
reduced row-echelon form with strictly increasing pivot columns; since the
RREF of a row space is unique, two codes are equal as sets exactly when
their generator tuples compare equal.  Exhaustive enumeration is capped at
dimension 28; the weight enumerator falls back to the MacWilliams transform
of the dual when the primal side is too big.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .errors import CapacityError, DimensionError, ParseError

MAX_LENGTH = 128

#: Largest dimension enumerated exhaustively (2^28 ~ 2.7e8 words).
ENUM_MAX_DIM = 28


@dataclass(frozen=True)
class BinaryWord:
    """Fixed-length vector over GF(2), stored as an integer bitmask."""

    length: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.length <= MAX_LENGTH:
            raise DimensionError(
                f"word length must be in 1..{MAX_LENGTH}, got {self.length}"
            )
        if not 0 <= self.mask < (1 << self.length):
            raise DimensionError(
                f"mask 0x{self.mask:x} does not fit in {self.length} bits"
            )

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.length))

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise DimensionError(f"bit index {i} out of range for length {self.length}")
        return (self.mask >> i) & 1

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        if not isinstance(other, BinaryWord):
            return NotImplemented
        if other.length != self.length:
            raise DimensionError(
                f"cannot add words of lengths {self.length} and {other.length}"
            )
        return BinaryWord(self.length, self.mask ^ other.mask)

    def __str__(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.length))

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"


def zero_word(length: int) -> BinaryWord:
    return BinaryWord(length, 0)


def word_from_string(s: str) -> BinaryWord:
    """Parse a '0'/'1' string; character i becomes coordinate i."""
    if not s:
        raise ParseError("empty word")
    if len(s) > MAX_LENGTH:
        raise ParseError(f"word longer than {MAX_LENGTH} bits ({len(s)})")
    mask = 0
    for i, ch in enumerate(s):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise ParseError(f"invalid character {ch!r} at position {i}")
    return BinaryWord(len(s), mask)


def word_from_support(length: int, positions: Iterable[int]) -> BinaryWord:
    """Word with ones exactly at the given coordinate positions."""
    mask = 0
    for p in positions:
        if not 0 <= p < length:
            raise DimensionError(f"position {p} out of range for length {length}")
        mask |= 1 << p
    return BinaryWord(length, mask)


def inner_product(a: BinaryWord, b: BinaryWord) -> int:
    """Standard bilinear form <a,b> = sum a_i b_i mod 2."""
    if a.length != b.length:
        raise DimensionError(
            f"inner product needs equal lengths, got {a.length} and {b.length}"
        )
    return (a.mask & b.mask).bit_count() & 1


def _pivot(mask: int) -> int:
    """Index of the leading (lowest-coordinate) one."""
    return (mask & -mask).bit_length() - 1


def _reduce_mask(mask: int, rows: Iterable[int]) -> int:
    # rows in RREF with increasing pivots: one pass suffices.
    for g in rows:
        if (mask >> _pivot(g)) & 1:
            mask ^= g
    return mask


def _rref(masks: Iterable[int]) -> list[int]:
    """Reduced row-echelon basis (increasing pivots) of the span of masks."""
    basis: list[int] = []
    for m in masks:
        m = _reduce_mask(m, basis)
        if m == 0:
            continue
        p = _pivot(m)
        basis = [g ^ m if (g >> p) & 1 else g for g in basis]
        basis.append(m)
        basis.sort(key=_pivot)
    return basis


class LinearCode:
    """Binary linear code held in canonical reduced row-echelon form.

    Equality is canonical-form equality, which coincides with set equality
    of the codes.  The empty generator tuple denotes the zero code.
    """

    __slots__ = ("length", "generators")

    def __init__(self, length: int, rows: Iterable[BinaryWord | int] = ()):
        if not 1 <= length <= MAX_LENGTH:
            raise DimensionError(
                f"code length must be in 1..{MAX_LENGTH}, got {length}"
            )
        masks = []
        for row in rows:
            if isinstance(row, BinaryWord):
                if row.length != length:
                    raise DimensionError(
                        f"generator of length {row.length} in code of length {length}"
                    )
                masks.append(row.mask)
            else:
                if not 0 <= row < (1 << length):
                    raise DimensionError(
                        f"generator mask 0x{row:x} does not fit in {length} bits"
                    )
                masks.append(row)
        object.__setattr__(self, "length", length)
        object.__setattr__(
            self,
            "generators",
            tuple(BinaryWord(length, m) for m in _rref(masks)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("LinearCode is immutable")

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.dim

    def generator_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and self.generator_masks() == other.generator_masks()

    def __hash__(self) -> int:
        return hash((self.length, self.generator_masks()))

    def __contains__(self, w: BinaryWord) -> bool:
        return contains(self, w)

    def __repr__(self) -> str:
        return f"LinearCode(n={self.length}, k={self.dim})"


def code_from_generators(rows: Iterable[BinaryWord], length: int | None = None) -> LinearCode:
    """Span of the given rows; dependent and zero rows are dropped.

    ``length`` is only needed for an empty row list (the zero code).
    """
    rows = list(rows)
    if rows:
        n = rows[0].length
        if length is not None and length != n:
            raise DimensionError(f"stated length {length} but rows have length {n}")
    elif length is None:
        raise DimensionError("cannot infer length of the zero code; pass length=")
    else:
        n = length
    return LinearCode(n, rows)


def full_space(length: int) -> LinearCode:
    return LinearCode(length, [1 << i for i in range(length)])


def dual(c: LinearCode) -> LinearCode:
    """Orthogonal complement: all words pairing to zero with every generator."""
    n = c.length
    gens = c.generator_masks()
    pivots = [_pivot(g) for g in gens]
    free = sorted(set(range(n)) - set(pivots))
    rows = []
    for f in free:
        m = 1 << f
        for g, p in zip(gens, pivots):
            if (g >> f) & 1:
                m |= 1 << p
        rows.append(m)
    d = LinearCode(n, rows)
    assert d.dim == n - c.dim
    return d


def contains(c: LinearCode, w: BinaryWord) -> bool:
    """True iff w reduces to zero against the generators of c."""
    if w.length != c.length:
        raise DimensionError(
            f"word of length {w.length} against code of length {c.length}"
        )
    return _reduce_mask(w.mask, c.generator_masks()) == 0


def extend(c: LinearCode, delta: BinaryWord) -> LinearCode:
    """Span of c and delta; dimension grows by one exactly when delta is new."""
    if delta.length != c.length:
        raise DimensionError(
            f"word of length {delta.length} against code of length {c.length}"
        )
    return LinearCode(c.length, list(c.generator_masks()) + [delta.mask])


def is_even(c: LinearCode) -> bool:
    """All codewords of even weight (equivalent to all generators even)."""
    return all(g.weight % 2 == 0 for g in c.generators)


def _check_enum_capacity(c: LinearCode, what: str) -> None:
    if c.dim > ENUM_MAX_DIM:
        raise CapacityError(
            f"{what} would enumerate 2^{c.dim} words (cap is 2^{ENUM_MAX_DIM})"
        )


def coset(c: LinearCode, delta: BinaryWord) -> Iterator[BinaryWord]:
    """Lazily yield delta + w for every codeword w of c (Gray-code order)."""
    if delta.length != c.length:
        raise DimensionError(
            f"word of length {delta.length} against code of length {c.length}"
        )
    _check_enum_capacity(c, "coset materialization")
    gens = c.generator_masks()

    def walk():
        word = delta.mask
        yield BinaryWord(c.length, word)
        for i in range(1, 1 << len(gens)):
            word ^= gens[(i & -i).bit_length() - 1]
            yield BinaryWord(c.length, word)

    return walk()


def coset_weight_counts(c: LinearCode, delta: BinaryWord) -> list[int]:
    """Weight histogram of the coset delta + c (plumbing for grade counts)."""
    if delta.length != c.length:
        raise DimensionError(
            f"word of length {delta.length} against code of length {c.length}"
        )
    _check_enum_capacity(c, "coset weight scan")
    return kernels.weight_counts(c.generator_masks(), delta.mask, c.length)


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact weight distribution A_0..A_n of a linear code."""

    length: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.length + 1:
            raise DimensionError(
                f"need {self.length + 1} counts, got {len(self.counts)}"
            )
        if any(a < 0 for a in self.counts):
            raise DimensionError("negative weight count")
        if self.counts[0] != 1:
            raise DimensionError("A_0 must be 1 for a linear code")
        total = sum(self.counts)
        if total & (total - 1):
            raise DimensionError(f"counts sum to {total}, not a power of two")

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def dim(self) -> int:
        return self.size.bit_length() - 1

    def a(self, w: int) -> int:
        return self.counts[w]

    def min_nonzero_weight(self) -> int | None:
        for w in range(1, self.length + 1):
            if self.counts[w]:
                return w
        return None

    def __str__(self) -> str:
        terms = [(w, a) for w, a in enumerate(self.counts) if a]
        return format_terms(terms, "w")


def format_terms(terms: list[tuple[int, int]], var: str) -> str:
    """Render integer-exponent terms like ``1 + 30*w^8 + w^16``."""
    if not terms:
        return "0"
    parts = []
    for i, (e, coeff) in enumerate(terms):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if i == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def weight_enumerator(c: LinearCode) -> WeightEnumerator:
    """Exact weight distribution, exhaustively or via the dual and MacWilliams."""
    n = c.length
    if c.dim <= ENUM_MAX_DIM:
        counts = kernels.weight_counts(c.generator_masks(), 0, n)
        return WeightEnumerator(n, tuple(counts))
    d = dual(c)
    if d.dim > ENUM_MAX_DIM:
        raise CapacityError(
            f"both dim {c.dim} and dual dim {d.dim} exceed the cap {ENUM_MAX_DIM}"
        )
    return macwilliams_transform(weight_enumerator(d))


def macwilliams_transform(e: WeightEnumerator) -> WeightEnumerator:
    """Weight enumerator of the dual code, by the MacWilliams identity.

    B_w = (1/|C|) * sum_v A_v * K_w(v) with the binary Krawtchouk kernel
    K_w(v) = sum_j (-1)^j C(v,j) C(n-v, w-j).  All arithmetic is exact.
    """
    n = e.length
    size = e.size
    nonzero = [(v, a) for v, a in enumerate(e.counts) if a]
    counts = []
    for w in range(n + 1):
        total = 0
        for v, a in nonzero:
            k = sum(
                (-1) ** j * math.comb(v, j) * math.comb(n - v, w - j)
                for j in range(max(0, w - (n - v)), min(v, w) + 1)
            )
            total += a * k
        q, r = divmod(total, size)
        if r:
            raise ArithmeticError(
                f"MacWilliams transform produced non-integer count at weight {w}"
            )
        counts.append(q)
    return WeightEnumerator(n, tuple(counts))
