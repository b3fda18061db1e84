"""Structure-code pairs (C, D) of framed VOAs and their validity axioms.

A frame of length n carries a pair of even binary codes with C inside the
dual of D; the pair is holomorphic exactly when C equals that dual.  The
tau-word of a frame module marks its 1/16 coordinates; the words occurring
in a decomposition must land in D, and the doubled labels of the tau-word-
zero part must land in C.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gf2
from .characters import H_FERMION, H_TWIST, FrameModuleLabel
from .errors import DimensionError, InconsistencyError, ValidationError
from .gf2 import BinaryWord, LinearCode, inner_product

#: Nonzero tau-words whose least conceivable top weight wt/16 does not
#: exceed one; only multiplicity data could rule their sectors out of V_1.
SUSPICIOUS_WEIGHT_CAP = 16


class StructureCodes:
    """A frame length n with candidate structure codes C and D."""

    __slots__ = ("length", "c", "d")

    def __init__(self, c: LinearCode, d: LinearCode):
        if c.length != d.length:
            raise DimensionError(
                f"C has length {c.length} but D has length {d.length}"
            )
        object.__setattr__(self, "length", c.length)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("StructureCodes is immutable")

    @property
    def rank(self) -> Fraction:
        """Central charge n/2 of the frame."""
        return Fraction(self.length, 2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureCodes):
            return NotImplemented
        return self.c == other.c and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.c, self.d))

    def __repr__(self) -> str:
        return f"StructureCodes(n={self.length}, dim C={self.c.dim}, dim D={self.d.dim})"


@dataclass(frozen=True)
class ValidationReport:
    """Pass/fail per axiom, plus the informational frame quantities."""

    checks: tuple[tuple[str, bool], ...]
    rank: Fraction
    dim_c: int
    dim_d: int

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.checks if not ok)


def validate(s: StructureCodes, strict: bool = False) -> ValidationReport:
    """Check the structure-code axioms; failures are reported, not raised.

    ``strict`` additionally demands every weight in D divisible by 8, a
    condition stronger than evenness that is deliberately off by default.
    """
    checks = [
        ("c_even", gf2.is_even(s.c)),
        ("d_even", gf2.is_even(s.d)),
        (
            "c_in_dual_d",
            all(
                inner_product(gc, gd) == 0
                for gc in s.c.generators
                for gd in s.d.generators
            ),
        ),
        ("n_even", s.length % 2 == 0),
    ]
    if strict:
        enum = gf2.weight_enumerator(s.d)
        checks.append(
            (
                "d_weights_div_8",
                all(a == 0 or w % 8 == 0 for w, a in enumerate(enum.counts)),
            )
        )
    return ValidationReport(
        checks=tuple(checks),
        rank=s.rank,
        dim_c=s.c.dim,
        dim_d=s.d.dim,
    )


def require_valid(s: StructureCodes) -> None:
    report = validate(s)
    if not report.passed:
        raise ValidationError(
            "structure codes fail: " + ", ".join(report.failures)
        )


def is_holomorphic(s: StructureCodes) -> bool:
    """C equals the dual of D (canonical-form equality)."""
    require_valid(s)
    return gf2.dual(s.d) == s.c


def tau_word(label: FrameModuleLabel) -> BinaryWord:
    """Binary word with ones exactly at the 1/16 coordinates."""
    return gf2.word_from_support(
        label.length, (i for i, h in enumerate(label.weights) if h == H_TWIST)
    )


def doubled_word(label: FrameModuleLabel) -> BinaryWord:
    """The word (2h_1, ..., 2h_n) of a label with no 1/16 coordinate."""
    if any(h == H_TWIST for h in label.weights):
        raise InconsistencyError("doubled word undefined on a 1/16 coordinate")
    return gf2.word_from_support(
        label.length, (i for i, h in enumerate(label.weights) if h == H_FERMION)
    )


@dataclass(frozen=True)
class V1Report:
    """Code-level evidence about the weight-one subspace.

    a2 > 0 certifies a nonzero weight-one space (each weight-2 codeword of C
    contributes a grade-1 state); a2 = 0 is necessary but not sufficient for
    it to vanish, so the nonzero tau-words that could still contribute are
    listed for inspection.
    """

    a2: int
    suspicious_tau_words: tuple[BinaryWord, ...]

    @property
    def certifies_v1_nonzero(self) -> bool:
        return self.a2 > 0


def v1_code_obstruction(s: StructureCodes) -> V1Report:
    """Count weight-2 words of C and list low-weight tau-words of D."""
    require_valid(s)
    enum = gf2.weight_enumerator(s.c)
    a2 = enum.counts[2] if s.length >= 2 else 0
    gf2._check_enum_capacity(s.d, "tau-word scan")
    masks = gf2.kernels.words_up_to_weight(
        s.d.generator_masks(), 0, min(SUSPICIOUS_WEIGHT_CAP, s.length)
    )
    suspicious = tuple(
        BinaryWord(s.length, m) for m in sorted(masks) if m != 0
    )
    return V1Report(a2=a2, suspicious_tau_words=suspicious)


@dataclass(frozen=True)
class FrameDecomposition:
    """Explicit multiset of frame module labels with multiplicities."""

    length: int
    entries: tuple[tuple[FrameModuleLabel, int], ...]

    def __post_init__(self):
        seen = set()
        for label, mult in self.entries:
            if label.length != self.length:
                raise DimensionError(
                    f"label {label} has length {label.length}, expected {self.length}"
                )
            if mult < 1:
                raise ValidationError(f"multiplicity of {label} must be positive")
            if label.weights in seen:
                raise ValidationError(f"duplicate label {label}")
            seen.add(label.weights)
            if all(h != H_TWIST for h in label.weights) and mult != 1:
                raise ValidationError(
                    f"label {label} has no 1/16 coordinate; its multiplicity must be 1"
                )


def attach_decomposition(
    s: StructureCodes, d: FrameDecomposition
) -> tuple[StructureCodes, FrameDecomposition]:
    """Verify a decomposition against (C, D) and return the validated pair.

    Every tau-word must lie in D, and every label without 1/16 coordinates
    must have its doubled word in C.
    """
    if d.length != s.length:
        raise DimensionError(
            f"decomposition length {d.length} vs frame length {s.length}"
        )
    for label, _ in d.entries:
        word = tau_word(label)
        if not gf2.contains(s.d, word):
            raise InconsistencyError(
                f"tau-word {word} of entry {label} is not in D"
            )
        if word.is_zero and not gf2.contains(s.c, doubled_word(label)):
            raise InconsistencyError(
                f"doubled word {doubled_word(label)} of entry {label} is not in C"
            )
    return s, d
