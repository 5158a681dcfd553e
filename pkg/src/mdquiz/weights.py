"""Weight completion for parsed documents.

Every correct option in a question with k correct options is worth 100/k,
formatted with exactly 7 fractional digits. Weights are computed over exact
rationals and rounded half-to-even once at the 7th digit, so all correct
options of a question carry byte-identical strings and their sum stays
within per-option rounding error of 100.
"""

from __future__ import annotations

from dataclasses import replace
from enum import Enum
from fractions import Fraction

from .model import Question, QuizDocument

_SCALE = 10**7


class WeightPolicy(Enum):
    """How options with correct=False are weighted."""

    NONE = "none"  # wrong options weigh 0
    BALANCED = "balanced"  # wrong options weigh -100/k


def format_weight(value: Fraction | int) -> str:
    """Fixed-point decimal with exactly 7 fractional digits.

    Round-half-to-even on the exact rational; no exponent notation, leading
    ``-`` only when the rounded value is negative.
    """
    value = Fraction(value)
    scaled = abs(value.numerator) * _SCALE
    units, remainder = divmod(scaled, value.denominator)
    double = remainder * 2
    if double > value.denominator or (double == value.denominator and units % 2 == 1):
        units += 1
    sign = "-" if value < 0 and units else ""
    return f"{sign}{units // _SCALE}.{units % _SCALE:07d}"


def assign_weights(
    doc: QuizDocument, policy: WeightPolicy = WeightPolicy.NONE
) -> QuizDocument:
    """Return a copy of ``doc`` with a weight string on every option.

    Idempotent; everything except option weights is left untouched.
    """
    sections = tuple(
        replace(
            section,
            questions=tuple(_complete(question, policy) for question in section.questions),
        )
        for section in doc.sections
    )
    return replace(doc, sections=sections)


def _complete(question: Question, policy: WeightPolicy) -> Question:
    k = question.correct_count
    if k == 0:
        raise ValueError(f"question {question.ordinal} has no correct option")
    correct_weight = format_weight(Fraction(100, k))
    if policy is WeightPolicy.BALANCED:
        wrong_weight = format_weight(Fraction(-100, k))
    else:
        wrong_weight = format_weight(0)
    options = tuple(
        replace(option, weight=correct_weight if option.correct else wrong_weight)
        for option in question.options
    )
    return replace(question, options=options)
