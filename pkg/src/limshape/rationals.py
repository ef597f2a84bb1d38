"""Exact rational parsing/printing used by JSON interfaces and the CLI.

Rationals travel as "num/den" strings (plain integers allowed); internally
everything is a `fractions.Fraction`, which already stores lowest terms with
a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Rational", "parse_rational", "format_rational"]

Rational = Fraction


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {text!r}: {exc}") from None


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
