"""Sparse exact polynomials in one variable over the rationals.

Coefficients are `fractions.Fraction`; exponents are non-negative
integers.  Construction drops zero coefficients and rejects negative
exponents, so any sequence of ring operations stays in normal form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Union

Rational = Union[int, Fraction]


class NegativeExponent(ValueError):
    """A monomial with a negative exponent survived into a polynomial."""


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or plain integer strings."""
    return Fraction(text.strip())


def format_rational(value: Rational) -> str:
    """Render exactly: integers bare, otherwise "p/q"."""
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


class ExactPolynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, Rational]] = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if e < 0:
                    raise NegativeExponent(f"exponent {e} with coefficient {c}")
                clean[int(e)] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls()

    @classmethod
    def monomial(cls, exponent: int, coefficient: Rational = 1) -> "ExactPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "ExactPolynomial":
        """Histogram {value: multiplicity} -> sum of multiplicity * t^value."""
        return cls(dict(counts))

    def coefficient(self, exponent: int) -> Fraction:
        return self._coeffs.get(exponent, Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    @property
    def degree(self) -> Optional[int]:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        merged = dict(self._coeffs)
        for e, c in other._coeffs.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return ExactPolynomial(merged)

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        merged = dict(self._coeffs)
        for e, c in other._coeffs.items():
            merged[e] = merged.get(e, Fraction(0)) - c
        return ExactPolynomial(merged)

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return ExactPolynomial(out)

    def scaled(self, factor: Rational) -> "ExactPolynomial":
        f = Fraction(factor)
        return ExactPolynomial({e: c * f for e, c in self._coeffs.items()})

    def shifted(self, amount: int) -> "ExactPolynomial":
        """Multiply by t**amount; negative shifts must not underflow."""
        return ExactPolynomial({e + amount: c for e, c in self._coeffs.items()})

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial({e - 1: c * e for e, c in self._coeffs.items() if e > 0})

    def evaluate(self, x: Rational) -> Fraction:
        x = Fraction(x)
        return sum((c * x ** e for e, c in self._coeffs.items()), Fraction(0))

    def to_json(self) -> dict:
        return {"coeffs": {str(e): format_rational(c) for e, c in self.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "ExactPolynomial":
        return cls({int(e): parse_rational(c) for e, c in data["coeffs"].items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        return f"ExactPolynomial({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            coeff = format_rational(c if c > 0 or not parts else -c)
            if e == 0:
                term = coeff
            else:
                var = "t" if e == 1 else f"t^{e}"
                term = var if coeff == "1" else f"{coeff}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)
