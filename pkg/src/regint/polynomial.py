"""Dense univariate polynomials with exact (int or Fraction) coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

__all__ = ["IntPolynomial", "Polynomial", "RationalPolynomial"]

Coeff = Union[int, Fraction]

_INT64_SAFE = 2**62


def _normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _trim(coeffs: Sequence[Coeff]) -> Tuple[Coeff, ...]:
    out = [_normalize(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _format_coeff(c: Coeff) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Polynomial sum_i coeffs[i] x**i; the zero polynomial has no coefficients.

    Integer coefficients stay Python ints; any Fraction with denominator 1
    is folded back to int.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        self.coeffs: Tuple[Coeff, ...] = _trim(list(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: Coeff = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def leading(self) -> Coeff:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        if self.is_integral and other.is_integral:
            bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
            if bound < _INT64_SAFE:
                prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
                return Polynomial(prod.tolist())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Long division; quotient stays integral when the divisor is monic."""
        divisor = _coerce(divisor)
        if not divisor.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        lead = dc[-1]
        dd = len(dc) - 1
        if len(rem) <= dd:
            return Polynomial(), Polynomial(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c // lead if (lead in (1, -1) and isinstance(c, int)) else Fraction(c) / lead
            quot[i - dd] = q
            for j, y in enumerate(dc):
                rem[i - dd + j] -= q * y
        return Polynomial(quot), Polynomial(rem[:dd])

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        q, r = self.divmod(divisor)
        if r.coeffs:
            raise ArithmeticError(f"division is not exact: remainder {r}")
        return q

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_text(self, var: str = "x") -> str:
        """Sparse human-readable form, highest degree first, e.g. ``x^9 - x^6 + x^3 - 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = _format_coeff(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_list(self) -> list:
        """Ascending coefficients; rationals as "p/q" strings."""
        return [c if isinstance(c, int) else _format_coeff(c) for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_list(cls, items: Sequence) -> "Polynomial":
        return cls(Fraction(c) if isinstance(c, str) else c for c in items)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


# Both names refer to the same exact class; the aliases document intent.
IntPolynomial = Polynomial
RationalPolynomial = Polynomial
