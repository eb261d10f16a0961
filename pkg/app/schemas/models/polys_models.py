# app/schemas/models/polys_models.py
"""
Integer polynomials as dense coefficient tuples, constant term first:
1 - 2x + x^3 is CycPoly((1, -2, 0, 1)).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from app.utility.exceptions import InvalidInputError


def _trim(coefficients: Iterable[int]) -> tuple[int, ...]:
    coefficients = tuple(coefficients)
    end = len(coefficients)
    while end >= 1 and coefficients[end - 1] == 0:
        end -= 1
    return coefficients[:end]


@dataclass(frozen=True)
class CycPoly:
    """
    A polynomial over the integers. The zero polynomial has no coefficients.

    >>> CycPoly.of(-1, 0, 1)
    CycPoly('x^2 - 1')
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def of(cls, *coefficients: int) -> CycPoly:
        return cls(coefficients)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> CycPoly:
        return cls((0,) * degree + (coefficient,))

    def deg(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate(self, x):
        return sum(c * x**i for i, c in enumerate(self.coefficients) if c != 0)

    def compose_power(self, a: int) -> CycPoly:
        """Substitute x -> x^a."""
        result = [0] * (a * self.deg() + 1) if self.coefficients else []
        for i, c in enumerate(self.coefficients):
            result[a * i] = c
        return CycPoly(result)

    def negate_variable(self) -> CycPoly:
        """Substitute x -> -x."""
        return CycPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients))

    def __add__(self, other: int | CycPoly) -> CycPoly:
        coefficients = (other,) if isinstance(other, int) else other.coefficients
        return CycPoly(c + d for c, d in itertools.zip_longest(self.coefficients, coefficients, fillvalue=0))

    def __sub__(self, other: int | CycPoly) -> CycPoly:
        coefficients = (other,) if isinstance(other, int) else other.coefficients
        return CycPoly(c - d for c, d in itertools.zip_longest(self.coefficients, coefficients, fillvalue=0))

    def __neg__(self) -> CycPoly:
        return CycPoly(-c for c in self.coefficients)

    def __mul__(self, other: int | CycPoly) -> CycPoly:
        if isinstance(other, int):
            return CycPoly(c * other for c in self.coefficients)
        if not self.coefficients or not other.coefficients:
            return CycPoly()
        result = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for (i, c), (j, d) in itertools.product(enumerate(self.coefficients), enumerate(other.coefficients)):
            result[i + j] += c * d
        return CycPoly(result)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycPoly:
        if n < 0:
            raise ValueError("Cannot invert a polynomial.")
        result = CycPoly.of(1)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, divisor: CycPoly) -> tuple[CycPoly, CycPoly]:
        """
        Exact long division over the integers; the divisor must be monic up to a
        unit or divide every leading coefficient met on the way.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quotient = [0] * max(len(self.coefficients) - len(divisor.coefficients) + 1, 0)
        remainder = list(self.coefficients)
        lead = divisor.coefficients[-1]
        while len(remainder) >= len(divisor.coefficients) and remainder:
            t, rest = divmod(remainder[-1], lead)
            if rest != 0:
                raise ValueError(f"{remainder[-1]} is not divisible by {lead}")
            shift = len(remainder) - len(divisor.coefficients)
            quotient[shift] = t
            for k, c in enumerate(divisor.coefficients):
                remainder[shift + k] -= t * c
            remainder = list(_trim(remainder))
        return CycPoly(quotient), CycPoly(remainder)

    def __floordiv__(self, divisor: CycPoly) -> CycPoly:
        quotient, remainder = divmod(self, divisor)
        if not remainder.is_zero():
            raise ValueError(f"{self} is not divisible by {divisor}: remainder {remainder}")
        return quotient

    def __repr__(self):
        if not self.coefficients:
            return "CycPoly('0')"
        parts = []
        for i, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            coefficient = "1" if (i == 0 and term == "") else "" if abs(c) == 1 else f"{abs(c)}"
            parts.append(sign + coefficient + term)
        return f"CycPoly('{''.join(parts)}')"


@dataclass(frozen=True)
class CycFactorization:
    """x^x_power times a product of cyclotomic polynomials Φ_e^multiplicity."""

    x_power: int = 0
    factors: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        counts = Counter()
        for index, multiplicity in self.factors:
            if index < 1 or multiplicity < 0:
                raise InvalidInputError(f"invalid cyclotomic factor {(index, multiplicity)}")
            counts[index] += multiplicity
        object.__setattr__(self, "factors", tuple(sorted((e, m) for e, m in counts.items() if m > 0)))

    @classmethod
    def from_indices(cls, indices: Iterable[int], x_power: int = 0) -> CycFactorization:
        return cls(x_power, tuple(Counter(indices).items()))

    @property
    def indices(self) -> frozenset[int]:
        return frozenset(e for e, _ in self.factors)

    def multiplicity(self, index: int) -> int:
        return dict(self.factors).get(index, 0)

    def __mul__(self, other: CycFactorization) -> CycFactorization:
        return CycFactorization(self.x_power + other.x_power, self.factors + other.factors)

    def is_trivial(self) -> bool:
        return self.x_power == 0 and not self.factors

    def __str__(self) -> str:
        parts = [] if not self.x_power else ["x" if self.x_power == 1 else f"x^{self.x_power}"]
        parts += [f"Φ{e}" + (f"^{m}" if m > 1 else "") for e, m in self.factors]
        return "·".join(parts) if parts else "1"
