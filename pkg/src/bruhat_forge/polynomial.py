"""
Exact integer polynomials in one variable, plus truncated power series.

All arithmetic is over Python ints, so there is no precision to lose.
Polynomials store coefficients lowest degree first with no trailing
zeros; the zero polynomial has degree -1.  The same coefficient-list
convention is reused by the truncated power-series helpers at the
bottom of the module, which exist to expand closed-form generating
functions with a sqrt(1-4t) term exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    >>> p = IntPolynomial.of(1, 2, 2, 1)
    >>> p * IntPolynomial.one()
    IntPolynomial.of(1, 2, 2, 1)
    >>> p.degree
    3
    >>> p.is_palindromic()
    True
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient")

    @staticmethod
    def of(*coeffs: int) -> IntPolynomial:
        return IntPolynomial(_trim(coeffs))

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> IntPolynomial:
        return IntPolynomial(_trim(coeffs))

    @staticmethod
    def zero() -> IntPolynomial:
        return IntPolynomial(())

    @staticmethod
    def one() -> IntPolynomial:
        return IntPolynomial((1,))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> IntPolynomial:
        return IntPolynomial.from_coeffs([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(_trim(a + b for a, b in
                                   itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(_trim(a - b for a, b in
                                   itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(_trim(out))

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_palindromic(self) -> bool:
        """Coefficient vector reads the same in both directions."""
        return self.coeffs == self.coeffs[::-1]

    def divide_exact(self, divisor: IntPolynomial) -> IntPolynomial | None:
        """Return self / divisor when the division is exact, else None."""
        if not divisor.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.coeffs:
            return IntPolynomial.zero()
        if self.degree < divisor.degree:
            return None
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        out = [0] * (self.degree - divisor.degree + 1)
        for k in range(len(out) - 1, -1, -1):
            c = rem[k + divisor.degree]
            if c % lead:
                return None
            q = c // lead
            out[k] = q
            if q:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= q * b
        if any(rem):
            return None
        return IntPolynomial(_trim(out))

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(data: dict) -> IntPolynomial:
        return IntPolynomial.from_coeffs(data["coeffs"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPolynomial.of{self.coeffs}"


def q_integer(r: int) -> IntPolynomial:
    """The q-analogue 1 + q + ... + q^(r-1); q_integer(0) is 0.

    >>> str(q_integer(3))
    '1 + q + q^2'
    """
    if r < 0:
        raise ValueError("q_integer of negative argument")
    return IntPolynomial.from_coeffs([1] * r)


def q_factorial_product(degrees: Sequence[int]) -> IntPolynomial:
    """Product of q-integers [m+1]_q over the given degrees m."""
    out = IntPolynomial.one()
    for m in degrees:
        out = out * q_integer(m + 1)
    return out


# --- truncated power series (plain coefficient lists, length N) -----------

def series_from_poly(poly: IntPolynomial, n: int) -> list[int]:
    return [poly.coeff(k) for k in range(n)]


def series_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = min(len(a), len(b))
    out = [0] * n
    for i in range(n):
        if a[i]:
            for j in range(n - i):
                out[i + j] += a[i] * b[j]
    return out


def series_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [x + y for x, y in zip(a, b)]


def series_scale(a: Sequence[int], c: int) -> list[int]:
    return [c * x for x in a]


def series_div(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Divide truncated series; the denominator needs constant term +-1.

    With a unit constant term the quotient stays integral, which is the
    only case the generating-function work ever needs.
    """
    if not den or den[0] not in (1, -1):
        raise ValueError("series division needs a unit constant term")
    n = min(len(num), len(den))
    out = [0] * n
    for k in range(n):
        acc = num[k]
        for j in range(1, k + 1):
            acc -= den[j] * out[k - j]
        out[k] = acc * den[0]
    return out


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def sqrt_one_minus_4t(n: int) -> list[int]:
    """Taylor coefficients of sqrt(1-4t); integral since
    sqrt(1-4t) = 1 - 2t*Cat(t) with Cat the Catalan series.

    >>> sqrt_one_minus_4t(5)
    [1, -2, -2, -4, -10]
    """
    out = [0] * n
    if n > 0:
        out[0] = 1
    for k in range(1, n):
        out[k] = -2 * catalan_number(k - 1)
    return out


if __name__ == "__main__":
    import doctest
    doctest.testmod()
