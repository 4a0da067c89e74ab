"""Dense integer polynomials, cyclotomic polynomials, and exact char polys.

A polynomial is stored as a tuple of int coefficients, lowest degree first,
with no trailing zeros; the zero polynomial is the empty tuple. All division
is exact over the integers and raises when a remainder would be dropped,
which is what the characteristic-polynomial elimination and the cyclotomic
trial division rely on.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import InputError
from .intmat import IntMatrix, is_square


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; coeffs[i] is the coefficient of t**i."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPoly":
        return IntPoly(_trim(coeffs))

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise InputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_trim(tuple(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_trim(tuple(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(_trim(tuple(c * other for c in self.coeffs)))
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(_trim(tuple(out)))

    __rmul__ = __mul__

    def __divmod__(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder; every coefficient division must be exact."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.leading()
        dd = other.degree()
        quo = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            q, r = divmod(rem[i], lead)
            if r:
                raise InputError("polynomial division is not exact over the integers")
            quo[i - dd] = q
            for j, c in enumerate(other.coeffs):
                rem[i - dd + j] -= q * c
        return IntPoly(_trim(tuple(quo))), IntPoly(_trim(tuple(rem)))

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise InputError("polynomial division left a remainder")
        return q

    def divides(self, other: "IntPoly") -> bool:
        try:
            _, r = divmod(other, self)
        except InputError:
            return False
        return r.is_zero()

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = term if (mag == 1 and i > 0) else (str(mag) if i == 0 else f"{mag}*{term}")
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def char_poly(m: IntMatrix) -> IntPoly:
    """det(tI - m) by fraction-free (Bareiss) elimination over Z[t].

    The Bareiss exact divisions stay exact in the polynomial ring, so the
    result is the monic characteristic polynomial with integer coefficients.
    """
    if not is_square(m):
        raise InputError("characteristic polynomial of a non-square matrix")
    k = len(m)
    if k == 0:
        return IntPoly.one()
    a: list[list[IntPoly]] = [
        [IntPoly.of(-m[i][j], 1) if i == j else IntPoly.of(-m[i][j]) for j in range(k)]
        for i in range(k)
    ]
    sign = 1
    prev = IntPoly.one()
    for t in range(k - 1):
        if a[t][t].is_zero():
            swap = next((r for r in range(t + 1, k) if not a[r][t].is_zero()), None)
            if swap is None:
                return IntPoly.zero()  # cannot happen for tI - m, kept for safety
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        pivot = a[t][t]
        for i in range(t + 1, k):
            for j in range(t + 1, k):
                a[i][j] = (a[i][j] * pivot - a[i][t] * a[t][j]).exact_div(prev)
            a[i][t] = IntPoly.zero()
        prev = pivot
    result = a[k - 1][k - 1]
    return result * sign


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of t^d - 1."""
    if d < 1:
        raise InputError("cyclotomic index must be positive")
    poly = IntPoly(tuple([-1] + [0] * (d - 1) + [1]))
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic(e))
    return poly


@functools.lru_cache(maxsize=None)
def euler_phi(d: int) -> int:
    n, result, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def cyclotomic_indices_up_to_degree(bound: int) -> list[int]:
    """All d with euler_phi(d) <= bound; phi(d) >= sqrt(d/2) bounds the scan."""
    if bound <= 0:
        return []
    return [d for d in range(1, 2 * bound * bound + 2) if euler_phi(d) <= bound]
