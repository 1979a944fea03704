"""Exact arithmetic in the cyclotomic integers Z[zeta_m].

Values are stored as coefficient vectors in Z[x]/(x^m - 1), so a product is a
cyclic convolution.  The representation is not canonical (1 + z + z^2 is zero
for m = 3); equality, zero tests and integrality tests reduce modulo the
cyclotomic polynomial Phi_m first.
"""
from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Optional, Sequence

from mixcayley.errors import StructuralError

__all__ = [
    "CycloInt",
    "cyclo_from_root",
    "cyclo_add",
    "cyclo_mul",
    "cyclo_neg",
    "cyclo_conj",
    "cyclo_lift",
    "cyclotomic_polynomial",
    "is_rational_integer",
    "perfect_square_integer",
    "poly_mul",
    "poly_divmod",
]


# -- integer polynomials (low degree first) --------------------------------

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial; exact over Z."""
    den = _trim(den)
    if den[-1] != 1:
        raise StructuralError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [0], _trim(rem)
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                rem[k - dd + j] -= c * den[j]
    return _trim(quot), _trim(rem[:dd] or [0])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Phi_m as a coefficient tuple, lowest degree first.

    Computed as (x^m - 1) divided exactly by Phi_d for every proper divisor d.
    """
    if m < 1:
        raise StructuralError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod(num, cyclotomic_polynomial(d))
            if any(rem):
                raise ArithmeticError(f"inexact division computing Phi_{m}")
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # Row t holds x^t mod Phi_m as sparse (index, coeff) pairs.
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple((i, c) for i, c in enumerate(cur) if c))
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for i in range(deg):
                cur[i] -= lead * phi[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _roots(m: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * math.pi * t / m) for t in range(m))


class CycloInt:
    """An element of Z[zeta_m] held as coefficients of 1, z, ..., z^(m-1)."""

    __slots__ = ("order", "coeffs", "_red")

    def __init__(self, order: int, coeffs: Sequence[int]):
        if len(coeffs) != order:
            raise StructuralError(
                f"expected {order} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = tuple(coeffs)
        self._red = None

    # constructors
    @classmethod
    def zero(cls, m: int) -> "CycloInt":
        return cls(m, (0,) * m)

    @classmethod
    def integer(cls, m: int, n: int) -> "CycloInt":
        c = [0] * m
        c[0] = n
        return cls(m, c)

    @classmethod
    def root(cls, m: int, t: int) -> "CycloInt":
        c = [0] * m
        c[t % m] = 1
        return cls(m, c)

    @classmethod
    def from_exponents(cls, m: int, exponents) -> "CycloInt":
        """Sum of zeta_m^t over an iterable of exponents (with repetition)."""
        c = [0] * m
        for t in exponents:
            c[t % m] += 1
        return cls(m, c)

    # ring structure
    def _coerce(self, other):
        if isinstance(other, CycloInt):
            if other.order != self.order:
                raise StructuralError(
                    f"order mismatch: {self.order} vs {other.order}; lift first")
            return other
        if isinstance(other, int):
            return CycloInt.integer(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloInt(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloInt(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return CycloInt(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self.order
        out = [0] * m
        rhs = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in rhs:
                    out[(i + j) % m] += a * b
        return CycloInt(m, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise StructuralError("negative powers are not supported")
        result = CycloInt.integer(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def times_root(self, t: int) -> "CycloInt":
        """Multiply by zeta_m^t (a cyclic shift of the coefficients)."""
        m = self.order
        t %= m
        if not t:
            return self
        c = self.coeffs
        return CycloInt(m, c[m - t:] + c[:m - t])

    def times_i(self) -> "CycloInt":
        if self.order % 4:
            raise StructuralError(f"i is not in Z[zeta_{self.order}]")
        return self.times_root(self.order // 4)

    def conj(self) -> "CycloInt":
        c = self.coeffs
        return CycloInt(self.order, (c[0],) + c[:0:-1])

    def lift(self, m2: int) -> "CycloInt":
        if m2 % self.order:
            raise StructuralError(f"{m2} is not a multiple of {self.order}")
        k = m2 // self.order
        out = [0] * m2
        for t, a in enumerate(self.coeffs):
            out[t * k] = a
        return CycloInt(m2, out)

    # canonical tests
    def reduced(self) -> tuple[int, ...]:
        """Coefficients of the remainder modulo Phi_m (length phi(m))."""
        if self._red is None:
            table = _reduction_table(self.order)
            out = [0] * (len(cyclotomic_polynomial(self.order)) - 1)
            for t, a in enumerate(self.coeffs):
                if a:
                    for i, c in table[t]:
                        out[i] += a * c
            self._red = tuple(out)
        return self._red

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other):
        if isinstance(other, int):
            return is_rational_integer(self) == other
        if not isinstance(other, CycloInt):
            return NotImplemented
        if other.order != self.order:
            m = math.lcm(self.order, other.order)
            return self.lift(m) == other.lift(m)
        return (self - other).is_zero()

    def __hash__(self):
        # equality crosses orders (via lifting), so only an order-free
        # invariant may be hashed; rational integers hash like ints
        n = is_rational_integer(self)
        if n is not None:
            return hash(n)
        return hash(CycloInt)

    def __complex__(self):
        roots = _roots(self.order)
        return sum((a * roots[t] for t, a in enumerate(self.coeffs) if a), 0j)

    def numeric(self) -> complex:
        return complex(self)

    def __repr__(self):
        terms = []
        for t, a in enumerate(self.coeffs):
            if a:
                terms.append(str(a) if t == 0 else f"{a}·z^{t}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (order {self.order})"

    def pretty(self) -> str:
        """Short exact rendering: an integer, +-z^t, or the coefficient form."""
        n = is_rational_integer(self)
        if n is not None:
            return str(n)
        nz = [(t, a) for t, a in enumerate(self.coeffs) if a]
        if len(nz) == 1 and abs(nz[0][1]) == 1:
            sign = "-" if nz[0][1] < 0 else ""
            return f"{sign}z{self.order}^{nz[0][0]}"
        return repr(self).rsplit(" (order", 1)[0]


# -- functional surface ------------------------------------------------------

def cyclo_from_root(m: int, t: int) -> CycloInt:
    if not 0 <= t < m:
        raise StructuralError(f"exponent {t} out of range for order {m}")
    return CycloInt.root(m, t)


def cyclo_add(x: CycloInt, y: CycloInt) -> CycloInt:
    return x + y


def cyclo_mul(x: CycloInt, y: CycloInt) -> CycloInt:
    return x * y


def cyclo_neg(x: CycloInt) -> CycloInt:
    return -x


def cyclo_conj(x: CycloInt) -> CycloInt:
    return x.conj()


def cyclo_lift(x: CycloInt, m2: int) -> CycloInt:
    return x.lift(m2)


def is_rational_integer(x: CycloInt) -> Optional[int]:
    """Return n if x equals the rational integer n, else None."""
    red = x.reduced()
    if any(red[1:]):
        return None
    return red[0]


def perfect_square_integer(x: CycloInt) -> Optional[int]:
    """Return the nonnegative integer root if x is a perfect square in Z."""
    n = is_rational_integer(x)
    if n is None or n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None
