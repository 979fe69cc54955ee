"""
Exact Laurent polynomials in Z[t, t^-1].

``LaurentPoly(coeffs, min_degree)`` stands for
``sum(c * t**(min_degree + i) for i, c in enumerate(coeffs))``. Instances
are kept trimmed (no zero at either end), so dataclass equality is
mathematical equality.

Large products and exact quotients go through Kronecker substitution:
coefficients are packed into one integer at t = 2**B with B chosen from a
rigorous coefficient bound, the work is done by Python's big-integer
arithmetic, and the digits are unpacked again. Every exact division is
confirmed by multiplying back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# below this size schoolbook multiplication wins
_KRONECKER_THRESHOLD = 24


class InexactDivisionError(ArithmeticError):
    pass


def _trim(coeffs: Sequence[int], min_degree: int) -> tuple[tuple[int, ...], int]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return (), 0
    return tuple(coeffs[lo:hi]), min_degree + lo


def _digit_bits(bound: int) -> int:
    # digits must satisfy |c| < 2**(B-1); keep B byte-aligned for to_bytes
    bits = bound.bit_length() + 2
    return (bits + 7) // 8 * 8


def _pack(coeffs: Sequence[int], bits: int) -> int:
    nbytes = bits // 8
    pos = bytearray()
    neg = bytearray()
    for c in coeffs:
        if c >= 0:
            pos += c.to_bytes(nbytes, "little")
            neg += bytes(nbytes)
        else:
            pos += bytes(nbytes)
            neg += (-c).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, length: int, bits: int) -> list[int]:
    nbytes = bits // 8
    half = 1 << (bits - 1)
    offset = _pack([half] * length, bits)
    shifted = value + offset
    if shifted < 0 or shifted.bit_length() > bits * length:
        raise OverflowError("digit overflow while unpacking")
    raw = shifted.to_bytes(nbytes * length, "little")
    return [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        for i in range(length)
    ]


def _mul_coeffs(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_THRESHOLD:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = _digit_bits(bound)
    return _unpack(_pack(a, bits) * _pack(b, bits), len(a) + len(b) - 1, bits)


def _long_division(num: list[int], den: Sequence[int]) -> list[int]:
    # exact division in Z[t]; den[0] is the constant term
    num = list(num)
    lead = den[-1]
    dq = len(num) - len(den) + 1
    quot = [0] * dq
    for k in range(dq - 1, -1, -1):
        top = num[k + len(den) - 1]
        if top % lead:
            raise InexactDivisionError("leading coefficient does not divide")
        c = top // lead
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num):
        raise InexactDivisionError("nonzero remainder")
    return quot


def _div_coeffs(num: Sequence[int], den: Sequence[int]) -> list[int]:
    dq = len(num) - len(den) + 1
    if dq <= 0:
        raise InexactDivisionError("divisor has larger degree span than dividend")
    if len(den) < _KRONECKER_THRESHOLD or dq < _KRONECKER_THRESHOLD:
        return _long_division(list(num), den)
    # a factor of num has coefficients below 2**deg * ||num||_2 (Mignotte)
    norm2 = sum(c * c for c in num)
    bound = (1 << dq) * (math.isqrt(norm2) + 1)
    bits = _digit_bits(bound)
    nv, dv = _pack(num, bits), _pack(den, bits)
    qv, rem = divmod(nv, dv)
    if rem:
        raise InexactDivisionError("nonzero remainder")
    quot = _unpack(qv, dq, bits)
    if _mul_coeffs(quot, den) != list(num):
        raise InexactDivisionError("quotient check failed")
    return quot


@dataclass(frozen=True)
class LaurentPoly:
    coeffs: tuple[int, ...] = ()
    min_degree: int = 0

    def __post_init__(self) -> None:
        coeffs, lo = _trim(tuple(int(c) for c in self.coeffs), self.min_degree)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "min_degree", lo)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        return cls((c,), k)

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls((1,), 1)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(tuple(terms.get(k, 0) for k in range(lo, hi + 1)), lo)

    # -- basic data -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {self.min_degree + i: c for i, c in enumerate(self.coeffs) if c}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations ------------------------------------------------------
    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple(-c for c in self.coeffs), self.min_degree)

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs, self.min_degree - lo):
            out[i] += c
        for i, c in enumerate(other.coeffs, other.min_degree - lo):
            out[i] += c
        return LaurentPoly(tuple(out), lo)

    __radd__ = __add__

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(tuple(c * other for c in self.coeffs), self.min_degree)
        return LaurentPoly(
            tuple(_mul_coeffs(self.coeffs, other.coeffs)),
            self.min_degree + other.min_degree,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.coeffs) != 1 or abs(self.coeffs[0]) != 1:
                raise ValueError("only units can be raised to negative powers")
            return LaurentPoly((self.coeffs[0] ** -k,), self.min_degree * k)
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.min_degree + k)

    def divide_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient in Z[t, t^-1]; raises InexactDivisionError on a remainder."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return self
        quot = _div_coeffs(self.coeffs, other.coeffs)
        return LaurentPoly(tuple(quot), self.min_degree - other.min_degree)

    # -- evaluation and normalization -----------------------------------------
    def __call__(self, value: int | Fraction) -> int | Fraction:
        if value == 0 and self.min_degree < 0:
            raise ZeroDivisionError("negative powers at t = 0")
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        if self.min_degree >= 0:
            return acc * value ** self.min_degree
        return acc / Fraction(value) ** (-self.min_degree)

    def reflect(self) -> LaurentPoly:
        """Substitute t -> t^-1."""
        return LaurentPoly(self.coeffs[::-1], -self.max_degree)

    def normalize_alexander(self) -> LaurentPoly:
        """Multiply by the unit +-t^m that makes the lowest degree 0 and the constant term positive."""
        if not self.coeffs:
            return self
        sign = 1 if self.coeffs[0] > 0 else -1
        return LaurentPoly(tuple(sign * c for c in self.coeffs), 0)

    # -- I/O ------------------------------------------------------------------
    def to_json(self) -> dict:
        return {"min_degree": self.min_degree, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls(tuple(int(c) for c in data["coeffs"]), int(data["min_degree"]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in sorted(self.terms().items()):
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def determinant(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Z[t, t^-1]."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return LaurentPoly.one()
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = num.divide_exact(prev)
            m[i][k] = LaurentPoly.zero()
        prev = piv
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
