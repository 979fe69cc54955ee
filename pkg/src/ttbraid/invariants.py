"""
Reduced Burau representation and Alexander polynomials of braid closures.

This is the independent oracle for isotopy claims: it never consults the
Garside engine. Conjugate braids, and braids related by Markov
stabilization, have closures with equal Alexander polynomials.

Reduced Burau, dimension n - 1, acting by right multiplication:

    sigma_1     -> [[-t, 1], [0, 1]] (+) I
    sigma_i     -> I (+) [[1, 0, 0], [t, -t, 1], [0, 0, 1]] (+) I
    sigma_{n-1} -> I (+) [[1, 0], [t, -t]]

and for a knot closure

    Delta(t) ~ det(I - B(w)) * (1 - t) / (1 - t^n)

up to units +-t^m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .braid import BraidWord, permutation
from .laurent import LaurentPoly, determinant

DEFAULT_DEGREE_CAP = 2000

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


class ResourceLimitError(ValueError):
    """Input exceeds a configured desk-scale cap."""


@dataclass(frozen=True)
class BurauMatrix:
    dim: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    @classmethod
    def identity(cls, dim: int) -> BurauMatrix:
        return cls(dim, tuple(
            tuple(_ONE if i == j else _ZERO for j in range(dim)) for i in range(dim)
        ))

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        d = self.dim
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = _ZERO
                for k in range(d):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return BurauMatrix(d, tuple(rows))

    def is_identity(self) -> bool:
        return self == BurauMatrix.identity(self.dim)


def reduced_burau(w: BraidWord) -> BurauMatrix:
    if w.strands < 2:
        raise ValueError("reduced Burau needs at least 2 strands")
    d = w.strands - 1
    # columns[j][i] is entry (i, j); right multiplication by a generator
    # only rewrites columns c-1, c, c+1
    cols = [[_ONE if i == j else _ZERO for i in range(d)] for j in range(d)]
    for x in w.letters:
        c = abs(x) - 1
        mid = cols[c]
        if x > 0:
            if c > 0:
                cols[c - 1] = [a + m.shift(1) for a, m in zip(cols[c - 1], mid)]
            if c < d - 1:
                cols[c + 1] = [a + m for a, m in zip(cols[c + 1], mid)]
            cols[c] = [-m.shift(1) for m in mid]
        else:
            if c > 0:
                cols[c - 1] = [a + m for a, m in zip(cols[c - 1], mid)]
            if c < d - 1:
                cols[c + 1] = [a + m.shift(-1) for a, m in zip(cols[c + 1], mid)]
            cols[c] = [-m.shift(-1) for m in mid]
    return BurauMatrix(d, tuple(tuple(cols[j][i] for j in range(d)) for i in range(d)))


def closure_components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if not seen[start]:
            count += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = perm[x] - 1
    return count


def alexander(w: BraidWord, degree_cap: int = DEFAULT_DEGREE_CAP) -> LaurentPoly:
    """Alexander polynomial of the closure of ``w``, normalized (lowest degree 0, positive constant)."""
    if closure_components(w) != 1:
        raise ValueError(f"closure has {closure_components(w)} components, not a knot")
    if len(w) > degree_cap:
        raise ResourceLimitError(f"word length {len(w)} exceeds degree cap {degree_cap}")
    n = w.strands
    if n == 1:
        return _ONE
    b = reduced_burau(w)
    d = b.dim
    m = [
        [(_ONE if i == j else _ZERO) - b.entries[i][j] for j in range(d)]
        for i in range(d)
    ]
    det = determinant(m)
    one_minus_t = LaurentPoly((1, -1))
    one_minus_tn = LaurentPoly((1,) + (0,) * (n - 1) + (-1,))
    # any failure here means a bug upstream; let InexactDivisionError propagate
    return (det * one_minus_t).divide_exact(one_minus_tn).normalize_alexander()


def torus_alexander(p: int, q: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> LaurentPoly:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q >= 2."""
    if p < 2 or q < 2:
        raise ValueError("torus knot parameters must be >= 2")
    if gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is not a knot: gcd is {gcd(p, q)}")
    if p * q > degree_cap:
        raise ResourceLimitError(f"pq = {p * q} exceeds degree cap {degree_cap}")

    def t_power_minus_one(k: int) -> LaurentPoly:
        return LaurentPoly((-1,) + (0,) * (k - 1) + (1,))

    num = t_power_minus_one(p * q) * t_power_minus_one(1)
    den = t_power_minus_one(p) * t_power_minus_one(q)
    return num.divide_exact(den).normalize_alexander()
