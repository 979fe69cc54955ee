"""
Twisted torus knots K(p, q, r, n): braid words, surface slopes, Seifert
data, primitivity on either side of the genus 2 Heegaard surface, and the
primitive/Seifert classification with the predicted surgery.

Braid realization: ``(sigma_{q-1} ... sigma_1)^p`` followed by ``n`` full
twists on the first ``r`` strands, written ``(sigma_{r-1} ... sigma_1)^(n r)``.
For ``n = -1`` the twist block is letter for letter
``(sigma_1^-1 ... sigma_{r-1}^-1)^r``. The word closes up to K(q, p, r, n),
which is isotopic to K(p, q, r, n) when r < p and r < q.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from .braid import BraidWord, power, rev, pi, concat


@dataclass(frozen=True)
class TwistedTorusKnot:
    p: int
    q: int
    r: int
    n: int

    def __post_init__(self) -> None:
        # negative q is the mirror orientation; only the slope formula uses it
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if self.r < 0:
            raise ValueError(f"r must be nonnegative, got {self.r}")

    def __str__(self) -> str:
        return f"K({self.p},{self.q},{self.r},{self.n})"

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> TwistedTorusKnot:
        try:
            return cls(int(data["p"]), int(data["q"]), int(data["r"]), int(data["n"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed knot parameters: {data!r}") from exc


@dataclass(frozen=True)
class SeifertData:
    """(a1, a2) Seifert fibered over the disk."""

    a1: int
    a2: int
    base: str = "disk"

    @property
    def multiplicities(self) -> tuple[int, int]:
        return (self.a1, self.a2)


class SurgeryKind(str, Enum):
    SFS_S2 = "SFS_S2"
    LENS_SPACE = "LensSpace"
    CONNECTED_SUM_OF_LENS_SPACES = "ConnectedSumOfLensSpaces"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SurgeryResult:
    slope: int
    kind: SurgeryKind
    multiplicities: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind is SurgeryKind.SFS_S2 and len(self.multiplicities) != 3:
            raise ValueError("S^2 Seifert fibered result needs exactly three multiplicities")

    def __str__(self) -> str:
        if self.kind is SurgeryKind.SFS_S2:
            a, b, c = self.multiplicities
            return f"slope {self.slope}: S^2({a}, {b}, {c})"
        return f"slope {self.slope}: {self.kind.value}"

    def to_json(self) -> dict:
        return {
            "slope": self.slope,
            "kind": self.kind.value,
            "multiplicities": list(self.multiplicities),
        }


class Verdict(str, Enum):
    PRIMITIVE_PRIMITIVE = "PrimitivePrimitive"
    PRIMITIVE_SEIFERT = "PrimitiveSeifert"
    OUTSIDE_CRITERIA = "OutsideCriteria"


@dataclass(frozen=True)
class Classification:
    primitive_H: bool
    primitive_Hprime: bool
    seifert_H: SeifertData | None
    seifert_k: int | None
    verdict: Verdict

    def __post_init__(self) -> None:
        if self.verdict is Verdict.PRIMITIVE_SEIFERT:
            if not (self.primitive_Hprime and not self.primitive_H and self.seifert_H):
                raise ValueError("inconsistent primitive/Seifert classification")
        if self.verdict is Verdict.PRIMITIVE_PRIMITIVE:
            if not (self.primitive_H and self.primitive_Hprime):
                raise ValueError("inconsistent primitive/primitive classification")

    def to_json(self) -> dict:
        return {
            "primitive_H": self.primitive_H,
            "primitive_Hprime": self.primitive_Hprime,
            "seifert_H": list(self.seifert_H.multiplicities) if self.seifert_H else None,
            "k": self.seifert_k,
            "verdict": self.verdict.value,
        }


def torus_block(q: int) -> BraidWord:
    """sigma_{q-1} sigma_{q-2} ... sigma_1 in B_q."""
    return rev(pi(1, q - 1, q))


def ttk_braid(knot: TwistedTorusKnot) -> BraidWord:
    p, q, r, n = knot.p, knot.q, knot.r, knot.n
    if q < 2:
        raise ValueError("braid realization needs q >= 2")
    if r > q:
        raise ValueError(f"r = {r} > q = {q}: twist block does not fit on {q} strands")
    torus = power(torus_block(q), p)
    if r <= 1:
        return torus
    twist = power(rev(pi(1, r - 1, q)), n * r)
    return concat(torus, twist)


def surface_slope(knot: TwistedTorusKnot) -> int:
    return knot.p * knot.q + knot.n * knot.r ** 2


def seifert_data(p: int, q: int, r: int) -> tuple[int, SeifertData] | None:
    """The k with r = p - kq and 1 <= k < p/q, and the (k, r) Seifert data; None if there is none."""
    if q < 2 or r < 1:
        return None
    k, rem = divmod(p - r, q)
    if rem or k < 1 or k * q >= p:
        return None
    return k, SeifertData(k, r)


def _residue_hits(r: int, modulus: int, others: tuple[int, ...]) -> bool:
    targets = {x % modulus for x in others}
    return r % modulus in targets


def is_primitive_H(p: int, q: int, r: int) -> bool:
    if p < 1:
        raise ValueError("p must be >= 1")
    return p == 1 or _residue_hits(r, p, (1, -1, q, -q))


def is_primitive_Hprime(p: int, q: int, r: int) -> bool:
    # the (p, q) torus part is a (q, p) torus knot as seen from H'
    if q < 1:
        raise ValueError("q must be >= 1")
    return q == 1 or _residue_hits(r, q, (1, -1, p, -p))


def _seifert_criteria(knot: TwistedTorusKnot) -> int | None:
    """k when K(p,q,r,n) meets the primitive/Seifert criteria, else None."""
    p, q, r, n = knot.p, knot.q, knot.r, knot.n
    if n not in (-1, 1):
        return None
    if not r < max(p, q):
        return None
    if not (1 < q and 2 * q < p):
        return None
    if r < 1 or (p - r) % q:
        return None
    k = (p - r) // q
    if not (2 <= k and k * q <= p - 2):
        return None
    return k


def classify(knot: TwistedTorusKnot) -> Classification:
    p, q, r = knot.p, knot.q, knot.r
    if q < 1:
        raise ValueError(f"classification needs q >= 1, got {q}")
    prim_h = is_primitive_H(p, q, r) if p >= 1 else False
    prim_hp = is_primitive_Hprime(p, q, r)
    sd = seifert_data(p, q, r)
    k, data = sd if sd else (None, None)
    crit_k = _seifert_criteria(knot)
    # p = (k+1)q passes the numeric criteria but is a link and primitive on H
    if crit_k is not None and prim_hp and not prim_h:
        verdict = Verdict.PRIMITIVE_SEIFERT
    elif prim_h and prim_hp:
        verdict = Verdict.PRIMITIVE_PRIMITIVE
    else:
        verdict = Verdict.OUTSIDE_CRITERIA
    return Classification(prim_h, prim_hp, data, k, verdict)


def surgery_description(knot: TwistedTorusKnot) -> SurgeryResult:
    slope = surface_slope(knot)
    cls = classify(knot)
    if cls.verdict is Verdict.PRIMITIVE_SEIFERT:
        k, p, q, n = cls.seifert_k, knot.p, knot.q, knot.n
        return SurgeryResult(slope, SurgeryKind.SFS_S2, (k, p - k * q, p - (k - n) * q))
    if knot.r == 1 and knot.n in (-1, 1):
        return SurgeryResult(slope, SurgeryKind.LENS_SPACE)
    return SurgeryResult(slope, SurgeryKind.UNKNOWN)
