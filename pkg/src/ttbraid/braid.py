"""
Braid words over the Artin generators of B_n.

A word is stored as a tuple of signed integers: ``+i`` is the generator
sigma_i and ``-i`` its inverse, with 1 <= i <= strands - 1. Words are read
left to right, so ``uv`` means "first u, then v" both for concatenation and
for the induced permutation of strand positions.

The Pi/Delta combinators follow the subscript/superscript convention

    pi(l, s)    = sigma_l sigma_{l+1} ... sigma_s
    delta(l, s) = pi(l, s) pi(l, s-1) ... pi(l, l)

with the degenerate bound ``s == l - 1`` giving the empty word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class BraidLetter(NamedTuple):
    index: int
    sign: int

    def __int__(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True, slots=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        top = self.strands - 1
        for x in self.letters:
            if x == 0 or abs(x) > top:
                raise ValueError(f"letter {x} out of range for B_{self.strands}")

    # -- container protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        for x in self.letters:
            yield BraidLetter(abs(x), 1 if x > 0 else -1)

    def __bool__(self) -> bool:
        return bool(self.letters)

    # -- group operations as operators ---------------------------------------
    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __pow__(self, m: int) -> BraidWord:
        return power(self, m)

    def __str__(self) -> str:
        if not self.letters:
            return f"e (B_{self.strands})"
        return " ".join(f"s{abs(x)}" if x > 0 else f"s{abs(x)}^-1" for x in self.letters)

    # -- serialization --------------------------------------------------------
    def to_json(self) -> dict:
        return {"strands": self.strands, "word": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict | str) -> BraidWord:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["strands"]), tuple(int(x) for x in data["word"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed braid JSON: {data!r}") from exc

    def with_strands(self, strands: int) -> BraidWord:
        """The same word viewed in B_strands (strands may only grow)."""
        if strands < self.strands:
            raise ValueError("cannot embed into a braid group with fewer strands")
        return BraidWord(strands, self.letters)


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def generator(i: int, strands: int, sign: int = 1) -> BraidWord:
    return BraidWord(strands, (i if sign > 0 else -i,))


def _check_same(words: Sequence[BraidWord]) -> int:
    n = words[0].strands
    for w in words[1:]:
        if w.strands != n:
            raise ValueError(f"strand-count mismatch: B_{n} vs B_{w.strands}")
    return n


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("concat needs at least one word")
    n = _check_same(words)
    out: list[int] = []
    for w in words:
        out.extend(w.letters)
    return BraidWord(n, tuple(out))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def power(w: BraidWord, m: int) -> BraidWord:
    if m < 0:
        w, m = invert(w), -m
    return BraidWord(w.strands, w.letters * m)


def conjugate(w: BraidWord, c: BraidWord) -> BraidWord:
    """c^-1 w c."""
    return concat(invert(c), w, c)


def rev(w: BraidWord) -> BraidWord:
    """Letters in reverse order with signs kept (an anti-automorphism)."""
    return BraidWord(w.strands, w.letters[::-1])


def pi(l: int, s: int, strands: int) -> BraidWord:
    if l < 1 or s > strands - 1 or s < l - 1:
        raise ValueError(f"pi({l}, {s}) out of range for B_{strands}")
    return BraidWord(strands, tuple(range(l, s + 1)))


def delta(l: int, s: int, strands: int) -> BraidWord:
    if l < 1 or s > strands - 1 or s < l - 1:
        raise ValueError(f"delta({l}, {s}) out of range for B_{strands}")
    out: list[int] = []
    for top in range(s, l - 1, -1):
        out.extend(range(l, top + 1))
    return BraidWord(strands, tuple(out))


def half_twist(strands: int) -> BraidWord:
    """The positive half twist Delta of B_strands."""
    return delta(1, strands - 1, strands)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """
    Strand permutation of ``w`` as a 1-indexed image list.

    Entry ``j - 1`` is the final position of the strand that starts at
    position ``j``. Images compose in reading order:
    ``permutation(u * v) == compose(permutation(u), permutation(v))``.
    """
    n = w.strands
    at = list(range(n))  # at[pos] = starting position of the strand now at pos
    for x in w.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    image = [0] * n
    for pos, start in enumerate(at):
        image[start] = pos + 1
    return tuple(image)


def compose(first: Sequence[int], second: Sequence[int]) -> tuple[int, ...]:
    """Apply ``first`` then ``second`` (1-indexed image lists)."""
    return tuple(second[x - 1] for x in first)


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for j, x in enumerate(perm, start=1):
        inv[x - 1] = j
    return tuple(inv)


def from_letters(strands: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(strands, tuple(letters))
