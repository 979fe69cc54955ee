"""
Garside left normal form in B_n and the decisions built on it.

Every braid has a unique left normal form

    Delta^inf  A_1 A_2 ... A_m

where each A_j is a permutation braid other than 1 and Delta, and every
adjacent pair is left-weighted: the starting set of A_{j+1} is contained in
the finishing set of A_j. Two words are equal in B_n iff their normal forms
coincide, which is how every identity in this package is decided.

Permutation braids are handled as permutations throughout. Internally a
simple element is a 0-indexed tuple ``f`` with ``f[x]`` the final position
of the strand that starts at position ``x``; the public ``NormalForm`` uses
1-indexed image lists, the same convention as ``braid.permutation``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .braid import (
    BraidWord,
    concat,
    exponent_sum,
    free_reduce,
    half_twist,
    invert,
    permutation,
)

DEFAULT_BUDGET = 100_000

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation-braid primitives (0-indexed)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _inverse(f: Perm) -> Perm:
    inv = [0] * len(f)
    for x, y in enumerate(f):
        inv[y] = x
    return tuple(inv)


def _tau(f: Perm) -> Perm:
    # Delta^-1 f Delta; reflects positions
    n = len(f)
    return tuple(n - 1 - f[n - 1 - x] for x in range(n))


@lru_cache(maxsize=None)
def _atom(i: int, n: int) -> Perm:
    f = list(range(n))
    f[i], f[i + 1] = f[i + 1], f[i]
    return tuple(f)


@lru_cache(maxsize=None)
def _left_complement_of_atom(i: int, n: int) -> Perm:
    # X with X sigma_i = Delta, so sigma_i^-1 = Delta^-1 X
    f = list(_delta(n))
    return tuple(i + 1 if y == i else i if y == i + 1 else y for y in f)


def _left_complement(f: Perm) -> Perm:
    # X with X f = Delta
    inv = _inverse(f)
    n = len(f)
    return tuple(inv[n - 1 - x] for x in range(n))


def starting_set(f: Sequence[int]) -> frozenset[int]:
    """Generators (0-indexed) that can begin the permutation braid ``f``."""
    return frozenset(i for i in range(len(f) - 1) if f[i] > f[i + 1])


def finishing_set(f: Sequence[int]) -> frozenset[int]:
    """Generators (0-indexed) that can end the permutation braid ``f``."""
    inv = _inverse(tuple(f))
    return frozenset(i for i in range(len(f) - 1) if inv[i] > inv[i + 1])


def _is_left_weighted(a: Perm, b: Perm) -> bool:
    return starting_set(b) <= finishing_set(a)


@lru_cache(maxsize=1 << 18)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move the largest prefix of ``b`` that keeps ``a`` simple over to ``a``."""
    n = len(a)
    a_ = list(a)
    ainv = list(_inverse(a))
    b_ = list(b)
    i = 0
    while i < n - 1:
        if b_[i] > b_[i + 1] and ainv[i] < ainv[i + 1]:
            x, y = ainv[i], ainv[i + 1]
            a_[x], a_[y] = i + 1, i
            ainv[i], ainv[i + 1] = y, x
            b_[i], b_[i + 1] = b_[i + 1], b_[i]
            i = i - 1 if i else 0
        else:
            i += 1
    return tuple(a_), tuple(b_)


def _simple_letters(f: Perm) -> list[int]:
    """A positive word (1-indexed letters) for the permutation braid ``f``."""
    g = list(f)
    out: list[int] = []
    i = 0
    while i < len(g) - 1:
        if g[i] > g[i + 1]:
            out.append(i + 1)
            g[i], g[i + 1] = g[i + 1], g[i]
            i = i - 1 if i else 0
        else:
            i += 1
    return out


def _inversions(f: Perm) -> list[list[bool]]:
    n = len(f)
    return [[a < b and f[a] > f[b] for b in range(n)] for a in range(n)]


def _from_inversions(rel: list[list[bool]]) -> Perm:
    n = len(rel)
    return tuple(
        a + sum(rel[a][b] for b in range(a + 1, n)) - sum(rel[b][a] for b in range(a))
        for a in range(n)
    )


@lru_cache(maxsize=1 << 16)
def _join(a: Perm, b: Perm) -> Perm:
    """Least common right multiple of two permutation braids."""
    ra, rb = _inversions(a), _inversions(b)
    n = len(a)
    rel = [[ra[x][y] or rb[x][y] for y in range(n)] for x in range(n)]
    for mid in range(n):
        for x in range(mid):
            if rel[x][mid]:
                row = rel[mid]
                tgt = rel[x]
                for y in range(mid + 1, n):
                    if row[y]:
                        tgt[y] = True
    return _from_inversions(rel)


def _meet(a: Perm, b: Perm) -> Perm:
    """Greatest common prefix of two permutation braids."""
    n = len(a)
    c = list(range(n))
    cinv = list(range(n))
    # residues c^-1 a and c^-1 b, peeled greedily
    ra, rb = list(a), list(b)
    i = 0
    while i < n - 1:
        if ra[i] > ra[i + 1] and rb[i] > rb[i + 1]:
            x, y = cinv[i], cinv[i + 1]
            c[x], c[y] = i + 1, i
            cinv[i], cinv[i + 1] = y, x
            ra[i], ra[i + 1] = ra[i + 1], ra[i]
            rb[i], rb[i + 1] = rb[i + 1], rb[i]
            i = i - 1 if i else 0
        else:
            i += 1
    return tuple(c)


def _left_divide(a: Perm, j: Perm) -> Perm:
    """c with a c = j, assuming a is a prefix of j."""
    ainv = _inverse(a)
    return tuple(j[ainv[x]] for x in range(len(a)))


def _residual(a: Perm, z: Perm) -> Perm:
    # a^-1 (a v z)
    return _left_divide(a, _join(a, z))


# ---------------------------------------------------------------------------
# internal normal forms: (inf, [factors])
# ---------------------------------------------------------------------------

class _Accumulator:
    """
    Running left normal form Delta^inf * factors, extended by right
    multiplication with simple elements.

    Factors are stored "raw" under a global twist bit: the true factor is
    tau^twist(raw[i]). When a Delta surfaces at position j during the sweep it
    is pulled to the front, which twists everything before it; we twist
    whichever side is shorter, so the cost is bounded by the sweep that
    produced it.
    """

    __slots__ = ("n", "inf", "raw", "twist", "_ident", "_delta")

    def __init__(self, n: int, inf: int = 0, factors: Sequence[Perm] = ()) -> None:
        self.n = n
        self.inf = inf
        self.raw = list(factors)
        self.twist = 0
        self._ident = _identity(n)
        self._delta = _delta(n)

    def push(self, s: Perm) -> None:
        if s == self._ident:
            return
        if s == self._delta:
            # factors * Delta = Delta * tau(factors)
            self.inf += 1
            self.twist ^= 1
            return
        raw = self.raw
        raw.append(_tau(s) if self.twist else s)
        j = len(raw) - 2
        while j >= 0:
            a = raw[j]
            a2, b2 = _left_weight(a, raw[j + 1])
            if a2 == a:
                break
            raw[j + 1] = b2
            if a2 == self._delta:
                del raw[j]
                self.inf += 1
                if j <= len(raw) - j:
                    for k in range(j):
                        raw[k] = _tau(raw[k])
                else:
                    self.twist ^= 1
                    for k in range(j, len(raw)):
                        raw[k] = _tau(raw[k])
                break
            raw[j] = a2
            j -= 1
        ident = self._ident
        while raw and raw[-1] == ident:
            raw.pop()

    def factors(self) -> list[Perm]:
        if self.twist:
            return [_tau(f) for f in self.raw]
        return list(self.raw)

    def result(self) -> tuple[int, list[Perm]]:
        return self.inf, self.factors()


def _positive_nf(simples: Sequence[Perm], n: int, inf: int = 0) -> tuple[int, list[Perm]]:
    acc = _Accumulator(n, inf)
    for s in simples:
        acc.push(s)
    return acc.result()


def _word_nf(w: BraidWord) -> tuple[int, list[Perm]]:
    n = w.strands
    if n == 1:
        return 0, []
    letters = w.letters
    simples: list[Perm] = [()] * len(letters)
    flips = 0  # negative letters strictly to the right
    for j in range(len(letters) - 1, -1, -1):
        x = letters[j]
        s = _atom(x - 1, n) if x > 0 else _left_complement_of_atom(-x - 1, n)
        simples[j] = _tau(s) if flips & 1 else s
        if x < 0:
            flips += 1
    # group runs of atoms into simples before the more expensive sweep
    grouped: list[Perm] = []
    cur: list[int] | None = None
    cur_inv: list[int] | None = None
    for x, s in zip(letters, simples):
        if x > 0:
            i = _atom_index(s)
            if cur is not None and cur_inv[i] < cur_inv[i + 1]:
                a, b = cur_inv[i], cur_inv[i + 1]
                cur[a], cur[b] = i + 1, i
                cur_inv[i], cur_inv[i + 1] = b, a
                continue
            if cur is not None:
                grouped.append(tuple(cur))
            cur = list(s)
            cur_inv = list(s)
        else:
            if cur is not None:
                grouped.append(tuple(cur))
                cur = cur_inv = None
            grouped.append(s)
    if cur is not None:
        grouped.append(tuple(cur))
    return _positive_nf(grouped, n, inf=-flips)


def _atom_index(s: Perm) -> int:
    for i in range(len(s) - 1):
        if s[i] > s[i + 1]:
            return i
    raise AssertionError("identity is not an atom")


def _nf_letters(n: int, inf: int, factors: Sequence[Perm]) -> list[int]:
    d = list(half_twist(n).letters) if n > 1 else []
    if inf >= 0:
        out = d * inf
    else:
        out = [-x for x in reversed(d)] * (-inf)
    for f in factors:
        out.extend(_simple_letters(f))
    return out


# ---------------------------------------------------------------------------
# public normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PermutationBraid:
    strands: int
    perm: tuple[int, ...]  # 1-indexed images

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(1, self.strands + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{self.strands}")

    def word(self) -> BraidWord:
        return BraidWord(self.strands, tuple(_simple_letters(_to0(self.perm))))

    def starting_set(self) -> frozenset[int]:
        return frozenset(i + 1 for i in starting_set(_to0(self.perm)))

    def finishing_set(self) -> frozenset[int]:
        return frozenset(i + 1 for i in finishing_set(_to0(self.perm)))

    @property
    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.strands + 1))

    @property
    def is_delta(self) -> bool:
        return self.perm == tuple(range(self.strands, 0, -1))


def _to0(perm: Sequence[int]) -> Perm:
    return tuple(x - 1 for x in perm)


def _to1(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + 1 for x in perm)


@dataclass(frozen=True)
class NormalForm:
    """Delta^inf followed by left-weighted permutation-braid factors."""

    strands: int
    inf: int
    factors: tuple[tuple[int, ...], ...] = ()

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def permutation_braids(self) -> list[PermutationBraid]:
        return [PermutationBraid(self.strands, f) for f in self.factors]

    def is_left_weighted(self) -> bool:
        fs = [_to0(f) for f in self.factors]
        n = self.strands
        if any(f == _identity(n) or f == _delta(n) for f in fs):
            return False
        return all(_is_left_weighted(a, b) for a, b in zip(fs, fs[1:]))

    def to_word(self) -> BraidWord:
        fs = [_to0(f) for f in self.factors]
        return BraidWord(self.strands, tuple(_nf_letters(self.strands, self.inf, fs)))

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "inf": self.inf,
            "factors": [list(f) for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> NormalForm:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            int(data["strands"]),
            int(data["inf"]),
            tuple(tuple(int(x) for x in f) for f in data["factors"]),
        )


def to_normal_form(w: BraidWord) -> NormalForm:
    inf, factors = _word_nf(w)
    return NormalForm(w.strands, inf, tuple(_to1(f) for f in factors))


def _check_same(*words: BraidWord) -> None:
    n = words[0].strands
    if any(w.strands != n for w in words):
        raise ValueError("strand-count mismatch: " + ", ".join(f"B_{w.strands}" for w in words))


def equals(w1: BraidWord, w2: BraidWord) -> bool:
    """Decide w1 == w2 in B_n."""
    _check_same(w1, w2)
    if exponent_sum(w1) != exponent_sum(w2):
        return False
    if permutation(w1) != permutation(w2):
        return False
    return _word_nf(w1) == _word_nf(w2)


def is_conjugate_by(w1: BraidWord, w2: BraidWord, c: BraidWord) -> bool:
    """True iff c^-1 w1 c == w2."""
    _check_same(w1, w2, c)
    return equals(concat(invert(c), w1, c), w2)


def tau(w: BraidWord) -> BraidWord:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
    n = w.strands
    return BraidWord(n, tuple((n - x) if x > 0 else -(n + x) for x in w.letters))


def center_full_twist(strands: int) -> BraidWord:
    """(sigma_1 ... sigma_{n-1})^n, the generator of the center of B_n."""
    if strands < 3:
        raise ValueError("full twist as center generator needs at least 3 strands")
    return BraidWord(strands, tuple(range(1, strands)) * strands)


# ---------------------------------------------------------------------------
# conjugacy: cycling, decycling, super summit orbit search
# ---------------------------------------------------------------------------

@dataclass
class ConjugacyResult:
    status: str  # "conjugate" | "not_conjugate" | "inconclusive"
    witness: BraidWord | None = None
    nodes: int = 0
    notes: str = ""

    @property
    def is_conjugate(self) -> bool:
        return self.status == "conjugate"


@dataclass
class _Node:
    inf: int
    factors: tuple[Perm, ...]

    @property
    def key(self) -> tuple:
        return (self.inf, self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)


def _conj_by_simple(node: _Node, s: Perm, n: int) -> _Node:
    """Normal form of s^-1 x s computed on factors."""
    u = _tau(s) if node.inf & 1 else s
    # s^-1 Delta^p = Delta^p tau^p(s)^-1 and u^-1 = Delta^-1 X(u)
    inf, factors = _positive_nf([_left_complement(u), *node.factors, s], n, node.inf - 1)
    return _Node(inf, tuple(factors))


def _simple_word(f: Perm, n: int) -> BraidWord:
    return BraidWord(n, tuple(_simple_letters(f)))


def _cycle(node: _Node, n: int) -> tuple[_Node, Perm]:
    c = _tau(node.factors[0]) if node.inf & 1 else node.factors[0]
    acc = _Accumulator(n, node.inf, node.factors[1:])
    acc.push(c)
    inf, factors = acc.result()
    return _Node(inf, tuple(factors)), c


def _decycle(node: _Node, n: int) -> tuple[_Node, Perm]:
    last = node.factors[-1]
    head = _tau(last) if node.inf & 1 else last
    inf, factors = _positive_nf([head, *node.factors[:-1]], n, node.inf)
    return _Node(inf, tuple(factors)), last


def _super_summit(node: _Node, n: int) -> tuple[_Node, BraidWord]:
    """Cycle then decycle until inf is maximal and sup minimal; returns the conjugator."""
    bound = n * (n - 1) // 2
    conj: list[int] = []
    stale = 0
    while node.factors and stale < bound:
        nxt, c = _cycle(node, n)
        assert nxt.inf >= node.inf, "cycling decreased inf"
        stale = 0 if nxt.inf > node.inf else stale + 1
        conj.extend(_simple_letters(c))
        node = nxt
    stale = 0
    while node.factors and stale < bound:
        nxt, last = _decycle(node, n)
        assert nxt.sup <= node.sup, "decycling increased sup"
        stale = 0 if nxt.sup < node.sup else stale + 1
        conj.extend(-x for x in reversed(_simple_letters(last)))
        node = nxt
    return node, BraidWord(n, tuple(conj))


def _minimal_simple(node: _Node, inverse_node: _Node, atom: Perm, n: int) -> Perm:
    """
    Smallest simple rho with ``atom`` as a prefix such that conjugating the
    super summit element by rho stays in the super summit set.
    """
    p, y = node.inf, node.factors
    p2, y2 = inverse_node.inf, inverse_node.factors
    rho = atom
    while True:
        z1 = _tau(rho) if p & 1 else rho
        for a in y:
            z1 = _residual(a, z1)
        z2 = _tau(rho) if p2 & 1 else rho
        for a in y2:
            z2 = _residual(a, z2)
        nxt = _join(rho, _join(z1, z2))
        if nxt == rho:
            return rho
        rho = nxt


def _inverse_node(node: _Node, n: int) -> _Node:
    letters = _nf_letters(n, node.inf, node.factors)
    inf, factors = _word_nf(BraidWord(n, tuple(-x for x in reversed(letters))))
    return _Node(inf, tuple(factors))


def are_conjugate(
    w1: BraidWord,
    w2: BraidWord,
    budget: int = DEFAULT_BUDGET,
) -> ConjugacyResult:
    """
    Decide whether w1 and w2 are conjugate in B_n.

    Both words are driven into their super summit sets by cycling and
    decycling, then the super summit orbit of w1 is explored breadth-first
    using minimal simple conjugators, one per atom. The search is exponential
    in the worst case; once ``budget`` orbit nodes have been visited the
    answer is ``inconclusive``. A returned witness ``c`` satisfies
    ``c^-1 w1 c == w2``.
    """
    _check_same(w1, w2)
    n = w1.strands
    if exponent_sum(w1) != exponent_sum(w2):
        return ConjugacyResult("not_conjugate", notes="exponent sums differ")
    if _cycle_type(permutation(w1)) != _cycle_type(permutation(w2)):
        return ConjugacyResult("not_conjugate", notes="permutation cycle types differ")
    nf1, nf2 = _word_nf(w1), _word_nf(w2)
    if nf1 == nf2:
        return ConjugacyResult("conjugate", BraidWord(n, ()), nodes=0)

    x, cx = _super_summit(_Node(nf1[0], tuple(nf1[1])), n)
    y, cy = _super_summit(_Node(nf2[0], tuple(nf2[1])), n)
    if (x.inf, x.sup) != (y.inf, y.sup):
        return ConjugacyResult("not_conjugate", notes="summit inf/sup differ")

    atoms = [_atom(i, n) for i in range(n - 1)]
    paths: dict[tuple, BraidWord] = {x.key: BraidWord(n, ())}
    queue = deque([x])
    nodes = 0
    target = y.key
    while queue:
        node = queue.popleft()
        nodes += 1
        if node.key == target:
            witness = free_reduce(concat(cx, paths[node.key], invert(cy)))
            return ConjugacyResult("conjugate", witness, nodes=nodes)
        if nodes >= budget:
            return ConjugacyResult(
                "inconclusive", nodes=nodes, notes=f"orbit budget {budget} exhausted"
            )
        inv = _inverse_node(node, n)
        seen_rho = set()
        for a in atoms:
            rho = _minimal_simple(node, inv, a, n)
            if rho in seen_rho:
                continue
            seen_rho.add(rho)
            nxt = _conj_by_simple(node, rho, n)
            assert (nxt.inf, nxt.sup) == (node.inf, node.sup), "left the super summit set"
            if nxt.key not in paths:
                paths[nxt.key] = concat(paths[node.key], _simple_word(rho, n))
                queue.append(nxt)
    return ConjugacyResult(
        "not_conjugate", nodes=nodes, notes="super summit orbit exhausted without a match"
    )


def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x] - 1
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


def super_summit_representative(w: BraidWord) -> tuple[NormalForm, BraidWord]:
    """A super summit conjugate of ``w`` and the conjugator c with c^-1 w c = it."""
    inf, factors = _word_nf(w)
    node, c = _super_summit(_Node(inf, tuple(factors)), w.strands)
    return NormalForm(w.strands, node.inf, tuple(_to1(f) for f in node.factors)), c


def super_summit_set(w: BraidWord, budget: int = DEFAULT_BUDGET) -> list[NormalForm]:
    """Enumerate the super summit set of ``w`` (up to ``budget`` elements)."""
    n = w.strands
    inf, factors = _word_nf(w)
    x, _ = _super_summit(_Node(inf, tuple(factors)), n)
    atoms = [_atom(i, n) for i in range(n - 1)]
    seen = {x.key: x}
    queue = deque([x])
    while queue and len(seen) < budget:
        node = queue.popleft()
        inv = _inverse_node(node, n)
        for a in atoms:
            nxt = _conj_by_simple(node, _minimal_simple(node, inv, a, n), n)
            if nxt.key not in seen:
                seen[nxt.key] = nxt
                queue.append(nxt)
    return [
        NormalForm(n, node.inf, tuple(_to1(f) for f in node.factors))
        for node in sorted(seen.values(), key=lambda m: m.key)
    ]


__all__ = [
    "ConjugacyResult",
    "DEFAULT_BUDGET",
    "NormalForm",
    "PermutationBraid",
    "are_conjugate",
    "center_full_twist",
    "equals",
    "finishing_set",
    "is_conjugate_by",
    "starting_set",
    "super_summit_representative",
    "super_summit_set",
    "tau",
    "to_normal_form",
]
