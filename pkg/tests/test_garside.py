import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import braid_words, insert_relators, random_word
from ttbraid.braid import (
    BraidWord,
    concat,
    conjugate,
    delta,
    free_reduce,
    half_twist,
    identity,
    invert,
)
from ttbraid.garside import (
    NormalForm,
    PermutationBraid,
    _join,
    _meet,
    are_conjugate,
    center_full_twist,
    equals,
    is_conjugate_by,
    super_summit_representative,
    super_summit_set,
    tau,
    to_normal_form,
)
from ttbraid.invariants import reduced_burau


def W(n, *letters):
    return BraidWord(n, letters)


class TestNormalFormExamples:
    def test_empty(self):
        nf = to_normal_form(identity(4))
        assert (nf.inf, nf.factors) == (0, ())
        assert nf.is_identity()

    @pytest.mark.parametrize("q", [3, 4, 5, 6])
    def test_delta(self, q):
        nf = to_normal_form(delta(1, q - 1, q))
        assert (nf.inf, nf.factors) == (1, ())

    def test_sigma1_inverse_b3(self):
        # the only permutation braid P with Delta^-1 P = s1^-1 is s1 s2
        nf = to_normal_form(W(3, -1))
        assert nf.inf == -1
        assert nf.factors == ((3, 1, 2),)
        assert equals(nf.permutation_braids()[0].word(), W(3, 1, 2))

    def test_sigma1_inverse_brute_force_oracle(self):
        # Burau is faithful on B_3, so it decides equality independently of the engine
        target = reduced_burau(W(3, -1))
        d_inv = invert(half_twist(3))
        hits = []
        for perm in itertools.permutations((1, 2, 3)):
            p = PermutationBraid(3, perm).word()
            if reduced_burau(concat(d_inv, p)) == target:
                hits.append(perm)
        assert hits == [(3, 1, 2)]

    def test_mixed_word(self):
        # s1 s2^-1 = Delta^-1 . tau(s1) . Delta s2^-1 = Delta^-1 . s2 . s2 s1
        nf = to_normal_form(W(3, 1, -2))
        assert nf.inf == -1
        assert nf.factors == ((1, 3, 2), (2, 3, 1))
        assert equals(nf.to_word(), W(3, 1, -2))
        assert reduced_burau(nf.to_word()) == reduced_burau(W(3, 1, -2))

    def test_json_round_trip(self):
        nf = to_normal_form(W(5, 1, -3, 4, 2, -1, -4))
        assert NormalForm.from_json(nf.to_json()) == nf


class TestEquals:
    def test_examples(self):
        assert equals(W(3, 1, 2, 1), W(3, 2, 1, 2))
        assert equals(W(4, 1, 3), W(4, 3, 1))
        assert not equals(W(3, 1, 2), W(3, 2, 1))
        up = BraidWord(5, (1, 2, 3, 4) * 5)
        down = BraidWord(5, (4, 3, 2, 1) * 5)
        assert equals(up, down)

    def test_strand_mismatch(self):
        with pytest.raises(ValueError):
            equals(W(3, 1), W(4, 1))

    @given(braid_words(max_len=20), st.integers(0, 2**32))
    def test_relator_insertion(self, w, seed):
        noisy = insert_relators(w, random.Random(seed), 5)
        assert to_normal_form(noisy) == to_normal_form(w)

    @given(braid_words(max_len=25))
    def test_w_winv_identity(self, w):
        assert to_normal_form(concat(w, invert(w))).is_identity()

    @given(braid_words(max_len=25))
    def test_left_weighted_and_round_trip(self, w):
        nf = to_normal_form(w)
        assert nf.is_left_weighted()
        assert all(not f.is_identity and not f.is_delta for f in nf.permutation_braids())
        assert to_normal_form(nf.to_word()) == nf

    @given(braid_words(strands=3, max_len=10), braid_words(strands=3, max_len=10))
    def test_burau_oracle_b3(self, u, v):
        assert equals(u, v) == (reduced_burau(u) == reduced_burau(v))

    @given(braid_words(max_len=12), st.integers(0, 2**32))
    def test_equivalence_relation(self, w, seed):
        rng = random.Random(seed)
        a = insert_relators(w, rng, 3)
        b = insert_relators(a, rng, 3)
        assert equals(w, w)
        assert equals(w, a) and equals(a, w)
        assert equals(a, b) and equals(w, b)
        other = concat(w, BraidWord(w.strands, (1,)))
        assert equals(w, other) == equals(other, w) == False  # noqa: E712


class TestLattice:
    """Prefix order on S_4 permutation braids against brute force."""

    perms = list(itertools.permutations(range(4)))

    @staticmethod
    def length(f):
        return sum(f[a] > f[b] for a in range(len(f)) for b in range(a + 1, len(f)))

    @classmethod
    def prefix(cls, a, b):
        ainv = [0] * len(a)
        for x, y in enumerate(a):
            ainv[y] = x
        c = tuple(b[ainv[y]] for y in range(len(a)))
        return cls.length(a) + cls.length(c) == cls.length(b)

    def test_join(self):
        for a, b in itertools.product(self.perms, repeat=2):
            uppers = [z for z in self.perms if self.prefix(a, z) and self.prefix(b, z)]
            least = [z for z in uppers if all(self.prefix(z, u) for u in uppers)]
            assert _join(a, b) == least[0]

    def test_meet(self):
        for a, b in itertools.product(self.perms, repeat=2):
            lowers = [z for z in self.perms if self.prefix(z, a) and self.prefix(z, b)]
            greatest = [z for z in lowers if all(self.prefix(u, z) for u in lowers)]
            assert _meet(a, b) == greatest[0]


class TestTauAndCenter:
    def test_tau_example(self):
        assert tau(W(5, 1)) == W(5, 4)

    @given(braid_words())
    def test_tau_involution(self, w):
        assert tau(tau(w)) == w

    def test_tau_is_delta_conjugation(self):
        rng = random.Random(3)
        for n in (4, 5):
            d = half_twist(n)
            for _ in range(100):
                w = random_word(rng, n, 15)
                assert equals(tau(w), concat(invert(d), w, d))

    def test_full_twist(self):
        assert center_full_twist(3) == W(3, 1, 2, 1, 2, 1, 2)
        for q in (3, 4, 5):
            nf = to_normal_form(center_full_twist(q))
            assert (nf.inf, nf.factors) == (2, ())
        with pytest.raises(ValueError):
            center_full_twist(2)

    def test_full_twist_central(self):
        rng = random.Random(5)
        z = center_full_twist(5)
        for _ in range(100):
            w = random_word(rng, 5, 10)
            assert equals(concat(z, w), concat(w, z))


class TestConjugacy:
    def test_is_conjugate_by_examples(self):
        from ttbraid.families import beta_words, p1_conjugator

        b1, b2 = beta_words(2)
        assert is_conjugate_by(b1, b2, p1_conjugator(2))
        rng = random.Random(9)
        z = center_full_twist(4)
        for _ in range(10):
            assert is_conjugate_by(z, z, random_word(rng, 4, 8))
        w = W(4, 1, 2, -3)
        assert is_conjugate_by(w, W(4, 1, 2, -3, 1, -1), identity(4))
        assert not is_conjugate_by(w, W(4, 1), identity(4))

    def test_are_conjugate_examples(self):
        res = are_conjugate(W(3, 1), W(3, 2))
        assert res.is_conjugate
        assert is_conjugate_by(W(3, 1), W(3, 2), res.witness)
        res = are_conjugate(W(3, 1), W(3, -1))
        assert res.status == "not_conjugate"
        res = are_conjugate(W(4, 1, -2, 3), W(4, 1, -2, 3))
        assert res.is_conjugate and res.witness == identity(4)

    def test_not_conjugate_same_cheap_invariants(self):
        # same exponent sum and cycle type, but Burau traces differ
        a, b = W(3, 1, 1, 1), W(3, 1, 2, 2)
        def trace(w):
            m = reduced_burau(w).entries
            return m[0][0] + m[1][1]

        assert trace(a) != trace(b)
        assert are_conjugate(a, b).status == "not_conjugate"

    def test_budget_inconclusive(self):
        rng = random.Random(2)
        w = random_word(rng, 5, 20)
        v = conjugate(w, random_word(rng, 5, 6))
        res = are_conjugate(w, v, budget=1)
        assert res.status in ("inconclusive", "conjugate")

    @given(braid_words(min_strands=3, max_strands=4, max_len=10), st.integers(0, 2**32))
    def test_random_conjugates(self, w, seed):
        c = random_word(random.Random(seed), w.strands, 6)
        v = conjugate(w, c)
        res = are_conjugate(w, v)
        assert res.is_conjugate
        assert is_conjugate_by(w, v, res.witness)

    def test_super_summit(self):
        rng = random.Random(4)
        w = random_word(rng, 4, 14)
        rep, conj = super_summit_representative(w)
        assert equals(conjugate(w, conj), rep.to_word())
        sss = super_summit_set(w)
        assert rep in sss
        assert len({(x.inf, x.sup) for x in sss}) == 1
        shifted = conjugate(w, random_word(rng, 4, 5))
        assert set(super_summit_set(shifted)) == set(sss)

    def test_witness_is_free_reduced(self):
        res = are_conjugate(W(3, 1), W(3, 2))
        assert res.witness == free_reduce(res.witness)


def test_long_word_is_fast():
    import time

    rng = random.Random(1)
    w = random_word(rng, 5, 100_000)
    start = time.perf_counter()
    nf = to_normal_form(w)
    assert time.perf_counter() - start < 10
    assert nf.is_left_weighted()
