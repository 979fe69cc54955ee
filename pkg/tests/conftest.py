import random

from hypothesis import HealthCheck, settings, strategies as st

from ttbraid.braid import BraidWord
from ttbraid.invariants import closure_components

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def braid_words(draw, min_strands=2, max_strands=6, max_len=30, strands=None):
    n = strands if strands is not None else draw(st.integers(min_strands, max_strands))
    if n < 2:
        return BraidWord(n, ())
    letters = draw(st.lists(
        st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
        max_size=max_len,
    ))
    return BraidWord(n, tuple(letters))


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = []
    for _ in range(length):
        i = rng.randint(1, strands - 1)
        letters.append(i if rng.random() < 0.5 else -i)
    return BraidWord(strands, tuple(letters))


def insert_relators(w: BraidWord, rng: random.Random, count: int) -> BraidWord:
    """Insert trivial words (braid relators, far commutators, cancelling pairs)."""
    n = w.strands
    letters = list(w.letters)
    for _ in range(count):
        kind = rng.randrange(3)
        i = rng.randint(1, n - 1)
        if kind == 0 and n >= 3:
            i = rng.randint(1, n - 2)
            j = i + 1
            piece = [i, j, i, -j, -i, -j]
        elif kind == 1 and n >= 4:
            j = rng.choice([x for x in range(1, n) if abs(x - i) >= 2] or [i])
            piece = [i, j, -i, -j] if abs(i - j) >= 2 else [i, -i]
        else:
            piece = [i, -i] if rng.random() < 0.5 else [-i, i]
        if rng.random() < 0.5:
            piece = [-x for x in reversed(piece)]
        pos = rng.randint(0, len(letters))
        letters[pos:pos] = piece
    return BraidWord(n, tuple(letters))


def random_knot_word(rng: random.Random) -> BraidWord:
    while True:
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(1, 14))
        if closure_components(w) == 1:
            return w


# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
