import itertools

import hypothesis.strategies as st

from weaves.core import CrossingMatrix


def M(*rows: str) -> CrossingMatrix:
    """Shorthand: M("01", "10")."""
    return CrossingMatrix.from_lists([[int(ch) for ch in r] for r in rows])


def all_matrices(m: int, n: int):
    for key in range(1 << (m * n)):
        yield CrossingMatrix.from_key(m, n, key)


def small_shapes(lo: int = 1, hi: int = 3):
    return list(itertools.product(range(lo, hi + 1), repeat=2))


@st.composite
def matrices(draw, min_side: int = 1, max_side: int = 4, m=None, n=None):
    m = m if m is not None else draw(st.integers(min_side, max_side))
    n = n if n is not None else draw(st.integers(min_side, max_side))
    key = draw(st.integers(0, (1 << (m * n)) - 1))
    return CrossingMatrix.from_key(m, n, key)
