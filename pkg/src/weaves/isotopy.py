"""Isotopy and homeomorphism classes of weaving diagrams.

Two diagrams represent isotopic weaves exactly when one is reached from the
other by torus translations and interchanges of adjacent comparable
components.  Orbits under those moves are finite (at most m!·n!·mn
diagrams), so equivalence is decided by breadth-first search and the
lexicographically least diagram of an orbit serves as its canonical form.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import (
    CrossingMatrix,
    Move,
    SwapWarps,
    SwapWefts,
    Translate,
    WeaveError,
    columns_of,
    comparable_bits,
    complement,
    fingerprint,
    reflect_warps,
    reflect_wefts,
    replay,
    swap_bits,
    translate_rows,
    transpose_dual,
)

DEFAULT_CAP = 10**6

Rows = tuple[int, ...]


class OrbitBudgetExceeded(WeaveError):
    def __init__(self, cap: int):
        super().__init__(f"orbit exceeds the budget of {cap} states")
        self.cap = cap


class NotIsotopicError(WeaveError):
    pass


def swap_neighbours(rows: Rows, m: int, n: int) -> Iterator[tuple[Move, Rows]]:
    """Legal interchanges of ``rows`` as (move, resulting rows) pairs."""
    if m >= 2:
        for p in range(m if m > 2 else 1):
            q = (p + 1) % m
            if comparable_bits(rows[p], rows[q]):
                out = list(rows)
                out[p], out[q] = out[q], out[p]
                yield SwapWarps(p + 1), tuple(out)
    if n >= 2:
        cols = columns_of(rows, m, n)
        for p in range(n if n > 2 else 1):
            q = (p + 1) % n
            if comparable_bits(cols[p], cols[q]):
                yield SwapWefts(p + 1), tuple(swap_bits(r, p, q, n) for r in rows)


def move_neighbours(rows: Rows, m: int, n: int) -> Iterator[tuple[Move, Rows]]:
    """Translation generators followed by legal interchanges."""
    if m > 1:
        yield Translate(1, 0), translate_rows(rows, m, n, 1, 0)
    if n > 1:
        yield Translate(0, 1), translate_rows(rows, m, n, 0, 1)
    yield from swap_neighbours(rows, m, n)


Neighbours = Callable[[Rows, int, int], Iterator[tuple[Move, Rows]]]


def _bfs(seed: CrossingMatrix, cap: int, neighbours: Neighbours, target: Rows | None = None):
    m, n = seed.shape
    parent: dict[Rows, tuple[Rows, Move] | None] = {seed.rows: None}
    queue = deque([seed.rows])
    while queue:
        x = queue.popleft()
        if x == target:
            break
        for mv, y in neighbours(x, m, n):
            if y not in parent:
                parent[y] = (x, mv)
                if len(parent) > cap:
                    raise OrbitBudgetExceeded(cap)
                queue.append(y)
    return parent


def _path(parent: dict, end: Rows) -> tuple[Move, ...]:
    moves = []
    while parent[end] is not None:
        end, mv = parent[end]
        moves.append(mv)
    return tuple(reversed(moves))


@dataclass(frozen=True)
class Orbit:
    """All diagrams reachable from ``seed``, with a BFS tree for witnesses."""

    seed: CrossingMatrix
    parent: dict = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.parent)

    def __len__(self) -> int:
        return len(self.parent)

    def __contains__(self, M: CrossingMatrix) -> bool:
        return M.shape == self.seed.shape and M.rows in self.parent

    def __iter__(self) -> Iterator[CrossingMatrix]:
        m, n = self.seed.shape
        for rows in self.parent:
            yield CrossingMatrix(m, n, rows)

    def members(self) -> list[CrossingMatrix]:
        return sorted(self, key=lambda M: M.key)

    def path_to(self, M: CrossingMatrix) -> tuple[Move, ...]:
        if M not in self:
            raise NotIsotopicError(f"{M} is not in the orbit of {self.seed}")
        return _path(self.parent, M.rows)


def orbit(M: CrossingMatrix, cap: int = DEFAULT_CAP) -> Orbit:
    if M.m < 1 or M.n < 1:
        raise WeaveError("orbits are defined for m, n >= 1")
    return Orbit(M, _bfs(M, cap, move_neighbours))


def interchange_orbit(M: CrossingMatrix, cap: int = DEFAULT_CAP) -> Orbit:
    """Orbit under interchanges only (no translations)."""
    return Orbit(M, _bfs(M, cap, swap_neighbours))


@dataclass(frozen=True)
class CanonicalForm:
    matrix: CrossingMatrix
    orbit_size: int

    @property
    def text(self) -> str:
        return self.matrix.text

    def __str__(self) -> str:
        return self.text


def canonical_form(M: CrossingMatrix, cap: int = DEFAULT_CAP) -> CanonicalForm:
    orb = orbit(M, cap)
    # row tuples of one shape compare like their row-major bit strings
    return CanonicalForm(CrossingMatrix(M.m, M.n, min(orb.parent)), orb.size)


def is_isotopic(A: CrossingMatrix, B: CrossingMatrix, cap: int = DEFAULT_CAP) -> bool:
    if A.shape != B.shape:
        return False
    if A == B:
        return True
    if fingerprint(A) != fingerprint(B):
        return False
    return B.rows in _bfs(A, cap, move_neighbours, target=B.rows)


def isotopy_witness(A: CrossingMatrix, B: CrossingMatrix, cap: int = DEFAULT_CAP) -> tuple[Move, ...]:
    """A move sequence taking A to B, checked by replay."""
    if A.shape != B.shape:
        raise NotIsotopicError(f"shapes differ: {A.m}x{A.n} vs {B.m}x{B.n}")
    if fingerprint(A) != fingerprint(B):
        raise NotIsotopicError(f"{A} and {B} have different fingerprints")
    parent = _bfs(A, cap, move_neighbours, target=B.rows)
    if B.rows not in parent:
        raise NotIsotopicError(f"{B} is not reachable from {A}")
    moves = _path(parent, B.rows)
    assert replay(A, moves) == B
    return moves


# -- homeomorphism classes ---------------------------------------------------


def _compose(*fs):
    def g(M):
        for f in fs:
            M = f(M)
        return M
    return g


def _symmetry_group():
    out = []
    for t in (False, True):
        for c in (False, True):
            for rw in (False, True):
                for rf in (False, True):
                    fs = [f for flag, f in ((rf, reflect_wefts), (rw, reflect_warps),
                                            (c, complement), (t, transpose_dual)) if flag]
                    out.append(_compose(*fs))
    return out


# The 16 homeomorphisms of T²×I generated by reflecting warps, reflecting
# wefts, flipping depth and exchanging warps with wefts.  Each normalizes the
# move group, so g(orbit(M)) == orbit(g(M)).
SYMMETRIES: list[Callable[[CrossingMatrix], CrossingMatrix]] = _symmetry_group()


def homeo_key(M: CrossingMatrix) -> tuple[int, int, int]:
    """Shape-tagged sort key; the smaller shape sorts first."""
    return (M.m, M.n, M.key)


def homeo_class(M: CrossingMatrix, cap: int = DEFAULT_CAP) -> set[CrossingMatrix]:
    orb = orbit(M, cap)
    return {g(X) for X in orb for g in SYMMETRIES}


def homeo_canonical_form(M: CrossingMatrix, cap: int = DEFAULT_CAP) -> CanonicalForm:
    """Least diagram, by shape then bit string, over all symmetry images of the orbit.

    ``orbit_size`` counts every diagram of either shape in the class.
    """
    cls = homeo_class(M, cap)
    return CanonicalForm(min(cls, key=homeo_key), len(cls))


def is_homeomorphic(A: CrossingMatrix, B: CrossingMatrix, cap: int = DEFAULT_CAP) -> bool:
    if sorted(A.shape) != sorted(B.shape):
        return False
    return homeo_canonical_form(A, cap).matrix == homeo_canonical_form(B, cap).matrix
