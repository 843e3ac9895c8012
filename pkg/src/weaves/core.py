"""Weaving diagrams and the diagram moves that preserve isotopy.

A weaving diagram of an m×n weave is an m×n matrix of bits: ``c(i, j) = 1``
when warp ``i`` passes above weft ``j`` and ``0`` when it passes below.
Rows are stored as n-bit integers with weft 1 in the most significant bit,
so that the row-major bit string of the matrix read as a binary number is
also its lexicographic sort key.

Warp / weft positions in moves and component ids are 1-based, matching the
way weaves are numbered in the literature and in the CLI output.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class WeaveError(ValueError):
    """Base class for domain errors (bad input, illegal move, budgets)."""


class MatrixFormatError(WeaveError):
    pass


class IllegalMoveError(WeaveError):
    pass


class MoveIndexError(WeaveError, IndexError):
    pass


def _mask(n: int) -> int:
    return (1 << n) - 1


def leq(u: int, v: int) -> bool:
    """Pointwise ``u <= v`` for bit vectors packed into ints."""
    return u & ~v == 0


def comparable_bits(u: int, v: int) -> bool:
    w = u | v
    return w == u or w == v


def comparable(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff ``u <= v`` or ``u >= v`` pointwise."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return all(a <= b for a, b in zip(u, v)) or all(a >= b for a, b in zip(u, v))


def rotate_left(x: int, b: int, n: int) -> int:
    if n == 0:
        return x
    b %= n
    if b == 0:
        return x
    return ((x << b) | (x >> (n - b))) & _mask(n)


def swap_bits(x: int, p: int, q: int, n: int) -> int:
    """Exchange the bits for columns p and q (0-based) of an n-bit row."""
    sp, sq = n - 1 - p, n - 1 - q
    if (x >> sp ^ x >> sq) & 1:
        x ^= (1 << sp) | (1 << sq)
    return x


def reverse_bits(x: int, n: int) -> int:
    return int(format(x, f"0{n}b")[::-1], 2) if n else 0


def columns_of(rows: Sequence[int], m: int, n: int) -> tuple[int, ...]:
    """Columns as m-bit ints with warp 1 in the most significant bit."""
    cols = []
    for j in range(n):
        s = n - 1 - j
        v = 0
        for r in rows:
            v = (v << 1) | (r >> s & 1)
        cols.append(v)
    return tuple(cols)


def rows_from_columns(cols: Sequence[int], m: int, n: int) -> tuple[int, ...]:
    return columns_of(cols, n, m)


@dataclass(frozen=True)
class CrossingMatrix:
    """An m×n weaving diagram.  Immutable and hashable."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise MatrixFormatError("negative dimension")
        if len(self.rows) != self.m:
            raise MatrixFormatError(f"expected {self.m} rows, got {len(self.rows)}")
        lim = 1 << self.n
        for r in self.rows:
            if not 0 <= r < lim:
                raise MatrixFormatError(f"row value {r} does not fit in {self.n} bits")

    @classmethod
    def from_lists(cls, raw: Sequence[Sequence[int]], n: int | None = None) -> CrossingMatrix:
        """Build from nested lists of 0/1; ``n`` is only needed when ``raw`` is empty."""
        m = len(raw)
        if m == 0:
            return cls(0, n or 0, ())
        width = len(raw[0])
        rows = []
        for i, row in enumerate(raw):
            if len(row) != width:
                raise MatrixFormatError(
                    f"ragged rows: row {i + 1} has length {len(row)}, expected {width}"
                )
            v = 0
            for j, x in enumerate(row):
                if isinstance(x, bool) or x not in (0, 1):
                    raise MatrixFormatError(f"non-binary entry {x!r} at row {i + 1}, column {j + 1}")
                v = (v << 1) | int(x)
            rows.append(v)
        return cls(m, width, tuple(rows))

    @classmethod
    def from_key(cls, m: int, n: int, key: int) -> CrossingMatrix:
        mask = _mask(n)
        return cls(m, n, tuple((key >> (n * (m - 1 - i))) & mask for i in range(m)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def key(self) -> int:
        """Row-major bit string as an integer; orders matrices of one shape lexicographically."""
        k = 0
        for r in self.rows:
            k = (k << self.n) | r
        return k

    @property
    def columns(self) -> tuple[int, ...]:
        return columns_of(self.rows, self.m, self.n)

    def entry(self, i: int, j: int) -> int:
        """c(i, j) with 1-based warp i and weft j."""
        return self.rows[i - 1] >> (self.n - j) & 1

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self.rows[i - 1] >> (self.n - 1 - j) & 1 for j in range(self.n))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r >> (self.n - j) & 1 for r in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(1, self.m + 1)]

    @property
    def text(self) -> str:
        return "/".join(format(r, f"0{self.n}b") if self.n else "" for r in self.rows)

    def __str__(self) -> str:
        return self.text

    def ones(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)


def validate(raw: Sequence[Sequence[int]]) -> CrossingMatrix:
    return CrossingMatrix.from_lists(raw)


class Kind(enum.IntEnum):
    WARP = 0
    WEFT = 1

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True, order=True)
class ComponentId:
    kind: Kind
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    def check(self, M: CrossingMatrix) -> None:
        hi = M.m if self.kind is Kind.WARP else M.n
        if not 1 <= self.index <= hi:
            raise MoveIndexError(f"{self} out of range for a {M.m}x{M.n} weave")


def Warp(i: int) -> ComponentId:
    return ComponentId(Kind.WARP, i)


def Weft(j: int) -> ComponentId:
    return ComponentId(Kind.WEFT, j)


# -- moves -------------------------------------------------------------------


@dataclass(frozen=True)
class Translate:
    """Torus translation: ``c'(i, j) = c(i + a, j + b)`` with indices mod (m, n)."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"T({self.a},{self.b})"

    def to_json(self) -> dict:
        return {"type": "translate", "a": self.a, "b": self.b}


@dataclass(frozen=True)
class SwapWarps:
    """Interchange warps at positions i and i+1 (cyclic, 1-based)."""

    i: int

    def __str__(self) -> str:
        return f"W({self.i})"

    def to_json(self) -> dict:
        return {"type": "swap_warps", "i": self.i}


@dataclass(frozen=True)
class SwapWefts:
    """Interchange wefts at positions j and j+1 (cyclic, 1-based)."""

    j: int

    def __str__(self) -> str:
        return f"F({self.j})"

    def to_json(self) -> dict:
        return {"type": "swap_wefts", "j": self.j}


Move = Union[Translate, SwapWarps, SwapWefts]
MoveSequence = tuple  # tuple[Move, ...]


def move_from_json(d: dict) -> Move:
    t = d.get("type")
    if t == "translate":
        return Translate(int(d["a"]), int(d["b"]))
    if t == "swap_warps":
        return SwapWarps(int(d["i"]))
    if t == "swap_wefts":
        return SwapWefts(int(d["j"]))
    raise WeaveError(f"unknown move type {t!r}")


def _check_index(mv: Move, M: CrossingMatrix) -> None:
    if isinstance(mv, SwapWarps) and not 1 <= mv.i <= M.m:
        raise MoveIndexError(f"warp position {mv.i} out of range 1..{M.m}")
    if isinstance(mv, SwapWefts) and not 1 <= mv.j <= M.n:
        raise MoveIndexError(f"weft position {mv.j} out of range 1..{M.n}")


def can_apply(M: CrossingMatrix, mv: Move) -> bool:
    _check_index(mv, M)
    if isinstance(mv, Translate):
        return True
    if isinstance(mv, SwapWarps):
        p = mv.i - 1
        return comparable_bits(M.rows[p], M.rows[(p + 1) % M.m])
    if isinstance(mv, SwapWefts):
        cols = M.columns
        p = mv.j - 1
        return comparable_bits(cols[p], cols[(p + 1) % M.n])
    raise TypeError(f"not a move: {mv!r}")


def translate_rows(rows: Sequence[int], m: int, n: int, a: int, b: int) -> tuple[int, ...]:
    if m == 0:
        return tuple(rows)
    a %= m
    src = rows[a:] + rows[:a]
    if n == 0 or b % n == 0:
        return tuple(src)
    return tuple(rotate_left(r, b, n) for r in src)


def apply(M: CrossingMatrix, mv: Move) -> CrossingMatrix:
    if not can_apply(M, mv):
        raise IllegalMoveError(f"{mv} is illegal on {M}: neighbours are not comparable")
    m, n = M.m, M.n
    if isinstance(mv, Translate):
        return CrossingMatrix(m, n, translate_rows(M.rows, m, n, mv.a, mv.b))
    if isinstance(mv, SwapWarps):
        p, q = mv.i - 1, mv.i % m
        rows = list(M.rows)
        rows[p], rows[q] = rows[q], rows[p]
        return CrossingMatrix(m, n, tuple(rows))
    p, q = mv.j - 1, mv.j % n
    return CrossingMatrix(m, n, tuple(swap_bits(r, p, q, n) for r in M.rows))


def replay(M: CrossingMatrix, moves: Iterable[Move]) -> CrossingMatrix:
    """Apply moves in order; raises IllegalMoveError at the first illegal one."""
    for mv in moves:
        M = apply(M, mv)
    return M


# -- symmetries --------------------------------------------------------------


def transpose_dual(M: CrossingMatrix) -> CrossingMatrix:
    """Exchange warps and wefts: the n×m matrix with ``c'(j, i) = 1 - c(i, j)``."""
    mask = _mask(M.m)
    return CrossingMatrix(M.n, M.m, tuple(col ^ mask for col in M.columns))


def reflect_warps(M: CrossingMatrix) -> CrossingMatrix:
    return CrossingMatrix(M.m, M.n, M.rows[::-1])


def reflect_wefts(M: CrossingMatrix) -> CrossingMatrix:
    return CrossingMatrix(M.m, M.n, tuple(reverse_bits(r, M.n) for r in M.rows))


def complement(M: CrossingMatrix) -> CrossingMatrix:
    mask = _mask(M.n)
    return CrossingMatrix(M.m, M.n, tuple(r ^ mask for r in M.rows))


# -- fingerprint -------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Cheap isotopy invariant used to reject non-isotopic pairs early.

    Pair entries are ``(smaller sum, larger sum, comparable)`` for every
    unordered pair of rows (columns); their comparable flags form the
    multiset of pairwise comparability flags.
    """

    total: int
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    row_pairs: tuple[tuple[int, int, bool], ...]
    col_pairs: tuple[tuple[int, int, bool], ...]

    @property
    def comparable_row_pairs(self) -> int:
        return sum(flag for *_, flag in self.row_pairs)

    @property
    def comparable_col_pairs(self) -> int:
        return sum(flag for *_, flag in self.col_pairs)


def _pair_profile(vecs: Sequence[int], sums: Sequence[int]) -> tuple[tuple[int, int, bool], ...]:
    out = []
    k = len(vecs)
    for a in range(k):
        va, sa = vecs[a], sums[a]
        for b in range(a + 1, k):
            vb, sb = vecs[b], sums[b]
            w = va | vb
            flag = w == va or w == vb
            out.append((sa, sb, flag) if sa <= sb else (sb, sa, flag))
    out.sort()
    return tuple(out)


def fingerprint(M: CrossingMatrix) -> Fingerprint:
    cols = M.columns
    rs = [bin(r).count("1") for r in M.rows]
    cs = [bin(c).count("1") for c in cols]
    return Fingerprint(
        total=sum(rs),
        row_sums=tuple(sorted(rs)),
        col_sums=tuple(sorted(cs)),
        row_pairs=_pair_profile(M.rows, rs),
        col_pairs=_pair_profile(cols, cs),
    )
