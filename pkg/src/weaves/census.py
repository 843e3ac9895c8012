"""Exhaustive census of m×n weaving diagrams.

Every one of the 2^(mn) crossing functions is visited in integer order of
its row-major bit string.  Orbits are computed once and memoized, and each
isotopy (homeomorphism) class is credited to its least member, so shards
of the index range can be counted independently and summed.
"""
from __future__ import annotations

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Iterator

from .core import CrossingMatrix, WeaveError, columns_of
from .hyperbolicity import adjacent_comparable_free, hyperbolic_flag
from .isotopy import DEFAULT_CAP, SYMMETRIES, move_neighbours, _bfs

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "m", "n", "total", "n_hyp", "n_nc", "classes_isotopy", "classes_isotopy_hyp",
    "classes_homeo_hyp", "upper_bound", "lower_bound",
)


class CensusCeilingError(WeaveError):
    pass


@dataclass(frozen=True)
class CensusConfig:
    max_cells: int = 25
    jobs: int = 1
    cap: int = DEFAULT_CAP
    classes: bool = True
    shards_per_job: int = 4


@dataclass(frozen=True)
class CensusRow:
    m: int
    n: int
    total: int
    n_hyp: int
    n_nc: int
    classes_isotopy: int | None
    classes_isotopy_hyp: int | None
    classes_homeo_hyp: int | None
    upper_bound: int
    lower_bound: int | None

    def as_csv(self) -> dict:
        return {k: "" if v is None else v for k, v in asdict(self).items()}


def upper_bound(m: int, n: int) -> int:
    return (2**m - 2) ** n


def lower_bound(m: int, n: int) -> int | None:
    """Raw lower-bound formula for the no-adjacent-comparable count; None unless m, n >= 2."""
    if m < 2 or n < 2:
        return None
    return 2 ** (m * n) - 2 * m * 2 ** ((m - 2) * n) * 3**n - 2 * n * 2 ** (m * (n - 2)) * 3**m


def _check_ceiling(m: int, n: int, config: CensusConfig) -> None:
    if m < 1 or n < 1:
        raise CensusCeilingError("census needs m, n >= 1")
    if m * n > config.max_cells:
        raise CensusCeilingError(f"{m}x{n} exceeds the ceiling of {config.max_cells} cells")


def enumerate_weaves(m: int, n: int, config: CensusConfig = CensusConfig()) -> Iterator[CrossingMatrix]:
    _check_ceiling(m, n, config)
    for key in range(1 << (m * n)):
        yield CrossingMatrix.from_key(m, n, key)


def _count_shard(m: int, n: int, start: int, stop: int, cap: int, classes: bool) -> dict[str, int]:
    counts = dict.fromkeys(
        ("total", "n_hyp", "n_nc", "classes_isotopy", "classes_isotopy_hyp", "classes_homeo_hyp"), 0
    )
    canon: dict[tuple[int, ...], tuple[int, ...]] = {}
    hyp_of: dict[tuple[int, ...], bool] = {}
    hyp_orbits: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    nc_applies = m >= 2 and n >= 2
    for key in range(start, stop):
        x = CrossingMatrix.from_key(m, n, key).rows
        cols = columns_of(x, m, n)
        counts["total"] += 1
        if nc_applies and adjacent_comparable_free(x, cols):
            counts["n_nc"] += 1
        if not classes:
            counts["n_hyp"] += hyperbolic_flag(x, cols, m, n)
            continue
        if x not in canon:
            members = _bfs(CrossingMatrix(m, n, x), cap, move_neighbours)
            least = min(members)
            for y in members:
                canon[y] = least
            hyp_of[least] = hyperbolic_flag(least, columns_of(least, m, n), m, n)
            if hyp_of[least]:
                hyp_orbits[least] = list(members)
        least = canon[x]
        hyp = hyp_of[least]
        counts["n_hyp"] += hyp
        if x != least:
            continue
        counts["classes_isotopy"] += 1
        if hyp:
            counts["classes_isotopy_hyp"] += 1
            if _is_homeo_least(m, n, x, hyp_orbits.pop(x)):
                counts["classes_homeo_hyp"] += 1
    return counts


def _is_homeo_least(m: int, n: int, x: tuple[int, ...], members: list) -> bool:
    """Whether x, least in its orbit ``members``, is least among m×n diagrams of its homeomorphism class."""
    for rows in members:
        X = CrossingMatrix(m, n, rows)
        for g in SYMMETRIES:
            Y = g(X)
            if Y.shape == (m, n) and Y.rows < x:
                return False
    return True


def _shards(total: int, count: int) -> list[tuple[int, int]]:
    count = max(1, min(count, total))
    bounds = [total * k // count for k in range(count + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(count)]


def census(m: int, n: int, config: CensusConfig = CensusConfig()) -> CensusRow:
    _check_ceiling(m, n, config)
    total = 1 << (m * n)
    if config.jobs <= 1:
        parts = [_count_shard(m, n, 0, total, config.cap, config.classes)]
    else:
        shards = _shards(total, config.jobs * config.shards_per_job)
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [
                pool.submit(_count_shard, m, n, a, b, config.cap, config.classes) for a, b in shards
            ]
            parts = [f.result() for f in futures]
    merged = {k: sum(p[k] for p in parts) for k in parts[0]}
    log.info("census %dx%d: %s", m, n, merged)
    cls = (lambda k: merged[k]) if config.classes else (lambda k: None)
    return CensusRow(
        m=m,
        n=n,
        total=merged["total"],
        n_hyp=merged["n_hyp"],
        n_nc=merged["n_nc"],
        classes_isotopy=cls("classes_isotopy"),
        classes_isotopy_hyp=cls("classes_isotopy_hyp"),
        classes_homeo_hyp=cls("classes_homeo_hyp"),
        upper_bound=upper_bound(m, n),
        lower_bound=lower_bound(m, n),
    )


def bound_check(row: CensusRow) -> bool:
    """The counting bounds: n_hyp <= (2^m-2)^n and, for m, n >= 2, lower <= n_nc <= n_hyp."""
    if row.n_hyp > row.upper_bound:
        return False
    if row.m >= 2 and row.n >= 2:
        if row.n_nc < max(0, row.lower_bound) or row.n_nc > row.n_hyp:
            return False
    return True


@dataclass(frozen=True)
class TrendRow:
    n: int
    fixed_m_ratio: Fraction
    square_ratio: Fraction

    @property
    def fixed_m_bound(self) -> Fraction:
        # (1 - 2^(1-m))^n with m = 2
        return Fraction(1, 2) ** self.n


def proportion_trend(max_n: int, config: CensusConfig = CensusConfig(classes=False)) -> list[TrendRow]:
    """Exact hyperbolic proportions for 2×n and n×n diagrams, n = 1..max_n."""
    rows = []
    for n in range(1, max_n + 1):
        two = census(2, n, config)
        square = census(n, n, config)
        rows.append(TrendRow(
            n,
            Fraction(two.n_hyp, two.total),
            Fraction(square.n_hyp, square.total),
        ))
    return rows


def write_csv(rows: list[CensusRow], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        w.writeheader()
        for row in rows:
            w.writerow(row.as_csv())


def read_csv(path) -> list[CensusRow]:
    out = []
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            vals = {f.name: (None if rec[f.name] == "" else int(rec[f.name])) for f in fields(CensusRow)}
            out.append(CensusRow(**vals))
    return out
