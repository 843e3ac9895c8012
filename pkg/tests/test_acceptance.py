"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v``.  Time limits
are asserted as part of each criterion.
"""
import math
import random
import time
from contextlib import contextmanager

import pytest

from weaves.census import CensusConfig, census, lower_bound, upper_bound
from weaves.core import CrossingMatrix, fingerprint
from weaves.generators import plain, satin, twill
from weaves.hyperbolicity import (
    V_OCT,
    Verdict,
    is_hyperbolic,
    is_layered,
    parallel_pair_oracle,
    parallel_pair_reachable,
    volume_upper_bound,
)
from weaves.isotopy import canonical_form, is_isotopic, orbit
from weaves.oracles import layered_by_partition, parallel_reachable_by_bfs

RANDOM_SAMPLES = 10_000
SEED = 20240517


def grid(A):
    return tuple(tuple(r) for r in A.to_lists())


def every(m, n):
    for key in range(1 << (m * n)):
        yield CrossingMatrix.from_key(m, n, key)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, title: str, limit: float):
        t0 = time.perf_counter()
        status, note = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - t0
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit:g}s"
            status = "PASS"
        except AssertionError as exc:
            note = f" -- {str(exc).splitlines()[0] if str(exc) else 'assertion failed'}"
            raise
        finally:
            elapsed = time.perf_counter() - t0
            with capsys.disabled():
                print(f"\n[{status}] criterion {number}: {title} ({elapsed:.2f}s){note}")
    return run


def test_criterion_1_unique_hyperbolic_2x2(criterion):
    with criterion(1, "census(2,2).classes_isotopy_hyp == 1", 1.0):
        row = census(2, 2)
        assert row.total == 16
        assert row.classes_isotopy_hyp == 1, row


def test_criterion_2_two_hyperbolic_3x3_up_to_homeomorphism(criterion):
    with criterion(2, "census(3,3).classes_homeo_hyp == 2", 5.0):
        row = census(3, 3)
        assert row.total == 512
        assert row.classes_homeo_hyp == 2, row


def test_criterion_3_basic_weaves(criterion):
    with criterion(3, "plain/twill/satin 8x8 hyperbolic and pairwise non-isotopic", 5.0):
        weaves = {
            "plain": plain(8, 8).matrix,
            "twill": twill(8, 8, 2, 2).matrix,
            "satin": satin(8, 3).matrix,
        }
        for name, A in weaves.items():
            assert A.shape == (8, 8)
            assert is_hyperbolic(A).verdict is Verdict.HYPERBOLIC, name
        names = list(weaves)
        forms = {name: canonical_form(A).matrix for name, A in weaves.items()}
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                assert forms[a] != forms[b], (a, b)
                assert not is_isotopic(weaves[a], weaves[b]), (a, b)


def test_criterion_4_column_weaves_are_layered(criterion):
    with criterion(4, "every m x 1 weave (m <= 6) is layered", 1.0):
        for m in range(1, 7):
            for A in every(m, 1):
                assert is_layered(A).layered, A
                assert is_hyperbolic(A).verdict is Verdict.LAYERED, A


def test_criterion_5_counting_bounds(criterion):
    with criterion(5, "n_hyp <= (2^m-2)^n, lower <= n_nc <= n_hyp for 2 <= m,n <= 4", 60.0):
        for m in range(2, 5):
            for n in range(2, 5):
                row = census(m, n, CensusConfig(classes=False))
                assert row.total == 2 ** (m * n)
                assert row.n_hyp <= upper_bound(m, n) == (2**m - 2) ** n, row
                formula = 2 ** (m * n) - 2 * m * 2 ** ((m - 2) * n) * 3**n - 2 * n * 2 ** (m * (n - 2)) * 3**m
                assert lower_bound(m, n) == formula
                assert row.n_nc >= max(0, formula), row
                assert row.n_nc <= row.n_hyp, row


def test_criterion_6_oracle_equivalences(criterion):
    with criterion(6, "SCC vs partition layering; arc criterion vs interchange BFS", 300.0):
        disagreements = []
        for m in range(1, 7):
            for n in range(1, 8 - m):
                for A in every(m, n):
                    if is_layered(A).layered != (layered_by_partition(grid(A), m, n) is not None):
                        disagreements.append(("layering", A))

        def compare(A, full_search):
            w = parallel_pair_reachable(A)
            o = parallel_pair_oracle(A)
            if (w is None) != (o is None):
                disagreements.append(("arc", A))
            if full_search and (o is None) == parallel_reachable_by_bfs(grid(A), A.m, A.n):
                disagreements.append(("orbit", A))
            for wit in (w, o):
                if wit is not None and not wit.check(A):
                    disagreements.append(("witness", A))

        for m in range(1, 4):
            for n in range(1, 4):
                for A in every(m, n):
                    compare(A, full_search=True)
        rng = random.Random(SEED)
        for side in (4, 5):
            for _ in range(RANDOM_SAMPLES):
                compare(CrossingMatrix.from_key(side, side, rng.getrandbits(side * side)), False)
        assert not disagreements, disagreements[:5]


def test_criterion_7_isotopy_invariance(criterion):
    with criterion(7, "fingerprint and verdict constant on orbits; orbit sizes sum to 2^(mn)", 120.0):
        for m in range(1, 4):
            for n in range(1, 4):
                seen = set()
                total = 0
                for A in every(m, n):
                    if A.rows in seen:
                        continue
                    orb = orbit(A)
                    seen.update(orb.parent)
                    total += orb.size
                    fp, verdict = fingerprint(A), is_hyperbolic(A).verdict
                    for X in orb:
                        assert fingerprint(X) == fp, (A, X)
                        assert is_hyperbolic(X).verdict is verdict, (A, X)
                assert total == 2 ** (m * n), (m, n, total)


def test_criterion_8_volume_bound(criterion):
    with criterion(8, "vol bound 4 V_oct ~ 14.6554; 24.0921, 26.7879 < 9 V_oct", 1.0):
        assert math.isclose(volume_upper_bound(2, 2), 14.6554, abs_tol=1e-3)
        assert volume_upper_bound(2, 2) == 4 * V_OCT
        assert 24.0921 < 9 * V_OCT and 26.7879 < 9 * V_OCT
        assert volume_upper_bound(3, 3) == 9 * V_OCT
