"""Brute-force reference procedures for small weaves.

Everything here works on plain tuples of tuples of 0/1 and deliberately
shares no code with the rest of the package, so it can be used to
cross-check the fast decision procedures and to produce the pinned
regression constants in ``scripts/pin_census.py``.

Nothing here is meant to be fast.  Layering is decided by enumerating all
bipartitions of the components, parallel-pair reachability by walking the
whole interchange orbit, and isotopy / homeomorphism classes by union-find
over every single move.
"""
from __future__ import annotations

import itertools
from collections import deque

Grid = tuple[tuple[int, ...], ...]


def all_grids(m: int, n: int):
    for bits in itertools.product((0, 1), repeat=m * n):
        yield tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(m))


def _columns(c: Grid, n: int) -> list[tuple[int, ...]]:
    return [tuple(row[j] for row in c) for j in range(n)]


def _leq(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def _comparable(u, v) -> bool:
    return _leq(u, v) or _leq(v, u)


def layered_by_partition(c: Grid, m: int, n: int):
    """Return an (upper, lower) split of the components, or None.

    Components are ``("warp", i)`` / ``("weft", j)`` with 0-based indices.
    A split is valid when every warp in the upper part passes over every
    weft in the lower part and vice versa.
    """
    comps = [("warp", i) for i in range(m)] + [("weft", j) for j in range(n)]
    k = len(comps)
    for mask in range(1, (1 << k) - 1):
        upper = {comps[t] for t in range(k) if mask >> t & 1}
        ok = True
        for i in range(m):
            for j in range(n):
                wu = ("warp", i) in upper
                fu = ("weft", j) in upper
                if wu and not fu and c[i][j] != 1:
                    ok = False
                elif fu and not wu and c[i][j] != 0:
                    ok = False
                if not ok:
                    break
            if not ok:
                break
        if ok:
            lower = [x for x in comps if x not in upper]
            return sorted(upper), lower
    return None


def _has_adjacent_equal(c: Grid, m: int, n: int) -> bool:
    if m >= 2:
        for i in range(m):
            if c[i] == c[(i + 1) % m] and i != (i + 1) % m:
                return True
    if n >= 2:
        cols = _columns(c, n)
        for j in range(n):
            if cols[j] == cols[(j + 1) % n]:
                return True
    return False


def _swap_neighbours(c: Grid, m: int, n: int):
    if m >= 2:
        for i in range(m):
            k = (i + 1) % m
            if _comparable(c[i], c[k]):
                rows = list(c)
                rows[i], rows[k] = rows[k], rows[i]
                yield tuple(rows)
    if n >= 2:
        cols = _columns(c, n)
        for j in range(n):
            k = (j + 1) % n
            if _comparable(cols[j], cols[k]):
                yield tuple(
                    tuple(row[k] if t == j else row[j] if t == k else row[t] for t in range(n))
                    for row in c
                )


def parallel_reachable_by_bfs(c: Grid, m: int, n: int) -> bool:
    """True iff some interchange sequence yields two adjacent equal components."""
    seen = {c}
    queue = deque([c])
    while queue:
        x = queue.popleft()
        if _has_adjacent_equal(x, m, n):
            return True
        for y in _swap_neighbours(x, m, n):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def hyperbolic_oracle(c: Grid, m: int, n: int) -> bool:
    if m == 0 or n == 0:
        return False
    if layered_by_partition(c, m, n) is not None:
        return False
    return not parallel_reachable_by_bfs(c, m, n)


def no_adjacent_comparable_oracle(c: Grid, m: int, n: int) -> bool:
    cols = _columns(c, n)
    for i in range(m):
        if _comparable(c[i], c[(i + 1) % m]):
            return False
    for j in range(n):
        if _comparable(cols[j], cols[(j + 1) % n]):
            return False
    return True


def _translate(c: Grid, m: int, n: int, a: int, b: int) -> Grid:
    return tuple(tuple(c[(i + a) % m][(j + b) % n] for j in range(n)) for i in range(m))


def _move_neighbours(c: Grid, m: int, n: int):
    for a in range(m):
        for b in range(n):
            yield _translate(c, m, n, a, b)
    yield from _swap_neighbours(c, m, n)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def isotopy_classes_oracle(m: int, n: int) -> list[set[Grid]]:
    uf = _UnionFind()
    for c in all_grids(m, n):
        uf.find(c)
        for d in _move_neighbours(c, m, n):
            uf.union(c, d)
    classes: dict[Grid, set[Grid]] = {}
    for c in list(uf.parent):
        classes.setdefault(uf.find(c), set()).add(c)
    return list(classes.values())


def _symmetry_images(c: Grid, m: int, n: int):
    yield c[::-1], m, n  # reflect warps
    yield tuple(row[::-1] for row in c), m, n  # reflect wefts
    yield tuple(tuple(1 - x for x in row) for row in c), m, n  # depth flip
    # exchange warps and wefts; crossing over/under flips with the roles
    yield tuple(tuple(1 - c[i][j] for i in range(m)) for j in range(n)), n, m


def homeo_classes_oracle(m: int, n: int) -> list[set[tuple[int, int, Grid]]]:
    """Classes over m×n and n×m diagrams joined by moves and the four symmetries."""
    shapes = {(m, n), (n, m)}
    uf = _UnionFind()
    for mm, nn in shapes:
        for c in all_grids(mm, nn):
            node = (mm, nn, c)
            uf.find(node)
            for d in _move_neighbours(c, mm, nn):
                uf.union(node, (mm, nn, d))
            for d, m2, n2 in _symmetry_images(c, mm, nn):
                uf.union(node, (m2, n2, d))
    classes: dict = {}
    for node in list(uf.parent):
        classes.setdefault(uf.find(node), set()).add(node)
    return list(classes.values())


def census_oracle(m: int, n: int) -> dict[str, int]:
    """Counts from scratch: n_hyp, n_nc and class counts for one (m, n)."""
    hyp = {c: hyperbolic_oracle(c, m, n) for c in all_grids(m, n)}
    n_nc = 0
    if m >= 2 and n >= 2:
        n_nc = sum(no_adjacent_comparable_oracle(c, m, n) for c in hyp)
    iso = isotopy_classes_oracle(m, n)
    homeo = homeo_classes_oracle(m, n)
    homeo_hyp = 0
    for cls in homeo:
        members = [c for mm, nn, c in cls if (mm, nn) == (m, n)]
        if members and hyp[members[0]]:
            homeo_hyp += 1
    return {
        "total": len(hyp),
        "n_hyp": sum(hyp.values()),
        "n_nc": n_nc,
        "classes_isotopy": len(iso),
        "classes_isotopy_hyp": sum(1 for cls in iso if hyp[next(iter(cls))]),
        "classes_homeo_hyp": homeo_hyp,
    }
