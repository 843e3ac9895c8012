"""Hyperbolicity of weaves from their diagrams.

An m×n weave with m, n >= 1 is hyperbolic exactly when it is not layered
and no two parallel components (equal crossing functions) can be brought
next to each other by interchanges.  Both obstructions are decided here
combinatorially:

* layering: orient each crossing from the lower strand to the upper one.
  A level torus separating the weave exists iff this digraph is not
  strongly connected.
* parallel pairs: two equal rows (or columns) f can be made adjacent iff
  on one of the two cyclic arcs between them every row is comparable with
  f.  Nothing can leave the arc without crossing an endpoint, and an arc
  of comparable rows can always be swept past an endpoint.
"""
from __future__ import annotations

import enum
import heapq
import itertools
from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

from .core import (
    ComponentId,
    CrossingMatrix,
    Kind,
    Move,
    SwapWarps,
    SwapWefts,
    WeaveError,
    Warp,
    Weft,
    comparable_bits,
    replay,
)
from .isotopy import DEFAULT_CAP, OrbitBudgetExceeded

# Volume of the regular ideal octahedron (≈ 3.6638).
V_OCT = 3.663862376708876


# -- layering ----------------------------------------------------------------


@dataclass(frozen=True)
class LayerDigraph:
    """Crossing digraph: one edge per crossing, from the lower strand to the upper."""

    vertices: tuple[ComponentId, ...]
    edges: tuple[tuple[ComponentId, ComponentId], ...]

    def successors(self) -> dict[ComponentId, list[ComponentId]]:
        out = {v: [] for v in self.vertices}
        for a, b in self.edges:
            out[a].append(b)
        return out


def layer_digraph(M: CrossingMatrix) -> LayerDigraph:
    verts = tuple(Warp(i) for i in range(1, M.m + 1)) + tuple(Weft(j) for j in range(1, M.n + 1))
    edges = []
    for i in range(1, M.m + 1):
        for j in range(1, M.n + 1):
            if M.entry(i, j):
                edges.append((Weft(j), Warp(i)))
            else:
                edges.append((Warp(i), Weft(j)))
    return LayerDigraph(verts, tuple(edges))


def strongly_connected_components(vertices, successors) -> list[list]:
    """Tarjan's algorithm, iterative.  Components come out sinks first."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    sccs: list[list] = []
    counter = itertools.count()
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors[root]))]
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors[w])))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    sccs.append(sorted(comp))
    return sccs


def ordered_layers(graph: LayerDigraph) -> list[list[ComponentId]]:
    """SCCs in topological order, bottom first; ties go to the smallest component id."""
    succ = graph.successors()
    sccs = strongly_connected_components(graph.vertices, succ)
    where = {v: k for k, comp in enumerate(sccs) for v in comp}
    indeg = [0] * len(sccs)
    out: list[set[int]] = [set() for _ in sccs]
    for a, b in graph.edges:
        ka, kb = where[a], where[b]
        if ka != kb and kb not in out[ka]:
            out[ka].add(kb)
            indeg[kb] += 1
    heap = [(sccs[k][0], k) for k in range(len(sccs)) if indeg[k] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, k = heapq.heappop(heap)
        order.append(sccs[k])
        for t in out[k]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(heap, (sccs[t][0], t))
    return order


@dataclass(frozen=True)
class LayerVerdict:
    layered: bool
    layers: tuple[tuple[ComponentId, ...], ...]

    def check(self, M: CrossingMatrix) -> bool:
        """Every crossing between distinct layers has the upper layer on top."""
        level = {v: k for k, layer in enumerate(self.layers) for v in layer}
        for i in range(1, M.m + 1):
            for j in range(1, M.n + 1):
                lw, lf = level[Warp(i)], level[Weft(j)]
                if lw > lf and M.entry(i, j) != 1:
                    return False
                if lw < lf and M.entry(i, j) != 0:
                    return False
        return True


def is_layered(M: CrossingMatrix) -> LayerVerdict:
    if M.m + M.n == 0:
        raise WeaveError("the empty weave has no layering")
    layers = ordered_layers(layer_digraph(M))
    return LayerVerdict(len(layers) >= 2, tuple(tuple(layer) for layer in layers))


def strongly_connected_fast(rows: Sequence[int], cols: Sequence[int], m: int, n: int) -> bool:
    """Bitmask version of 'the crossing digraph is strongly connected' for m, n >= 1."""
    full_m, full_n = (1 << m) - 1, (1 << n) - 1
    # warp i <-> bit (m-1-i) of a warp mask, weft j <-> bit (n-1-j) of a weft mask
    for forward in (True, False):
        seen_w, seen_f = 1 << (m - 1), 0
        frontier_w, frontier_f = seen_w, 0
        while frontier_w or frontier_f:
            new_f = 0
            for i in range(m):
                if frontier_w >> (m - 1 - i) & 1:
                    new_f |= (~rows[i] if forward else rows[i]) & full_n
            new_w = 0
            for j in range(n):
                if frontier_f >> (n - 1 - j) & 1:
                    new_w |= (cols[j] if forward else ~cols[j]) & full_m
            frontier_w, frontier_f = new_w & ~seen_w, new_f & ~seen_f
            seen_w |= new_w
            seen_f |= new_f
        if seen_w != full_m or seen_f != full_n:
            return False
    return True


# -- parallel pairs ----------------------------------------------------------


@dataclass(frozen=True)
class ParallelWitness:
    """Two same-kind components with equal crossing functions and a way to make them adjacent.

    ``indices`` are the original 1-based positions of the pair, ``arc`` the
    positions swept clear (None when found by search), ``moves`` the
    interchanges to replay and ``final_positions`` where the pair ends up.
    """

    kind: Kind
    indices: tuple[int, int]
    arc: tuple[int, ...] | None
    moves: tuple[Move, ...]
    final_positions: tuple[int, int]

    def check(self, M: CrossingMatrix) -> bool:
        N = replay(M, self.moves)
        size = N.m if self.kind is Kind.WARP else N.n
        p, q = self.final_positions
        if (q - p) % size not in (1, size - 1) and size > 1:
            return False
        get = N.row if self.kind is Kind.WARP else N.column
        return get(p) == get(q)


def find_parallel_arc(vecs: Sequence[int]):
    """First (a, b, sweep) with vecs[a] == vecs[b] and a clearable arc, else None.

    Positions are 0-based.  ``sweep`` is the endpoint that travels (a or b)
    and the returned arc lists the positions it passes, in order.
    """
    k = len(vecs)
    for a in range(k):
        for b in range(a + 1, k):
            f = vecs[a]
            if vecs[b] != f:
                continue
            inner = list(range(a + 1, b))
            if all(comparable_bits(vecs[t], f) for t in inner):
                return a, b, a, inner
            outer = [(b + 1 + t) % k for t in range(k - (b - a) - 1)]
            if all(comparable_bits(vecs[t], f) for t in outer):
                return a, b, b, outer
    return None


def has_parallel_arc(vecs: Sequence[int]) -> bool:
    return find_parallel_arc(vecs) is not None


def parallel_pair_reachable(M: CrossingMatrix) -> ParallelWitness | None:
    if M.m < 1 or M.n < 1:
        raise WeaveError("parallel pairs are defined for m, n >= 1")
    for kind, vecs, swap in ((Kind.WARP, M.rows, SwapWarps), (Kind.WEFT, M.columns, SwapWefts)):
        found = find_parallel_arc(vecs)
        if found is None:
            continue
        a, b, mover, arc = found
        size = len(vecs)
        # sweep the moving endpoint forward past each arc member in turn
        moves = tuple(swap((mover + t) % size + 1) for t in range(len(arc)))
        end = (mover + len(arc)) % size
        other = b if mover == a else a
        return ParallelWitness(
            kind=kind,
            indices=(a + 1, b + 1),
            arc=tuple(t + 1 for t in arc),
            moves=moves,
            final_positions=(end + 1, other + 1),
        )
    return None


def _adjacent_equal(vecs: Sequence[int]):
    k = len(vecs)
    if k < 2:
        return None
    for p in range(k if k > 2 else 1):
        q = (p + 1) % k
        if vecs[p] == vecs[q]:
            return p, q
    return None


def _arrangement_search(vecs: Sequence[int], cap: int):
    """BFS over cyclic arrangements of ``vecs`` under swaps of adjacent comparable entries.

    Returns (parent, state, p, q) for the first arrangement with equal
    neighbours at p, q, else None.  States are tuples of original slots.
    """
    k = len(vecs)
    if k < 2:
        return None
    seed = tuple(range(k))
    parent = {tuple(vecs): None}
    queue = deque([seed])
    while queue:
        perm = queue.popleft()
        cur = tuple(vecs[s] for s in perm)
        hit = _adjacent_equal(cur)
        if hit is not None:
            return parent, cur, perm, hit
        for p in range(k if k > 2 else 1):
            q = (p + 1) % k
            if not comparable_bits(cur[p], cur[q]):
                continue
            nxt = list(perm)
            nxt[p], nxt[q] = nxt[q], nxt[p]
            key = tuple(vecs[s] for s in nxt)
            if key in parent:
                continue
            parent[key] = (cur, p)
            if len(parent) > cap:
                raise OrbitBudgetExceeded(cap)
            queue.append(tuple(nxt))
    return None


def parallel_pair_oracle(M: CrossingMatrix, cap: int = DEFAULT_CAP) -> ParallelWitness | None:
    """Search the interchange orbit for a state with two adjacent equal components.

    Weft interchanges neither change which warp interchanges are legal nor
    which warps are equal, so the orbit is a product and the warp and weft
    factors are searched separately.
    """
    if M.m < 1 or M.n < 1:
        raise WeaveError("parallel pairs are defined for m, n >= 1")
    for kind, vecs, swap in ((Kind.WARP, M.rows, SwapWarps), (Kind.WEFT, M.columns, SwapWefts)):
        found = _arrangement_search(vecs, cap)
        if found is None:
            continue
        parent, cur, perm, (p, q) = found
        moves = []
        while parent[cur] is not None:
            cur, pos = parent[cur]
            moves.append(swap(pos + 1))
        i0, i1 = sorted((perm[p] + 1, perm[q] + 1))
        return ParallelWitness(kind, (i0, i1), None, tuple(reversed(moves)), (p + 1, q + 1))
    return None


# -- verdicts ----------------------------------------------------------------


class Verdict(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    LAYERED = "layered"
    PARALLEL = "parallel"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class HyperbolicityVerdict:
    verdict: Verdict
    layering: LayerVerdict | None = None
    parallel: ParallelWitness | None = None

    @property
    def hyperbolic(self) -> bool:
        return self.verdict is Verdict.HYPERBOLIC

    def __str__(self) -> str:
        if self.verdict is Verdict.HYPERBOLIC:
            return "hyperbolic"
        if self.verdict is Verdict.NOT_APPLICABLE:
            return "not applicable"
        return f"not hyperbolic: {self.verdict.value}"


def is_hyperbolic(M: CrossingMatrix) -> HyperbolicityVerdict:
    if M.m == 0 or M.n == 0:
        return HyperbolicityVerdict(Verdict.NOT_APPLICABLE)
    layering = is_layered(M)
    if layering.layered:
        return HyperbolicityVerdict(Verdict.LAYERED, layering=layering)
    witness = parallel_pair_reachable(M)
    if witness is not None:
        return HyperbolicityVerdict(Verdict.PARALLEL, layering=layering, parallel=witness)
    return HyperbolicityVerdict(Verdict.HYPERBOLIC, layering=layering)


def hyperbolic_flag(rows: Sequence[int], cols: Sequence[int], m: int, n: int) -> bool:
    """Fast boolean form of is_hyperbolic for enumeration loops."""
    if m == 0 or n == 0:
        return False
    if not strongly_connected_fast(rows, cols, m, n):
        return False
    return not (has_parallel_arc(rows) or has_parallel_arc(cols))


def is_pi_hyperbolic(M: CrossingMatrix) -> bool:
    # a hyperbolic weave has no essential Conway sphere, hence is π-hyperbolic
    return is_hyperbolic(M).hyperbolic


def adjacent_comparable_free(rows: Sequence[int], cols: Sequence[int]) -> bool:
    for vecs in (rows, cols):
        k = len(vecs)
        for p in range(k):
            if comparable_bits(vecs[p], vecs[(p + 1) % k]):
                return False
    return True


def no_adjacent_comparable(M: CrossingMatrix) -> bool:
    if M.m < 2 or M.n < 2:
        raise WeaveError("needs m, n >= 2")
    return adjacent_comparable_free(M.rows, M.columns)


def volume_upper_bound(M: CrossingMatrix | int, n: int | None = None) -> float:
    """mn·V_oct, from the decomposition of the complement into mn ideal octahedra."""
    if isinstance(M, CrossingMatrix):
        m, n = M.shape
    else:
        m = M
        if n is None:
            raise TypeError("volume_upper_bound(m, n) needs both dimensions")
    return m * n * V_OCT


# -- JSJ-style decomposition -------------------------------------------------


class PieceKind(enum.Enum):
    HYPERBOLIC_WEAVE = "hyperbolic_weave"
    AXIS_ONLY_WEAVE = "axis_only_weave"
    PARALLEL_FAMILY = "solid_torus_parallel_family"


@dataclass(frozen=True)
class JsjPiece:
    """One piece of the report.

    ``components`` lists the original components the piece contains;
    those also in ``cores`` stand in for the core of an already collapsed
    parallel family rather than for a strand of the weave.
    """

    kind: PieceKind
    components: tuple[ComponentId, ...]
    cores: tuple[ComponentId, ...] = ()
    matrix: CrossingMatrix | None = None

    @property
    def multiplicity(self) -> int:
        return len(self.components)

    @property
    def family_kind(self) -> Kind | None:
        if self.kind is not PieceKind.PARALLEL_FAMILY:
            return None
        return self.components[0].kind

    @property
    def strands(self) -> tuple[ComponentId, ...]:
        return tuple(c for c in self.components if c not in self.cores)


@dataclass(frozen=True)
class JsjReport:
    pieces: tuple[JsjPiece, ...]

    def strand_count(self) -> Counter:
        return Counter(c for p in self.pieces for c in p.strands)

    def conserves(self, M: CrossingMatrix) -> bool:
        expected = Counter(layer_digraph(M).vertices)
        return self.strand_count() == expected


class _Sub:
    """A sub-weave: warps/wefts of the original in cyclic order, plus collapsed cores."""

    def __init__(self, M: CrossingMatrix, warps, wefts, cores=frozenset()):
        self.M = M
        self.warps = list(warps)
        self.wefts = list(wefts)
        self.cores = frozenset(cores)

    def matrix(self) -> CrossingMatrix:
        raw = [[self.M.entry(w.index, f.index) for f in self.wefts] for w in self.warps]
        return CrossingMatrix.from_lists(raw, n=len(self.wefts))

    def comps(self) -> list[ComponentId]:
        return self.warps + self.wefts

    def core_list(self, comps) -> tuple[ComponentId, ...]:
        return tuple(c for c in comps if c in self.cores)


def _merge_axis_layers(layers: list[list[ComponentId]]) -> list[list[ComponentId]]:
    # a stack of single warps (or single wefts) is one Seifert fibred piece, not several
    merged: list[list[ComponentId]] = []
    for layer in layers:
        if (
            merged
            and len(layer) == 1
            and all(c.kind is layer[0].kind for c in merged[-1])
        ):
            merged[-1] = merged[-1] + layer
        else:
            merged.append(list(layer))
    return merged


def _parallel_families(vecs: Sequence[int]) -> list[list[int]]:
    """Groups of >= 2 positions linked by interchange-reachable equal pairs."""
    k = len(vecs)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(k):
        for b in range(a + 1, k):
            f = vecs[a]
            if vecs[b] != f:
                continue
            inner = range(a + 1, b)
            outer = [(b + 1 + t) % k for t in range(k - (b - a) - 1)]
            if all(comparable_bits(vecs[t], f) for t in inner) or all(
                comparable_bits(vecs[t], f) for t in outer
            ):
                parent[find(b)] = find(a)
    groups: dict[int, list[int]] = {}
    for x in range(k):
        groups.setdefault(find(x), []).append(x)
    return [g for g in groups.values() if len(g) >= 2]


def _decompose(sub: _Sub) -> list[JsjPiece]:
    comps = sub.comps()
    if not sub.warps or not sub.wefts:
        if len(comps) >= 2:
            rep = comps[0]
            family = JsjPiece(PieceKind.PARALLEL_FAMILY, tuple(comps), sub.core_list(comps))
            rest = _Sub(sub.M, [c for c in sub.warps if c == rep], [c for c in sub.wefts if c == rep],
                        sub.cores | {rep})
            return [family] + _decompose(rest)
        return [JsjPiece(PieceKind.AXIS_ONLY_WEAVE, tuple(comps), sub.core_list(comps), sub.matrix())]

    mat = sub.matrix()
    local = layer_digraph(mat)
    layers = ordered_layers(local)
    if len(layers) >= 2:
        back = {Warp(k + 1): w for k, w in enumerate(sub.warps)}
        back.update({Weft(k + 1): f for k, f in enumerate(sub.wefts)})
        pieces = []
        for layer in _merge_axis_layers(layers):
            ids = {back[c] for c in layer}
            pieces += _decompose(_Sub(
                sub.M,
                [w for w in sub.warps if w in ids],
                [f for f in sub.wefts if f in ids],
                sub.cores & ids,
            ))
        return pieces

    families = []
    drop: set[ComponentId] = set()
    reps: set[ComponentId] = set()
    for members, vecs in ((sub.warps, mat.rows), (sub.wefts, mat.columns)):
        for group in _parallel_families(vecs):
            fam = tuple(members[t] for t in group)
            families.append(JsjPiece(PieceKind.PARALLEL_FAMILY, fam, sub.core_list(fam)))
            reps.add(fam[0])
            drop.update(fam[1:])
    if not families:
        return [JsjPiece(PieceKind.HYPERBOLIC_WEAVE, tuple(comps), sub.core_list(comps), mat)]
    rest = _Sub(
        sub.M,
        [w for w in sub.warps if w not in drop],
        [f for f in sub.wefts if f not in drop],
        (sub.cores - drop) | reps,
    )
    return families + _decompose(rest)


def jsj_report(M: CrossingMatrix) -> JsjReport:
    """Split along layers, collapse parallel families, repeat until nothing changes."""
    if M.m + M.n == 0:
        raise WeaveError("the empty weave has no decomposition")
    warps = [Warp(i) for i in range(1, M.m + 1)]
    wefts = [Weft(j) for j in range(1, M.n + 1)]
    return JsjReport(tuple(_decompose(_Sub(M, warps, wefts))))
