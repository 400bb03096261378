"""Core digraph values and the four metric functionals d, d_m, r, r_m.

Vertices are labelled 1..n.  A digraph is loop-free and immutable; its arc
set is stored as a bitmask over the n*(n-1) ordered pairs in row-major
order ((1,2),(1,3),...,(1,n),(2,1),(2,3),...), so a digraph on up to five
vertices is a single machine word and doubles as an enumeration index.

Distances count arcs on shortest directed paths, with an explicit
infinity that absorbs addition and compares above every finite value.
The quasi-distance rho_m(x, y) = min(rho(x, y), rho(y, x)) induces the
quasi-diameter d_m and quasi-radius r_m alongside the ordinary diameter
d and out-radius r.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappush, heappop
from typing import Iterable, Iterator

from .errors import DuplicateArc, LoopArc, OutOfRange

__all__ = [
    "Distance",
    "INFINITY",
    "Digraph",
    "MetricProfile",
    "Condensation",
    "StructureFlags",
    "arc_bit",
    "bit_arc",
    "from_arc_list",
    "all_pairs_distances",
    "metric_profile",
    "condensation",
    "transitive_closure",
    "structure_flags",
    "reverse",
    "centers_and_quasicenters",
]


# ---------------------------------------------------------------------------
# Distance


class Distance:
    """A shortest-path length: a nonnegative arc count or infinity.

    Total order with INFINITY above every finite value; addition saturates
    at infinity.  Finite distances compare equal to plain ints.
    """

    __slots__ = ("_steps",)

    INFINITY: "Distance"  # assigned below

    def __init__(self, steps: int | None):
        if steps is not None:
            if not isinstance(steps, int):
                raise TypeError(f"distance steps must be int or None, got {steps!r}")
            if steps < 0:
                raise ValueError(f"distance cannot be negative: {steps}")
        self._steps = steps

    @classmethod
    def finite(cls, steps: int) -> "Distance":
        if steps is None:
            raise ValueError("finite distance requires an int")
        return _dist(steps)

    @property
    def is_infinite(self) -> bool:
        return self._steps is None

    @property
    def is_finite(self) -> bool:
        return self._steps is not None

    @property
    def steps(self) -> int | None:
        """Arc count, or None for infinity."""
        return self._steps

    def _key(self) -> int | float:
        return float("inf") if self._steps is None else self._steps

    @staticmethod
    def _other_key(other) -> int | float | None:
        if isinstance(other, Distance):
            return other._key()
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __eq__(self, other) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() == key

    def __hash__(self) -> int:
        return hash(self._key())

    def __lt__(self, other) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() < key

    def __le__(self, other) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() <= key

    def __gt__(self, other) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() > key

    def __ge__(self, other) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() >= key

    def __add__(self, other) -> "Distance":
        if isinstance(other, Distance):
            if self._steps is None or other._steps is None:
                return Distance.INFINITY
            return _dist(self._steps + other._steps)
        if isinstance(other, int):
            if self._steps is None:
                return Distance.INFINITY
            return _dist(self._steps + other)
        return NotImplemented

    __radd__ = __add__

    def __repr__(self) -> str:
        return "Distance.INFINITY" if self._steps is None else f"Distance({self._steps})"

    def __str__(self) -> str:
        return "inf" if self._steps is None else str(self._steps)


Distance.INFINITY = Distance(None)
INFINITY = Distance.INFINITY

_SMALL_DISTANCES = tuple(Distance(i) for i in range(64))


def _dist(steps: int) -> Distance:
    if 0 <= steps < 64:
        return _SMALL_DISTANCES[steps]
    return Distance(steps)


def _wrap(steps: int | None) -> Distance:
    return INFINITY if steps is None else _dist(steps)


# ---------------------------------------------------------------------------
# Bit layout of the arc set

def arc_bit(n: int, u: int, v: int) -> int:
    """Bit index of the ordered pair (u, v) in the row-major layout."""
    return (u - 1) * (n - 1) + (v - 1 if v < u else v - 2)


def bit_arc(n: int, bit: int) -> tuple[int, int]:
    """Ordered pair (u, v) stored at the given bit index."""
    u, col = divmod(bit, n - 1)
    v = col if col < u else col + 1
    return u + 1, v + 1


# ---------------------------------------------------------------------------
# Digraph


class Digraph:
    """Immutable loop-free digraph on vertices 1..n."""

    __slots__ = ("n", "mask", "_out", "_arcs")

    def __init__(self, n: int, mask: int):
        if n < 1:
            raise OutOfRange(f"vertex count must be positive, got {n}")
        if mask < 0 or mask >> (n * (n - 1)):
            raise OutOfRange(f"arc mask out of range for n={n}")
        self.n = n
        self.mask = mask
        self._out = _out_masks(n, mask)
        self._arcs: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Digraph":
        return cls(n, mask)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """All arcs as 1-based pairs, in row-major order."""
        if self._arcs is None:
            n, mask = self.n, self.mask
            pairs = []
            while mask:
                low = mask & -mask
                pairs.append(bit_arc(n, low.bit_length() - 1))
                mask ^= low
            self._arcs = tuple(pairs)
        return self._arcs

    @property
    def arc_count(self) -> int:
        return self.mask.bit_count()

    def has_arc(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        return bool(self.mask >> arc_bit(self.n, u, v) & 1)

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        """Successors of u in increasing label order."""
        self._check_vertex(u)
        return tuple(v + 1 for v in _bits(self._out[u - 1]))

    def in_neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        bit = 1 << (u - 1)
        return tuple(w + 1 for w in range(self.n) if self._out[w] & bit)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def _check_vertex(self, u: int) -> None:
        if not 1 <= u <= self.n:
            raise OutOfRange(f"vertex {u} not in 1..{self.n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)!r})"


def _out_masks(n: int, mask: int) -> tuple[int, ...]:
    """Per-vertex successor bitmasks (bit v-1 set iff arc u -> v)."""
    row_width = n - 1
    row_mask = (1 << row_width) - 1
    out = []
    for u in range(n):
        row = (mask >> (u * row_width)) & row_mask
        below = row & ((1 << u) - 1)
        above = (row >> u) << (u + 1)
        out.append(below | above)
    return tuple(out)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_arc_list(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph from 1-based ordered pairs, rejecting bad input."""
    if n < 1:
        raise OutOfRange(f"vertex count must be positive, got {n}")
    mask = 0
    for u, v in arcs:
        if not (1 <= u <= n and 1 <= v <= n):
            raise OutOfRange(f"arc ({u},{v}) has an endpoint outside 1..{n}")
        if u == v:
            raise LoopArc(f"loop arc ({u},{v}) is not allowed")
        bit = 1 << arc_bit(n, u, v)
        if mask & bit:
            raise DuplicateArc(f"arc ({u},{v}) given more than once")
        mask |= bit
    return Digraph(n, mask)


# ---------------------------------------------------------------------------
# Metric profile


@dataclass(frozen=True)
class MetricProfile:
    """Distance matrices and the four metric invariants of one digraph.

    Matrices are indexed 0-based; use distance()/distance_m() for 1-based
    access.  ecc_out[x] = max_y rho(x, y) and ecc_m[x] = max_y rho_m(x, y).
    """

    rho: tuple[tuple[Distance, ...], ...]
    rho_m: tuple[tuple[Distance, ...], ...]
    d: Distance
    d_m: Distance
    r: Distance
    r_m: Distance
    ecc_out: tuple[Distance, ...]
    ecc_m: tuple[Distance, ...]

    def distance(self, u: int, v: int) -> Distance:
        return self.rho[u - 1][v - 1]

    def distance_m(self, u: int, v: int) -> Distance:
        return self.rho_m[u - 1][v - 1]


def _bfs_row(out: tuple[int, ...], src: int, n: int) -> list[int | None]:
    """Shortest arc counts from src to every vertex (None = unreachable)."""
    dist: list[int | None] = [None] * n
    dist[src] = 0
    seen = 1 << src
    frontier = 1 << src
    level = 0
    while frontier:
        reach = 0
        for u in _bits(frontier):
            reach |= out[u]
        frontier = reach & ~seen
        seen |= frontier
        level += 1
        for v in _bits(frontier):
            dist[v] = level
    return dist


def _raw_distances(g: Digraph) -> list[list[int | None]]:
    return [_bfs_row(g._out, src, g.n) for src in range(g.n)]


def _raw_invariants(g: Digraph) -> tuple[int | None, int | None, int | None, int | None]:
    """(d, d_m, r, r_m) as ints with None for infinity."""
    rows = _raw_distances(g)
    n = g.n
    inf = float("inf")

    def val(x: int | None) -> float:
        return inf if x is None else x

    d = r = 0.0
    ecc = []
    for row in rows:
        e = max(val(x) for x in row)
        ecc.append(e)
    d = max(ecc)
    r = min(ecc)
    ecc_m = []
    for x in range(n):
        e = 0.0
        for y in range(n):
            m = min(val(rows[x][y]), val(rows[y][x]))
            if m > e:
                e = m
        ecc_m.append(e)
    d_m = max(ecc_m)
    r_m = min(ecc_m)

    def out(x: float) -> int | None:
        return None if x == inf else int(x)

    return out(d), out(d_m), out(r), out(r_m)


def all_pairs_distances(g: Digraph) -> tuple[tuple[Distance, ...], ...]:
    """rho as an n x n matrix of Distance values (BFS from each source)."""
    return tuple(tuple(_wrap(x) for x in row) for row in _raw_distances(g))


def metric_profile(g: Digraph) -> MetricProfile:
    """Compute rho, rho_m, both eccentricity tables and d, d_m, r, r_m."""
    rows = _raw_distances(g)
    n = g.n
    rho = tuple(tuple(_wrap(x) for x in row) for row in rows)
    rho_m = tuple(
        tuple(min(rho[x][y], rho[y][x]) for y in range(n)) for x in range(n)
    )
    ecc_out = tuple(max(rho[x]) for x in range(n))
    ecc_m = tuple(max(rho_m[x]) for x in range(n))
    return MetricProfile(
        rho=rho,
        rho_m=rho_m,
        d=max(ecc_out),
        d_m=max(ecc_m),
        r=min(ecc_out),
        r_m=min(ecc_m),
        ecc_out=ecc_out,
        ecc_m=ecc_m,
    )


# ---------------------------------------------------------------------------
# Strong components and the Hertz graph


@dataclass(frozen=True)
class Condensation:
    """Bicomponent partition plus the Hertz graph.

    Components are indexed 1..k in a topological order of the Hertz graph,
    ties broken by smallest contained vertex label; each component tuple
    lists its 1-based vertices in increasing order.
    """

    components: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    hertz: Digraph

    @property
    def k(self) -> int:
        return len(self.components)

    def component_index(self, v: int) -> int:
        """1-based index of the component containing vertex v."""
        for i, comp in enumerate(self.components, start=1):
            if v in comp:
                return i
        raise OutOfRange(f"vertex {v} not in 1..{sum(self.sizes)}")


def _scc_masks(g: Digraph) -> list[int]:
    """Strong components as vertex bitmasks (unordered), via reachability.

    Mutual reachability over bitmask BFS rows; adequate at the sizes this
    library targets and free of recursion limits.
    """
    n = g.n
    out = g._out
    reach = []
    for src in range(n):
        seen = 1 << src
        frontier = 1 << src
        while frontier:
            step = 0
            for u in _bits(frontier):
                step |= out[u]
            frontier = step & ~seen
            seen |= frontier
        reach.append(seen)
    comps = []
    assigned = 0
    for v in range(n):
        if assigned >> v & 1:
            continue
        mutual = reach[v]
        for w in _bits(reach[v]):
            if not (reach[w] >> v & 1):
                mutual &= ~(1 << w)
        comps.append(mutual)
        assigned |= mutual
    return comps


def condensation(g: Digraph) -> Condensation:
    """Partition into bicomponents and build the Hertz graph."""
    comps = _scc_masks(g)
    k = len(comps)
    comp_of = [0] * g.n
    for i, m in enumerate(comps):
        for v in _bits(m):
            comp_of[v] = i

    succ = [0] * k
    pred_count = [0] * k
    for u in range(g.n):
        cu = comp_of[u]
        for v in _bits(g._out[u]):
            cv = comp_of[v]
            if cu != cv and not (succ[cu] >> cv & 1):
                succ[cu] |= 1 << cv
                pred_count[cv] += 1

    # Kahn's algorithm; the heap key is the smallest vertex label inside
    # the component, which makes the index order deterministic.
    min_label = [min(_bits(m)) for m in comps]
    heap: list[tuple[int, int]] = []
    for i in range(k):
        if pred_count[i] == 0:
            heappush(heap, (min_label[i], i))
    order = []
    while heap:
        _, i = heappop(heap)
        order.append(i)
        for j in _bits(succ[i]):
            pred_count[j] -= 1
            if pred_count[j] == 0:
                heappush(heap, (min_label[j], j))

    new_index = {old: new for new, old in enumerate(order)}
    components = tuple(
        tuple(v + 1 for v in _bits(comps[old])) for old in order
    )
    hertz_mask = 0
    for old_u in range(k):
        for old_v in _bits(succ[old_u]):
            hertz_mask |= 1 << arc_bit(k, new_index[old_u] + 1, new_index[old_v] + 1)
    return Condensation(
        components=components,
        sizes=tuple(len(c) for c in components),
        hertz=Digraph(k, hertz_mask) if k > 1 else Digraph(1, 0),
    )


def bicomponent_count(g: Digraph) -> int:
    """Number of strong components (cheaper than full condensation)."""
    return len(_scc_masks(g))


# ---------------------------------------------------------------------------
# Derived digraphs and structural flags


def transitive_closure(g: Digraph) -> Digraph:
    """Digraph with arc (u, v) iff v is reachable from u by >= 1 arcs, u != v."""
    n = g.n
    out = g._out
    mask = 0
    for u in range(n):
        seen = out[u]
        frontier = out[u]
        while frontier:
            step = 0
            for w in _bits(frontier):
                step |= out[w]
            frontier = step & ~seen
            seen |= frontier
        seen &= ~(1 << u)
        for v in _bits(seen):
            mask |= 1 << arc_bit(n, u + 1, v + 1)
    return Digraph(n, mask)


def reverse(g: Digraph) -> Digraph:
    """Digraph with every arc direction flipped."""
    n = g.n
    mask = 0
    for u in range(n):
        for v in _bits(g._out[u]):
            mask |= 1 << arc_bit(n, v + 1, u + 1)
    return Digraph(n, mask)


@dataclass(frozen=True)
class StructureFlags:
    is_acyclic: bool
    is_transitive: bool
    is_complete_symmetric: bool
    is_transitive_tournament: bool
    is_biconnected: bool


def is_transitive(g: Digraph) -> bool:
    """Arcs (u,v),(v,w) with u != w force (u,w); pairs u<->v impose nothing."""
    out = g._out
    for u in range(g.n):
        needed = 0
        for v in _bits(out[u]):
            needed |= out[v]
        needed &= ~(1 << u)
        if needed & ~out[u]:
            return False
    return True


def structure_flags(g: Digraph) -> StructureFlags:
    n = g.n
    comps = _scc_masks(g)
    acyclic = all(m.bit_count() == 1 for m in comps)
    transitive = is_transitive(g)
    complete_symmetric = g.arc_count == n * (n - 1)
    tournament = acyclic and transitive and g.arc_count == n * (n - 1) // 2
    biconnected = len(comps) == 1
    return StructureFlags(
        is_acyclic=acyclic,
        is_transitive=transitive,
        is_complete_symmetric=complete_symmetric,
        is_transitive_tournament=tournament,
        is_biconnected=biconnected,
    )


def centers_and_quasicenters(g: Digraph) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices with out-eccentricity r (when r is finite), and vertices
    with finite rho_m-eccentricity (the quasi-centers)."""
    profile = metric_profile(g)
    if profile.r.is_finite:
        centers = frozenset(
            x + 1 for x in range(g.n) if profile.ecc_out[x] == profile.r
        )
    else:
        centers = frozenset()
    quasi = frozenset(x + 1 for x in range(g.n) if profile.ecc_m[x].is_finite)
    return centers, quasi
