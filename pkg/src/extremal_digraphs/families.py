"""Constructors and recognizers for the canonical digraph families.

The families are: transitive tournaments Gamma_k; Gamma_{k,i} (one
consecutive arc removed); Gamma_{k,0} (arcs (i,j) for i<j with i != 1,
leaving vertex 1 bare); D_4; the layered partitions
Gamma_{k,s;k_1..k_s} whose blocks each induce a Gamma_{k_i,0}; blow-ups
of an acyclic Hertz graph into complete symmetric blocks; the maximal
digraphs of finite radius (chain of k+1 blocks with full back arcs); and
the maximal quasi-diameter-3 digraphs built around two poles z, v and a
complete symmetric core.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from . import formulas
from .digraph import (
    Digraph,
    arc_bit,
    is_transitive,
    metric_profile,
    reverse,
    structure_flags,
)
from .errors import CyclicHertz, InvalidSpec, SizeMismatch, ZeroSize

__all__ = [
    "GammaK",
    "GammaKI",
    "GammaK0",
    "D4",
    "GammaPartition",
    "BlowUp",
    "MaximalRadius",
    "ReversedMaximalRadius",
    "MaximalQD3",
    "FamilySpec",
    "HertzClassification",
    "build_family",
    "blow_up",
    "maximal_radius_digraph",
    "maximal_quasidiameter_digraph",
    "recognize_hertz_family",
]


@dataclass(frozen=True)
class GammaK:
    """Transitive tournament on k vertices: arcs (i, j) for i < j."""

    k: int


@dataclass(frozen=True)
class GammaKI:
    """Gamma_k with the single arc (i, i+1) removed, 1 <= i <= k-1."""

    k: int
    i: int


@dataclass(frozen=True)
class GammaK0:
    """Arcs (i, j) for i < j and i != 1; vertex 1 carries no arcs."""

    k: int


@dataclass(frozen=True)
class D4:
    """Four vertices with arcs (1,3), (1,4), (2,3), (2,4)."""


@dataclass(frozen=True)
class GammaPartition:
    """Ordered blocks Y_1..Y_s, each inducing Gamma_{k_i,0} (k_i >= 2),
    with all arcs from every vertex of Y_i to every vertex of Y_j, i < j."""

    sizes: tuple[int, ...]

    @property
    def k(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class BlowUp:
    """Each Hertz vertex i becomes a complete symmetric block of sizes[i]
    vertices; Hertz arcs become complete block-to-block arc bundles."""

    hertz: Digraph
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class MaximalRadius:
    """Maximal digraph of radius k: blocks X_1..X_{k+1} chained forward,
    all back arcs X_j -> X_i for 1 < i < j <= k+1, blocks complete
    symmetric.  Blocks p and p+1 hold a and b vertices (all others are
    singletons); split (a, 0) puts a single enlarged block of n-k
    vertices at position p."""

    n: int
    k: int
    p: int
    split: tuple[int, int]


@dataclass(frozen=True)
class ReversedMaximalRadius:
    """Arc reversal of the corresponding MaximalRadius digraph."""

    n: int
    k: int
    p: int
    split: tuple[int, int]


@dataclass(frozen=True)
class MaximalQD3:
    """Maximal quasi-diameter-3 digraph around poles z and v: core
    X_1..X_4 complete symmetric, z paired with X_1, v paired with X_2,
    X_3 points at both poles, both poles point at X_4."""

    sizes: tuple[int, int, int, int]


FamilySpec = Union[
    GammaK,
    GammaKI,
    GammaK0,
    D4,
    GammaPartition,
    BlowUp,
    MaximalRadius,
    ReversedMaximalRadius,
    MaximalQD3,
]


# ---------------------------------------------------------------------------
# Construction


def _mask_from_pairs(n: int, pairs) -> Digraph:
    mask = 0
    for u, v in pairs:
        mask |= 1 << arc_bit(n, u, v)
    return Digraph(n, mask)


def _gamma_k(k: int) -> Digraph:
    return _mask_from_pairs(
        k, ((i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1))
    )


def _gamma_ki(k: int, i: int) -> Digraph:
    return _mask_from_pairs(
        k,
        (
            (s, j)
            for s in range(1, k + 1)
            for j in range(s + 1, k + 1)
            if (s, j) != (i, i + 1)
        ),
    )


def _gamma_k0(k: int) -> Digraph:
    return _mask_from_pairs(
        k, ((i, j) for i in range(2, k + 1) for j in range(i + 1, k + 1))
    )


def _blocks(sizes: Sequence[int]) -> list[list[int]]:
    """Consecutive 1-based labels per block."""
    blocks = []
    start = 1
    for size in sizes:
        blocks.append(list(range(start, start + size)))
        start += size
    return blocks


def _gamma_partition(sizes: Sequence[int]) -> Digraph:
    blocks = _blocks(sizes)
    n = sum(sizes)
    pairs = []
    for block in blocks:
        base = block[0]
        for i in range(1, len(block)):
            for j in range(i + 1, len(block)):
                # within a block: Gamma_{size,0}, so the first vertex is bare
                pairs.append((base + i, base + j))
    for bi in range(len(blocks)):
        for bj in range(bi + 1, len(blocks)):
            pairs.extend((u, v) for u in blocks[bi] for v in blocks[bj])
    return _mask_from_pairs(n, pairs)


def build_family(spec: FamilySpec) -> Digraph:
    """Materialize a family spec, validating its invariants."""
    if isinstance(spec, GammaK):
        if spec.k < 1:
            raise InvalidSpec(f"Gamma_k needs k >= 1, got k={spec.k}")
        return _gamma_k(spec.k)
    if isinstance(spec, GammaKI):
        if spec.k < 2 or not 1 <= spec.i <= spec.k - 1:
            raise InvalidSpec(
                f"Gamma_(k,i) needs 1 <= i <= k-1, got k={spec.k}, i={spec.i}"
            )
        return _gamma_ki(spec.k, spec.i)
    if isinstance(spec, GammaK0):
        if spec.k < 2:
            raise InvalidSpec(f"Gamma_(k,0) needs k >= 2, got k={spec.k}")
        return _gamma_k0(spec.k)
    if isinstance(spec, D4):
        return _mask_from_pairs(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
    if isinstance(spec, GammaPartition):
        if not spec.sizes:
            raise InvalidSpec("partition needs at least one block")
        if any(size < 2 for size in spec.sizes):
            raise InvalidSpec(f"every block needs size >= 2, got {spec.sizes}")
        return _gamma_partition(spec.sizes)
    if isinstance(spec, BlowUp):
        return blow_up(spec.hertz, spec.sizes)
    if isinstance(spec, MaximalRadius):
        return maximal_radius_digraph(spec.n, spec.k, spec.p, spec.split)
    if isinstance(spec, ReversedMaximalRadius):
        return reverse(maximal_radius_digraph(spec.n, spec.k, spec.p, spec.split))
    if isinstance(spec, MaximalQD3):
        return _fig9(spec.sizes)
    raise TypeError(f"not a family spec: {spec!r}")


def blow_up(hertz: Digraph, sizes: Sequence[int]) -> Digraph:
    """Replace Hertz vertex i by a complete symmetric block of sizes[i].

    condensation(result) recovers hertz and sizes exactly when hertz is
    topologically labeled (every arc ascending), which holds for every
    constructor in this module; otherwise it recovers them up to the
    topological relabelling that condensation always applies.
    """
    if len(sizes) != hertz.n:
        raise SizeMismatch(
            f"{len(sizes)} sizes for a {hertz.n}-vertex Hertz graph"
        )
    if any(size < 1 for size in sizes):
        raise ZeroSize(f"every block needs size >= 1, got {tuple(sizes)}")
    if not structure_flags(hertz).is_acyclic:
        raise CyclicHertz("the Hertz graph must be acyclic")
    blocks = _blocks(sizes)
    n = sum(sizes)
    pairs = []
    for block in blocks:
        pairs.extend((u, v) for u in block for v in block if u != v)
    for hu, hv in hertz.arcs:
        pairs.extend((u, v) for u in blocks[hu - 1] for v in blocks[hv - 1])
    return _mask_from_pairs(n, pairs)


def _maximal_radius_sizes(n: int, k: int, p: int, split: tuple[int, int]) -> list[int]:
    a, b = split
    if k < 3:
        raise InvalidSpec(f"maximal radius construction needs k >= 3, got k={k}")
    if n < k + 1:
        raise InvalidSpec(f"needs n >= k+1, got n={n}, k={k}")
    if a < 1 or b < 0:
        raise InvalidSpec(f"split needs a >= 1 and b >= 0, got {split}")
    sizes = [1] * (k + 1)
    if b >= 1:
        if not 2 <= p <= k - 1:
            raise InvalidSpec(
                f"two enlarged blocks need 2 <= p and p+1 <= k, got p={p}, k={k}"
            )
        if a + b != n - k + 1:
            raise InvalidSpec(
                f"split must satisfy a+b = n-k+1 = {n - k + 1}, got {split}"
            )
        sizes[p - 1] = a
        sizes[p] = b
    else:
        if not 2 <= p <= k:
            raise InvalidSpec(f"needs 2 <= p <= k, got p={p}, k={k}")
        if a != n - k:
            raise InvalidSpec(
                f"a single enlarged block must hold n-k = {n - k} vertices, got a={a}"
            )
        sizes[p - 1] = a
    return sizes


def maximal_radius_digraph(n: int, k: int, p: int, split: tuple[int, int]) -> Digraph:
    """Maximal digraph of radius k >= 3 on n vertices (blocks at p, p+1)."""
    sizes = _maximal_radius_sizes(n, k, p, split)
    blocks = _blocks(sizes)
    pairs = []
    for block in blocks:
        pairs.extend((u, v) for u in block for v in block if u != v)
    for i in range(k):
        pairs.extend((u, v) for u in blocks[i] for v in blocks[i + 1])
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            # back arcs X_{j+1} -> X_{i+1} for 1 < i+1 < j+1 <= k+1
            pairs.extend((u, v) for u in blocks[j] for v in blocks[i])
    g = _mask_from_pairs(n, pairs)
    assert metric_profile(g).r == k
    assert g.arc_count == formulas.g_max_arcs(n, k)
    return g


def _fig9(sizes: tuple[int, int, int, int]) -> Digraph:
    if len(sizes) != 4 or any(size < 0 for size in sizes):
        raise InvalidSpec(f"needs four nonnegative core sizes, got {sizes!r}")
    m1, m2, m3, m4 = sizes
    if m1 * m2 + m3 * m4 == 0:
        raise InvalidSpec(
            f"needs |X1||X2| + |X3||X4| > 0, got sizes {sizes}"
        )
    n = 2 + m1 + m2 + m3 + m4
    z = 1
    v = n
    core_blocks = _blocks([1, m1, m2, m3, m4])[1:]
    x1, x2, x3, x4 = core_blocks
    core = x1 + x2 + x3 + x4
    pairs = []
    pairs.extend((u, w) for u in core for w in core if u != w)
    for u in x1:
        pairs.extend([(z, u), (u, z)])
    for u in x2:
        pairs.extend([(v, u), (u, v)])
    for u in x3:
        pairs.extend([(u, z), (u, v)])
    for u in x4:
        pairs.extend([(z, u), (v, u)])
    g = _mask_from_pairs(n, pairs)
    profile = metric_profile(g)
    if profile.d_m != 3:
        raise InvalidSpec(f"sizes {sizes} do not realize quasi-diameter 3")
    assert g.arc_count == formulas.f_max_arcs(n, 3)
    return g


def maximal_quasidiameter_digraph(spec: FamilySpec) -> Digraph:
    """Maximal digraph of finite quasi-diameter k >= 3.

    For every k >= 3 these are the maximal radius-k digraphs and their
    reversals; for k = 3 the pole-and-core family joins them.
    """
    if isinstance(spec, MaximalRadius):
        g = maximal_radius_digraph(spec.n, spec.k, spec.p, spec.split)
    elif isinstance(spec, ReversedMaximalRadius):
        g = reverse(maximal_radius_digraph(spec.n, spec.k, spec.p, spec.split))
    elif isinstance(spec, MaximalQD3):
        return _fig9(spec.sizes)
    else:
        raise InvalidSpec(f"not a maximal quasi-diameter spec: {spec!r}")
    if metric_profile(g).d_m != spec.k:
        raise InvalidSpec(f"spec {spec!r} does not realize quasi-diameter {spec.k}")
    return g


# ---------------------------------------------------------------------------
# Recognition


@dataclass(frozen=True)
class HertzClassification:
    """Which canonical families a digraph is isomorphic to.

    Several fields can be set at once: D_4 equals the two-block
    partition (2, 2), and Gamma_{2,0} equals Gamma_{2,1}.
    """

    transitive_tournament: int | None
    gamma_ki: tuple[int, int] | None
    gamma_k0: int | None
    partition_sizes: tuple[int, ...] | None
    is_d4: bool

    @property
    def unrecognized(self) -> bool:
        return (
            self.transitive_tournament is None
            and self.gamma_ki is None
            and self.gamma_k0 is None
            and self.partition_sizes is None
            and not self.is_d4
        )


def _induced(g: Digraph, vertices: Sequence[int]) -> Digraph:
    """Subgraph induced by the given 1-based vertices, relabelled 1..m."""
    m = len(vertices)
    return _mask_from_pairs(
        m,
        (
            (i + 1, j + 1)
            for i in range(m)
            for j in range(m)
            if i != j and g.has_arc(vertices[i], vertices[j])
        ),
    )


def _tt_order(g: Digraph) -> list[int] | None:
    """Vertices of a transitive tournament from source to sink, else None."""
    if not structure_flags(g).is_transitive_tournament:
        return None
    return sorted(g.vertices(), key=lambda u: -len(g.out_neighbors(u)))


def _gamma_k0_order(g: Digraph) -> list[int] | None:
    """Vertex order [bare, tournament...] proving g is a Gamma_{k,0}."""
    k = g.n
    if k < 2:
        return None
    if k == 2:
        return [1, 2] if g.arc_count == 0 else None
    bare = [
        u
        for u in g.vertices()
        if not g.out_neighbors(u) and not g.in_neighbors(u)
    ]
    if len(bare) != 1:
        return None
    rest = [u for u in g.vertices() if u != bare[0]]
    sub_order = _tt_order(_induced(g, rest))
    if sub_order is None:
        return None
    return bare + [rest[i - 1] for i in sub_order]


def _nonadjacent_pairs(g: Digraph) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in g.vertices()
        for v in g.vertices()
        if u < v and not g.has_arc(u, v) and not g.has_arc(v, u)
    ]


def _recognize_gamma_ki(g: Digraph) -> tuple[int, int] | None:
    k = g.n
    if k < 2 or g.arc_count != k * (k - 1) // 2 - 1:
        return None
    pairs = _nonadjacent_pairs(g)
    if len(pairs) != 1:
        return None
    a, b = pairs[0]
    completed = Digraph(k, g.mask | 1 << arc_bit(k, a, b))
    if not structure_flags(completed).is_transitive_tournament:
        return None
    # in Gamma_{k,i} the two incomparable vertices share indegree i-1
    indeg_a = len(g.in_neighbors(a))
    if indeg_a != len(g.in_neighbors(b)):
        return None
    return (k, indeg_a + 1)


def _recognize_partition(g: Digraph) -> tuple[int, ...] | None:
    """Ordered block sizes for the Gamma_{k,s;k_1..k_s} structure.

    Blocks are recovered as the connected components of the
    non-adjacency relation (inside a block, the bare vertex is
    non-adjacent to every other), then each block and every cross pair
    is verified directly.
    """
    n = g.n
    if n < 2:
        return None
    neighbors: dict[int, set[int]] = {u: set() for u in g.vertices()}
    for u, v in _nonadjacent_pairs(g):
        neighbors[u].add(v)
        neighbors[v].add(u)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for u in g.vertices():
        if u in seen:
            continue
        stack, comp = [u], []
        seen.add(u)
        while stack:
            w = stack.pop()
            comp.append(w)
            for x in neighbors[w]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        comps.append(sorted(comp))
    if any(len(c) < 2 for c in comps):
        return None
    for comp in comps:
        if _gamma_k0_order(_induced(g, comp)) is None:
            return None
    s = len(comps)
    wins = [0] * s
    for i in range(s):
        for j in range(i + 1, s):
            pairs = [(u, v) for u in comps[i] for v in comps[j]]
            forward = [g.has_arc(u, v) for u, v in pairs]
            backward = [g.has_arc(v, u) for u, v in pairs]
            if all(forward) and not any(backward):
                wins[i] += 1
            elif all(backward) and not any(forward):
                wins[j] += 1
            else:
                return None
    order = sorted(range(s), key=lambda i: -wins[i])
    if sorted(wins, reverse=True) != list(range(s - 1, -1, -1)):
        return None
    return tuple(len(comps[i]) for i in order)


def recognize_hertz_family(h: Digraph) -> HertzClassification:
    """Classify a digraph against the canonical Hertz-graph families."""
    flags = structure_flags(h)
    tt = h.n if flags.is_transitive_tournament else None
    ki = None
    if flags.is_acyclic and is_transitive(h):
        ki = _recognize_gamma_ki(h)
    k0 = h.n if _gamma_k0_order(h) is not None else None
    partition = _recognize_partition(h)
    return HertzClassification(
        transitive_tournament=tt,
        gamma_ki=ki,
        gamma_k0=k0,
        partition_sizes=partition,
        is_d4=partition == (2, 2),
    )
