"""Exact graph polynomial computations.

For a graph G on n vertices and m edges this module computes, always over
exact rationals or integers:

* char_poly: det(X I - M) with M the adjacency or Laplacian matrix, by
  evaluation at X = 0..n with fraction-free integer determinants followed
  by interpolation; the result is asserted monic with integer entries.
* matching_numbers m_k, the defect form  sum_k (-1)^k m_k X^(n-2k)  and
  the generating form  sum_k m_k X^k.
* gen_ind(G, C) = sum of X^|A| over vertex subsets A with G[A] in C; the
  empty subset contributes X^0 exactly when C contains the null graph.
  independence is the edgeless instance.
* gen_span(G, D) = sum of X^|B| over edge subsets B with (V, B) in D.
* gen_chromatic(G, C): count partitions of V into exactly j nonempty
  blocks, each inducing a member of C, then expand sum_j b_j X_(j) from
  the falling-factorial basis.  Evaluated at a nonnegative integer this
  counts colorings with that many available colors where every nonempty
  color class induces a member of C (empty classes permitted); the strict
  variant additionally requires empty classes to satisfy contains_null,
  which for contains_null = False means exactly-j-surjective counts and
  is no longer polynomial in the color count.
* chromatic: the edgeless instance, i.e. proper colorings.  Computed by a
  frontier sweep (below) so that structured graphs well beyond the
  partition cap stay feasible.
* tutte: sum over edge subsets of (X-1)^(r(E)-r(A)) (Y-1)^(|A|-r(A)) with
  r the rank n - components.
* dominating: sum of X^|A| over nonempty dominating sets (the empty set
  never dominates a graph on n >= 1 vertices).
* maxcl: sum of (number of maximal cliques of size i) X^i.

The frontier sweep used for chromatic processes vertices along a greedy
low-width order and tracks, per state, the partition pattern of the
vertices that still have unprocessed neighbors plus the number of blocks
already retired.  Since a retired vertex can never be adjacent to a vertex
processed later, joining a retired block is always legal, so block counts
are exact.  States collapse heavily (for complete graphs to a single
state), which keeps cycles, ladders, wheels and similar families with a
few dozen vertices comfortably in range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .caps import Caps, DEFAULT_CAPS
from .errors import CapError, InputError
from .graph import (
    Graph,
    bits,
    component_masks,
    edge_count,
    edge_list,
    induced_from_mask,
)
from .poly import (
    BiPoly,
    UniPoly,
    falling_factorial_value,
    falling_to_monomial,
    int_determinant,
    interpolate,
)
from .properties import GraphProperty, builtin

# ------------------------------------------------------------ characteristic


def _matrix(g: Graph, which: str) -> list[list[int]]:
    if which == "adjacency":
        return [[(g.adj[i] >> j) & 1 for j in range(g.n)] for i in range(g.n)]
    if which == "laplacian":
        degs = [a.bit_count() for a in g.adj]
        return [[degs[i] if i == j else -((g.adj[i] >> j) & 1)
                 for j in range(g.n)] for i in range(g.n)]
    raise InputError(f"unknown matrix kind {which!r}")


def char_poly(g: Graph, matrix: str = "adjacency") -> UniPoly:
    """det(X I - M), monic of degree n with integer coefficients."""
    m = _matrix(g, matrix)
    n = g.n
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[(x if i == j else 0) - m[i][j] for j in range(n)]
                   for i in range(n)]
        ys.append(int_determinant(shifted))
    p = interpolate(xs, ys)
    coeffs = p.integer_coefficients()
    if len(coeffs) != n + 1 or coeffs[-1] != 1:
        raise ValueError("characteristic polynomial failed the monic check")
    return p


# ------------------------------------------------------------ matchings


def matching_numbers(g: Graph, cap_n: int | None = None) -> tuple[int, ...]:
    """Counts of k-edge matchings, trailing zeros stripped (m_0 = 1)."""
    cap_n = DEFAULT_CAPS.subset_n if cap_n is None else cap_n
    if g.n > cap_n:
        raise CapError(
            f"matching counts capped at n <= {cap_n}, got {g.n}")
    adj = g.adj
    memo: dict[int, list[int]] = {0: [1]}

    def count(mask: int) -> list[int]:
        known = memo.get(mask)
        if known is not None:
            return known
        u = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << u)
        acc = list(count(rest))                 # u unmatched
        for v in bits(adj[u] & rest):
            sub = count(rest ^ (1 << v))        # u matched to v
            if len(acc) < len(sub) + 1:
                acc.extend([0] * (len(sub) + 1 - len(acc)))
            for k, c in enumerate(sub):
                acc[k + 1] += c
        memo[mask] = acc
        return acc

    out = count((1 << g.n) - 1)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def matching_defect(g: Graph, cap_n: int | None = None) -> UniPoly:
    """sum_k (-1)^k m_k X^(n-2k), the matching polynomial in defect form."""
    nums = matching_numbers(g, cap_n=cap_n)
    coeffs = [0] * (g.n + 1)
    for k, mk in enumerate(nums):
        coeffs[g.n - 2 * k] = (-1) ** k * mk
    return UniPoly(coeffs)


def matching_generating(g: Graph, cap_n: int | None = None) -> UniPoly:
    return UniPoly(matching_numbers(g, cap_n=cap_n))


# ------------------------------------------------------------ subset sums


def gen_ind(g: Graph, c: GraphProperty, cap_n: int | None = None) -> UniPoly:
    """Generating polynomial of vertex subsets whose induced graph is in C."""
    cap_n = DEFAULT_CAPS.subset_n if cap_n is None else cap_n
    if g.n > cap_n:
        raise CapError(f"vertex-subset sum capped at n <= {cap_n}, got {g.n}")
    counts = [0] * (g.n + 1)
    if c.contains_null:
        counts[0] = 1
    for mask in range(1, 1 << g.n):
        if c.holds(induced_from_mask(g, mask)):
            counts[mask.bit_count()] += 1
    return UniPoly(counts)


def independence(g: Graph, cap_n: int | None = None) -> UniPoly:
    return gen_ind(g, builtin("edgeless"), cap_n=cap_n)


def gen_span(g: Graph, d: GraphProperty, cap_m: int | None = None) -> UniPoly:
    """Generating polynomial of edge subsets whose spanning graph is in D.

    Every spanning subgraph keeps all n vertices, so contains_null never
    enters; callers worried about isolated-vertex closure should consult
    d.closure_isolated before interpreting results across orders.
    """
    cap_m = DEFAULT_CAPS.subset_m if cap_m is None else cap_m
    edges = edge_list(g)
    m = len(edges)
    if m > cap_m:
        raise CapError(f"edge-subset sum capped at m <= {cap_m}, got {m}")
    n = g.n
    counts = [0] * (m + 1)
    for emask in range(1 << m):
        adj = [0] * n
        mm = emask
        while mm:
            b = mm & -mm
            u, v = edges[b.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            mm ^= b
        if d.holds(Graph(n, tuple(adj))):
            counts[emask.bit_count()] += 1
    return UniPoly(counts)


# ------------------------------------------------------------ chromatic family


def gen_chromatic_blocks(g: Graph, c: GraphProperty,
                         cap_partition: int | None = None) -> tuple[int, ...]:
    """b_j = number of partitions of V into j blocks each inducing C.

    Organized as a subset convolution over the valid blocks containing the
    lowest unassigned vertex, which enumerates exactly the partitions into
    C-blocks without materializing every set partition.
    """
    cap_partition = (DEFAULT_CAPS.partition_n if cap_partition is None
                     else cap_partition)
    if g.n > cap_partition:
        raise CapError(
            f"partition polynomials capped at n <= {cap_partition}, got {g.n}")
    n = g.n
    full = (1 << n) - 1
    valid_by_low: dict[int, list[int]] = {}
    for mask in range(1, full + 1):
        if c.holds(induced_from_mask(g, mask)):
            valid_by_low.setdefault(mask & -mask, []).append(mask)

    memo: dict[int, dict[int, int]] = {0: {0: 1}}

    def count(mask: int) -> dict[int, int]:
        known = memo.get(mask)
        if known is not None:
            return known
        out: dict[int, int] = {}
        low = mask & -mask
        for block in valid_by_low.get(low, ()):
            if block & ~mask:
                continue
            for j, ways in count(mask ^ block).items():
                out[j + 1] = out.get(j + 1, 0) + ways
        memo[mask] = out
        return out

    table = count(full)
    return tuple(table.get(j, 0) for j in range(n + 1))


def gen_chromatic(g: Graph, c: GraphProperty,
                  cap_partition: int | None = None) -> UniPoly:
    """sum_j b_j X_(j) expanded into the monomial basis."""
    return falling_to_monomial(gen_chromatic_blocks(g, c, cap_partition))


def gen_chromatic_value(g: Graph, c: GraphProperty, k: int,
                        strict_empty: bool = False,
                        cap_partition: int | None = None) -> int:
    """Colorings of G with k available colors, classes inducing C.

    Permissive convention: empty color classes are exempt, giving the
    polynomial evaluation sum_j b_j k_(j).  Strict convention: empty
    classes must satisfy contains_null; when C lacks the null graph this
    forces all k classes nonempty, i.e. b_k * k!.
    """
    if k < 0:
        raise InputError("color count must be nonnegative")
    blocks = gen_chromatic_blocks(g, c, cap_partition)
    if strict_empty and not c.contains_null:
        if k >= len(blocks):
            return 0
        fact = 1
        for t in range(2, k + 1):
            fact *= t
        return blocks[k] * fact
    total = Fraction(0)
    for j, b in enumerate(blocks):
        if b:
            total += b * falling_factorial_value(k, j)
    assert total.denominator == 1
    return int(total)


def _elimination_order(g: Graph) -> list[int]:
    """Greedy vertex order keeping the set of half-done vertices small."""
    n = g.n
    unprocessed = set(range(n))
    processed_mask = 0
    order = []
    for _ in range(n):
        best_v = -1
        best_key = None
        for v in unprocessed:
            new_mask = processed_mask | 1 << v
            frontier = 0
            for u in bits(new_mask):
                if g.adj[u] & ~new_mask:
                    frontier += 1
            done_neighbors = (g.adj[v] & processed_mask).bit_count()
            key = (frontier, -done_neighbors, v)
            if best_key is None or key < best_key:
                best_key = key
                best_v = v
        order.append(best_v)
        unprocessed.remove(best_v)
        processed_mask |= 1 << best_v
    return order


def chromatic_blocks(g: Graph, max_states: int = 500_000) -> tuple[int, ...]:
    """Partitions of V into j independent blocks, via the frontier sweep."""
    n = g.n
    order = _elimination_order(g)
    pos = {v: i for i, v in enumerate(order)}
    retire_after = [max((pos[u] for u in bits(g.adj[v])), default=pos[v])
                    for v in range(n)]

    # state: (blocks restricted to the frontier, retired block count)
    states: dict[tuple[tuple[tuple[int, ...], ...], int], int] = {((), 0): 1}
    for step, v in enumerate(order):
        nxt: dict[tuple[tuple[tuple[int, ...], ...], int], int] = {}

        def emit(blocks_list: list[tuple[int, ...]], t: int, ways: int) -> None:
            kept = []
            retired = t
            for blk in blocks_list:
                alive = tuple(u for u in blk if retire_after[u] > step)
                if alive:
                    kept.append(alive)
                else:
                    retired += 1
            key = (tuple(sorted(kept)), retired)
            nxt[key] = nxt.get(key, 0) + ways

        for (blocks, t), ways in states.items():
            for idx, blk in enumerate(blocks):
                if any(g.adj[v] >> u & 1 for u in blk):
                    continue
                joined = list(blocks)
                joined[idx] = tuple(sorted(blk + (v,)))
                emit(joined, t, ways)
            emit(list(blocks) + [(v,)], t, ways)
            if t:
                emit(list(blocks) + [(v,)], t - 1, ways * t)
        states = nxt
        if len(states) > max_states:
            raise CapError(
                f"chromatic frontier sweep exceeded {max_states} states")

    out = [0] * (n + 1)
    for (blocks, t), ways in states.items():
        assert not blocks
        out[t] += ways
    return tuple(out)


def chromatic(g: Graph, max_states: int = 500_000) -> UniPoly:
    """Proper-coloring polynomial; agrees with gen_chromatic at edgeless."""
    return falling_to_monomial(chromatic_blocks(g, max_states=max_states))


# ------------------------------------------------------------ tutte


def tutte(g: Graph, cap_m: int | None = None) -> BiPoly:
    """Whitney rank sum over all edge subsets."""
    cap_m = DEFAULT_CAPS.subset_m if cap_m is None else cap_m
    edges = edge_list(g)
    m = len(edges)
    if m > cap_m:
        raise CapError(f"edge-subset sum capped at m <= {cap_m}, got {m}")
    n = g.n
    rank_full = n - len(component_masks(g))
    counts: dict[tuple[int, int], int] = {}
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for emask in range(1 << m):
        for i in range(n):
            parent[i] = i
        comps = n
        mm = emask
        size = 0
        while mm:
            b = mm & -mm
            u, v = edges[b.bit_length() - 1]
            mm ^= b
            size += 1
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        r = n - comps
        key = (rank_full - r, size - r)
        counts[key] = counts.get(key, 0) + 1

    max_a = max((a for a, _ in counts), default=0)
    max_b = max((b for _, b in counts), default=0)
    xm1 = [BiPoly.one()]
    for _ in range(max_a):
        xm1.append(xm1[-1] * (BiPoly.x() - BiPoly.one()))
    ym1 = [BiPoly.one()]
    for _ in range(max_b):
        ym1.append(ym1[-1] * (BiPoly.y() - BiPoly.one()))
    total = BiPoly.zero()
    for (a, b), cnt in sorted(counts.items()):
        total = total + xm1[a] * ym1[b] * cnt
    return total


# ------------------------------------------------------------ dominating, cliques


def dominating(g: Graph, cap_n: int | None = None) -> UniPoly:
    """Generating polynomial of nonempty dominating sets."""
    cap_n = DEFAULT_CAPS.subset_n if cap_n is None else cap_n
    if g.n > cap_n:
        raise CapError(f"vertex-subset sum capped at n <= {cap_n}, got {g.n}")
    n = g.n
    full = (1 << n) - 1
    closed = [g.adj[v] | 1 << v for v in range(n)]
    counts = [0] * (n + 1)
    for mask in range(1, full + 1):
        covered = 0
        mm = mask
        while mm:
            b = mm & -mm
            covered |= closed[b.bit_length() - 1]
            mm ^= b
        if covered == full:
            counts[mask.bit_count()] += 1
    return UniPoly(counts)


def maximal_clique_profile(g: Graph, cap_n: int | None = None) -> UniPoly:
    """sum_i (number of maximal cliques of size i) X^i."""
    cap_n = DEFAULT_CAPS.subset_n if cap_n is None else cap_n
    if g.n > cap_n:
        raise CapError(f"vertex-subset sum capped at n <= {cap_n}, got {g.n}")
    counts = [0] * (g.n + 1)

    def expand(r_size: int, p_mask: int, x_mask: int) -> None:
        if p_mask == 0 and x_mask == 0:
            counts[r_size] += 1
            return
        pivot_pool = p_mask | x_mask
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        candidates = p_mask & ~g.adj[pivot]
        for v in bits(candidates):
            expand(r_size + 1, p_mask & g.adj[v], x_mask & g.adj[v])
            p_mask ^= 1 << v
            x_mask |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return UniPoly(counts)


# ------------------------------------------------------------ kind registry


@dataclass(frozen=True)
class PolyKind:
    """A named graph polynomial, optionally parametrized by a property."""

    kind: str
    prop: GraphProperty | None = None

    def label(self) -> str:
        if self.prop is None:
            return self.kind
        return f"{self.kind}:{self.prop.name}"


UNIVARIATE_KINDS = ("char", "charL", "mu", "mgen", "chrom", "indep",
                    "dom", "maxcl", "ind", "span", "genchrom")
BIVARIATE_KINDS = ("tutte",)


def parse_poly_kind(text: str) -> PolyKind:
    from .properties import parse_property

    head, sep, rest = text.partition(":")
    if head in ("ind", "span", "genchrom"):
        if not sep or not rest:
            raise InputError(f"kind {head!r} needs a property, e.g. {head}:edgeless")
        return PolyKind(head, parse_property(rest))
    if sep:
        raise InputError(f"kind {head!r} takes no property parameter")
    if head in UNIVARIATE_KINDS or head in BIVARIATE_KINDS:
        return PolyKind(head)
    raise InputError(f"unknown polynomial kind {text!r}")


def compute_poly(pk: PolyKind, g: Graph, caps: Caps = DEFAULT_CAPS):
    """Dispatch a PolyKind to its computation; UniPoly or BiPoly."""
    if pk.kind == "char":
        return char_poly(g, "adjacency")
    if pk.kind == "charL":
        return char_poly(g, "laplacian")
    if pk.kind == "mu":
        return matching_defect(g, cap_n=caps.subset_n)
    if pk.kind == "mgen":
        return matching_generating(g, cap_n=caps.subset_n)
    if pk.kind == "chrom":
        return chromatic(g)
    if pk.kind == "indep":
        return independence(g, cap_n=caps.subset_n)
    if pk.kind == "dom":
        return dominating(g, cap_n=caps.subset_n)
    if pk.kind == "maxcl":
        return maximal_clique_profile(g, cap_n=caps.subset_n)
    if pk.kind == "tutte":
        return tutte(g, cap_m=caps.subset_m)
    if pk.kind == "ind":
        assert pk.prop is not None
        return gen_ind(g, pk.prop, cap_n=caps.subset_n)
    if pk.kind == "span":
        assert pk.prop is not None
        return gen_span(g, pk.prop, cap_m=caps.subset_m)
    if pk.kind == "genchrom":
        assert pk.prop is not None
        return gen_chromatic(g, pk.prop, cap_partition=caps.partition_n)
    raise InputError(f"unknown polynomial kind {pk.kind!r}")
