"""Finite simple graphs: families, surgery, isomorphism, enumeration.

Graphs are labelled 0..n-1 with n >= 1 and adjacency stored as one bitmask
per vertex.  Instances are immutable values; build them through make_graph,
the family constructors, or the surgery helpers, all of which keep the
adjacency symmetric and irreflexive.

Isomorphism testing is an exact backtracking search with degree-profile
pruning.  canonical_form returns the lexicographically minimal adjacency
bit string over all relabellings (upper triangle, read column by column),
so equal strings characterize isomorphic graphs.  Enumeration of
isomorphism classes extends each (n-1)-vertex class by one vertex in all
2^(n-1) ways and deduplicates; it is capped by default at n = 7
(1044 classes), which brute-force canonicalization handles comfortably.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .caps import DEFAULT_CAPS
from .errors import CapError, InputError


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]


@dataclass(frozen=True)
class SimilaritySignature:
    """Order, size, number of connected components."""

    n: int
    m: int
    k: int


def make_graph(n: int, edges) -> Graph:
    """Validating constructor from an edge list of (u, v) pairs."""
    if n < 1:
        raise InputError(f"graph order must be at least 1, got {n}")
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) out of range for order {n}")
        if u == v:
            raise InputError(f"loop at vertex {u} is not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def bits(mask: int):
    """Indices of the set bits, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def edge_list(g: Graph) -> list[tuple[int, int]]:
    out = []
    for u in range(g.n):
        rest = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(rest):
            out.append((u, v))
    return out


def edge_count(g: Graph) -> int:
    return sum(a.bit_count() for a in g.adj) // 2


def degree(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def degrees(g: Graph) -> list[int]:
    return [a.bit_count() for a in g.adj]


def has_edge(g: Graph, u: int, v: int) -> bool:
    return bool(g.adj[u] >> v & 1)


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
        seen |= comp
        out.append(comp)
    return out


def component_count(g: Graph) -> int:
    return len(component_masks(g))


def signature(g: Graph) -> SimilaritySignature:
    return SimilaritySignature(g.n, edge_count(g), component_count(g))


def similar(g: Graph, h: Graph) -> bool:
    return signature(g) == signature(h)


# -------------------------------------------------------------- surgery


def relabel(g: Graph, perm) -> Graph:
    """Image of g under the permutation perm (perm[v] is the new name)."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise InputError("relabelling must be a permutation of the vertices")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


def disjoint_union(parts) -> Graph:
    parts = list(parts)
    if not parts:
        raise InputError("disjoint union needs at least one part")
    adj: list[int] = []
    offset = 0
    for p in parts:
        for v in range(p.n):
            adj.append(p.adj[v] << offset)
        offset += p.n
    return Graph(offset, tuple(adj))


def graph_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    n = g.n + h.n
    left_mask = (1 << g.n) - 1
    right_mask = ((1 << h.n) - 1) << g.n
    adj = [0] * n
    for v in range(g.n):
        adj[v] = g.adj[v] | right_mask
    for v in range(h.n):
        adj[g.n + v] = (h.adj[v] << g.n) | left_mask
    return Graph(n, tuple(adj))


def complement_graph(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, adj)


def induced_subgraph(g: Graph, vertices) -> Graph:
    verts = sorted(set(vertices))
    if not verts:
        raise InputError("induced subgraph needs a nonempty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise InputError("induced subgraph vertex out of range")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        row = 0
        for u in bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        adj[index[v]] = row
    return Graph(len(verts), tuple(adj))


def induced_from_mask(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the vertices of a nonzero bitmask."""
    verts = list(bits(mask))
    k = len(verts)
    adj = [0] * k
    for i, v in enumerate(verts):
        av = g.adj[v] & mask
        row = 0
        for j, u in enumerate(verts):
            if av >> u & 1:
                row |= 1 << j
        adj[i] = row
    return Graph(k, tuple(adj))


def spanning_subgraph(g: Graph, edges) -> Graph:
    """Same vertex set, edge set restricted to the given edges of g."""
    adj = [0] * g.n
    for u, v in edges:
        if not has_edge(g, u, v):
            raise InputError(f"({u},{v}) is not an edge of the graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def add_isolated_vertex(g: Graph) -> Graph:
    return Graph(g.n + 1, g.adj + (0,))


# -------------------------------------------------------------- families


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"clique needs n >= 1, got {n}")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise InputError(f"empty graph needs n >= 1, got {n}")
    return Graph(n, (0,) * n)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InputError(f"complete bipartite needs both sides >= 1, got {a},{b}")
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(n: int) -> Graph:
    """Cycle of length n joined with a single hub, n + 1 vertices."""
    if n < 3:
        raise InputError(f"wheel needs n >= 3, got {n}")
    return graph_join(cycle_graph(n), empty_graph(1))


def ladder_graph(n: int) -> Graph:
    """Circular ladder: two n-cycles 0..n-1 and n..2n-1 plus rungs i, n+i."""
    if n < 3:
        raise InputError(f"ladder needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return make_graph(2 * n, edges)


def mobius_graph(n: int) -> Graph:
    """Cycle of length 2n plus the n antipodal chords i, i+n."""
    if n < 2:
        raise InputError(f"mobius needs n >= 2, got {n}")
    edges = [(i, (i + 1) % (2 * n)) for i in range(2 * n)]
    edges += [(i, i + n) for i in range(n)]
    return make_graph(2 * n, edges)


def cycle_square_graph(n: int) -> Graph:
    """Square of the n-cycle: edges at circular distance 1 and 2."""
    if n < 3:
        raise InputError(f"cyclesq needs n >= 3, got {n}")
    edges = {(min(i, j), max(i, j))
             for i in range(n)
             for j in ((i + 1) % n, (i + 2) % n)
             if i != j}
    return make_graph(n, sorted(edges))


def grid_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InputError(f"grid needs both sides >= 1, got {a},{b}")
    edges = []
    for r in range(a):
        for c in range(b):
            v = r * b + c
            if c + 1 < b:
                edges.append((v, v + 1))
            if r + 1 < a:
                edges.append((v, v + b))
    return make_graph(a * b, edges)


def tailed_cycle(i: int) -> Graph:
    """Cycle of length i-1 with one pendant vertex; i vertices, i edges.

    Similar to the i-cycle (same order, size, component count) but not
    isomorphic to it, which makes the pair a standard separation witness.
    """
    if i < 4:
        raise InputError(f"tailed cycle needs i >= 4, got {i}")
    edges = [(v, (v + 1) % (i - 1)) for v in range(i - 1)]
    edges.append((0, i - 1))
    return make_graph(i, edges)


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family expression: a named family or a du(...) union."""

    name: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()


_ONE_PARAM = {"path", "cycle", "clique", "empty", "wheel", "ladder",
              "mobius", "cyclesq"}
_TWO_PARAM = {"cbipartite", "grid"}


def _split_top_level(text: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InputError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise InputError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return parts


def parse_family_spec(text: str) -> FamilySpec:
    text = text.strip()
    if text.startswith("du(") and text.endswith(")"):
        inner = text[3:-1]
        if not inner.strip():
            raise InputError("du(...) needs at least one part")
        parts = tuple(parse_family_spec(p) for p in _split_top_level(inner))
        return FamilySpec("du", parts=parts)
    name, sep, rest = text.partition(":")
    name = name.strip()
    if name in _ONE_PARAM:
        if not sep or not rest:
            raise InputError(f"family {name!r} needs one index, e.g. {name}:5")
        try:
            k = int(rest)
        except ValueError:
            raise InputError(f"bad index {rest!r} for family {name!r}") from None
        return FamilySpec(name, (k,))
    if name in _TWO_PARAM:
        raw = rest.replace("x", ",")
        pieces = raw.split(",")
        if not sep or len(pieces) != 2:
            raise InputError(
                f"family {name!r} needs two indices, e.g. {name}:3,4")
        try:
            a, b = int(pieces[0]), int(pieces[1])
        except ValueError:
            raise InputError(f"bad indices {rest!r} for family {name!r}") from None
        return FamilySpec(name, (a, b))
    raise InputError(f"unknown graph family {name!r}")


_BUILDERS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "clique": complete_graph,
    "empty": empty_graph,
    "wheel": wheel_graph,
    "ladder": ladder_graph,
    "mobius": mobius_graph,
    "cyclesq": cycle_square_graph,
    "cbipartite": complete_bipartite,
    "grid": grid_graph,
}


def make_family(spec: FamilySpec) -> Graph:
    if spec.name == "du":
        return disjoint_union(make_family(p) for p in spec.parts)
    return _BUILDERS[spec.name](*spec.params)


def family_note(spec: FamilySpec) -> list[str]:
    """Advisory notes for degenerate but permitted parameter choices."""
    notes = []
    if spec.name == "cyclesq" and spec.params[0] in (3, 4):
        notes.append(
            f"cyclesq:{spec.params[0]} degenerates to the complete graph; "
            "distance-2 closure only separates from n = 5 on")
    for part in spec.parts:
        notes.extend(family_note(part))
    return notes


def family_label(spec: FamilySpec) -> str:
    if spec.name == "du":
        return "du(" + ",".join(family_label(p) for p in spec.parts) + ")"
    if spec.name == "grid":
        return "grid:{}x{}".format(*spec.params)
    return spec.name + ":" + ",".join(str(p) for p in spec.params)


# -------------------------------------------------------------- graph text


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {edge_count(g)}"]
    for u, v in edge_list(g):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise InputError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError("graph header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InputError("graph header must be 'n m'") from None
    if len(lines) - 1 != m:
        raise InputError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise InputError(f"bad edge line {ln!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise InputError(f"bad edge line {ln!r}") from None
        if not u < v:
            raise InputError(f"edge line {ln!r} must satisfy u < v")
        edges.append((u, v))
    return make_graph(n, edges)


# -------------------------------------------------------------- isomorphism


def _vertex_profiles(g: Graph) -> list[tuple]:
    degs = degrees(g)
    tri = [0] * g.n
    for u, v in edge_list(g):
        common = g.adj[u] & g.adj[v]
        c = common.bit_count()
        tri[u] += c
        tri[v] += c
    return [
        (degs[v], tri[v], tuple(sorted(degs[u] for u in bits(g.adj[v]))))
        for v in range(g.n)
    ]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact test by backtracking over profile-compatible assignments."""
    if g.n != h.n:
        return False
    if edge_count(g) != edge_count(h):
        return False
    pg = _vertex_profiles(g)
    ph = _vertex_profiles(h)
    if sorted(pg) != sorted(ph):
        return False
    freq: dict[tuple, int] = {}
    for p in pg:
        freq[p] = freq.get(p, 0) + 1
    order = sorted(range(g.n), key=lambda v: (freq[pg[v]], -pg[v][0], v))
    candidates = [[w for w in range(h.n) if ph[w] == pg[v]] for v in order]

    image = [-1] * g.n       # image[position in order] = h-vertex
    used = [False] * h.n

    def assign(k: int) -> bool:
        if k == g.n:
            return True
        v = order[k]
        for w in candidates[k]:
            if used[w]:
                continue
            ok = True
            for i in range(k):
                u = order[i]
                if (g.adj[v] >> u & 1) != (h.adj[w] >> image[i] & 1):
                    ok = False
                    break
            if ok:
                used[w] = True
                image[k] = w
                if assign(k + 1):
                    return True
                used[w] = False
        return False

    return assign(0)


def canonical_form(g: Graph, cap: int | None = None) -> str:
    """Lexicographically minimal adjacency bit string over relabellings.

    The string lists the upper triangle column by column: placing vertex k
    appends its adjacency to the k previously placed vertices.  Equal
    strings characterize isomorphic graphs, and sorting by the string gives
    a stable order on isomorphism classes.
    """
    cap = DEFAULT_CAPS.enum_n if cap is None else cap
    if g.n > cap:
        raise CapError(
            f"canonical form capped at n <= {cap}, got {g.n}; raise the cap explicitly")
    n = g.n
    m = edge_count(g)
    total = n * (n - 1) // 2
    if m == 0:
        return "0" * total
    if m == total:
        return "1" * total
    adj = g.adj
    best: list[int] | None = None

    def extend(order: list[int], used: int, code: list[int]) -> None:
        nonlocal best
        k = len(order)
        if k == n:
            if best is None or code < best:
                best = list(code)
            return
        for v in range(n):
            if used >> v & 1:
                continue
            seg = [(adj[u] >> v) & 1 for u in order]
            newcode = code + seg
            if best is not None and newcode > best[: len(newcode)]:
                continue
            extend(order + [v], used | 1 << v, newcode)

    extend([], 0, [])
    assert best is not None
    return "".join("1" if b else "0" for b in best)


# -------------------------------------------------------------- enumeration


def _fingerprint(g: Graph) -> tuple:
    profiles = _vertex_profiles(g)
    return (g.n, edge_count(g), tuple(sorted(profiles)))


def _extend_by_vertex(g: Graph, neighbor_mask: int) -> Graph:
    v = g.n
    adj = list(g.adj)
    for u in bits(neighbor_mask):
        adj[u] |= 1 << v
    adj.append(neighbor_mask)
    return Graph(g.n + 1, tuple(adj))


@functools.lru_cache(maxsize=None)
def _enumerate_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (empty_graph(1),)
    buckets: dict[tuple, list[Graph]] = {}
    for base in _enumerate_classes(n - 1):
        for mask in range(1 << (n - 1)):
            g = _extend_by_vertex(base, mask)
            fp = _fingerprint(g)
            bucket = buckets.setdefault(fp, [])
            if not any(is_isomorphic(g, rep) for rep in bucket):
                bucket.append(g)
    reps = [g for bucket in buckets.values() for g in bucket]
    reps.sort(key=lambda g: canonical_form(g, cap=n))
    return tuple(reps)


def enumerate_graphs(n: int, cap: int | None = None) -> tuple[Graph, ...]:
    """All isomorphism classes of order n, sorted by canonical form."""
    cap = DEFAULT_CAPS.enum_n if cap is None else cap
    if n < 1:
        raise InputError(f"enumeration needs n >= 1, got {n}")
    if n > cap:
        raise CapError(
            f"enumeration capped at n <= {cap}, got {n}; raise the cap explicitly")
    return _enumerate_classes(n)


def graphs_up_to(n_bound: int, cap: int | None = None) -> list[Graph]:
    """Classes of every order 1..n_bound, in (order, canonical form) order."""
    out: list[Graph] = []
    for n in range(1, n_bound + 1):
        out.extend(enumerate_graphs(n, cap=cap))
    return out
