"""Distinctive-power comparisons between graph invariants.

An invariant P is at most as distinctive as Q (written P <= Q here) when
every pair of graphs Q fails to separate is also not separated by P.  The
strict variant s.d.p. quantifies only over similar pairs, i.e. graphs
sharing the (vertex, edge, component) signature; since those pairs are a
subset of all pairs, a refutation found in s.d.p. mode is automatically a
d.p. refutation, and a d.p. no-refutation forces an s.d.p. no-refutation.
check_dp_sdp_implication asserts that implication by running both scans.

All verdicts are relative to the scanned universe: isomorphism classes up
to the given order bound, ordered by (order, canonical form).  Refutations
come with the lexicographically first witness pair and are re-verified by
direct recomputation; "no refutation up to the bound" claims nothing about
larger graphs.

The two suites mechanize the known separations: incomparability_suite
builds the cycle/tailed-cycle gadgets whose polynomial values refute both
directions between cycle-indexed invariants of different index, and
dom_inexpressibility_suite runs the two-vertex case analyses showing the
dominating-set polynomial is no instance of the subset, spanning or
partition generating polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .errors import InputError
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graphs_up_to,
    signature,
    similar,
    tailed_cycle,
)
from .invariants import (
    PolyKind,
    compute_poly,
    dominating,
    gen_chromatic_value,
    gen_ind,
    gen_span,
    parse_poly_kind,
)
from .poly import UniPoly, falling_to_monomial
from .properties import (
    GraphProperty,
    builtin,
    check_closed_isolated,
    complement_property,
    parse_property,
    with_closure,
)

# ------------------------------------------------------------ handles


@dataclass(frozen=True)
class InvariantHandle:
    """A graph invariant: a polynomial kind, or a property as 0/1 value."""

    kind: str
    prop: GraphProperty | None = None

    def label(self) -> str:
        if self.prop is None:
            return self.kind
        return f"{self.kind}:{self.prop.name}"

    def key(self):
        return (self.kind, self.prop.key() if self.prop else None)


def parse_handle(text: str) -> InvariantHandle:
    if text.startswith("prop:"):
        return InvariantHandle("prop", parse_property(text[len("prop:"):]))
    pk = parse_poly_kind(text)
    return InvariantHandle(pk.kind, pk.prop)


_shared_cache: dict = {}


def evaluate_handle(handle: InvariantHandle, g: Graph,
                    caps: Caps = DEFAULT_CAPS, cache: dict | None = None):
    """Value of the handle on g; isomorphic inputs give equal values."""
    if handle.kind == "prop":
        assert handle.prop is not None
        return 1 if handle.prop.holds(g) else 0
    if cache is None:
        cache = _shared_cache
    key = (handle.key(), g)
    value = cache.get(key)
    if value is None:
        value = compute_poly(PolyKind(handle.kind, handle.prop), g, caps)
        cache[key] = value
    return value


# ------------------------------------------------------------ comparison


@dataclass(frozen=True)
class DirectionVerdict:
    refuted: bool
    witness: tuple[Graph, Graph] | None


@dataclass(frozen=True)
class ComparisonReport:
    p_label: str
    q_label: str
    mode: str
    bound: int
    p_le_q: DirectionVerdict
    q_le_p: DirectionVerdict


def _first_refuting_pair(universe, fine_values, group_keys):
    """Lex-first index pair equal under the group key, unequal under fine."""
    groups: dict = {}
    for idx, key in enumerate(group_keys):
        groups.setdefault(key, []).append(idx)
    best: tuple[int, int] | None = None
    for members in groups.values():
        if len(members) < 2:
            continue
        if len({fine_values[i] for i in members}) < 2:
            continue
        found = None
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if fine_values[members[a]] != fine_values[members[b]]:
                    found = (members[a], members[b])
                    break
            if found:
                break
        if found and (best is None or found < best):
            best = found
    return best


def _direction(universe, vals_p, vals_q, sigs, mode) -> DirectionVerdict:
    if mode == "dp":
        keys = vals_q
    else:
        keys = [(sigs[i], vals_q[i]) for i in range(len(universe))]
    pair = _first_refuting_pair(universe, vals_p, keys)
    if pair is None:
        return DirectionVerdict(refuted=False, witness=None)
    return DirectionVerdict(refuted=True,
                            witness=(universe[pair[0]], universe[pair[1]]))


def _reverify(witness, p, q, mode, caps) -> None:
    g1, g2 = witness
    if evaluate_handle(q, g1, caps, cache={}) != evaluate_handle(
            q, g2, caps, cache={}):
        raise ValueError("witness failed re-verification: values differ "
                         "under the coarser invariant")
    if evaluate_handle(p, g1, caps, cache={}) == evaluate_handle(
            p, g2, caps, cache={}):
        raise ValueError("witness failed re-verification: values agree "
                         "under the finer invariant")
    if mode == "sdp" and not similar(g1, g2):
        raise ValueError("witness failed re-verification: pair not similar")


def compare(p: InvariantHandle, q: InvariantHandle, mode: str, n_bound: int,
            caps: Caps = DEFAULT_CAPS,
            cache: dict | None = None) -> ComparisonReport:
    """Scan all class pairs (dp) or all similar pairs (sdp) up to the bound."""
    if mode not in ("dp", "sdp"):
        raise InputError(f"mode must be dp or sdp, got {mode!r}")
    universe = graphs_up_to(n_bound, cap=caps.enum_n)
    vals_p = [evaluate_handle(p, g, caps, cache) for g in universe]
    vals_q = [evaluate_handle(q, g, caps, cache) for g in universe]
    sigs = [signature(g) for g in universe]
    forward = _direction(universe, vals_p, vals_q, sigs, mode)
    backward = _direction(universe, vals_q, vals_p, sigs, mode)
    if forward.witness is not None:
        _reverify(forward.witness, p, q, mode, caps)
    if backward.witness is not None:
        _reverify(backward.witness, q, p, mode, caps)
    return ComparisonReport(p_label=p.label(), q_label=q.label(), mode=mode,
                            bound=n_bound, p_le_q=forward, q_le_p=backward)


@dataclass(frozen=True)
class ImplicationReport:
    dp: ComparisonReport
    sdp: ComparisonReport

    @property
    def holds(self) -> bool:
        """dp no-refutation forces sdp no-refutation, in both directions."""
        ok_fwd = self.dp.p_le_q.refuted or not self.sdp.p_le_q.refuted
        ok_bwd = self.dp.q_le_p.refuted or not self.sdp.q_le_p.refuted
        return ok_fwd and ok_bwd


def check_dp_sdp_implication(p: InvariantHandle, q: InvariantHandle,
                             n_bound: int, caps: Caps = DEFAULT_CAPS,
                             cache: dict | None = None) -> ImplicationReport:
    dp = compare(p, q, "dp", n_bound, caps, cache)
    sdp = compare(p, q, "sdp", n_bound, caps, cache)
    return ImplicationReport(dp=dp, sdp=sdp)


# ------------------------------------------------------------ property relation


@dataclass(frozen=True)
class PropertyRelation:
    """How two properties sit relative to each other on a bounded universe."""

    relation: str  # equal | complement | incomparable
    bound: int
    in_both: Graph | None
    in_first_only: Graph | None
    in_second_only: Graph | None
    in_neither: Graph | None


def property_relation(c1: GraphProperty, c2: GraphProperty, n_bound: int,
                      caps: Caps = DEFAULT_CAPS) -> PropertyRelation:
    """Pointwise equal, pointwise complementary, or neither (with witnesses).

    The four membership regions get their first witness in universe order;
    equality means both exclusive regions stay empty, complementarity means
    the agreement regions (both, neither) stay empty.
    """
    in_both = in_first = in_second = in_neither = None
    for g in graphs_up_to(n_bound, cap=caps.enum_n):
        a, b = c1.holds(g), c2.holds(g)
        if a and b and in_both is None:
            in_both = g
        elif a and not b and in_first is None:
            in_first = g
        elif b and not a and in_second is None:
            in_second = g
        elif not a and not b and in_neither is None:
            in_neither = g
    if in_first is None and in_second is None:
        relation = "equal"
    elif in_both is None and in_neither is None:
        relation = "complement"
    else:
        relation = "incomparable"
    return PropertyRelation(relation=relation, bound=n_bound,
                            in_both=in_both, in_first_only=in_first,
                            in_second_only=in_second, in_neither=in_neither)


# ------------------------------------------------------------ gadget suite


def cycle_copies(i: int, k: int) -> Graph:
    """k disjoint copies of the i-cycle."""
    return disjoint_union([cycle_graph(i)] * k)


def tailed_mix(i: int, k: int) -> Graph:
    """k - 1 tailed cycles plus one honest i-cycle, same signature as above.

    A tailed cycle on i vertices is the (i-1)-cycle with a pendant vertex,
    so both gadgets have k*i vertices, k*i edges and k components, yet only
    this one lacks a second induced (or spanning) i-cycle.
    """
    return disjoint_union([tailed_cycle(i)] * (k - 1) + [cycle_graph(i)])


def _gadget_pair(t: int, k: int) -> tuple[Graph, Graph, str]:
    """The index-t witness pair and a tag naming its shape.

    From index 4 on the pair is (k copies, tailed mix): equal signature,
    distinguished only by invariants of index t.  At index 3 the tailed
    partner would need a 2-cycle, and in fact the triangle is the only
    graph with its signature, so no similar partner exists at all; the
    pair (one copy, k copies) still separates index-3 invariants while
    every other index sees zero on both members.
    """
    if t >= 4:
        return cycle_copies(t, k), tailed_mix(t, k), "copies-vs-tailed"
    return cycle_graph(t), cycle_copies(t, k), "single-vs-copies"


@dataclass(frozen=True)
class ValueCheck:
    name: str
    expected: UniPoly
    actual: UniPoly

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class IncompReport:
    variant: str
    i: int
    j: int
    k: int
    pair_shape_i: str
    pair_shape_j: str
    checks: tuple[ValueCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def mutual_refutation(self) -> bool:
        """Both directions between the index-i and index-j invariants fall.

        The index-i pair differs under the index-i invariant but is
        indistinguishable (both values zero) under the index-j one, and
        symmetrically, so once every value check passes each direction has
        an explicit witness pair.
        """
        return self.all_ok


def _suite_property(variant: str, i: int) -> GraphProperty:
    if variant == "span":
        return builtin(f"cycle_plus_isolated:{i}")
    return builtin(f"cycle_exactly:{i}")


def incomparability_suite(variant: str, i: int, j: int, k: int = 2,
                          caps: Caps = DEFAULT_CAPS) -> IncompReport:
    """Verify the gadget values separating index-i from index-j invariants.

    For the subset and spanning variants the tailed cycle on t vertices
    contains a (t-1)-cycle, so indices one apart see each other's gadgets
    and both |i - j| >= 2 and i, j >= 3 are required.  The partition
    variant is safe for any distinct indices: the pendant vertex of a
    tailed cycle has degree 1 and can never sit inside a block inducing a
    cycle, so every cross value vanishes outright.
    """
    if variant not in ("ind", "span", "genchrom"):
        raise InputError(f"unknown suite variant {variant!r}")
    if k < 2:
        raise InputError("the gadgets need k >= 2 copies to differ")
    if i < 3 or j < 3 or i == j:
        raise InputError("indices must be distinct and at least 3")
    if variant in ("ind", "span") and abs(i - j) < 2:
        raise InputError(
            "adjacent indices collide through the tailed cycle; "
            f"the {variant} variant needs |i - j| >= 2")

    prop_i, prop_j = _suite_property(variant, i), _suite_property(variant, j)
    pair_i = _gadget_pair(i, k)
    pair_j = _gadget_pair(j, k)

    def value(prop: GraphProperty, g: Graph) -> UniPoly:
        if variant == "ind":
            return gen_ind(g, prop, cap_n=caps.subset_n)
        if variant == "span":
            return gen_span(g, prop, cap_m=caps.subset_m)
        from .invariants import gen_chromatic
        return gen_chromatic(g, prop, cap_partition=caps.partition_n)

    checks = []
    for tag, prop_own, prop_other, idx, pair in (
            ("i", prop_i, prop_j, i, pair_i),
            ("j", prop_j, prop_i, j, pair_j)):
        first, second, shape = pair
        if variant == "genchrom":
            # a copy of the cycle is the only usable block, so the block
            # counts are forced: one partition per pure-copies gadget, none
            # once a pendant vertex appears
            if shape == "copies-vs-tailed":
                expect = (falling_to_monomial([0] * k + [1]), UniPoly.zero())
            else:
                expect = (UniPoly.x(), falling_to_monomial([0] * k + [1]))
        else:
            if shape == "copies-vs-tailed":
                expect = (UniPoly.monomial(idx, k), UniPoly.monomial(idx, 1))
            else:
                expect = (UniPoly.monomial(idx, 1), UniPoly.monomial(idx, k))
        checks.append(ValueCheck(f"own-{tag}-first", expect[0],
                                 value(prop_own, first)))
        checks.append(ValueCheck(f"own-{tag}-second", expect[1],
                                 value(prop_own, second)))
        checks.append(ValueCheck(f"cross-{tag}-first", UniPoly.zero(),
                                 value(prop_other, first)))
        checks.append(ValueCheck(f"cross-{tag}-second", UniPoly.zero(),
                                 value(prop_other, second)))
    return IncompReport(variant=variant, i=i, j=j, k=k,
                        pair_shape_i=pair_i[2], pair_shape_j=pair_j[2],
                        checks=tuple(checks))


# ------------------------------------------------------------ complement check


@dataclass(frozen=True)
class ComplementCheckReport:
    prop_name: str
    kind: str
    mode: str
    closure_note: str | None
    report: ComparisonReport

    @property
    def equivalent_up_to_bound(self) -> bool:
        return not (self.report.p_le_q.refuted or self.report.q_le_p.refuted)


def sdp_equiv_complement_check(c: GraphProperty, kind: str, n_bound: int,
                               caps: Caps = DEFAULT_CAPS,
                               cache: dict | None = None
                               ) -> ComplementCheckReport:
    """Compare a property's generating polynomial against its complement's.

    For the subset and spanning kinds the complement identities pin the two
    values together on similar graphs, so the scan runs in sdp mode and is
    expected to find nothing.  The partition kind has no such identity and
    the scan runs unrestricted (dp), where complementary properties do get
    separated; connected versus disconnected is the classical case.
    """
    if kind not in ("ind", "span", "genchrom"):
        raise InputError(f"kind must be ind, span or genchrom, got {kind!r}")
    closure_note = None
    if kind == "span":
        status = c.closure_isolated
        if status.state == "undeclared":
            status = check_closed_isolated(c, bound=n_bound,
                                           cap=caps.subset_n)
            c = with_closure(c, status)
        if status.state == "refuted":
            raise InputError(
                f"property {c.name!r} is not closed under isolated "
                f"vertices (witness order {status.witness.n})")
        closure_note = f"closure under isolated vertices verified up to " \
                       f"order {status.bound}"
    mode = "sdp" if kind in ("ind", "span") else "dp"
    p = InvariantHandle(kind, c)
    q = InvariantHandle(kind, complement_property(c))
    report = compare(p, q, mode, n_bound, caps, cache)
    return ComplementCheckReport(prop_name=c.name, kind=kind, mode=mode,
                                 closure_note=closure_note, report=report)


# ------------------------------------------------------------ dominating suite


@dataclass(frozen=True)
class DomCase:
    name: str
    lhs: int
    rhs: int

    @property
    def clash(self) -> bool:
        return self.lhs != self.rhs


@dataclass(frozen=True)
class DomBranch:
    name: str
    argument: str
    cases: tuple[DomCase, ...]

    @property
    def ok(self) -> bool:
        return all(case.clash for case in self.cases)


@dataclass(frozen=True)
class DomReport:
    branches: tuple[DomBranch, ...]

    @property
    def all_contradict(self) -> bool:
        return all(branch.ok for branch in self.branches)


def dom_inexpressibility_suite() -> DomReport:
    """The dominating-set polynomial is none of the three generating kinds.

    Each branch is a finite case split on how a hypothetical property
    behaves on the graphs with at most two vertices, which is the only
    data the clashing quantity depends on:

    * subset kind: the coefficient of X in the vertex-subset polynomial is
      (number of vertices) times [single vertex in the class] on both
      two-vertex graphs, so it cannot be 0 on one and 2 on the other the
      way the dominating polynomial demands.
    * spanning kind: the coefficient of X counts one-edge subsets in the
      class, and the one-edge graph has exactly one edge, so the
      coefficient is at most 1, never the required 2.
    * partition kind: with one color the value on the one-edge graph is
      [that graph in the class], 0 or 1, never the required 3.

    Representative properties realize each side of every split; the branch
    stands because the clashing quantity provably depends on nothing else.
    """
    k2 = complete_graph(2)
    e2 = empty_graph(2)
    dom_k2 = dominating(k2)
    dom_e2 = dominating(e2)
    singleton_in = builtin("edgeless")        # contains the one-vertex graph
    singleton_out = builtin("pair_K2_E2")     # two-vertex members only
    edge_in = builtin("connected")
    edge_out = builtin("edgeless")

    subset_cases = (
        DomCase("singleton-in-class, empty pair",
                int(gen_ind(e2, singleton_in).coefficient(1)),
                int(dom_e2.coefficient(1))),
        DomCase("singleton-not-in-class, one-edge pair",
                int(gen_ind(k2, singleton_out).coefficient(1)),
                int(dom_k2.coefficient(1))),
    )
    spanning_cases = (
        DomCase("edge-graph-in-class",
                int(gen_span(k2, edge_in).coefficient(1)),
                int(dom_k2.coefficient(1))),
        DomCase("edge-graph-not-in-class",
                int(gen_span(k2, edge_out).coefficient(1)),
                int(dom_k2.coefficient(1))),
    )
    partition_cases = (
        DomCase("edge-graph-in-class",
                gen_chromatic_value(k2, edge_in, 1),
                int(dom_k2.evaluate(1))),
        DomCase("edge-graph-not-in-class",
                gen_chromatic_value(k2, edge_out, 1),
                int(dom_k2.evaluate(1))),
    )
    return DomReport(branches=(
        DomBranch("subset", "coefficient of X on the two-vertex graphs",
                  subset_cases),
        DomBranch("spanning", "coefficient of X on the one-edge graph",
                  spanning_cases),
        DomBranch("partition", "evaluation at one color on the one-edge "
                  "graph", partition_cases),
    ))
