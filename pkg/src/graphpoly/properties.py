"""Decidable isomorphism-invariant graph properties.

A GraphProperty packages a total predicate on graphs together with two
flags the polynomial layer needs:

* contains_null: whether the property holds for the null graph (no
  vertices).  The null graph is not a Graph value; the flag decides
  whether the empty vertex subset contributes X^0 to subset sums.
* closure_isolated: whether the property class is closed under adding an
  isolated vertex.  This is undeclared until checked; check_closed_isolated
  verifies it exhaustively up to a bound or produces a witness.

The builtin registry covers the property classes the rest of the package
refers to by name.  Properties are immutable; the complement constructor
returns a new property with the predicate negated, contains_null flipped,
and the closure status reset.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .caps import DEFAULT_CAPS
from .errors import InputError
from .graph import (
    Graph,
    add_isolated_vertex,
    bits,
    component_masks,
    degrees,
    edge_count,
    enumerate_graphs,
)


@dataclass(frozen=True)
class ClosureStatus:
    state: str = "undeclared"          # undeclared | verified | refuted
    bound: int | None = None
    witness: Graph | None = None


@dataclass(frozen=True)
class GraphProperty:
    name: str
    predicate: Callable[[Graph], bool] = field(compare=False)
    contains_null: bool = False
    closure_isolated: ClosureStatus = ClosureStatus()

    def holds(self, g: Graph) -> bool:
        return bool(self.predicate(g))

    def key(self) -> tuple:
        """Stable identity for caching computed polynomial values."""
        return (self.name, self.contains_null)


def complement_property(c: GraphProperty) -> GraphProperty:
    """Pointwise negation; closure information does not transfer."""
    pred = c.predicate
    return GraphProperty(
        name=f"not({c.name})",
        predicate=lambda g: not pred(g),
        contains_null=not c.contains_null,
        closure_isolated=ClosureStatus(),
    )


# ------------------------------------------------------------ predicates


def _is_edgeless(g: Graph) -> bool:
    return edge_count(g) == 0


def _is_clique(g: Graph) -> bool:
    return edge_count(g) == g.n * (g.n - 1) // 2


def _is_connected(g: Graph) -> bool:
    return len(component_masks(g)) == 1


def _is_disconnected(g: Graph) -> bool:
    return len(component_masks(g)) >= 2


def _is_forest(g: Graph) -> bool:
    return edge_count(g) == g.n - len(component_masks(g))


def _is_match_like(g: Graph) -> bool:
    # every component is a single vertex or a single edge
    return all(c.bit_count() <= 2 for c in component_masks(g))


def _is_only_k1(g: Graph) -> bool:
    return g.n == 1


def _is_pair_k2_e2(g: Graph) -> bool:
    return g.n == 2


def _is_triple_k1_k2_e2(g: Graph) -> bool:
    return g.n <= 2


def _cycle_exactly(i: int) -> Callable[[Graph], bool]:
    def pred(g: Graph) -> bool:
        return (g.n == i and edge_count(g) == i
                and all(d == 2 for d in degrees(g))
                and len(component_masks(g)) == 1)
    return pred


def _cycle_plus_isolated(i: int) -> Callable[[Graph], bool]:
    def pred(g: Graph) -> bool:
        if edge_count(g) != i:
            return False
        degs = degrees(g)
        if any(d not in (0, 2) for d in degs):
            return False
        core = [v for v in range(g.n) if degs[v] == 2]
        if len(core) != i:
            return False
        # the degree-2 vertices must form one cycle, i.e. one component
        comps = component_masks(g)
        return sum(1 for c in comps if c.bit_count() > 1) == 1
    return pred


def builtin(name: str) -> GraphProperty:
    """Registry lookup; parametric names use a ':i' suffix."""
    if name == "edgeless":
        return GraphProperty("edgeless", _is_edgeless, contains_null=True)
    if name == "clique":
        return GraphProperty("clique", _is_clique)
    if name == "connected":
        return GraphProperty("connected", _is_connected)
    if name == "disconnected":
        return GraphProperty("disconnected", _is_disconnected)
    if name == "forest":
        return GraphProperty("forest", _is_forest)
    if name == "match_like":
        return GraphProperty("match_like", _is_match_like)
    if name == "only_K1":
        return GraphProperty("only_K1", _is_only_k1)
    if name == "pair_K2_E2":
        return GraphProperty("pair_K2_E2", _is_pair_k2_e2)
    if name == "triple_K1_K2_E2":
        return GraphProperty("triple_K1_K2_E2", _is_triple_k1_k2_e2)
    head, sep, rest = name.partition(":")
    if sep and head in ("cycle_exactly", "cycle_plus_isolated"):
        try:
            i = int(rest)
        except ValueError:
            raise InputError(f"bad cycle length {rest!r}") from None
        if i < 3:
            raise InputError(f"cycle properties need length >= 3, got {i}")
        if head == "cycle_exactly":
            return GraphProperty(name, _cycle_exactly(i))
        return GraphProperty(name, _cycle_plus_isolated(i))
    raise InputError(f"unknown property {name!r}")


_DSL_ALIASES = {
    "match": "match_like",
    "set(K1)": "only_K1",
    "set(K2,E2)": "pair_K2_E2",
    "set(K1,K2,E2)": "triple_K1_K2_E2",
}


def parse_property(text: str) -> GraphProperty:
    """Property DSL used by the CLI.

    Accepts the registry names plus the short forms: match, set(K1),
    set(K2,E2), set(K1,K2,E2), cycle:i, cycleE:i, and not(...) around any
    of them.
    """
    text = text.strip()
    if text.startswith("not(") and text.endswith(")"):
        return complement_property(parse_property(text[4:-1]))
    if text in _DSL_ALIASES:
        return builtin(_DSL_ALIASES[text])
    head, sep, rest = text.partition(":")
    if sep and head == "cycle":
        return builtin(f"cycle_exactly:{rest}")
    if sep and head == "cycleE":
        return builtin(f"cycle_plus_isolated:{rest}")
    return builtin(text)


def check_closed_isolated(c: GraphProperty, bound: int,
                          cap: int | None = None) -> ClosureStatus:
    """Is the class closed under adding one isolated vertex, up to bound?

    Checks every class member of order < bound; a witness is a graph in
    the class whose isolated extension leaves it.
    """
    cap = DEFAULT_CAPS.enum_n if cap is None else cap
    if bound < 2:
        raise InputError("closure check needs bound >= 2")
    for n in range(1, bound):
        for g in enumerate_graphs(n, cap=cap):
            if c.holds(g) and not c.holds(add_isolated_vertex(g)):
                return ClosureStatus("refuted", bound, g)
    return ClosureStatus("verified", bound, None)


def with_closure(c: GraphProperty, status: ClosureStatus) -> GraphProperty:
    return replace(c, closure_isolated=status)
