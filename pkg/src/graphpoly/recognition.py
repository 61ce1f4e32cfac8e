"""Recognition of graphs from polynomial values, plus identity suites.

Four entry points:

* brute_recognize scans isomorphism classes and keeps graphs whose
  polynomial equals the query exactly.  The characteristic, matching and
  chromatic kinds are monic of degree n, so the query's degree pins the
  order and the scan stays within a single order; other kinds need an
  explicit bound.
* family_recognize inverts the degree-to-index map of a one-parameter
  family and checks the single candidate member.  A hit means "equal
  polynomial value"; reading it as "isomorphic to the family member"
  additionally assumes the family is recognizable from this polynomial,
  and the result carries that assumption as a flag rather than a claim.
* check_p_unique searches for a non-isomorphic graph with the same value.
* identity_suite and chromatic_screen package the matching-polynomial
  identities against the classical orthogonal families and the cheap
  necessary conditions for chromatic values.  A failed screen check
  certifies the input is no chromatic polynomial; passes certify nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .caps import Caps, DEFAULT_CAPS
from .errors import InputError
from .graph import (
    Graph,
    complete_graph,
    disjoint_union,
    enumerate_graphs,
    is_isomorphic,
)
from .invariants import (
    PolyKind,
    compute_poly,
    matching_defect,
    maximal_clique_profile,
    parse_poly_kind,
)
from .orthopoly import chebyshev_t, chebyshev_u, hermite_he, laguerre
from .poly import UniPoly

DEGREE_FORCED_KINDS = ("char", "charL", "mu", "chrom")

# degree of the polynomial -> family index, None when no member fits
_FAMILY_INDEX = {
    "path": lambda d: d if d >= 1 else None,
    "cycle": lambda d: d if d >= 3 else None,
    "clique": lambda d: d if d >= 1 else None,
    "empty": lambda d: d if d >= 1 else None,
    "wheel": lambda d: d - 1 if d >= 4 else None,
    "cbipartite": lambda d: d // 2 if d >= 2 and d % 2 == 0 else None,
    "ladder": lambda d: d // 2 if d >= 6 and d % 2 == 0 else None,
    "mobius": lambda d: d // 2 if d >= 4 and d % 2 == 0 else None,
    "cyclesq": lambda d: d if d >= 3 else None,
}


@dataclass(frozen=True)
class RecognitionResult:
    """All universe members realizing the query polynomial."""

    matches: tuple[Graph, ...]
    method: str
    bound: int


@dataclass(frozen=True)
class FamilyRecognition:
    index: int | None
    family: str
    kind: str
    uniqueness_assumed: bool = True

    @property
    def found(self) -> bool:
        return self.index is not None


@dataclass(frozen=True)
class UniquenessVerdict:
    unique: bool
    counterexample: Graph | None
    bound: int


def _query_order(p: UniPoly) -> int | None:
    """Order a monic degree-n kind would force, None if no graph can match."""
    if p.is_zero() or p.degree < 1:
        return None
    return int(p.degree)


def brute_recognize(p: UniPoly, poly_kind, n_bound: int | None = None,
                    caps: Caps = DEFAULT_CAPS) -> RecognitionResult:
    """Exhaustive scan for graphs whose polynomial equals p.

    Degree-forced kinds derive the scanned order from p itself; passing a
    smaller n_bound on top of that empties the universe instead of lying
    about it.  Other kinds scan every order up to the mandatory n_bound.
    """
    pk = parse_poly_kind(poly_kind) if isinstance(poly_kind, str) else poly_kind
    matches: list[Graph] = []
    if pk.kind in DEGREE_FORCED_KINDS:
        order = _query_order(p)
        bound = order if n_bound is None else n_bound
        orders = []
        if order is not None and (n_bound is None or order <= n_bound):
            orders = [order]
        bound = bound if bound is not None else 0
    else:
        if n_bound is None:
            raise InputError(
                f"kind {pk.label()!r} has no degree-forced order; "
                "an explicit bound is required")
        orders = list(range(1, n_bound + 1))
        bound = n_bound
    for n in orders:
        for g in enumerate_graphs(n, cap=caps.enum_n):
            if compute_poly(pk, g, caps) == p:
                matches.append(g)
    return RecognitionResult(matches=tuple(matches), method="brute",
                             bound=bound)


def family_recognize(p: UniPoly, poly_kind, family: str,
                     caps: Caps = DEFAULT_CAPS) -> FamilyRecognition:
    """Check the one family member whose order matches the query degree."""
    from .graph import make_family, parse_family_spec

    pk = parse_poly_kind(poly_kind) if isinstance(poly_kind, str) else poly_kind
    if pk.kind not in DEGREE_FORCED_KINDS:
        raise InputError(
            f"kind {pk.label()!r} does not force the order from the degree")
    index_map = _FAMILY_INDEX.get(family)
    if index_map is None:
        raise InputError(f"no degree map for family {family!r}")
    result = FamilyRecognition(index=None, family=family, kind=pk.label())
    order = _query_order(p)
    if order is None:
        return result
    idx = index_map(order)
    if idx is None:
        return result
    g = make_family(parse_family_spec(f"{family}:{idx}"))
    if compute_poly(pk, g, caps) == p:
        return FamilyRecognition(index=idx, family=family, kind=pk.label())
    return result


def check_p_unique(g: Graph, poly_kind, n_bound: int,
                   caps: Caps = DEFAULT_CAPS) -> UniquenessVerdict:
    """Search the universe for a non-isomorphic graph with the same value.

    Degree-forced kinds only ever collide within one order, so the scan
    stays there; the rest scan every order up to the bound.  The verdict
    is relative to the bound by construction.
    """
    pk = parse_poly_kind(poly_kind) if isinstance(poly_kind, str) else poly_kind
    if g.n > n_bound:
        raise InputError(
            f"graph order {g.n} exceeds the requested bound {n_bound}")
    value = compute_poly(pk, g, caps)
    if pk.kind in DEGREE_FORCED_KINDS:
        orders = [g.n]
    else:
        orders = list(range(1, n_bound + 1))
    for n in orders:
        for h in enumerate_graphs(n, cap=caps.enum_n):
            if compute_poly(pk, h, caps) != value:
                continue
            if h.n == g.n and is_isomorphic(h, g):
                continue
            return UniquenessVerdict(unique=False, counterexample=h,
                                     bound=n_bound)
    return UniquenessVerdict(unique=True, counterexample=None, bound=n_bound)


# ------------------------------------------------------------ identity suite


@dataclass(frozen=True)
class IdentityItem:
    name: str
    checked: tuple[int, ...]
    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class IdentityReport:
    items: tuple[IdentityItem, ...]

    def item(self, name: str) -> IdentityItem:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    @property
    def identities_hold(self) -> bool:
        """The four substantive identities; the unscaled record is excluded."""
        return all(it.ok for it in self.items
                   if it.name != "bipartite-laguerre-unscaled")


def identity_suite(n_max: int = 12, bipartite_max: int = 5) -> IdentityReport:
    """Match the defect matching polynomial against the classical families.

    Items: mu(C_n; 2X) = 2 T_n(X) for n >= 3; mu(P_n; 2X) = U_n(X);
    mu(K_n; X) = He_n(X); mu(K_{n,n}; X) = (-1)^n n! L_n(X^2).  The
    bipartite item runs on its own bound since the matching counts of
    K_{n,n} are exhaustive in 2n vertices.  A final record item evaluates
    the same bipartite identity without the n! factor; it agrees at n = 1
    and breaks from n = 2 on, which the report keeps as data so nobody
    reintroduces the unscaled form.
    """
    from .graph import cycle_graph, path_graph, complete_bipartite

    if n_max < 3 or bipartite_max < 1:
        raise InputError("identity suite needs n_max >= 3, bipartite_max >= 1")
    double_x = UniPoly([0, 2])
    x_squared = UniPoly([0, 0, 1])
    items = []

    checked, failures = [], []
    for n in range(3, n_max + 1):
        checked.append(n)
        lhs = matching_defect(cycle_graph(n)).substitute(double_x)
        if lhs != 2 * chebyshev_t(n):
            failures.append(n)
    items.append(IdentityItem("cycle-chebyshev-t", tuple(checked),
                              tuple(failures)))

    checked, failures = [], []
    for n in range(1, n_max + 1):
        checked.append(n)
        lhs = matching_defect(path_graph(n)).substitute(double_x)
        if lhs != chebyshev_u(n):
            failures.append(n)
    items.append(IdentityItem("path-chebyshev-u", tuple(checked),
                              tuple(failures)))

    checked, failures = [], []
    for n in range(1, n_max + 1):
        checked.append(n)
        if matching_defect(complete_graph(n)) != hermite_he(n):
            failures.append(n)
    items.append(IdentityItem("clique-hermite", tuple(checked),
                              tuple(failures)))

    checked, failures, unscaled_failures = [], [], []
    for n in range(1, bipartite_max + 1):
        checked.append(n)
        mu = matching_defect(complete_bipartite(n, n))
        lag = laguerre(n).substitute(x_squared)
        sign = -1 if n % 2 else 1
        if mu != sign * factorial(n) * lag:
            failures.append(n)
        if mu != sign * lag:
            unscaled_failures.append(n)
    items.append(IdentityItem("bipartite-laguerre", tuple(checked),
                              tuple(failures)))
    items.append(IdentityItem("bipartite-laguerre-unscaled", tuple(checked),
                              tuple(unscaled_failures)))

    return IdentityReport(items=tuple(items))


# ------------------------------------------------------------ screens


@dataclass(frozen=True)
class ScreenReport:
    """Necessary-condition verdicts for chromatic-polynomial candidates."""

    checks: tuple[tuple[str, bool], ...]

    def verdict(self, name: str) -> bool:
        for check, ok in self.checks:
            if check == name:
                return ok
        raise KeyError(name)

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.checks)


def chromatic_screen(p: UniPoly) -> ScreenReport:
    """Cheap filters every chromatic polynomial of a graph satisfies."""
    checks: list[tuple[str, bool]] = []
    try:
        coeffs = list(p.integer_coefficients())
        integral = True
    except ValueError:
        coeffs = list(p.coeffs)
        integral = False
    checks.append(("integer-coefficients", integral))
    checks.append(("monic", not p.is_zero() and p.leading_coefficient() == 1))
    checks.append(("zero-constant-term",
                   p.is_zero() or p.coefficient(0) == 0))

    alternating = not p.is_zero()
    if alternating:
        d = int(p.degree)
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            expected_negative = (d - i) % 2 == 1
            if (c < 0) != expected_negative:
                alternating = False
                break
    checks.append(("alternating-signs", alternating))

    magnitudes = [abs(c) for c in coeffs]
    descending = False
    unimodal = True
    for prev, cur in zip(magnitudes, magnitudes[1:]):
        if cur < prev:
            descending = True
        elif cur > prev and descending:
            unimodal = False
            break
    checks.append(("unimodal", unimodal))

    log_concave = all(
        magnitudes[i] * magnitudes[i] >= magnitudes[i - 1] * magnitudes[i + 1]
        for i in range(1, len(magnitudes) - 1))
    checks.append(("log-concave", log_concave))

    return ScreenReport(checks=tuple(checks))


def maxcl_trivial_recognize(s: UniPoly) -> Graph:
    """Invert the maximal-clique profile on its full image.

    A profile sum a_i X^i (a_0 = 0, a_i >= 0, not all zero) is realized by
    the disjoint union of a_i cliques of each size i, and by construction
    that union has exactly the prescribed maximal cliques.  The witness is
    re-verified before being returned.
    """
    if s.is_zero():
        raise InputError("the zero profile is realized by no graph")
    try:
        coeffs = s.integer_coefficients()
    except ValueError:
        raise InputError("profile coefficients must be integers") from None
    if coeffs[0] != 0:
        raise InputError("profile constant term must be zero")
    if any(c < 0 for c in coeffs):
        raise InputError("profile coefficients must be nonnegative")
    parts = []
    for size, count in enumerate(coeffs):
        parts.extend(complete_graph(size) for _ in range(count))
    witness = disjoint_union(parts)
    if maximal_clique_profile(witness) != s:
        raise ValueError("constructed witness failed re-verification")
    return witness
