"""Graph polynomial computations against fixtures and brute-force oracles."""

import random

import pytest

import oracles
from graphpoly.caps import Caps
from graphpoly.errors import CapError, InputError
from graphpoly.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edge_count,
    edge_list,
    empty_graph,
    enumerate_graphs,
    grid_graph,
    path_graph,
    wheel_graph,
)
from graphpoly.invariants import (
    char_poly,
    chromatic,
    chromatic_blocks,
    compute_poly,
    dominating,
    gen_chromatic,
    gen_chromatic_blocks,
    gen_chromatic_value,
    gen_ind,
    gen_span,
    independence,
    matching_defect,
    matching_generating,
    matching_numbers,
    maximal_clique_profile,
    parse_poly_kind,
    tutte,
)
from graphpoly.poly import BiPoly, UniPoly
from graphpoly.properties import builtin, complement_property

X = UniPoly.x()


def one_plus_x_power(n):
    out = UniPoly.one()
    base = UniPoly([1, 1])
    for _ in range(n):
        out = out * base
    return out


def grid_dict(bp):
    return {(i, j): c for i, row in enumerate(bp.grid)
            for j, c in enumerate(row) if c}


class TestCharPoly:
    def test_fixtures(self):
        assert char_poly(complete_graph(2)) == UniPoly([-1, 0, 1])
        assert char_poly(path_graph(3)) == UniPoly([0, -2, 0, 1])
        assert char_poly(cycle_graph(3)) == UniPoly([-2, -3, 0, 1])

    def test_monic_of_degree_n(self):
        for g in enumerate_graphs(5):
            p = char_poly(g)
            assert p.degree == g.n
            assert p.leading_coefficient() == 1

    def test_matches_permutation_expansion(self):
        for n in (1, 2, 3, 4, 5):
            for g in enumerate_graphs(n):
                assert tuple(char_poly(g).integer_coefficients()) \
                    == oracles.perm_char(g)

    def test_laplacian_matches_permutation_expansion(self):
        rng = random.Random(10)
        sample = list(enumerate_graphs(5))
        rng.shuffle(sample)
        for g in sample[:10]:
            assert tuple(char_poly(g, "laplacian").integer_coefficients()) \
                == oracles.perm_char(g, "laplacian")

    def test_laplacian_of_complete_graph(self):
        # eigenvalues 0 and n with multiplicity n-1
        n = 5
        q = X
        shift = UniPoly([-n, 1])
        for _ in range(n - 1):
            q = q * shift
        assert char_poly(complete_graph(n), "laplacian") == q

    def test_multiplicative_over_disjoint_union(self):
        rng = random.Random(11)
        classes = list(enumerate_graphs(4))
        for _ in range(10):
            g, h = rng.choice(classes), rng.choice(classes)
            assert char_poly(disjoint_union([g, h])) \
                == char_poly(g) * char_poly(h)

    def test_unknown_matrix(self):
        with pytest.raises(InputError):
            char_poly(complete_graph(2), "incidence")


class TestMatchings:
    def test_fixtures(self):
        assert matching_numbers(complete_graph(3)) == (1, 3)
        assert matching_numbers(cycle_graph(4)) == (1, 4, 2)
        assert matching_numbers(empty_graph(5)) == (1,)

    def test_against_edge_subset_scan(self):
        for n in (2, 3, 4, 5):
            for g in enumerate_graphs(n):
                assert matching_numbers(g) == oracles.matchings_by_size(g)

    def test_generating_polynomial(self):
        assert matching_generating(complete_graph(3)) == UniPoly([1, 3])
        assert matching_generating(empty_graph(5)) == UniPoly.one()
        assert matching_generating(cycle_graph(4)) == UniPoly([1, 4, 2])

    def test_defect_fixtures(self):
        assert matching_defect(cycle_graph(3)) == UniPoly([0, -3, 0, 1])
        assert matching_defect(complete_graph(4)) == UniPoly([3, 0, -6, 0, 1])
        assert matching_defect(complete_bipartite(2, 2)) \
            == UniPoly([2, 0, -4, 0, 1])

    def test_defect_encodes_generating_counts(self):
        for g in enumerate_graphs(5):
            mu = matching_defect(g)
            counts = matching_numbers(g)
            n = g.n
            for k, m_k in enumerate(counts):
                assert mu.coefficient(n - 2 * k) == (-1) ** k * m_k
            assert mu.degree == n

    def test_forest_identity(self):
        forest = builtin("forest")
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                if forest.holds(g):
                    assert matching_defect(g) == char_poly(g)


class TestGenInd:
    def test_counts_all_vertex_subsets(self):
        only_k1 = builtin("only_K1")
        pair = builtin("pair_K2_E2")
        for n in (1, 2, 3, 4, 5):
            for g in enumerate_graphs(n):
                assert gen_ind(g, only_k1) == UniPoly.monomial(1, n)
                expect = UniPoly.monomial(2, n * (n - 1) // 2)
                assert gen_ind(g, pair) == expect

    def test_contains_null_adds_constant_term(self):
        g = path_graph(2)
        assert gen_ind(g, builtin("edgeless")).coefficient(0) == 1
        assert gen_ind(g, builtin("connected")).coefficient(0) == 0

    def test_complement_identity(self):
        names = ["edgeless", "connected", "forest", "clique", "match_like",
                 "cycle_exactly:3", "disconnected"]
        for n in range(1, 7):
            expect = one_plus_x_power(n)
            for g in enumerate_graphs(n):
                for name in names:
                    c = builtin(name)
                    total = gen_ind(g, c) + gen_ind(g, complement_property(c))
                    assert total == expect, (name, n)

    def test_independence_fixtures(self):
        assert independence(path_graph(3)) == UniPoly([1, 3, 1])
        assert independence(complete_graph(6)) == UniPoly([1, 6])
        assert independence(empty_graph(2)) == UniPoly([1, 2, 1])

    def test_independence_is_edgeless_gen_ind(self):
        for g in enumerate_graphs(4):
            assert independence(g) == gen_ind(g, builtin("edgeless"))

    def test_vertex_cap(self):
        caps = Caps(subset_n=3)
        with pytest.raises(CapError):
            gen_ind(path_graph(4), builtin("edgeless"), cap_n=caps.subset_n)


class TestGenSpan:
    def test_match_like_recovers_matching_polynomial(self):
        ml = builtin("match_like")
        for n in (2, 3, 4, 5):
            for g in enumerate_graphs(n):
                assert gen_span(g, ml) == matching_generating(g)

    def test_complement_identity_over_edges(self):
        for name in ("match_like", "cycle_plus_isolated:3"):
            d = builtin(name)
            for n in range(1, 7):
                for g in enumerate_graphs(n):
                    total = gen_span(g, d) \
                        + gen_span(g, complement_property(d))
                    assert total == one_plus_x_power(edge_count(g))

    def test_edge_cap(self):
        with pytest.raises(CapError):
            gen_span(complete_graph(7), builtin("match_like"), cap_m=20)


class TestGenChromatic:
    def test_blocks_match_partition_scan(self):
        names = ["edgeless", "connected", "forest"]
        for n in (1, 2, 3, 4, 5):
            for g in enumerate_graphs(n):
                for name in names:
                    c = builtin(name)
                    blocks = gen_chromatic_blocks(g, c)
                    ref = oracles.partition_blocks(g, c.holds)
                    assert list(blocks) == [ref.get(j, 0)
                                            for j in range(len(blocks))]

    def test_stirling_blocks_on_empty_graphs(self):
        edgeless = builtin("edgeless")
        for n in (1, 2, 3, 4, 5):
            blocks = gen_chromatic_blocks(empty_graph(n), edgeless)
            assert list(blocks[1:]) == [oracles.stirling2(n, j)
                                        for j in range(1, n + 1)]

    def test_connected_path_fixture(self):
        p = gen_chromatic(path_graph(3), builtin("connected"))
        assert p == UniPoly([0, 1, -1, 1])

    def test_disconnected_vanishes_on_cliques(self):
        disc = builtin("disconnected")
        for i in range(1, 6):
            assert gen_chromatic(complete_graph(i), disc).is_zero()

    def test_evaluation_matches_class_colorings(self):
        rng = random.Random(12)
        names = ["edgeless", "connected", "forest"]
        graphs = [g for n in (1, 2, 3, 4) for g in enumerate_graphs(n)]
        graphs += rng.sample(list(enumerate_graphs(5)), 8)
        for g in graphs:
            for name in names:
                c = builtin(name)
                p = gen_chromatic(g, c)
                for k in (1, 2, 3):
                    assert p.evaluate(k) \
                        == oracles.class_colorings(g, c.holds, k)

    def test_permissive_and_strict_conventions(self):
        conn = builtin("connected")
        for i in (2, 3, 4):
            g = complete_graph(i)
            assert gen_chromatic_value(g, conn, 2) == 2 ** i
            assert gen_chromatic_value(g, conn, 2, strict_empty=True) \
                == 2 ** i - 2

    def test_partition_cap(self):
        with pytest.raises(CapError):
            gen_chromatic(path_graph(11), builtin("edgeless"))

    def test_cycle_block_lemma(self):
        # chi_{C_i}(k copies of C_i) counts ordered assignments of the
        # copies to classes; zero whenever the property asks for C_j, j != i.
        for i in (3, 4, 5):
            for k in (1, 2):
                g = disjoint_union([cycle_graph(i)] * k)
                own = gen_chromatic(g, builtin(f"cycle_exactly:{i}"))
                for lam in range(k, k + 3):
                    assert own.evaluate(lam) == oracles.falling_value(lam, k)
                for j in (3, 4, 5):
                    if j != i:
                        other = builtin(f"cycle_exactly:{j}")
                        assert gen_chromatic(g, other).is_zero()


class TestChromatic:
    def test_fixtures(self):
        assert chromatic(cycle_graph(3)) == UniPoly([0, 2, -3, 1])
        assert chromatic(empty_graph(4)) == UniPoly.monomial(4)
        # chi(C_5) = (X-1)^5 - (X-1)
        q = UniPoly.one()
        for _ in range(5):
            q = q * UniPoly([-1, 1])
        assert chromatic(cycle_graph(5)) == q - UniPoly([-1, 1])

    def test_clique_recurrence(self):
        prev = chromatic(complete_graph(1))
        for n in range(2, 9):
            cur = chromatic(complete_graph(n))
            assert cur == UniPoly([1 - n, 1]) * prev
            prev = cur

    def test_agrees_with_partition_route(self):
        # dual route: frontier sweep vs block counting
        edgeless = builtin("edgeless")
        for n in (1, 2, 3, 4, 5):
            for g in enumerate_graphs(n):
                assert chromatic(g) == gen_chromatic(g, edgeless)
                assert chromatic_blocks(g) == gen_chromatic_blocks(g, edgeless)

    def test_proper_coloring_counts(self):
        for n in (1, 2, 3, 4):
            for g in enumerate_graphs(n):
                p = chromatic(g)
                for k in (1, 2, 3, 4):
                    assert p.evaluate(k) == oracles.proper_colorings(g, k)

    def test_proper_coloring_counts_order_seven_sample(self):
        rng = random.Random(14)
        for g in rng.sample(list(enumerate_graphs(7)), 25):
            p = chromatic(g)
            for k in (2, 3, 4):
                assert p.evaluate(k) == oracles.proper_colorings(g, k)

    def test_acyclic_orientation_count_at_minus_one(self):
        for n in (1, 2, 3, 4):
            for g in enumerate_graphs(n):
                assert abs(chromatic(g).evaluate(-1)) \
                    == oracles.acyclic_orientations(g)

    def test_wheel_and_grid_values(self):
        # spot values computed from the frontier sweep on denser graphs
        w5 = chromatic(wheel_graph(5))
        for k in (1, 2, 3, 4):
            assert w5.evaluate(k) == oracles.proper_colorings(wheel_graph(5), k)
        g23 = chromatic(grid_graph(2, 3))
        for k in (1, 2, 3):
            assert g23.evaluate(k) == oracles.proper_colorings(grid_graph(2, 3), k)


class TestTutte:
    def test_trees_give_pure_x_power(self):
        forest = builtin("forest")
        conn = builtin("connected")
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                if forest.holds(g) and conn.holds(g):
                    m = edge_count(g)
                    expect = {} if m == 0 else {(m, 0): 1}
                    got = grid_dict(tutte(g))
                    if m == 0:
                        assert got == {(0, 0): 1}
                    else:
                        assert got == expect

    def test_fixtures(self):
        assert tutte(cycle_graph(3)) == BiPoly([[0, 1], [1], [1]])
        assert tutte(empty_graph(4)) == BiPoly.one()

    def test_matches_deletion_contraction(self):
        for n in (1, 2, 3, 4, 5):
            for g in enumerate_graphs(n):
                assert grid_dict(tutte(g)) \
                    == oracles.tutte_dc(g.n, edge_list(g))

    def test_edge_cap(self):
        with pytest.raises(CapError):
            tutte(complete_graph(7))


class TestDominating:
    def test_fixtures(self):
        assert dominating(complete_graph(2)) == UniPoly([0, 2, 1])
        assert dominating(empty_graph(2)) == UniPoly([0, 0, 1])
        assert dominating(path_graph(3)) == UniPoly([0, 1, 3, 1])

    def test_never_counts_empty_set(self):
        for g in enumerate_graphs(4):
            p = dominating(g)
            assert p.coefficient(0) == 0
            assert p.coefficient(g.n) == 1


class TestMaximalCliques:
    def test_fixtures(self):
        assert maximal_clique_profile(complete_graph(4)) \
            == UniPoly.monomial(4)
        assert maximal_clique_profile(path_graph(3)) == UniPoly.monomial(2, 2)
        assert maximal_clique_profile(empty_graph(3)) == UniPoly.monomial(1, 3)

    def test_against_subset_scan(self):
        for n in (1, 2, 3, 4, 5):
            for g in enumerate_graphs(n):
                prof = maximal_clique_profile(g)
                ref = oracles.maximal_cliques_by_size(g)
                mine = {i: prof.coefficient(i) for i in range(g.n + 1)
                        if prof.coefficient(i)}
                assert mine == ref


class TestPolyKinds:
    def test_parse_and_label_round_trip(self):
        for text in ("char", "charL", "mu", "mgen", "chrom", "indep", "dom",
                     "maxcl", "tutte", "ind:connected", "span:match",
                     "genchrom:cycle:3"):
            pk = parse_poly_kind(text)
            assert parse_poly_kind(pk.label()) == pk

    def test_property_requirements(self):
        with pytest.raises(InputError):
            parse_poly_kind("ind")
        with pytest.raises(InputError):
            parse_poly_kind("char:connected")
        with pytest.raises(InputError):
            parse_poly_kind("det")

    def test_dispatch(self):
        g = cycle_graph(3)
        assert compute_poly(parse_poly_kind("chrom"), g) == chromatic(g)
        assert compute_poly(parse_poly_kind("tutte"), g) == tutte(g)
        assert compute_poly(parse_poly_kind("span:match"), g) \
            == matching_generating(g)
        assert compute_poly(parse_poly_kind("charL"), g) \
            == char_poly(g, "laplacian")
