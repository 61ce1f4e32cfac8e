"""Exact polynomial arithmetic, parsing, and linear algebra."""

import random
from fractions import Fraction

import pytest

import oracles
from graphpoly.errors import InputError
from graphpoly.poly import (
    MINUS_INFINITY,
    BiPoly,
    FallingFactorial,
    UniPoly,
    falling_factorial_value,
    falling_to_monomial,
    int_determinant,
    interpolate,
    solve_linear_exact,
)

X = UniPoly.x()


def rand_poly(rng, max_deg=4, span=6):
    return UniPoly([Fraction(rng.randint(-span, span), rng.randint(1, 3))
                    for _ in range(rng.randint(0, max_deg + 1))])


class TestUniPolyBasics:
    def test_zero_is_empty(self):
        assert UniPoly.zero().coeffs == ()
        assert UniPoly([0, 0, 0]).is_zero()
        assert UniPoly.zero().degree == MINUS_INFINITY

    def test_trailing_zeros_stripped(self):
        assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)

    def test_degree_and_leading(self):
        p = UniPoly([2, 0, -4, 0, 1])
        assert p.degree == 4
        assert p.leading_coefficient() == 1
        assert p.coefficient(0) == 2
        assert p.coefficient(9) == 0

    def test_monomial(self):
        assert UniPoly.monomial(3).text() == "0 0 0 1"
        assert UniPoly.monomial(0, 5) == UniPoly([5])

    def test_evaluate(self):
        p = UniPoly([2, 0, -4, 0, 1])  # X^4 - 4X^2 + 2
        assert p.evaluate(0) == 2
        assert p.evaluate(2) == 2
        assert p.evaluate(Fraction(1, 2)) == Fraction(17, 16)

    def test_integer_coefficients_rejects_fractions(self):
        with pytest.raises(ValueError):
            UniPoly([Fraction(1, 2)]).integer_coefficients()


class TestTextFormat:
    def test_parse_ascending(self):
        assert UniPoly.parse("2 0 -4 0 1") == UniPoly([2, 0, -4, 0, 1])

    def test_rational_round_trip(self):
        text = "1 -3 3/2 -1/6"
        assert UniPoly.parse(text).text() == text

    def test_zero_prints_as_plain_zero(self):
        assert UniPoly.zero().text() == "0"
        assert UniPoly.parse("0").is_zero()

    def test_bad_token_rejected(self):
        with pytest.raises(InputError):
            UniPoly.parse("1 two 3")


class TestRingAxioms:
    def test_random_axioms(self):
        rng = random.Random(0)
        for _ in range(60):
            a, b, c = (rand_poly(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == UniPoly.zero()

    def test_substitute_identity(self):
        rng = random.Random(1)
        for _ in range(20):
            p = rand_poly(rng)
            assert p.substitute(X) == p

    def test_substitute_scaling(self):
        p = UniPoly([0, -3, 0, 4])  # 4X^3 - 3X
        doubled = p.substitute(UniPoly([0, 2]))
        assert doubled == UniPoly([0, -6, 0, 32])


class TestFallingFactorial:
    def test_known_expansion(self):
        # X_(3) = X(X-1)(X-2)
        assert falling_to_monomial([0, 0, 0, 1]) == UniPoly([0, 2, -3, 1])

    def test_degree_preserved_and_linear(self):
        rng = random.Random(2)
        for _ in range(20):
            a = [rng.randint(-4, 4) for _ in range(5)]
            b = [rng.randint(-4, 4) for _ in range(5)]
            pa, pb = falling_to_monomial(a), falling_to_monomial(b)
            summed = falling_to_monomial([x + y for x, y in zip(a, b)])
            assert summed == pa + pb
        assert falling_to_monomial([0, 0, 1]).degree == 2

    def test_evaluation_round_trip(self):
        ff = FallingFactorial([1, 4, 2])
        mono = ff.to_monomial()
        for k in range(6):
            assert mono.evaluate(k) == ff.evaluate(k)

    def test_falling_value(self):
        assert falling_factorial_value(5, 3) == 60
        assert falling_factorial_value(2, 4) == 0


class TestInterpolate:
    def test_recovers_polynomial(self):
        p = UniPoly([3, -1, 0, 2])
        xs = list(range(p.degree + 1))
        ys = [p.evaluate(x) for x in xs]
        assert interpolate(xs, ys) == p

    def test_constant(self):
        assert interpolate([0], [7]) == UniPoly([7])


class TestLinearAlgebra:
    def test_determinant_matches_permutation_expansion(self):
        rng = random.Random(3)
        for n in (1, 2, 3, 4):
            for _ in range(10):
                mat = [[rng.randint(-5, 5) for _ in range(n)]
                       for _ in range(n)]
                assert int_determinant(mat) == oracles.perm_det(mat)

    def test_solve_exact(self):
        rows = [[2, 1], [1, 3]]
        rhs = [5, 10]
        sol = solve_linear_exact(rows, rhs)
        assert sol == [Fraction(1), Fraction(3)]

    def test_solve_residual_is_zero(self):
        rng = random.Random(4)
        for _ in range(15):
            n = rng.randint(1, 4)
            rows = [[Fraction(rng.randint(-4, 4)) for _ in range(n)]
                    for _ in range(n + rng.randint(0, 2))]
            x = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
            rhs = [sum(r[i] * x[i] for i in range(n)) for r in rows]
            sol = solve_linear_exact(rows, rhs)
            assert sol is not None
            for r, b in zip(rows, rhs):
                assert sum(c * s for c, s in zip(r, sol)) == b

    def test_inconsistent_returns_none(self):
        assert solve_linear_exact([[1, 1], [1, 1]], [1, 2]) is None

    def test_underdetermined_zeroes_free_vars(self):
        sol = solve_linear_exact([[1, 1]], [3])
        assert sol is not None
        assert sum(sol) == 3
        assert sol.count(0) >= 1


class TestBiPoly:
    def test_x_times_y(self):
        assert BiPoly.x() * BiPoly.y() == BiPoly([[0, 0], [0, 1]])

    def test_cancellation(self):
        xy_sum = BiPoly.x() + BiPoly.y()
        xy_diff = BiPoly.x() - BiPoly.y()
        assert xy_sum + xy_diff == BiPoly([[0], [2]])

    def test_shifted_assembly(self):
        # (X-1)^2 + 3(X-1) + 3 + (Y-1) = X^2 + X + Y
        xm1 = BiPoly.x() - BiPoly.one()
        ym1 = BiPoly.y() - BiPoly.one()
        three = BiPoly.one() + BiPoly.one() + BiPoly.one()
        total = xm1 * xm1 + three * xm1 + three + ym1
        assert total == BiPoly([[0, 1], [1], [1]])

    def test_text_round_trip(self):
        p = BiPoly([[0, 1], [1], [1]])
        assert BiPoly.parse(p.text()) == p
        assert BiPoly.zero().text() == "0"

    def test_trailing_rows_trimmed(self):
        assert BiPoly([[1], [0], [0]]) == BiPoly([[1]])

    def test_evaluate(self):
        p = BiPoly([[0, 1], [1], [1]])  # X^2 + X + Y
        assert p.evaluate(2, 3) == 9
