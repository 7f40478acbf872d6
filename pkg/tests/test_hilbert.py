from fractions import Fraction

import pytest

from multseq import (
    BivariatePolynomial,
    MonomialIdeal,
    dim_quotient,
    extract_coefficients,
    fit_bivariate,
    is_m_primary,
    j_multiplicity,
    lambda_cell,
    lambda_table,
    mon_analytic_spread,
    mon_j_mult,
    multiplicity_sequence,
    normalized_covolume,
    sum_transform,
)
from multseq import hilbert
from multseq.errors import (
    GridCapExceededError,
    ImproperIdealError,
    InvalidFitError,
    ResourceCapError,
    SingularSystemError,
)
from multseq.hilbert import LambdaTable, MultiplicitySequence, multiplicity_sequence_with_grid
from multseq.oracle import brute_lambda

from conftest import R2, R3, ideal, random_ideals

M2 = MonomialIdeal.maximal(R2)
X2_XY = ideal(R2, (2, 0), (1, 1))


def closed_form_x2_xy(i, j):
    return j + 1 if i == 0 else j + 2 if i == 1 else 1


class TestLambda:
    def test_closed_forms_match_oracle(self):
        # the hand-derived closed forms are checked against brute force before being used below
        for i in range(4):
            for j in range(4):
                assert brute_lambda(M2, i, j) == (j + 1 if i == 0 else 0)
                assert brute_lambda(X2_XY, i, j) == closed_form_x2_xy(i, j)

    @pytest.mark.parametrize("i", range(5))
    @pytest.mark.parametrize("j", range(5))
    def test_lambda_cell(self, i, j):
        assert lambda_cell(M2, i, j) == (j + 1 if i == 0 else 0)
        assert lambda_cell(X2_XY, i, j) == closed_form_x2_xy(i, j)

    def test_origin_cell_is_one(self):
        for A in random_ideals(20, seed=5):
            assert lambda_cell(A, 0, 0) == 1

    def test_lambda_table(self):
        T = lambda_table(M2, 4, 4)
        assert T.values[0] == (1, 2, 3, 4, 5)
        assert all(row == (0,) * 5 for row in T.values[1:])
        T = lambda_table(X2_XY, 5, 6)
        assert T.values == tuple(tuple(closed_form_x2_xy(i, j) for j in range(7)) for i in range(6))
        assert T[0, 0] == 1

    def test_improper(self):
        with pytest.raises(ImproperIdealError):
            lambda_cell(MonomialIdeal.unit(R2), 0, 0)
        with pytest.raises(ImproperIdealError):
            lambda_table(MonomialIdeal.zero(R2), 2, 2)

    def test_gen_cap(self):
        with pytest.raises(ResourceCapError):
            lambda_cell(M2, 30, 30, gen_cap=10)
        with pytest.raises(ResourceCapError):
            lambda_table(ideal(R3, (1, 2, 0), (0, 3, 1), (2, 0, 2)), 10, 10, gen_cap=50)

    def test_threads_do_not_change_the_table(self):
        A = ideal(R3, (1, 2, 0), (0, 3, 1), (2, 0, 2))
        assert lambda_table(A, 6, 6, threads=1) == lambda_table(A, 6, 6, threads=3)

    @pytest.mark.parametrize("A", random_ideals(40, seed=13), ids=str)
    def test_table_matches_cells(self, A):
        T = lambda_table(A, 5, 5)
        assert T.values == tuple(tuple(lambda_cell(A, i, j) for j in range(6)) for i in range(6))


class TestSumTransform:
    def test_maximal_ideal(self):
        h = sum_transform(lambda_table(M2, 4, 6))
        assert all(h[m][n] == (n + 1) * (n + 2) // 2 for m in range(5) for n in range(7))

    def test_zero_table(self):
        T = LambdaTable(M2, 2, 2, ((0, 0, 0),) * 3)
        assert sum_transform(T) == ((0, 0, 0),) * 3

    def test_x2_xy(self):
        h = sum_transform(lambda_table(X2_XY, 6, 6))
        for m in range(1, 7):
            for n in range(7):
                assert h[m][n] == n * n + m * n + 3 * n + m + 2

    def test_monotone(self):
        for A in random_ideals(15, seed=17):
            h = sum_transform(lambda_table(A, 5, 5))
            assert all(h[m][n] <= h[m + 1][n] for m in range(5) for n in range(6))
            assert all(h[m][n] <= h[m][n + 1] for m in range(6) for n in range(5))


class TestFit:
    def test_triangular_numbers(self):
        h = [[(n + 1) * (n + 2) // 2 for n in range(8)] for _ in range(8)]
        P = fit_bivariate(h, 2, (0, 0, 7, 7))
        assert P == BivariatePolynomial(2, {(0, 2): Fraction(1, 2), (0, 1): Fraction(3, 2), (0, 0): 1})

    def test_constant(self):
        assert fit_bivariate([[1] * 3 for _ in range(3)], 0, (0, 0, 2, 2)) == BivariatePolynomial(0, {(0, 0): 1})

    def test_product_of_linear_factors(self):
        h = [[(m + 1) * (n + 1) for n in range(6)] for m in range(6)]
        P = fit_bivariate(h, 2, (1, 1, 5, 5))
        assert P == BivariatePolynomial(2, {(1, 1): 1, (1, 0): 1, (0, 1): 1, (0, 0): 1})
        assert P(10, 3) == 44

    def test_too_narrow(self):
        with pytest.raises(SingularSystemError):
            fit_bivariate([[0] * 10 for _ in range(10)], 3, (0, 0, 9, 1))
        with pytest.raises(ValueError):
            fit_bivariate([[0] * 3 for _ in range(3)], 2, (0, 0, 3, 3))

    def test_degree_bound_enforced(self):
        with pytest.raises(ValueError):
            BivariatePolynomial(1, {(1, 1): 1})


class TestExtract:
    def test_examples(self):
        assert extract_coefficients(BivariatePolynomial(2, {(0, 2): Fraction(1, 2)}), 2).c == (0, 0, 1)
        P = BivariatePolynomial(2, {(0, 2): 1, (1, 1): 1, (0, 1): 3, (0, 0): 2})
        assert extract_coefficients(P, 2).c == (0, 1, 2)
        assert extract_coefficients(BivariatePolynomial(1, {}), 1).c == (0, 0)

    def test_non_integral(self):
        with pytest.raises(InvalidFitError):
            extract_coefficients(BivariatePolynomial(2, {(0, 2): Fraction(1, 3)}), 2)

    def test_negative(self):
        with pytest.raises(InvalidFitError):
            extract_coefficients(BivariatePolynomial(2, {(1, 1): -1}), 2)

    def test_sequence_type(self):
        with pytest.raises(ValueError):
            MultiplicitySequence(2, (1, 2))
        with pytest.raises(ValueError):
            MultiplicitySequence(1, (1, -2))
        assert MultiplicitySequence(2, (0, 1, 2)).nonzero() == {1: 1, 2: 2}


class TestMultiplicitySequence:
    def test_maximal_ideal(self):
        assert multiplicity_sequence(M2).c == (0, 0, 1)

    def test_x2_xy(self):
        assert multiplicity_sequence(X2_XY).c == (0, 1, 2)
        assert multiplicity_sequence(X2_XY)[2] == mon_j_mult(X2_XY)

    def test_m_primary(self):
        A = ideal(R2, (2, 0), (0, 3))
        assert multiplicity_sequence(A).c == (0, 0, 6)
        assert normalized_covolume(A) == 6

    def test_j_multiplicity(self):
        assert j_multiplicity(X2_XY) == 2
        assert j_multiplicity(ideal(R2, (1, 0))) == 0
        assert j_multiplicity(M2) == 1

    def test_improper(self):
        with pytest.raises(ImproperIdealError):
            multiplicity_sequence(MonomialIdeal.zero(R2))

    def test_grid_cap_reports_diagnostics(self):
        hilbert.clear_cache()
        A = ideal(R3, (4, 1, 0), (0, 3, 2), (1, 0, 4), (2, 2, 2))
        with pytest.raises(GridCapExceededError) as info:
            multiplicity_sequence(A, grid_cap=10)
        assert info.value.last_grid == 10
        assert info.value.reason

    def test_cached_and_deterministic(self):
        hilbert.clear_cache()
        A = ideal(R3, (1, 2, 0), (0, 3, 1), (2, 0, 2))
        first = multiplicity_sequence_with_grid(A)
        hilbert.clear_cache()
        second = multiplicity_sequence_with_grid(A, threads=2)
        assert first == second
        assert multiplicity_sequence(A) is multiplicity_sequence(A)


@pytest.mark.parametrize("A", random_ideals(50, seed=19), ids=str)
def test_sequence_invariants(A):
    c = multiplicity_sequence(A).c
    d = A.d
    lo, hi = d - dim_quotient(A), mon_analytic_spread(A)
    assert all(x == 0 for i, x in enumerate(c) if i < lo or i > hi)
    assert c[d] == mon_j_mult(A)
    if is_m_primary(A):
        assert c[d] == normalized_covolume(A)
        assert all(x == 0 for x in c[:d])
