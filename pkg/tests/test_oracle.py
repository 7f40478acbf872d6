import pytest

from multseq import MonomialIdeal, minimalize, normalized_covolume, power
from multseq.errors import InconclusiveError, ResourceCapError
from multseq.oracle import (
    brute_lambda,
    growth_degree,
    minimal_generator_counts,
    mu_growth_spread,
    standard_monomial_count,
)

from conftest import CYCLE_GENS, R2, R4, ideal

M2 = MonomialIdeal.maximal(R2)


def test_brute_lambda_examples():
    assert brute_lambda(M2, 0, 3) == 4
    assert brute_lambda(M2, 2, 1) == 0
    assert brute_lambda(ideal(R2, (2, 0), (1, 1)), 2, 0) == 1


def test_brute_lambda_cap():
    with pytest.raises(ResourceCapError):
        brute_lambda(ideal(R2, (5, 1), (1, 5)), 6, 6, cap=100)


def test_mu_growth_spread_examples():
    assert minimal_generator_counts(M2, 4) == [2, 3, 4, 5]
    assert mu_growth_spread(M2, 6) == 2
    assert mu_growth_spread(ideal(R2, (1, 0)), 6) == 1
    assert mu_growth_spread(minimalize(CYCLE_GENS, R4), 10) == 4


def test_mu_growth_spread_needs_room():
    with pytest.raises(ValueError):
        mu_growth_spread(M2, 3)


def test_growth_degree():
    assert growth_degree([n * n for n in range(6)], 3) == 2
    assert growth_degree([5, 5, 5], 0) == 0
    with pytest.raises(InconclusiveError):
        growth_degree([2**n for n in range(8)], 3)


def test_standard_monomial_count():
    assert standard_monomial_count(M2, 10) == 1
    assert standard_monomial_count(ideal(R2, (2, 0), (0, 2)), 10) == 4
    assert standard_monomial_count(ideal(R2, (1, 0)), 3) == 4


@pytest.mark.parametrize(
    "A",
    [ideal(R2, (2, 0), (0, 3)), ideal(R2, (3, 0), (1, 1), (0, 2)), ideal(R2, (4, 0), (1, 2), (0, 3))],
    ids=str,
)
def test_colength_growth_matches_covolume(A):
    # for m-primary A, colength of A^n is e(A) n^2 / 2 + O(n)
    top = 12 * max(sum(g) for g in A.gens)
    lengths = [standard_monomial_count(power(A, n), top) for n in (8, 9, 10, 11)]
    second = lengths[3] - 2 * lengths[2] + lengths[1]
    assert second == normalized_covolume(A)
