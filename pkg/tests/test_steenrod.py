"""Steenrod coefficient rows, the mod-2 square / Wu-style sum agreement,
and the integral lift through products of elementary symmetric functions."""

import pytest

from invkostka.steenrod import (
    EPolynomial,
    ModPExpansion,
    _check_km,
    _wu_binom,
    epoly_to_polynomial,
    epoly_to_schur,
    expansion_mod,
    giambelli_hook2,
    integral_wu_lift,
    steenrod_P,
    steenrod_Sq,
    wu_rhs,
)
from invkostka.inverse import monomial_to_schur
from invkostka.partitions import Partition
from invkostka.symfunc import schur

P = Partition


def test_odd_prime_row_example():
    row = steenrod_P(1, 1, 3)
    assert row.items() == [
        (P([3]), 1),
        (P([1, 2]), 2),
        (P([1, 1, 1]), 1),
    ]


def test_zeroth_operations_are_identity_rows():
    assert steenrod_P(0, 3, 3) == ModPExpansion(3, {P([1, 1, 1]): 1})
    assert steenrod_Sq(0, 4) == ModPExpansion(2, {P([1, 1, 1, 1]): 1})


def test_prime_validation():
    with pytest.raises(ValueError):
        steenrod_P(1, 2, 2)  # P wants an odd prime
    with pytest.raises(ValueError):
        steenrod_P(1, 2, 4)
    with pytest.raises(ValueError):
        steenrod_P(1, 2, 1)


def test_degree_bounds():
    for bad in [(1, 0), (3, 2), (-1, 2)]:
        with pytest.raises(ValueError):
            _check_km(*bad)
        with pytest.raises(ValueError):
            steenrod_Sq(*bad)


def test_square_small_rows():
    assert steenrod_Sq(1, 2) == ModPExpansion(2, {P([1, 2]): 1})
    assert steenrod_Sq(2, 2).items() == [
        (P([2, 2]), 1),
        (P([1, 1, 2]), 1),
        (P([1, 1, 1, 1]), 1),
    ]


def test_square_support_structure():
    for m in range(1, 8):
        for k in range(0, m + 1):
            for mu, c in steenrod_Sq(k, m).items():
                assert c in (0, 1)
                assert max(mu) <= 2
                assert m <= mu.length <= m + k


def test_odd_prime_support_structure():
    for m in range(1, 6):
        for k in range(0, m + 1):
            for mu, _ in steenrod_P(k, m, 3).items():
                assert max(mu) <= 3
                assert mu.length >= m


def test_square_equals_wu_sum():
    for m in range(0, 11):
        for k in range(0, m + 1):
            if m == 0:
                continue
            assert steenrod_Sq(k, m) == wu_rhs(k, m), (k, m)


def test_wu_binomial_conventions():
    assert _wu_binom(-1, 0) == 1
    assert _wu_binom(0, 0) == 1
    assert _wu_binom(-1, 1) == 0
    assert _wu_binom(3, -1) == 0
    assert _wu_binom(4, 2) == 6


def test_epolynomial_normalization():
    assert EPolynomial({(2, -1): 5}) == EPolynomial()
    assert EPolynomial({(0, 3): 2}) == EPolynomial({(3,): 2})
    assert EPolynomial({(1,): 0}) == EPolynomial()
    assert EPolynomial({(2, 1): 1}).items() == [((1, 2), 1)]
    p = EPolynomial({(1, 2): 1, (3,): -3})
    assert p.pretty() == "e1*e2 - 3*e3"
    assert (p + p * -1) == EPolynomial()


def test_two_column_determinant_matches_schur():
    """e_k e_m - e_(k-1) e_(m+1) expands the two-column shape with k twos."""
    for m in range(1, 6):
        for k in range(0, m + 1):
            shape = P([1] * (m - k) + [2] * k)
            for n in (m + k, m + k + 1):
                got = epoly_to_polynomial(giambelli_hook2(m, k), n)
                assert got == schur(shape, n), (m, k, n)
    with pytest.raises(ValueError):
        giambelli_hook2(2, 3)


def test_integral_lift_example():
    assert integral_wu_lift(1, 2) == EPolynomial({(1, 2): 1, (3,): -3})


def test_integral_lift_is_the_monomial_function():
    """Over the integers the lift equals the monomial symmetric function of
    the operation's indexing shape; reducing mod 2 recovers the square."""
    from invkostka.symfunc import monomial_symmetric

    for m in range(1, 6):
        for k in range(0, m + 1):
            lift = integral_wu_lift(k, m)
            n = m + k
            shape = P([1] * (m - k) + [2] * k)
            assert epoly_to_polynomial(lift, n) == monomial_symmetric(shape, n)
            assert expansion_mod(epoly_to_schur(lift), 2) == steenrod_Sq(k, m)


def test_schur_row_of_lift_matches_inverse_rows():
    lift = integral_wu_lift(1, 2)
    assert epoly_to_schur(lift) == monomial_to_schur(P([1, 2]))


def test_epoly_to_polynomial_needs_a_variable():
    with pytest.raises(ValueError):
        epoly_to_polynomial(EPolynomial({(1,): 1}), 0)


def test_modp_expansion_container():
    row = ModPExpansion(3, {P([1, 2]): 5})
    assert row.get(P([1, 2])) == 2
    assert row.get(P([3])) == 0
    assert row.support() == [P([1, 2])]
    assert bool(row)
    assert not bool(ModPExpansion(2))
    with pytest.raises(ValueError):
        ModPExpansion(1)
