"""Symmetric-polynomial kernel: the exact ground truth everything else
is checked against.

The load-bearing identities: the alternant quotient definition of Schur
polynomials, the coefficient-extraction recovery of Schur coefficients,
the last-variable elimination law, column-strip multiplication, and the
unitriangularity of the tableau-count matrix.
"""

from functools import cmp_to_key

import pytest
from hypothesis import given, strategies as st

from invkostka.partitions import Partition, enumerate_partitions, last_nonzero_compare
from invkostka.symfunc import (
    SchurExpansion,
    SparsePolynomial,
    alternant,
    coefficient_extract,
    elementary_symmetric,
    eliminate_last,
    expansion_to_polynomial,
    kostka_number,
    monomial_symmetric,
    pieri_multiply,
    schur,
    staircase,
)

P = Partition


def test_staircase():
    assert staircase(1) == (0,)
    assert staircase(4) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        staircase(0)


def test_monomial_symmetric_small():
    m = monomial_symmetric(P([1, 2]), 2)
    assert m.terms == {(1, 2): 1, (2, 1): 1}
    assert monomial_symmetric(P(), 2).terms == {(0, 0): 1}
    with pytest.raises(ValueError):
        monomial_symmetric(P([1, 1, 1]), 2)


def test_monomial_symmetric_counts_rearrangements():
    m = monomial_symmetric(P([1, 1, 2]), 4)
    # 4!/2! placements of (0,1,1,2)
    assert len(m.terms) == 12
    assert all(c == 1 for c in m.terms.values())


def test_alternant_two_variables():
    a = alternant((0, 1))
    assert a.terms == {(0, 1): 1, (1, 0): -1}


def test_alternant_repeated_exponents_vanishes():
    assert not alternant((1, 1))
    assert not alternant((0, 2, 2))


def test_elementary_symmetric_basics():
    e = elementary_symmetric(2, 3)
    assert e.terms == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    assert elementary_symmetric(0, 3) == SparsePolynomial.one(3)
    with pytest.raises(ValueError):
        elementary_symmetric(4, 3)


def test_elementary_is_column_monomial():
    for n in range(1, 5):
        for r in range(0, n + 1):
            lam = P([1] * r)
            assert elementary_symmetric(r, n) == monomial_symmetric(lam, n)


def test_schur_small_shapes():
    assert schur(P([1, 1]), 2).terms == {(1, 1): 1}
    assert schur(P([2]), 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    s = schur(P([1, 2]), 2)
    assert s.terms == {(2, 1): 1, (1, 2): 1}
    with pytest.raises(ValueError):
        schur(P([1, 1, 1]), 2)


def test_schur_specializes_to_dimension_count():
    # number of semistandard tableaux = value at x = (1,...,1)
    s = schur(P([2, 2]), 3)
    assert sum(s.terms.values()) == 6


def test_alternant_quotient_identity():
    """s_lam(n) * a_delta(n) == a_(lam+delta)(n) for weight <= 6, n <= 5."""
    for n in range(1, 6):
        a_delta = alternant(staircase(n))
        for m in range(0, 7):
            for lam in enumerate_partitions(m, max_parts=n):
                lhs = schur(lam, n) * a_delta
                alpha = tuple(x + d for x, d in zip(lam.padded(n), staircase(n)))
                assert lhs == alternant(alpha), (lam, n)


def test_schur_coefficient_recovery():
    # if h = sum of c_lam s_lam, each c_lam is the coefficient of
    # x^(lam+delta) in h * a_delta
    n = 3
    coeffs = {P([3]): 2, P([1, 2]): -1, P([1, 1, 1]): 5}
    h = SparsePolynomial(n)
    for lam, c in coeffs.items():
        h = h + c * schur(lam, n)
    ha = h * alternant(staircase(n))
    for lam in enumerate_partitions(3, max_parts=n):
        alpha = tuple(x + d for x, d in zip(lam.padded(n), staircase(n)))
        assert coefficient_extract(ha, alpha) == coeffs.get(lam, 0)


def test_eliminate_last_collects_one_exponent():
    h = SparsePolynomial(2, {(1, 2): 3, (2, 2): -1, (1, 0): 4})
    assert eliminate_last(h, 2).terms == {(1,): 3, (2,): -1}
    assert eliminate_last(h, 0).terms == {(1,): 4}
    assert eliminate_last(h, 5).terms == {}
    with pytest.raises(ValueError):
        eliminate_last(SparsePolynomial(1, {(2,): 1}), 0)


def test_elimination_law_on_monomial_bases():
    """Coefficient extraction factors through last-variable elimination,
    exhaustively on monomial symmetric polynomials of degree <= 6, n <= 4."""
    for n in range(2, 5):
        for m in range(0, 7):
            for lam in enumerate_partitions(m, max_parts=n):
                h = monomial_symmetric(lam, n)
                seen_last = {e[-1] for e in h.terms}
                for alpha in list(h.terms) + [(m,) * n]:
                    reduced = eliminate_last(h, alpha[-1])
                    assert coefficient_extract(h, alpha) == coefficient_extract(
                        reduced, alpha[:-1]
                    )
                for r in range(0, m + 2):
                    if r not in seen_last:
                        assert not eliminate_last(h, r)


@given(
    st.dictionaries(
        st.tuples(*[st.integers(0, 3)] * 3),
        st.integers(-5, 5),
        max_size=6,
    ),
    st.tuples(*[st.integers(0, 4)] * 3),
)
def test_elimination_law_random(terms, alpha):
    h = SparsePolynomial(3, terms)
    reduced = eliminate_last(h, alpha[-1])
    assert coefficient_extract(h, alpha) == coefficient_extract(reduced, alpha[:-1])


def test_kostka_numbers_weight_three():
    order = enumerate_partitions(3)
    table = [[kostka_number(lam, mu) for mu in order] for lam in order]
    assert table == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]


def test_kostka_requires_equal_weight():
    from invkostka.partitions import WeightMismatchError

    with pytest.raises(WeightMismatchError):
        kostka_number(P([2]), P([1, 1, 1]))


def test_kostka_counts_match_specialization():
    # K_(lam,mu) is the x^mu coefficient of the Schur polynomial
    for m in range(0, 7):
        for lam in enumerate_partitions(m):
            n = max(1, m)
            s = schur(lam, n) if lam.length <= n else None
            for mu in enumerate_partitions(m):
                want = coefficient_extract(s, mu.padded(n)) if s else 0
                assert kostka_number(lam, mu) == want


def test_kostka_matrix_is_unitriangular():
    for m in range(0, 8):
        order = sorted(
            enumerate_partitions(m), key=cmp_to_key(last_nonzero_compare)
        )
        for i, lam in enumerate(order):
            assert kostka_number(lam, lam) == 1
            for mu in order[:i]:
                # mu strictly below lam: no tableau of shape lam, content mu
                assert kostka_number(mu, lam) == 0


def test_schur_expansion_container():
    e = SchurExpansion({P([2]): 1, P([1, 1]): 0})
    assert e.support() == [P([2])]
    assert (e + SchurExpansion({P([2]): -1})) == SchurExpansion()
    assert 3 * e == SchurExpansion({P([2]): 3})
    assert e.get(P([1, 1])) == 0


def test_pieri_multiply_column_example():
    start = SchurExpansion({P([2]): 1})
    out = pieri_multiply(start, 2)
    assert out == SchurExpansion({P([1, 3]): 1, P([1, 1, 2]): 1})


def test_pieri_multiply_by_empty_column():
    e = SchurExpansion({P([1, 2]): 4})
    assert pieri_multiply(e, 0) == e


def test_pieri_matches_polynomial_multiplication():
    """Column-strip multiplication agrees with multiplying the actual
    polynomials, for all shapes of weight <= 6."""
    for m in range(0, 7):
        for lam in enumerate_partitions(m):
            for r in range(0, 4):
                out = pieri_multiply(SchurExpansion({lam: 1}), r)
                n = max(1, m + r, max((p.length for p in out.support()), default=1))
                lhs = schur(lam, n) * elementary_symmetric(r, n)
                rhs = expansion_to_polynomial(out, n)
                assert lhs == rhs, (lam, r)


def test_expansion_to_polynomial_needs_enough_variables():
    e = SchurExpansion({P([1, 1, 1]): 1})
    with pytest.raises(ValueError):
        expansion_to_polynomial(e, 2)
