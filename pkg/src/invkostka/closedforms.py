"""Closed-form evaluations for structured shapes.

Each function here computes a family of inverse Kostka entries directly,
without running a recurrence over partition pairs.  They serve as fast
paths and, more importantly, as independent witnesses for the engines in
``inverse``: the test suite checks every formula against the recurrences
over its whole small-weight domain.

Shape conventions follow the rest of the package: partitions are stored
non-decreasing, and a column partition of m is written (1^m).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod

from .inverse import inv_kostka_duan
from .partitions import Partition, WeightMismatchError, remove_part
from .symfunc import SchurExpansion
from .unipoly import UniPolynomial


class FormulaDomainError(ValueError):
    """A closed form was asked for parameters outside its validity range."""


def lemma5(lam: Partition) -> int:
    """Entry at mu = (1^m): sign times the multinomial count of orderings
    of lambda's parts, (-1)^(m - l) * l! / (i_1! ... i_k!)."""
    if lam.weight == 0:
        return 1
    l = lam.length
    den = prod(factorial(i) for _, i in lam.multiplicities())
    sign = -1 if (lam.weight - l) % 2 else 1
    return sign * factorial(l) // den


def lemma6(lam: Partition, a: int) -> int:
    """Entry at mu = (1^(m-a), a) for a >= 1, where m is the weight."""
    if a < 1 or a > lam.weight:
        raise FormulaDomainError(f"need 1 <= a <= weight, got a={a}")
    if lam.weight == 0:
        return 1
    l = lam.length
    den = prod(factorial(i) for _, i in lam.multiplicities())
    mu_len = (lam.weight - a) + 1
    sign = -1 if (mu_len - l) % 2 else 1
    return sign * factorial(l - 1) * lam.conjugate_count(a) // den


def corollary3(lam: Partition, a: int, b: int) -> int:
    """Entry at mu = (1^m0, a, b) with 1 < a <= b and m0 = weight - a - b.

    The formula needs at least two parts in lam; a one-row shape has a
    nonzero entry only against column-plus-one-part shapes, never against
    mu with two parts >= 2, so that case returns 0 directly.
    """
    if not 1 < a <= b:
        raise FormulaDomainError(f"need 1 < a <= b, got a={a}, b={b}")
    m0 = lam.weight - a - b
    if m0 < 0:
        raise FormulaDomainError(
            f"weight {lam.weight} too small for mu = (1^m0,{a},{b})"
        )
    if lam.length < 2:
        return 0
    mults = lam.multiplicities()

    d = next((j for j, (r, _) in enumerate(mults, start=1) if r >= b), None)
    if d is None:
        return 0

    # One summand per distinct part value >= b.  The value-b block, if it is
    # hit, contributes through the "parts >= a" count of lambda minus one
    # copy of b; every strictly larger block contributes through the count
    # of parts equal to a-1, with opposite sign.
    k = len(mults)
    t = 0
    start = d
    if mults[d - 1][0] == b:
        t += mults[d - 1][1] * remove_part(lam, d).conjugate_count(a)
        start = d + 1
    for j in range(start, k + 1):
        t -= mults[j - 1][1] * remove_part(lam, j).part_count(a - 1)
    if t == 0:
        return 0

    l = lam.length
    den = prod(factorial(i) for _, i in mults)
    sign = -1 if ((m0 + 2) - l) % 2 else 1
    return sign * factorial(l - 2) * t // den


def corollary4(k: int, l: int) -> SchurExpansion:
    """Schur expansion of the monomial function of shape (1^k, 2^l):
    supported on (1^(k+2t), 2^(l-t)) with coefficient (-1)^t C(k+t, t)."""
    if k < 0 or l < 0:
        raise FormulaDomainError("k and l must be non-negative")
    terms = {}
    for t in range(l + 1):
        shape = Partition.from_multiplicities(((1, k + 2 * t), (2, l - t)))
        coeff = comb(k + t, t)
        terms[shape] = -coeff if t % 2 else coeff
    return SchurExpansion(terms)


@lru_cache(maxsize=None)
def g_polynomial(k: int, l: int) -> UniPolynomial:
    """Generating polynomial of entries of (1^k, 3^l) against two-column
    shapes: the coefficient of t^b is the entry at (1^a, 2^b), a + 2b fixed
    by the weight k + 3l.
    """
    if k < 0 or l < 0:
        raise FormulaDomainError("k and l must be non-negative")
    if l == 0:
        return UniPolynomial([1])
    res = UniPolynomial([comb(k + l, l)]) - UniPolynomial([0, 1, 1]) * g_polynomial(k, l - 1)
    if (k + 3 * l) % 2:
        # odd total weight: the all-twos shape exists one level down and
        # feeds back in with a two-step shift
        half = (k + 3 * (l - 1)) // 2
        lam = Partition.from_multiplicities(((1, k), (3, l - 1)))
        mu = Partition.from_multiplicities(((2, half),))
        c = inv_kostka_duan(lam, mu)
        if c:
            res = res + UniPolynomial.monomial(c, half + 2)
    return res


def corollary5(k: int, l: int) -> UniPolynomial:
    """Closed form for g_polynomial valid when k > l - 1:
    sum over 0 <= i <= l of (-1)^i C(k+l-i, k) (t + t^2)^i."""
    if k < 0 or l < 0:
        raise FormulaDomainError("k and l must be non-negative")
    if not k > l - 1:
        raise FormulaDomainError(f"need k > l - 1, got k={k}, l={l}")
    base = UniPolynomial([0, 1, 1])
    res = UniPolynomial()
    power = UniPolynomial([1])
    for i in range(l + 1):
        c = comb(k + l - i, k)
        res = res + (-c if i % 2 else c) * power
        power = power * base
    return res


_H_BASE = (
    UniPolynomial([1]),
    UniPolynomial(),
    UniPolynomial([0, -1]),
    UniPolynomial([1]),
)


def h_polynomial(b: int) -> UniPolynomial:
    """Generating polynomial of entries against the rectangle (2^b): the
    coefficient of t^k is the entry of (1^k, 3^l) at (2^b), where
    k + 3l = 2b.  Satisfies h_b = -t h_(b-2) + h_(b-3)."""
    if b < 0:
        raise FormulaDomainError("b must be non-negative")
    if b < 4:
        return _H_BASE[b]
    window = list(_H_BASE[1:])
    for _ in range(b - 3):
        window.append(UniPolynomial([0, -1]) * window[1] + window[0])
        window.pop(0)
    return window[-1]


@dataclass(frozen=True)
class TransferMatrix:
    """A 3x3 polynomial matrix, used to run the h recurrence in stride-2
    jumps: one application advances (h_(b-2), h_(b-4), h_(b-6)) to
    (h_b, h_(b-2), h_(b-4))."""

    rows: tuple[tuple[UniPolynomial, ...], ...]

    @classmethod
    def step(cls) -> "TransferMatrix":
        one = UniPolynomial([1])
        zero = UniPolynomial()
        mt = UniPolynomial([0, -1])
        return cls(((mt, one, zero), (zero, mt, one), (one, zero, zero)))

    @classmethod
    def identity(cls) -> "TransferMatrix":
        one = UniPolynomial([1])
        zero = UniPolynomial()
        return cls(
            (
                (one, zero, zero),
                (zero, one, zero),
                (zero, zero, one),
            )
        )

    def matmul(self, other: "TransferMatrix") -> "TransferMatrix":
        cols = tuple(zip(*other.rows))
        rows = tuple(
            tuple(
                sum((a * b for a, b in zip(row, col)), UniPolynomial())
                for col in cols
            )
            for row in self.rows
        )
        return TransferMatrix(rows)

    def pow(self, n: int) -> "TransferMatrix":
        if n < 0:
            raise ValueError("negative matrix power")
        result = TransferMatrix.identity()
        base = self
        while n:
            if n & 1:
                result = result.matmul(base)
            base = base.matmul(base)
            n >>= 1
        return result

    def apply(self, vec: tuple[UniPolynomial, ...]) -> tuple[UniPolynomial, ...]:
        return tuple(
            sum((a * b for a, b in zip(row, vec)), UniPolynomial())
            for row in self.rows
        )


def h_polynomial_matrix(b: int) -> UniPolynomial:
    """h_polynomial(b) through the transfer-matrix form, valid for b >= 6.

    With b = 2k + r (r the parity bit), the value is the product
    (t^2, -2t, 1) . A^(k-3) . (h_(2+r), h_(1+r), h_r)^T.
    """
    r = b % 2
    k = (b - r) // 2
    if k < 3:
        raise FormulaDomainError(f"matrix form needs b >= 6, got b={b}")
    power = TransferMatrix.step().pow(k - 3)
    vec = power.apply((_H_BASE[2 + r], _H_BASE[1 + r], _H_BASE[r]))
    row = (UniPolynomial([0, 0, 1]), UniPolynomial([0, -2]), UniPolynomial([1]))
    return sum((a * b_ for a, b_ in zip(row, vec)), UniPolynomial())


def h_coefficient_check(b: int, bound: int = 10) -> bool:
    """Verify every coefficient of h_polynomial(b) against the recurrence
    engine.  Weight grows as 2b, so the check is capped by ``bound``."""
    if b < 0:
        raise FormulaDomainError("b must be non-negative")
    if 2 * b > bound:
        raise ValueError(f"2*b = {2 * b} exceeds bound {bound}")
    h = h_polynomial(b)
    if h.degree() > 2 * b:
        return False
    mu = Partition.from_multiplicities(((2, b),))
    for k in range(2 * b + 1):
        l, rem = divmod(2 * b - k, 3)
        if rem:
            expected = 0
        else:
            lam = Partition.from_multiplicities(((1, k), (3, l)))
            expected = inv_kostka_duan(lam, mu)
        if h.coefficient(k) != expected:
            return False
    return True
