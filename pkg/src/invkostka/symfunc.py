"""Exact symmetric-polynomial kernel over the integers.

Everything here is computed from first principles: monomial symmetric
polynomials as sums over distinct rearrangements, alternants as signed
permutation sums, Schur polynomials by semistandard tableau enumeration,
and Kostka numbers by horizontal-strip chains.  The kernel serves as the
ground truth that the recurrence engines are validated against.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping

from .partitions import (
    Partition,
    WeightMismatchError,
    distinct_permutations,
    vertical_strip_successors,
)


def staircase(n: int) -> tuple[int, ...]:
    """The staircase exponent vector (0, 1, ..., n-1)."""
    if n < 1:
        raise ValueError("need at least one variable")
    return tuple(range(n))


class SparsePolynomial:
    """Sparse polynomial over Z in n variables, keyed by exponent tuples."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != n or any(e < 0 for e in expo):
                    raise ValueError(f"bad exponent vector {expo!r} for n={n}")
                if coeff:
                    clean[expo] = coeff
        self.terms = clean

    @classmethod
    def _unsafe(cls, n: int, terms: dict[tuple[int, ...], int]) -> "SparsePolynomial":
        self = object.__new__(cls)
        self.n = n
        self.terms = terms
        return self

    @classmethod
    def one(cls, n: int) -> "SparsePolynomial":
        return cls._unsafe(n, {(0,) * n: 1})

    def coefficient(self, alpha: Iterable[int]) -> int:
        alpha = tuple(alpha)
        if len(alpha) != self.n:
            raise ValueError(f"exponent vector has length {len(alpha)}, expected {self.n}")
        return self.terms.get(alpha, 0)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._unsafe(self.n, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if self.n != other.n:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return SparsePolynomial._unsafe(self.n, out)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SparsePolynomial._unsafe(self.n, {})
            return SparsePolynomial._unsafe(
                self.n, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("variable counts differ")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                v = get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return SparsePolynomial._unsafe(self.n, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SparsePolynomial(n={self.n}, terms={len(self.terms)})"


def monomial_symmetric(lam: Partition, n: int) -> SparsePolynomial:
    """Sum of the distinct rearrangements of the padded exponent vector."""
    if n < lam.length:
        raise ValueError(f"{lam} needs at least {lam.length} variables")
    padded = lam.padded(n)
    return SparsePolynomial._unsafe(n, {w: 1 for w in distinct_permutations(padded)})


def _inversions(seq: tuple[int, ...]) -> int:
    inv = 0
    for i in range(len(seq)):
        si = seq[i]
        for j in range(i + 1, len(seq)):
            if si > seq[j]:
                inv += 1
    return inv


def alternant(alpha: tuple[int, ...]) -> SparsePolynomial:
    """The determinant det(x_j^{alpha_i}) as a signed sum over permutations.

    Repeated entries of alpha cancel to the zero polynomial.  Cost is n!,
    fine at desk scale.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    if n < 1:
        raise ValueError("alpha must be non-empty")
    if any(e < 0 for e in alpha):
        raise ValueError("alpha entries must be non-negative")
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        expo = tuple(alpha[p] for p in perm)
        sign = -1 if _inversions(perm) % 2 else 1
        v = terms.get(expo, 0) + sign
        if v:
            terms[expo] = v
        elif expo in terms:
            del terms[expo]
    return SparsePolynomial._unsafe(n, terms)


def elementary_symmetric(r: int, n: int) -> SparsePolynomial:
    """e_r in n variables: the sum of all squarefree monomials of degree r."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    terms: dict[tuple[int, ...], int] = {}
    for picks in combinations(range(n), r):
        expo = [0] * n
        for i in picks:
            expo[i] = 1
        terms[tuple(expo)] = 1
    return SparsePolynomial._unsafe(n, terms)


@lru_cache(maxsize=None)
def _hstrip_predecessors(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """(predecessor, removed) pairs where shape minus predecessor is a
    horizontal strip; shapes are in the decreasing convention here."""
    if not shape:
        return (((), 0),)
    out: list[tuple[tuple[int, ...], int]] = []

    def rec(i: int, acc: tuple[int, ...], removed: int) -> None:
        if i == len(shape):
            trimmed = acc
            while trimmed and trimmed[-1] == 0:
                trimmed = trimmed[:-1]
            out.append((trimmed, removed))
            return
        lo = shape[i + 1] if i + 1 < len(shape) else 0
        for v in range(lo, shape[i] + 1):
            rec(i + 1, acc + (v,), removed + shape[i] - v)

    rec(0, (), 0)
    return tuple(out)


def schur(lam: Partition, n: int) -> SparsePolynomial:
    """Schur polynomial as the content generating function of semistandard
    tableaux of shape lam with entries in 1..n."""
    if n < lam.length:
        raise ValueError(f"{lam} needs at least {lam.length} variables")
    terms: dict[tuple[int, ...], int] = {}
    expo = [0] * n
    shape0 = tuple(reversed(lam.parts))

    def rec(shape: tuple[int, ...], j: int) -> None:
        if not shape:
            key = tuple(expo)  # entries below j are still zero
            terms[key] = terms.get(key, 0) + 1
            return
        if len(shape) > j:
            return  # the first column would need more than j distinct values
        for pred, removed in _hstrip_predecessors(shape):
            expo[j - 1] = removed
            rec(pred, j - 1)
        expo[j - 1] = 0

    rec(shape0, n)
    return SparsePolynomial._unsafe(n, terms)


def coefficient_extract(h: SparsePolynomial, alpha: Iterable[int]) -> int:
    """The coefficient of x^alpha in h."""
    return h.coefficient(alpha)


def eliminate_last(h: SparsePolynomial, r: int) -> SparsePolynomial:
    """Collect the terms with last exponent r and drop the last variable."""
    if h.n < 2:
        raise ValueError("need at least two variables to eliminate one")
    if r < 0:
        raise ValueError("exponent must be non-negative")
    return SparsePolynomial._unsafe(
        h.n - 1, {e[:-1]: c for e, c in h.terms.items() if e[-1] == r}
    )


@lru_cache(maxsize=None)
def _kostka_raw(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    if len(shape) > len(content):
        return 0
    last = content[-1]
    total = 0
    for pred, removed in _hstrip_predecessors(shape):
        if removed == last:
            total += _kostka_raw(pred, content[:-1])
    return total


def kostka_number(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    return _kostka_raw(tuple(reversed(lam.parts)), mu.parts)


class SchurExpansion:
    """Finitely supported integer combination of Schur functions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean: dict[Partition, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for part, c in items:
                if not isinstance(part, Partition):
                    part = Partition(part)
                v = clean.get(part, 0) + c
                if v:
                    clean[part] = v
                elif part in clean:
                    del clean[part]
        self.coeffs = clean

    def get(self, mu: Partition) -> int:
        return self.coeffs.get(mu, 0)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key)

    def support(self) -> list[Partition]:
        return [p for p, _ in self.items()]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurExpansion) and self.coeffs == other.coeffs

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            v = out.get(p, 0) + c
            if v:
                out[p] = v
            elif p in out:
                del out[p]
        exp = object.__new__(SchurExpansion)
        exp.coeffs = out
        return exp

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        exp = object.__new__(SchurExpansion)
        exp.coeffs = {p: c * scalar for p, c in self.coeffs.items()} if scalar else {}
        return exp

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {c}" for p, c in self.items())
        return f"SchurExpansion({{{body}}})"


def pieri_multiply(expansion: SchurExpansion, r: int) -> SchurExpansion:
    """Multiply a Schur expansion by e_r: each shape grows by every possible
    vertical r-strip.  Stable form: shapes of any length are retained."""
    if r < 0:
        raise ValueError("strip size must be non-negative")
    out: dict[Partition, int] = {}
    for part, c in expansion.coeffs.items():
        for succ in vertical_strip_successors(part, r):
            v = out.get(succ, 0) + c
            if v:
                out[succ] = v
            elif succ in out:
                del out[succ]
    exp = object.__new__(SchurExpansion)
    exp.coeffs = out
    return exp


def expansion_to_polynomial(expansion: SchurExpansion, n: int) -> SparsePolynomial:
    """Evaluate a Schur expansion in n variables."""
    too_long = [p for p in expansion.coeffs if p.length > n]
    if too_long:
        raise ValueError(f"{too_long[0]} needs more than {n} variables")
    total = SparsePolynomial._unsafe(n, {})
    for part, c in expansion.items():
        total = total + schur(part, n) * c
    return total
