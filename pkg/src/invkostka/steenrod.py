"""Coefficient rows of Steenrod operations on Chern / Stiefel-Whitney classes.

The mod-p reduced power P^k applied to c_m expands over Schur classes with
coefficients given by an inverse Kostka row: the row of (1^(m-k), p^k),
reduced mod p.  For p = 2 this is Sq^k on w_m, and the classical Wu formula
gives the same row through elementary symmetric products; both routes are
implemented here so they can be compared coefficient by coefficient.

An EPolynomial is an integer combination of products of elementary
symmetric functions e_i, indexed by sorted tuples of their subscripts.
It is the target of the two-column Giambelli determinant and of the
integral (characteristic zero) lift of the Wu right-hand side.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .inverse import monomial_to_schur
from .partitions import Partition
from .symfunc import (
    SchurExpansion,
    SparsePolynomial,
    elementary_symmetric,
    pieri_multiply,
)


class ModPExpansion:
    """A Schur expansion with coefficients reduced to residues 0..p-1."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=None):
        if p < 2:
            raise ValueError("modulus must be at least 2")
        clean: dict[Partition, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for part, c in items:
                if not isinstance(part, Partition):
                    part = Partition(part)
                v = (clean.get(part, 0) + c) % p
                if v:
                    clean[part] = v
                elif part in clean:
                    del clean[part]
        self.p = p
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
        if not isinstance(other, ModPExpansion):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        inner = ", ".join(f"{part}: {c}" for part, c in self.items())
        return f"ModPExpansion(p={self.p}, {{{inner}}})"


def expansion_mod(expansion: SchurExpansion, p: int) -> ModPExpansion:
    return ModPExpansion(p, expansion.coeffs)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _check_km(k: int, m: int) -> None:
    if m < 1:
        raise ValueError("m must be at least 1")
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")


def steenrod_P(k: int, m: int, p: int) -> ModPExpansion:
    """Schur coefficients of P^k(c_m) for an odd prime p."""
    if not _is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    _check_km(k, m)
    lam = Partition.from_multiplicities(((1, m - k), (p, k)))
    return expansion_mod(monomial_to_schur(lam), p)


def steenrod_Sq(k: int, m: int) -> ModPExpansion:
    """Schur coefficients of Sq^k(w_m)."""
    _check_km(k, m)
    lam = Partition.from_multiplicities(((1, m - k), (2, k)))
    return expansion_mod(monomial_to_schur(lam), 2)


# ---------------------------------------------------------------------------
# integer combinations of products of elementary symmetric functions


class EPolynomial:
    """Integer combination of products e_(i1) e_(i2) ... , with i1 <= i2 <= ...

    Keys are sorted index tuples.  A factor e_0 is the unit and is dropped
    from the key; a factor with negative index makes the whole term zero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for indices, c in items:
                if any(i < 0 for i in indices):
                    continue
                key = tuple(sorted(i for i in indices if i > 0))
                v = clean.get(key, 0) + c
                if v:
                    clean[key] = v
                elif key in clean:
                    del clean[key]
        self.terms = clean

    def get(self, indices: tuple[int, ...]) -> int:
        return self.terms.get(tuple(sorted(indices)), 0)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "EPolynomial") -> "EPolynomial":
        if not isinstance(other, EPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        res = object.__new__(EPolynomial)
        res.terms = out
        return res

    def __mul__(self, scalar: int) -> "EPolynomial":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return EPolynomial()
        res = object.__new__(EPolynomial)
        res.terms = {k: c * scalar for k, c in self.terms.items()}
        return res

    __rmul__ = __mul__

    def reduce_mod(self, p: int) -> "EPolynomial":
        if p < 2:
            raise ValueError("modulus must be at least 2")
        out = {k: c % p for k, c in self.terms.items() if c % p}
        res = object.__new__(EPolynomial)
        res.terms = out
        return res

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, c in self.items():
            name = "*".join(f"e{i}" for i in key) if key else "1"
            mag = abs(c)
            body = name if mag == 1 and key else (f"{mag}*{name}" if key else str(mag))
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"EPolynomial({self.pretty()})"


def giambelli_hook2(m: int, k: int) -> EPolynomial:
    """The two-column Schur function s_(1^(m-k), 2^k) written in the e_i:
    e_k e_m - e_(k-1) e_(m+1)."""
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    return EPolynomial({(k, m): 1, (k - 1, m + 1): -1})


def integral_wu_lift(k: int, m: int) -> EPolynomial:
    """An integer e-polynomial that equals the monomial function of shape
    (1^(m-k), 2^k); its mod-2 Schur expansion is the Wu row for Sq^k(w_m).

    Each two-column Schur summand of the monomial function is replaced by
    its Giambelli determinant, with the signed binomial coefficient of the
    summand carried along.
    """
    _check_km(k, m)
    out = EPolynomial()
    for t in range(k + 1):
        c = comb(m - k + t, t)
        hook = giambelli_hook2(m + t, k - t)
        out = out + hook * (-c if t % 2 else c)
    return out


@lru_cache(maxsize=None)
def _e_indices_to_schur(indices: tuple[int, ...]) -> SchurExpansion:
    acc = SchurExpansion({Partition(()): 1})
    for r in indices:
        acc = pieri_multiply(acc, r)
    return acc


def epoly_to_schur(ep: EPolynomial) -> SchurExpansion:
    """Expand each product of e_i over Schur functions by iterated
    column-strip multiplication and add everything up."""
    acc = SchurExpansion()
    for key, c in ep.items():
        acc = acc + c * _e_indices_to_schur(key)
    return acc


def wu_rhs(k: int, m: int) -> ModPExpansion:
    """Schur coefficients mod 2 of the classical Wu right-hand side
    sum over 0 <= i <= k of C(m-i-1, k-i) w_i w_(m+k-i)."""
    _check_km(k, m)
    acc = SchurExpansion()
    for i in range(k + 1):
        c = _wu_binom(m - i - 1, k - i)
        if c % 2 == 0:
            continue
        key = tuple(sorted(j for j in (i, m + k - i) if j > 0))
        acc = acc + c * _e_indices_to_schur(key)
    return expansion_mod(acc, 2)


def _wu_binom(n: int, r: int) -> int:
    # C(n, r) with the conventions needed at the boundary: C(n, 0) = 1
    # even for negative n, and 0 whenever r < 0 or r > n >= 0.
    if r < 0:
        return 0
    if r == 0:
        return 1
    if n < 0:
        return 0
    return comb(n, r)


@lru_cache(maxsize=16)
def _e_product_poly(indices: tuple[int, ...], n: int) -> SparsePolynomial:
    acc = SparsePolynomial.one(n)
    for i in indices:
        acc = acc * elementary_symmetric(i, n)
    return acc


def epoly_to_polynomial(ep: EPolynomial, n: int) -> SparsePolynomial:
    """Evaluate in n variables.  Factors e_i with i > n vanish, killing
    their whole term."""
    if n < 1:
        raise ValueError("need at least one variable")
    acc = SparsePolynomial(n)
    for key, c in ep.items():
        if any(i > n for i in key):
            continue
        acc = acc + c * _e_product_poly(key, n)
    return acc
