"""Inverse Kostka entries by three independent routes.

The three engines share nothing but the partition toolkit:

* a recurrence that peels the largest part of mu and removes vertical
  strips ("duan" in the CLI),
* a recurrence that removes one distinct part of lambda against a special
  reduction of mu ("er" in the CLI),
* a brute-force signed enumeration of rearrangement/permutation pairs
  ("brute" in the CLI).

On top of these sit the chain enumerations whose signed counts reproduce
the same numbers, the signed-solution polynomial f, and labeled matrix
builders for whole-weight tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    Partition,
    WeightMismatchError,
    distinct_permutations,
    enumerate_partitions,
    _strip_predecessors_raw,
)
from .symfunc import SchurExpansion, kostka_number
from .unipoly import UniPolynomial


def cancellation_zero(lam: Partition, mu: Partition) -> bool:
    """True when the entry vanishes for one of the two structural reasons:
    lambda is below mu in the last-nonzero order, or has more parts."""
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    if lam.length > mu.length:
        return True
    return _last_nonzero_less(lam.parts, mu.parts)


def tail_reduction(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    """Strip the maximal common run of equal largest parts from both."""
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    a, b = lam.parts, mu.parts
    while a and b and a[-1] == b[-1]:
        a = a[:-1]
        b = b[:-1]
    return Partition._from_sorted(a), Partition._from_sorted(b)


def _last_nonzero_less(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    n = max(len(lam), len(mu))
    a = (0,) * (n - len(lam)) + lam
    b = (0,) * (n - len(mu)) + mu
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return x < y
    return False


# ---------------------------------------------------------------------------
# engine 1: peel the largest part of mu, remove vertical strips


def inv_kostka_duan(lam: Partition, mu: Partition) -> int:
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    return _duan_entry(lam.parts, mu.parts)


def _duan_entry(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # memo key is the pair after tail reduction; the reduced form also makes
    # the cancellation tests cheap
    while lam and mu and lam[-1] == mu[-1]:
        lam = lam[:-1]
        mu = mu[:-1]
    if not lam and not mu:
        return 1
    if len(lam) > len(mu) or _last_nonzero_less(lam, mu):
        return 0
    return _duan_recurse(lam, mu)


@lru_cache(maxsize=None)
def _duan_recurse(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    mu_max = mu[-1]
    rest = mu[:-1]
    total = 0
    for value in dict.fromkeys(lam):  # distinct part values, ascending
        strip = value - mu_max
        if strip < 0:
            continue
        reduced = list(lam)
        reduced.remove(value)
        reduced = tuple(reduced)
        sign = -1 if strip % 2 else 1
        for omega in _strip_predecessors_raw(rest, strip):
            total += sign * _duan_entry(reduced, omega)
    return total


# ---------------------------------------------------------------------------
# engine 2: remove one distinct part of lambda


def inv_kostka_er(lam: Partition, mu: Partition) -> int:
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    return _er_recurse(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def _er_recurse(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not lam and not mu:
        return 1
    if not lam or not mu:
        return 0
    distinct = set(lam)
    total = 0
    for i in range(1, len(mu) + 1):
        value = mu[i - 1] + i - 1
        if value not in distinct:
            continue
        reduced = list(lam)
        reduced.remove(value)
        omega = tuple(p - 1 for p in mu[: i - 1] if p > 1) + mu[i:]
        sub = _er_recurse(tuple(reduced), omega)
        total += -sub if i % 2 == 0 else sub
    return total


# ---------------------------------------------------------------------------
# engine 3: brute-force signed pair search


@dataclass(frozen=True)
class SolutionPair:
    """One solution (w, sigma) of  w + sigma(staircase) = mu + staircase.

    ``w`` is a rearrangement of the padded lambda.  ``sigma`` is stored in
    one-line notation on 1..n, so the permuted staircase has i-th entry
    ``sigma[i] - 1``.  ``length`` is the inversion count of sigma and
    ``sign == (-1) ** length``.
    """

    w: tuple[int, ...]
    sigma: tuple[int, ...]
    sign: int
    length: int


def _inversions(seq: tuple[int, ...]) -> int:
    inv = 0
    for i in range(len(seq)):
        si = seq[i]
        for j in range(i + 1, len(seq)):
            if si > seq[j]:
                inv += 1
    return inv


def _default_n(lam: Partition, mu: Partition) -> int:
    return max(1, lam.length, mu.length)


def _brute_solutions(lam: Partition, mu: Partition, n: int):
    """Yield (w, staircase permutation, inversion count) for every solution.

    The staircase has distinct entries, so the permutation is recoverable
    from the difference vector alone.
    """
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    if n < max(lam.length, mu.length) or n < 1:
        raise ValueError(f"n={n} is too small for {lam} and {mu}")
    target = tuple(m + d for m, d in zip(mu.padded(n), range(n)))
    for w in distinct_permutations(lam.padded(n)):
        seen = bytearray(n)
        ok = True
        for t, x in zip(target, w):
            d = t - x
            if 0 <= d < n and not seen[d]:
                seen[d] = 1
            else:
                ok = False
                break
        if ok:
            diff = tuple(t - x for t, x in zip(target, w))
            yield w, diff, _inversions(diff)


def inv_kostka_bruteforce(lam: Partition, mu: Partition, n: int | None = None) -> int:
    if n is None:
        n = _default_n(lam, mu)
    return sum(1 - 2 * (inv % 2) for _, _, inv in _brute_solutions(lam, mu, n))


def solution_pairs(lam: Partition, mu: Partition, n: int | None = None) -> list[SolutionPair]:
    if n is None:
        n = _default_n(lam, mu)
    out = []
    for w, diff, inv in _brute_solutions(lam, mu, n):
        sigma = tuple(d + 1 for d in diff)
        out.append(SolutionPair(w=w, sigma=sigma, sign=1 - 2 * (inv % 2), length=inv))
    return out


def f_polynomial(lam: Partition, mu: Partition, n: int | None = None) -> UniPolynomial:
    """The signed generating polynomial of solution pairs by inversion count:
    coefficient of t^i is (-1)^i times the number of solutions of length i.
    Evaluation at 1 gives the inverse Kostka entry; at -1, the solution count."""
    if n is None:
        n = _default_n(lam, mu)
    counts: dict[int, int] = {}
    for _, _, inv in _brute_solutions(lam, mu, n):
        counts[inv] = counts.get(inv, 0) + 1
    if not counts:
        return UniPolynomial()
    coeffs = [0] * (max(counts) + 1)
    for inv, c in counts.items():
        coeffs[inv] = -c if inv % 2 else c
    return UniPolynomial(coeffs)


# ---------------------------------------------------------------------------
# chain enumerations


@dataclass(frozen=True)
class ChainS:
    """A chain from the empty partition up to mu where step i first removes
    the largest part of mu^i, then a vertical j_i-strip.  The recorded value
    b_i = largest(mu^i) + j_i; over a full chain the b_i rearrange lambda.
    sign == (-1) ** sum(j_i)."""

    steps: tuple[tuple[Partition, int], ...]
    b_values: tuple[int, ...]
    sign: int


@dataclass(frozen=True)
class ChainT:
    """A chain from the empty partition up to mu where step i drops the
    j_i-th smallest part of mu^i and decrements the smaller ones.  The value
    a_i = (j_i-th part of mu^i) + j_i - 1; the a_i rearrange lambda.
    sign == (-1) ** (sum(j_i) - k)."""

    steps: tuple[tuple[Partition, int], ...]
    a_values: tuple[int, ...]
    sign: int


def enumerate_chains_S(lam: Partition, mu: Partition) -> list[ChainS]:
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    k = lam.length
    chains: list[ChainS] = []
    acc: list[tuple[Partition, int]] = []

    def rec(current: Partition, remaining: dict[int, int]) -> None:
        if len(acc) == k:
            if current.length == 0:
                steps = tuple(reversed(acc))
                bs = tuple(p.largest + j for p, j in steps)
                jsum = sum(j for _, j in steps)
                chains.append(ChainS(steps, bs, 1 - 2 * (jsum % 2)))
            return
        top = current.largest
        rest = current.drop_largest()
        for b in sorted(remaining):  # ascending b means ascending strip size
            if remaining[b] == 0 or b < top:
                continue
            remaining[b] -= 1
            acc.append((current, b - top))
            for omega in _strip_predecessors_raw(rest.parts, b - top):
                rec(Partition._from_sorted(omega), remaining)
            acc.pop()
            remaining[b] += 1

    counts = {v: m for v, m in lam.multiplicities()}
    rec(mu, counts)
    return chains


def enumerate_chains_T(lam: Partition, mu: Partition) -> list[ChainT]:
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    k = lam.length
    chains: list[ChainT] = []
    acc: list[tuple[Partition, int]] = []

    def rec(current: Partition, remaining: dict[int, int]) -> None:
        if len(acc) == k:
            if current.length == 0:
                steps = tuple(reversed(acc))
                avals = tuple(p.parts[j - 1] + j - 1 for p, j in steps)
                jsum = sum(j for _, j in steps)
                chains.append(ChainT(steps, avals, 1 - 2 * ((jsum - k) % 2)))
            return
        ps = current.parts
        for j in range(1, len(ps) + 1):
            a = ps[j - 1] + j - 1
            if remaining.get(a, 0) == 0:
                continue
            remaining[a] -= 1
            acc.append((current, j))
            reduced = tuple(p - 1 for p in ps[: j - 1] if p > 1) + ps[j:]
            rec(Partition._from_sorted(reduced), remaining)
            acc.pop()
            remaining[a] += 1

    counts = {v: m for v, m in lam.multiplicities()}
    rec(mu, counts)
    return chains


# ---------------------------------------------------------------------------
# rows, matrices, and the one-step expansion cross-check


def monomial_to_schur(lam: Partition) -> SchurExpansion:
    """The full row of inverse Kostka entries: the Schur expansion of the
    monomial symmetric function indexed by lam."""
    out: dict[Partition, int] = {}
    for mu in enumerate_partitions(lam.weight):
        v = inv_kostka_duan(lam, mu)
        if v:
            out[mu] = v
    return SchurExpansion(out)


@dataclass(frozen=True)
class LabeledMatrix:
    """A square integer matrix with partition labels in canonical order."""

    labels: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def entry(self, lam: Partition, mu: Partition) -> int:
        i = self.labels.index(lam)
        j = self.labels.index(mu)
        return self.entries[i][j]

    def matmul(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if self.labels != other.labels:
            raise ValueError("label mismatch")
        cols = tuple(zip(*other.entries))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries
        )
        return LabeledMatrix(self.labels, rows)

    def is_identity(self) -> bool:
        return all(
            v == (1 if i == j else 0)
            for i, row in enumerate(self.entries)
            for j, v in enumerate(row)
        )


def kostka_matrix(m: int) -> LabeledMatrix:
    """Kostka numbers over all partitions of m, via tableau counting."""
    parts = tuple(enumerate_partitions(m))
    rows = tuple(
        tuple(kostka_number(lam, mu) for mu in parts) for lam in parts
    )
    return LabeledMatrix(parts, rows)


def inverse_kostka_matrix(m: int) -> LabeledMatrix:
    parts = tuple(enumerate_partitions(m))
    rows = tuple(
        tuple(inv_kostka_duan(lam, mu) for mu in parts) for lam in parts
    )
    return LabeledMatrix(parts, rows)


@dataclass(frozen=True)
class Corollary1Check:
    lhs: int
    rhs: int
    equal: bool


def verify_corollary1(lam: Partition, mu: Partition) -> Corollary1Check:
    """Expand the entry one step along each recurrence independently (with
    sub-entries from the strip engine) and compare the two sums."""
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")

    mu_max = mu.largest
    rest = mu.drop_largest()
    lhs = 0
    for value, _ in lam.multiplicities():
        strip = value - mu_max
        if strip < 0:
            continue
        reduced = list(lam.parts)
        reduced.remove(value)
        reduced_p = Partition(reduced)
        sign = -1 if strip % 2 else 1
        for omega in _strip_predecessors_raw(rest.parts, strip):
            lhs += sign * inv_kostka_duan(reduced_p, Partition._from_sorted(omega))

    distinct = set(lam.parts)
    rhs = 0
    ps = mu.parts
    for i in range(1, len(ps) + 1):
        value = ps[i - 1] + i - 1
        if value not in distinct:
            continue
        reduced = list(lam.parts)
        reduced.remove(value)
        omega = tuple(p - 1 for p in ps[: i - 1] if p > 1) + ps[i:]
        sub = inv_kostka_duan(Partition(reduced), Partition._from_sorted(omega))
        rhs += -sub if i % 2 == 0 else sub

    return Corollary1Check(lhs, rhs, lhs == rhs)
