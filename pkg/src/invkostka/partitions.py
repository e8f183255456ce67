"""Integer partitions in the non-decreasing convention.

A partition is a finite multiset of positive integers, stored as a sorted
tuple ``p1 <= p2 <= ... <= pl``.  Leading zeros are implicit and appear only
through :meth:`Partition.padded`, where the largest part sits at the *end*
of the padded vector.  All strip and reduction operators below follow that
convention.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator


class WeightMismatchError(ValueError):
    """Two partitions were required to have the same weight but do not."""


class PartitionParseError(ValueError):
    """A partition literal could not be parsed."""


class Partition:
    """Immutable multiset of positive integers.

    Parts may be given in any order; storage is non-decreasing.  The empty
    partition plays the role of (0).
    """

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(sorted(parts))
        for p in ps:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        self.parts = ps

    @classmethod
    def _from_sorted(cls, parts: tuple[int, ...]) -> "Partition":
        # fast path for internal callers that already hold a sorted tuple
        self = object.__new__(cls)
        self.parts = parts
        return self

    @classmethod
    def from_multiplicities(cls, pairs: Iterable[tuple[int, int]]) -> "Partition":
        parts: list[int] = []
        for value, mult in pairs:
            if mult < 0:
                raise ValueError("multiplicities must be non-negative")
            parts.extend([value] * mult)
        return cls(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``[1,1,2]`` (any order), ``1^2,2^1``, or ``0`` / ``[]`` for empty."""
        s = text.strip()
        if s == "0":
            return cls()
        try:
            if s.startswith("["):
                if not s.endswith("]"):
                    raise ValueError("missing closing bracket")
                body = s[1:-1].strip()
                if not body:
                    return cls()
                return cls(int(tok) for tok in body.split(","))
            parts: list[int] = []
            for tok in s.split(","):
                tok = tok.strip()
                if not tok:
                    raise ValueError("empty token")
                if "^" in tok:
                    base, _, exp = tok.partition("^")
                    value, mult = int(base), int(exp)
                    if mult < 1:
                        raise ValueError("multiplicity must be positive")
                else:
                    value, mult = int(tok), 1
                parts.extend([value] * mult)
            if not parts:
                raise ValueError("no parts")
            return cls(parts)
        except ValueError as exc:
            raise PartitionParseError(f"cannot parse partition literal {text!r}: {exc}") from None

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        """The largest part, or 0 for the empty partition."""
        return self.parts[-1] if self.parts else 0

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical enumeration key: graded by length, then lexicographic."""
        return (len(self.parts), self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        """The partition as an n-vector with leading zeros, largest part last."""
        if n < len(self.parts):
            raise ValueError(f"cannot pad {self} to length {n}")
        return (0,) * (n - len(self.parts)) + self.parts

    def drop_largest(self) -> "Partition":
        """The partition with one copy of its largest part removed."""
        return Partition._from_sorted(self.parts[:-1]) if self.parts else self

    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """Pairs (value, multiplicity) with values strictly increasing."""
        return tuple((v, len(list(g))) for v, g in groupby(self.parts))

    def conjugate_count(self, a: int) -> int:
        """Number of parts that are >= a (column a of the diagram)."""
        if a < 1:
            raise ValueError("a must be positive")
        return sum(1 for p in self.parts if p >= a)

    def part_count(self, c: int) -> int:
        """Number of parts equal to c."""
        if c < 1:
            raise ValueError("c must be positive")
        return sum(1 for p in self.parts if p == c)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


def distinct_permutations(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Yield the distinct rearrangements of a multiset, in lexicographic order."""
    counts = [[v, len(list(g))] for v, g in groupby(sorted(values))]
    n = len(values)
    out = [0] * n

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(out)
            return
        for entry in counts:
            if entry[1]:
                entry[1] -= 1
                out[pos] = entry[0]
                yield from rec(pos + 1)
                entry[1] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _partitions_lex(m: int, k: int, lo: int) -> tuple[tuple[int, ...], ...]:
    """Non-decreasing k-tuples of parts >= lo summing to m, in lex order."""
    if k == 0:
        return ((),) if m == 0 else ()
    out: list[tuple[int, ...]] = []
    for a in range(lo, m // k + 1):
        for rest in _partitions_lex(m - a, k - 1, a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _enumerate_cached(m: int, cap: int) -> tuple[Partition, ...]:
    out: list[Partition] = [Partition()] if m == 0 else []
    for k in range(1, cap + 1):
        out.extend(Partition._from_sorted(t) for t in _partitions_lex(m, k, 1))
    return tuple(out)


def enumerate_partitions(m: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of m (optionally with at most ``max_parts`` parts).

    Order is canonical: graded by length, then lexicographic on the
    non-decreasing part tuples.
    """
    if m < 0:
        raise ValueError("weight must be non-negative")
    if max_parts is not None and max_parts < 1:
        raise ValueError("max_parts must be positive")
    cap = m if max_parts is None else min(max_parts, m)
    return list(_enumerate_cached(m, cap))


def remove_part(lam: Partition, j: int) -> Partition:
    """Remove one copy of the j-th smallest *distinct* part value (1-based)."""
    blocks = lam.multiplicities()
    if not 1 <= j <= len(blocks):
        raise IndexError(f"distinct-part index {j} out of range for {lam}")
    value = blocks[j - 1][0]
    ps = list(lam.parts)
    ps.remove(value)
    return Partition._from_sorted(tuple(ps))


def er_reduction(mu: Partition, i: int) -> Partition:
    """Drop the i-th smallest part and decrement every smaller-indexed part.

    Zeros produced by the decrements vanish; the result is automatically
    sorted in the non-decreasing convention.
    """
    if not 1 <= i <= mu.length:
        raise IndexError(f"part index {i} out of range for {mu}")
    ps = mu.parts
    kept = tuple(p - 1 for p in ps[: i - 1] if p > 1) + ps[i:]
    return Partition._from_sorted(kept)


@lru_cache(maxsize=None)
def _strip_predecessors_raw(parts: tuple[int, ...], r: int) -> tuple[tuple[int, ...], ...]:
    # Aligned by padded position, a removable vertical strip decrements a
    # sub-multiset of parts by one each, no part twice; enumerating one
    # decrement count per block of equal parts hits each result exactly once.
    blocks = [(v, len(list(g))) for v, g in groupby(parts)]
    found: set[tuple[int, ...]] = set()

    def rec(idx: int, left: int, acc: tuple[int, ...]) -> None:
        if idx == len(blocks):
            if left == 0:
                found.add(tuple(sorted(acc)))
            return
        value, mult = blocks[idx]
        for k in range(min(mult, left) + 1):
            ext = (value,) * (mult - k)
            if value > 1:
                ext += (value - 1,) * k
            rec(idx + 1, left - k, acc + ext)

    rec(0, r, ())
    return tuple(sorted(found, key=lambda t: (len(t), t)))


@lru_cache(maxsize=None)
def _strip_successors_raw(parts: tuple[int, ...], r: int) -> tuple[tuple[int, ...], ...]:
    blocks = [(v, len(list(g))) for v, g in groupby(parts)]
    found: set[tuple[int, ...]] = set()

    def rec(idx: int, left: int, acc: tuple[int, ...]) -> None:
        if idx == len(blocks):
            # anything not yet used becomes a new part equal to 1
            found.add(tuple(sorted(acc + (1,) * left)))
            return
        value, mult = blocks[idx]
        for k in range(min(mult, left) + 1):
            rec(idx + 1, left - k, acc + (value,) * (mult - k) + (value + 1,) * k)

    rec(0, r, ())
    return tuple(sorted(found, key=lambda t: (len(t), t)))


def vertical_strip_predecessors(mu: Partition, r: int) -> list[Partition]:
    """All partitions obtained from mu by removing a vertical r-strip.

    A vertical r-strip decreases exactly r of the padded entries by one, so
    only positive parts can shrink.  Results come out in canonical order.
    """
    if r < 0:
        raise ValueError("strip size must be non-negative")
    return [Partition._from_sorted(t) for t in _strip_predecessors_raw(mu.parts, r)]


def vertical_strip_successors(lam: Partition, r: int) -> list[Partition]:
    """All partitions mu such that mu minus lam is a vertical r-strip."""
    if r < 0:
        raise ValueError("strip size must be non-negative")
    return [Partition._from_sorted(t) for t in _strip_successors_raw(lam.parts, r)]


def last_nonzero_compare(lam: Partition, mu: Partition) -> int:
    """Total order on equal-weight partitions: sign of the last nonzero
    difference of the padded vectors.  Returns -1, 0, or +1."""
    if lam.weight != mu.weight:
        raise WeightMismatchError(f"{lam} and {mu} have different weights")
    n = max(lam.length, mu.length)
    a = lam.padded(n)
    b = mu.padded(n)
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x > y else -1
    return 0
