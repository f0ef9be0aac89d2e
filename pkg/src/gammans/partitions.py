"""Integer partitions: canonical values, text notation, transpose, hook lengths.

Text notation uses exponents for repeated parts, ``(2^3,1^2)`` for
``(2,2,2,1,1)``, and ``()`` for the empty partition of 0.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import groupby
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import PartitionOrderError, PartitionSyntaxError, ZeroPartError

__all__ = [
    "Partition",
    "parse_partition",
    "format_partition",
    "transpose",
    "hook_lengths",
    "dim_irreducible",
    "partitions_of",
    "contains",
    "sort_key",
]


def sort_key(parts: Iterable[int]) -> tuple:
    """Canonical ordering: by size, then lexicographically on the reversed parts."""
    parts = tuple(parts)
    return (sum(parts), parts[::-1])


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves like a plain tuple for indexing, hashing and equality, but orders
    by :func:`sort_key` so sorted output is canonical.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ZeroPartError(f"partition parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionOrderError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        return transpose(self)

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __le__(self, other):
        return sort_key(self) <= sort_key(other)

    def __gt__(self, other):
        return sort_key(self) > sort_key(other)

    def __ge__(self, other):
        return sort_key(self) >= sort_key(other)

    def __repr__(self):
        return f"Partition({format_partition(self)})"

    def __str__(self):
        return format_partition(self)


_ENTRY = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``(a^k,b,...)`` notation into a :class:`Partition`.

    Whitespace between tokens is ignored.
    """
    compact = re.sub(r"\s+", "", text)
    if len(compact) < 2 or compact[0] != "(" or compact[-1] != ")":
        raise PartitionSyntaxError(f"expected parenthesised partition, got {text!r}")
    body = compact[1:-1]
    if body == "":
        return Partition(())
    parts: list[int] = []
    for entry in body.split(","):
        m = _ENTRY.match(entry)
        if m is None:
            raise PartitionSyntaxError(f"bad entry {entry!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if value == 0 or count == 0:
            raise ZeroPartError(f"zero part or exponent in {text!r}")
        parts.extend([value] * count)
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    chunks = []
    for value, run in groupby(lam):
        k = len(list(run))
        chunks.append(f"{value}^{k}" if k > 1 else f"{value}")
    return "(" + ",".join(chunks) + ")"


def transpose(lam: Iterable[int]) -> Partition:
    """Conjugate partition: the column lengths of the Young diagram."""
    return _transpose(tuple(lam))


@lru_cache(maxsize=None)
def _transpose(lam: tuple) -> Partition:
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Iterable[int]) -> list[list[int]]:
    """Hook length of every cell, row by row: lam_i - j + lam'_j - i + 1 (1-based)."""
    lam = Partition(lam)
    conj = transpose(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def dim_irreducible(lam: Iterable[int]) -> int:
    """Dimension of the irreducible S_n-module P_lam (hook-length formula)."""
    return _dim_irreducible(Partition(lam))


@lru_cache(maxsize=None)
def _dim_irreducible(lam: Partition) -> int:
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(lam.size) // hooks


def partitions_of(
    n: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order.

    Optional bounds restrict the largest part and the number of parts.
    """
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """True when the Young diagram of ``inner`` fits inside that of ``outer``."""
    outer, inner = tuple(outer), tuple(inner)
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))
