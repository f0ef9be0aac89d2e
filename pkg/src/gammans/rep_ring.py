"""Isomorphism classes of finite-dimensional S_n-modules over a field of characteristic 0.

A :class:`ModuleSum` records the multiplicity of every irreducible P_lam.  The
operations here are the ones needed for the homology computations: the
induction product (Littlewood-Richardson rule), restriction (branching rule),
twisting by the sign character, and the dimension of diagonal coinvariants.

Characters (Murnaghan-Nakayama) are provided as an independent oracle for the
Littlewood-Richardson enumerator.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DegreeMismatchError, PartitionSyntaxError
from .partitions import (
    Partition,
    contains,
    dim_irreducible,
    format_partition,
    parse_partition,
    partitions_of,
    sort_key,
    transpose,
)

__all__ = [
    "ModuleSum",
    "parse_module_sum",
    "lr_coefficient",
    "lr_product",
    "induction_product",
    "restrict",
    "tensor_alt",
    "coinvariant_dim",
    "mn_character",
    "centralizer_order",
    "lr_coefficient_by_characters",
]


class ModuleSum:
    """A finite direct sum of irreducible S_n-modules, ``sum c_lam * P_lam``.

    Immutable.  Multiplicities are Python ints, so there is no overflow.
    """

    __slots__ = ("_degree", "_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None, degree: int | None = None):
        clean: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            c = int(c)
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for {lam}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        sizes = {lam.size for lam in clean}
        if degree is None:
            if not clean:
                raise ValueError("degree is required for the zero module")
            if len(sizes) != 1:
                raise DegreeMismatchError(f"terms of mixed sizes {sorted(sizes)}")
            degree = sizes.pop()
        elif sizes - {degree}:
            raise DegreeMismatchError(f"terms of size {sorted(sizes)} in a module of degree {degree}")
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self._degree = degree
        self._terms = MappingProxyType(dict(sorted(clean.items(), key=lambda kv: sort_key(kv[0]))))
        self._hash = None

    @classmethod
    def zero(cls, degree: int) -> "ModuleSum":
        return cls({}, degree)

    @classmethod
    def irreducible(cls, lam: Iterable[int], multiplicity: int = 1) -> "ModuleSum":
        lam = Partition(lam)
        return cls({lam: multiplicity}, lam.size)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> Mapping[Partition, int]:
        return self._terms

    def multiplicity(self, lam: Iterable[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def support(self) -> list[Partition]:
        return list(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def dimension(self) -> int:
        return sum(c * dim_irreducible(lam) for lam, c in self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "ModuleSum") -> "ModuleSum":
        if not isinstance(other, ModuleSum):
            return NotImplemented
        _check_same_degree(self, other)
        total = Counter(self._terms)
        total.update(other._terms)
        return ModuleSum(total, self._degree)

    def __mul__(self, k: int) -> "ModuleSum":
        if not isinstance(k, int):
            return NotImplemented
        return ModuleSum({lam: k * c for lam, c in self._terms.items()}, self._degree)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ModuleSum):
            return NotImplemented
        return self._degree == other._degree and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._degree, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + format_partition(lam) for lam, c in self._terms.items()
        )

    def __repr__(self):
        return f"ModuleSum({self}, degree={self._degree})"


def _check_same_degree(a: ModuleSum, b: ModuleSum) -> None:
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees differ: {a.degree} vs {b.degree}")


_TERM = re.compile(r"^(?:(\d+)\*)?(\(.*\))$")


def parse_module_sum(text: str, degree: int | None = None) -> ModuleSum:
    """Parse ``c1*(lam1) + c2*(lam2) + ...``; ``0`` is the zero module.

    The degree must be supplied for ``0`` and is checked otherwise.
    """
    compact = re.sub(r"\s+", "", text)
    if compact == "0":
        if degree is None:
            raise PartitionSyntaxError("the zero module needs an explicit degree")
        return ModuleSum.zero(degree)
    if not compact:
        raise PartitionSyntaxError("empty module text")
    terms: Counter = Counter()
    for chunk in compact.split("+"):
        m = _TERM.match(chunk)
        if m is None:
            raise PartitionSyntaxError(f"bad module term {chunk!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        terms[parse_partition(m.group(2))] += coeff
    return ModuleSum(terms, degree)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Multiplicity of P_nu in P_lam o P_mu.

    Counts semistandard fillings of the skew shape nu/lam with content mu
    whose reading word (rows top to bottom, each row right to left) is a
    lattice word.
    """
    return _lr(Partition(lam), Partition(mu), Partition(nu))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if nu.size != lam.size + mu.size or not contains(nu, lam) or not contains(nu, mu):
        return 0
    if not mu:
        return 1
    cells = [
        (r, c)
        for r in range(len(nu))
        for c in range(nu[r] - 1, (lam[r] if r < len(lam) else 0) - 1, -1)
    ]
    lam_row = lambda r: lam[r] if r < len(lam) else 0  # noqa: E731
    filling: dict[tuple[int, int], int] = {}
    used = [0] * len(mu)

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = len(mu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if r > 0 and c >= lam_row(r - 1):
            lo = filling[(r - 1, c)] + 1
        hi = min(hi, r + 1)
        total = 0
        for v in range(lo, hi + 1):
            i = v - 1
            if used[i] == mu[i]:
                continue
            if i > 0 and used[i] >= used[i - 1]:
                continue
            used[i] += 1
            filling[(r, c)] = v
            total += fill(k + 1)
            del filling[(r, c)]
            used[i] -= 1
        return total

    return fill(0)


@lru_cache(maxsize=None)
def _lr_product_cached(lam: Partition, mu: Partition) -> tuple:
    n = lam.size + mu.size
    max_part = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    out = []
    for nu in partitions_of(n, max_part=max_part, max_length=len(lam) + len(mu)):
        if contains(nu, lam) and contains(nu, mu):
            c = _lr(lam, mu, nu)
            if c:
                out.append((nu, c))
    return tuple(out)


def lr_product(lam: Iterable[int], mu: Iterable[int]) -> ModuleSum:
    """P_lam o P_mu as a :class:`ModuleSum`."""
    lam, mu = Partition(lam), Partition(mu)
    return ModuleSum(dict(_lr_product_cached(lam, mu)), lam.size + mu.size)


def induction_product(a: ModuleSum, b: ModuleSum) -> ModuleSum:
    """Ind from S_a x S_b to S_(a+b) of the outer tensor product, extended bilinearly."""
    total: Counter = Counter()
    for lam, ca in a.items():
        for mu, cb in b.items():
            for nu, c in _lr_product_cached(lam, mu):
                total[nu] += ca * cb * c
    return ModuleSum(total, a.degree + b.degree)


# ---------------------------------------------------------------------------
# Restriction, sign twist, coinvariants


@lru_cache(maxsize=None)
def _remove_one_box(lam: Partition) -> tuple:
    out = []
    for r in range(len(lam)):
        if r == len(lam) - 1 or lam[r] > lam[r + 1]:
            parts = list(lam)
            parts[r] -= 1
            out.append(Partition(p for p in parts if p))
    return tuple(out)


def restrict(a: ModuleSum, m: int) -> ModuleSum:
    """Restriction from S_n to S_m (m <= n) by repeated branching."""
    if m > a.degree or m < 0:
        raise DegreeMismatchError(f"cannot restrict degree {a.degree} to {m}")
    current: Counter = Counter(a.terms)
    for _ in range(a.degree - m):
        nxt: Counter = Counter()
        for lam, c in current.items():
            for smaller in _remove_one_box(lam):
                nxt[smaller] += c
        current = nxt
    return ModuleSum(current, m)


def tensor_alt(a: ModuleSum) -> ModuleSum:
    """Tensor with the sign representation: transpose every partition."""
    return ModuleSum({transpose(lam): c for lam, c in a.items()}, a.degree)


def coinvariant_dim(a: ModuleSum, b: ModuleSum) -> int:
    """Dimension of the S_n-coinvariants of A (x) B under the diagonal action."""
    _check_same_degree(a, b)
    return sum(c * b.multiplicity(lam) for lam, c in a.items())


# ---------------------------------------------------------------------------
# Characters


def mn_character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Irreducible character chi^lam at a permutation of cycle type mu."""
    lam, mu = Partition(lam), tuple(sorted(mu, reverse=True))
    if lam.size != sum(mu):
        raise DegreeMismatchError(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: tuple) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        height = sum(1 for x in beads if target < x < b)
        new_beads = sorted((beads - {b}) | {target}, reverse=True)
        new_lam = Partition(p for p in (x - (ell - 1 - i) for i, x in enumerate(new_beads)) if p)
        sign = -1 if height % 2 else 1
        total += sign * _mn(new_lam, rest)
    return total


def centralizer_order(mu: Iterable[int]) -> int:
    """z_mu = prod i^(m_i) m_i!; the class of cycle type mu has n!/z_mu elements."""
    counts = Counter(mu)
    return prod(i**m * factorial(m) for i, m in counts.items())


def lr_coefficient_by_characters(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Oracle: <Ind(chi^lam x chi^mu), chi^nu> summed over conjugacy classes of S_a x S_b."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size:
        return 0
    total = Fraction(0)
    for alpha in partitions_of(lam.size):
        chi_a = _mn(lam, tuple(alpha))
        if not chi_a:
            continue
        for beta in partitions_of(mu.size):
            chi_b = _mn(mu, tuple(beta))
            if not chi_b:
                continue
            joint = tuple(sorted(alpha + beta, reverse=True))
            total += Fraction(
                chi_a * chi_b * _mn(nu, joint),
                centralizer_order(alpha) * centralizer_order(beta),
            )
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral character inner product {total}")
    return int(total)
