"""Cohomology of Gamma_{n,s} for n <= 2 as S_s-modules, and formulas built on it.

Gamma_{n,s} is the group of homotopy classes of self-equivalences of a rank-n
graph with s marked leaves (Gamma_{n,0} = Out(F_n), Gamma_{n,1} = Aut(F_n)),
and S_s acts on its cohomology by permuting the leaves.  Over a field of
characteristic 0 every S_s-module is self-dual, so H^i and H_i have the same
decomposition; :func:`gamma_cohomology` serves both.

The GL-side helpers decompose the coefficient modules H^q(F_n^s) via
Schur-Weyl duality.  For n = 2 the first cohomology of GL_2(Z) with
coefficients Sym^r (x) det^l is a space of modular or cusp forms, which is
where :class:`ModularLayeredSum` (the module W_q) comes from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, prod
from typing import Iterable, NamedTuple

from .errors import UnsupportedRankError
from .modular_forms import modular_dims
from .partitions import Partition, format_partition, hook_lengths, partitions_of, transpose
from .rep_ring import ModuleSum, induction_product, lr_coefficient

__all__ = [
    "GLWeight",
    "ModularLayer",
    "ModularLayeredSum",
    "GL2Cohomology",
    "HairyDimension",
    "CuspPairDomain",
    "gamma_cohomology",
    "vcd",
    "w_module",
    "schur_weyl_wedge",
    "coefficients_module",
    "gl2_normal_form",
    "gl2_h1",
    "gl_invariants_wedge",
    "theorem_2mn_summand",
    "schur_dim",
    "hairy_dim",
    "symplectic_detection",
    "cusp_pair_domain",
    "first_nonzero_cusp_pair",
    "parabolic_projection",
    "pad_first_row",
]


def trivial(s: int) -> ModuleSum:
    return ModuleSum.irreducible((s,) if s else ())


@dataclass(frozen=True)
class GLWeight:
    """Highest weight of an irreducible polynomial GL_n-module S_lam(V)."""

    parts: Partition

    def __post_init__(self):
        object.__setattr__(self, "parts", Partition(self.parts))

    @property
    def normal_form(self) -> tuple[int, int]:
        return gl2_normal_form(self.parts)

    def __str__(self):
        return "S" + format_partition(self.parts)


# ---------------------------------------------------------------------------
# GL_2 side


def gl2_normal_form(lam: Iterable[int]) -> tuple[int, int]:
    """S_(a,b) V = Sym^(a-b) V (x) det^b for dim V = 2; returns (a - b, b)."""
    lam = Partition(lam)
    if len(lam) > 2:
        raise UnsupportedRankError(f"{lam} has more than two rows")
    a = lam[0] if lam else 0
    b = lam[1] if len(lam) > 1 else 0
    return a - b, b


class GL2Cohomology(NamedTuple):
    kind: str  # "zero", "cusp" or "full"
    weight: int | None
    dim: int


def gl2_h1(r: int, ell: int) -> GL2Cohomology:
    """H^1(GL_2(Z); Sym^r (x) det^ell) as a space of forms of weight r + 2."""
    if r < 0 or ell < 0:
        raise ValueError("r and ell must be non-negative")
    if r % 2:
        return GL2Cohomology("zero", None, 0)
    dims = modular_dims(r + 2)
    if ell % 2 == 0:
        return GL2Cohomology("cusp", r + 2, dims.dim_cusp)
    return GL2Cohomology("full", r + 2, dims.dim_full)


@dataclass(frozen=True)
class ModularLayer:
    i: int
    kind: str  # "cusp" when i is even, "full" when i is odd
    weight: int
    form_dim: int
    partition: Partition


@dataclass(frozen=True)
class ModularLayeredSum:
    """W_q = sum over 0 <= i < q/2 of X_{q,i} (x) P_(2^i,1^(q-2i)).

    X_{q,i} is the cusp space S_(q+2-2i) for even i and the full space
    M_(q+2-2i) for odd i; it carries the trivial S_q-action.
    """

    q: int
    layers: tuple[ModularLayer, ...]
    flattened: ModuleSum = field(compare=False)

    def parabolic_image(self) -> ModuleSum:
        """Image of restriction to the parabolic subgroup: one copy per nonzero full layer."""
        return ModuleSum(
            {layer.partition: 1 for layer in self.layers if layer.kind == "full" and layer.form_dim},
            self.q,
        )


@lru_cache(maxsize=None)
def w_module(q: int) -> ModularLayeredSum:
    if q < 0 or q % 2:
        raise ValueError(f"W_q is defined for even q >= 0, got {q}")
    layers = []
    for i in range(q // 2):
        weight = q + 2 - 2 * i
        dims = modular_dims(weight)
        kind = "cusp" if i % 2 == 0 else "full"
        form_dim = dims.dim_cusp if kind == "cusp" else dims.dim_full
        layers.append(ModularLayer(i, kind, weight, form_dim, Partition((2,) * i + (1,) * (q - 2 * i))))
    flat = ModuleSum({layer.partition: layer.form_dim for layer in layers}, q)
    return ModularLayeredSum(q, tuple(layers), flat)


def schur_weyl_wedge(n: int, q: int) -> list[tuple[GLWeight, Partition]]:
    """Terms S_lam V (x) P_lam' of the sign-twisted tensor power V^{wedge q}, dim V = n."""
    if n < 1 or q < 0:
        raise ValueError("need n >= 1 and q >= 0")
    return [(GLWeight(lam), transpose(lam)) for lam in partitions_of(q, max_length=n)]


def coefficients_module(n: int, s: int, q: int) -> list[tuple[GLWeight, ModuleSum]]:
    """H^q(F_n^s) split by GL_n-isotypic part: S_lam H (x) (P_lam' o P_(s-q))."""
    if q < 0 or q > s:
        return []
    rest = trivial(s - q)
    return [
        (weight, induction_product(ModuleSum.irreducible(conj), rest))
        for weight, conj in schur_weyl_wedge(n, q)
    ]


def gl_invariants_wedge(n: int, q: int) -> ModuleSum:
    """GL_n(Z)-invariants of H^{wedge q}: P_(n^(2m)) when q = 2mn, else zero."""
    if n < 1:
        raise ValueError("n must be positive")
    if q >= 0 and q % (2 * n) == 0:
        return ModuleSum.irreducible((n,) * (q // n))
    return ModuleSum.zero(max(q, 0))


# ---------------------------------------------------------------------------
# Cohomology of Gamma_{n,s}


def vcd(n: int, s: int) -> int:
    """Virtual cohomological dimension 2n + s - 3, floored at 0 (Gamma_{0,s} and Gamma_{1,0} are finite)."""
    return max(2 * n + s - 3, 0) if n > 0 else 0


def gamma_cohomology(n: int, s: int, i: int) -> ModuleSum:
    """H^i(Gamma_{n,s}) (equivalently H_i) as an S_s-module, for n <= 2."""
    if n > 2:
        raise UnsupportedRankError(f"cohomology of Gamma_{{{n},{s}}} is not known in closed form")
    if n < 0 or s < 0:
        # total on bad input so the assembly engine never has to special-case it
        return ModuleSum.zero(max(s, 0))
    return _gamma(n, s, i)


@lru_cache(maxsize=None)
def _gamma(n: int, s: int, i: int) -> ModuleSum:
    zero = ModuleSum.zero(s)
    if i < 0:
        return zero
    if n == 0:
        return trivial(s) if i == 0 else zero
    if n == 1:
        if s == 0:
            return trivial(0) if i == 0 else zero
        if i % 2 == 0 and i <= s - 1:
            return ModuleSum.irreducible((s - i,) + (1,) * i)
        return zero
    # n == 2
    if i % 4 == 0 and i <= s:
        m = i // 4
        return induction_product(ModuleSum.irreducible((2,) * (2 * m)), trivial(s - i))
    if i % 2 == 1 and i <= s + 1:
        m = (i - 1) // 2
        return induction_product(w_module(2 * m).flattened, trivial(s - 2 * m))
    return zero


def parabolic_projection(s: int, i: int) -> ModuleSum:
    """Quotient of H^i(Gamma_{2,s}) (i odd) detected by the parabolic subgroup."""
    if i % 2 == 0 or i > s + 1 or i < 1:
        return ModuleSum.zero(s)
    return induction_product(w_module(i - 1).parabolic_image(), trivial(s - i + 1))


def pad_first_row(a: ModuleSum) -> ModuleSum:
    """Add one box to the first row of every partition (degree s -> s + 1)."""
    return ModuleSum(
        {Partition((lam[0] + 1,) + tuple(lam[1:]) if lam else (1,)): c for lam, c in a.items()},
        a.degree + 1,
    )


# ---------------------------------------------------------------------------
# General rank and derived formulas


def theorem_2mn_summand(n: int, m: int, s: int) -> int:
    """Multiplicity of P_(s-2mn, n^(2m)) in P_(n^(2m)) o P_(s-2mn).

    This summand of the invariant column survives to H^{2mn}(Gamma_{n,s});
    the value is 0 when s - 2mn < n, where the label is not a partition.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    rest = s - 2 * m * n
    if rest < 0:
        raise ValueError(f"s = {s} is below 2mn = {2 * m * n}")
    if rest < n:
        return 0
    target = (rest,) + (n,) * (2 * m)
    return lr_coefficient((n,) * (2 * m), (rest,), target)


def schur_dim(lam: Iterable[int], N: int) -> int:
    """dim S_lam(C^N) by the hook-content formula."""
    lam = Partition(lam)
    if N < 0:
        raise ValueError("N must be non-negative")
    if len(lam) > N:
        return 0
    num = prod(N + j - i for i in range(len(lam)) for j in range(lam[i]))
    den = prod(h for row in hook_lengths(lam) for h in row)
    return num // den


class HairyDimension(NamedTuple):
    dimension: int
    terms: list  # [(GLWeight, multiplicity)]


def hairy_dim(n: int, s: int, k: int, N: int) -> HairyDimension:
    """H_k of the rank-n, s-hair graph complex with hairs labelled by V = C^N.

    Computed as H^{2n+s-2-k}(Gamma_{n,s}) tensored over S_s with V^{wedge s}:
    each P_lam' in the cohomology contributes S_lam(V).
    """
    if n > 2:
        raise UnsupportedRankError(f"rank {n} not supported")
    degree = 2 * n + s - 2 - k
    if k < 0 or degree < 0:
        return HairyDimension(0, [])
    module = gamma_cohomology(n, s, degree)
    terms = []
    total = 0
    for conj, c in module.items():
        lam = transpose(conj)
        d = schur_dim(lam, N)
        if d:
            terms.append((GLWeight(lam), c))
            total += c * d
    return HairyDimension(total, terms)


def symplectic_detection(n: int, m: int, d: int) -> tuple[int, Partition]:
    """Degree 3n + d - 2 and weight ((2m+1)^n, 1^d) of a detected sp-module."""
    if n < 1 or m < 0 or d < 0:
        raise ValueError("need n >= 1, m >= 0, d >= 0")
    return 3 * n + d - 2, Partition((2 * m + 1,) * n + (1,) * d)


class CuspPairDomain(NamedTuple):
    layers: list  # [(i, weight, kind, dim of Lambda^2 X_{2m,i})]
    total: int
    target: tuple[int, int]  # (homology degree 4m+2, rank 2m+3)


def cusp_pair_domain(m: int) -> CuspPairDomain:
    """Source of the assembly map from pairs of rank-two odd classes into H_{4m+2}(Out(F_{2m+3}))."""
    if m < 1:
        raise ValueError("m must be positive")
    layers = [
        (layer.i, layer.weight, layer.kind, comb(layer.form_dim, 2))
        for layer in w_module(2 * m).layers
    ]
    return CuspPairDomain(layers, sum(x[3] for x in layers), (4 * m + 2, 2 * m + 3))


def first_nonzero_cusp_pair(limit: int = 100) -> int | None:
    """Smallest m whose cusp-pair domain is nonzero."""
    for m in range(1, limit + 1):
        if cusp_pair_domain(m).total:
            return m
    return None
