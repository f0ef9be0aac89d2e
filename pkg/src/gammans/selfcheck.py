"""Oracle-equivalence and invariant checks, runnable without a test framework.

Each check compares a fast computation against an independent slow one, or
asserts a structural identity.  :func:`run_selfcheck` returns the outcomes.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Callable, NamedTuple

from .assembly import assembly_verdict
from .catalog import (
    alpha_pair,
    eisenstein_pattern,
    morita_pattern,
    mss_pattern,
    rank_one_stabilization,
    self_gluing,
)
from .gamma import gamma_cohomology, pad_first_row, w_module
from .modular_forms import modular_dims
from .partitions import dim_irreducible, partitions_of
from .rep_ring import lr_coefficient, lr_coefficient_by_characters, lr_product

__all__ = ["CheckResult", "CHECKS", "run_selfcheck"]


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _lr_vs_characters(limit: int = 6) -> str | None:
    for a in range(limit + 1):
        for b in range(limit + 1 - a):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    for nu in partitions_of(a + b):
                        if lr_coefficient(lam, mu, nu) != lr_coefficient_by_characters(lam, mu, nu):
                            return f"c^{nu}_{lam},{mu} disagrees"
    return None


def _sum_of_squares(limit: int = 9) -> str | None:
    for n in range(limit + 1):
        if sum(dim_irreducible(lam) ** 2 for lam in partitions_of(n)) != factorial(n):
            return f"n={n}"
    return None


def _product_dimension(limit: int = 7) -> str | None:
    # dim(P_lam o P_mu) = binom(a+b, a) dim P_lam dim P_mu
    for a in range(limit + 1):
        for b in range(limit + 1 - a):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    expect = comb(a + b, a) * dim_irreducible(lam) * dim_irreducible(mu)
                    if lr_product(lam, mu).dimension != expect:
                        return f"{lam} o {mu}"
    return None


def _modular_brute(limit: int = 60) -> str | None:
    for k in range(limit + 1):
        full = sum(1 for a in range(k + 1) for b in range(k + 1) if 4 * a + 6 * b == k)
        if modular_dims(k).dim_full != full:
            return f"k={k}"
    return None


def _rank_one_dims(limit: int = 14) -> str | None:
    for s in range(1, limit + 1):
        for i in range(s + 2):
            expect = comb(s - 1, i) if i % 2 == 0 and i <= s - 1 else 0
            if gamma_cohomology(1, s, i).dimension != expect:
                return f"s={s} i={i}"
    return None


def _rank_two_closed_form(limit: int = 16) -> str | None:
    for m in range(0, 5):
        for s in range(4 * m, limit + 1):
            expect = factorial(s) // (factorial(s - 4 * m) * factorial(2 * m + 1) * factorial(2 * m))
            if gamma_cohomology(2, s, 4 * m).dimension != expect:
                return f"s={s} m={m}"
    return None


def _vanishing_above_vcd(limit: int = 12) -> str | None:
    for n in (1, 2):
        for s in range(limit + 1):
            top = 2 * n + s - 3
            for i in range(max(top, 0) + 1, max(top, 0) + 4):
                if not gamma_cohomology(n, s, i).is_zero():
                    return f"n={n} s={s} i={i}"
    return None


def _aut_out(limit: int = 12) -> str | None:
    for k in range(limit + 1):
        a, b = gamma_cohomology(2, 1, k), gamma_cohomology(2, 0, k)
        if a.dimension != b.dimension:
            return f"k={k}"
    return None


def _stability(max_i: int = 5, max_s: int = 16) -> str | None:
    for n in (1, 2):
        for i in range(max_i + 1):
            for s in range(3 * i, max_s):
                if gamma_cohomology(n, s + 1, i) != pad_first_row(gamma_cohomology(n, s, i)):
                    return f"n={n} i={i} s={s}"
    return None


def _w_shape(limit: int = 20) -> str | None:
    for q in range(0, limit + 1, 2):
        for layer in w_module(q).layers:
            if layer.partition.transpose()[1:2] not in ((layer.i,), ()) or layer.partition[0] > 2:
                return f"q={q} i={layer.i}"
    return None


def _catalog() -> str | None:
    zero = [self_gluing(9, 4), alpha_pair(1, 2), mss_pattern(1), rank_one_stabilization(9, 4)]
    open_ = [alpha_pair(1, 1), morita_pattern(1), morita_pattern(2), eisenstein_pattern(1)]
    for p in zero:
        if not assembly_verdict(p).forced_zero:
            return f"expected zero: {p.vertices[0].label()}"
    for p in open_:
        if assembly_verdict(p).forced_zero:
            return f"unsound verdict: {p.vertices[0].label()}"
    return None


CHECKS: list[tuple[str, Callable[[], str | None]]] = [
    ("lr-coefficients-vs-characters", _lr_vs_characters),
    ("sum-of-squared-dimensions", _sum_of_squares),
    ("induction-product-dimension", _product_dimension),
    ("modular-dimensions-brute-force", _modular_brute),
    ("rank-one-dimensions", _rank_one_dims),
    ("rank-two-closed-form", _rank_two_closed_form),
    ("vanishing-above-vcd", _vanishing_above_vcd),
    ("aut-out-consistency", _aut_out),
    ("representation-stability", _stability),
    ("w-module-shapes", _w_shape),
    ("assembly-catalog", _catalog),
]


def run_selfcheck() -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        problem = check()
        results.append(CheckResult(name, problem is None, problem or ""))
    return results
