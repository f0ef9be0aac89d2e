"""Dimensions of modular and cusp forms of level one.

The graded ring of modular forms for SL_2(Z) is the polynomial ring on E_4
and E_6, so dim M_k counts monomials E_4^a E_6^b with 4a + 6b = k.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["FormDims", "modular_dims"]


@dataclass(frozen=True)
class FormDims:
    weight: int
    dim_full: int
    dim_cusp: int


def modular_dims(k: int) -> FormDims:
    if k < 0:
        raise ValueError(f"weight must be non-negative, got {k}")
    full = sum(1 for b in range(k // 6 + 1) if (k - 6 * b) % 4 == 0)
    # weight 0 is the constants: full = 1, no cusp forms
    cusp = full - 1 if full >= 1 and k >= 4 else 0
    return FormDims(k, full, cusp)
