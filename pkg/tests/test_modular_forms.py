import pytest

from gammans.modular_forms import FormDims, modular_dims


def monomials(k):
    """Brute-force count of E4^a E6^b of weight k."""
    return sum(1 for a in range(k // 4 + 1) for b in range(k // 6 + 1) if 4 * a + 6 * b == k)


@pytest.mark.parametrize("k", [4, 6, 8, 10])
def test_one_dimensional_weights(k):
    assert modular_dims(k) == FormDims(k, 1, 0)


def test_weight_twelve():
    assert modular_dims(12) == FormDims(12, 2, 1)


def test_weight_two_and_odd():
    assert modular_dims(2).dim_full == 0
    for k in range(1, 40, 2):
        assert modular_dims(k) == FormDims(k, 0, 0)


def test_weight_zero_is_constants():
    assert modular_dims(0) == FormDims(0, 1, 0)


def test_cusp_dimensions():
    assert all(modular_dims(k).dim_cusp == 0 for k in range(12))
    assert modular_dims(14).dim_cusp == 0
    assert modular_dims(24).dim_cusp == 2
    assert min(k for k in range(100) if modular_dims(k).dim_cusp == 2) == 24


def test_against_monomial_count():
    for k in range(200):
        d = modular_dims(k)
        assert d.dim_full == monomials(k)
        assert d.dim_cusp == (d.dim_full - 1 if d.dim_full and k >= 4 else 0)


def test_period_twelve():
    for k in range(16, 200, 2):
        assert modular_dims(k).dim_full - modular_dims(k - 12).dim_full == 1


def test_negative_weight():
    with pytest.raises(ValueError):
        modular_dims(-2)
