import pytest

from supermult.exactlin import PreconditionError
from supermult.families import Component, FamilySpec, parse_family
from supermult.multiplier import (
    ClosedFormUnavailable,
    FamilyData,
    abelian_multiplier,
    abelian_multiplier2,
    abelian_threshold_check,
    dim1_case,
    dim1_derived_multiplier2,
    dim1_even_candidates,
    dim1_total_base,
    direct_sum_multiplier2,
    gen_heisenberg_bound,
    heisenberg_even_multiplier2,
    heisenberg_odd_multiplier2,
    multiplier2_closed,
    multiplier2_upper_bound,
    multiplier_closed,
    tensor_abelian,
)
from supermult.superalg import Dim1Family, dim1_families
from supermult.witt import SuperDim


def test_abelian_multiplier_examples():
    assert abelian_multiplier(1, 1, 2).dims == SuperDim(1, 1)
    assert abelian_multiplier(0, 1, 2).dims == SuperDim(0, 0)
    assert abelian_multiplier(2, 1, 1).dims == SuperDim(2, 2)
    with pytest.raises(PreconditionError):
        abelian_multiplier(1, 1, 0)


def test_abelian_cubic_examples():
    assert abelian_multiplier2(2, 0) == SuperDim(2, 0)
    assert abelian_multiplier2(1, 1) == SuperDim(1, 1)
    assert abelian_multiplier2(0, 1) == SuperDim(0, 0)


@pytest.mark.parametrize("s", range(9))
def test_cubic_equals_layer_sum(s):
    for m in range(s + 1):
        assert abelian_multiplier2(m, s - m) == abelian_multiplier(m, s - m, 2).dims


def test_classical_lie_case():
    for m in range(1, 9):
        assert abelian_multiplier2(m, 0) == SuperDim((m**3 - m) // 3, 0)


def test_tensor_examples():
    assert tensor_abelian(1, 1, 1, 1) == SuperDim(2, 2)
    assert tensor_abelian(3, 2, 0, 0) == SuperDim(0, 0)
    assert tensor_abelian(2, 0, 0, 3) == SuperDim(0, 6)


def test_heisenberg_values():
    assert heisenberg_even_multiplier2(1, 0) == SuperDim(5, 0)
    assert heisenberg_even_multiplier2(0, 1) == SuperDim(0, 0)
    assert heisenberg_even_multiplier2(1, 1) == SuperDim(4, 4)
    assert heisenberg_odd_multiplier2(1) == SuperDim(2, 2)
    assert heisenberg_odd_multiplier2(2) == SuperDim(10, 10)
    assert heisenberg_odd_multiplier2(3) == SuperDim(35, 35)
    with pytest.raises(PreconditionError):
        heisenberg_even_multiplier2(0, 0)
    with pytest.raises(PreconditionError):
        heisenberg_odd_multiplier2(0)


def test_direct_sum_examples():
    h = Component("Heven", (1, 0))
    zero = FamilyData(SuperDim(0, 0), SuperDim(0, 0))
    assert direct_sum_multiplier2(h, zero) == SuperDim(5, 0)
    a = Component("A", (1, 0))
    assert direct_sum_multiplier2(a, a) == abelian_multiplier2(2, 0) == SuperDim(2, 0)
    for k, l in [(3, 0), (4, 1), (5, 2), (3, 3)]:
        rest = Component("A", (k - 3, l))
        want = dim1_even_candidates(k, l)["plus_three"]
        assert direct_sum_multiplier2(h, rest) == want


def test_direct_sum_of_abelians_is_abelian():
    for m1, n1, m2, n2 in [(1, 0, 0, 1), (1, 1, 1, 1), (2, 1, 0, 2)]:
        got = direct_sum_multiplier2(Component("A", (m1, n1)), Component("A", (m2, n2)))
        assert got == abelian_multiplier2(m1 + m2, n1 + n2)


def test_closed_catalog_is_closed_world():
    with pytest.raises(ClosedFormUnavailable):
        multiplier_closed(parse_family("Heven:1,0"), 3)
    with pytest.raises(ClosedFormUnavailable):
        direct_sum_multiplier2(object(), Component("A", (1, 0)))
    assert multiplier_closed(parse_family("A:2,1"), 3).dims == abelian_multiplier(2, 1, 3).dims


def test_dim1_examples():
    assert dim1_derived_multiplier2(3, 0, Dim1Family(0, 1, 0, 0, 0)) == SuperDim(5, 0)
    assert dim1_derived_multiplier2(1, 2, Dim1Family(1, 1, 0, 0, 0)) == SuperDim(2, 2)
    fam = Dim1Family(0, 1, 1, 1, 0)
    assert dim1_derived_multiplier2(4, 1, fam) == dim1_even_candidates(4, 1)["base"]
    with pytest.raises(PreconditionError):
        dim1_derived_multiplier2(5, 1, fam)


def test_odd_square_case_has_no_extra_term():
    # H(0,1) has M^2 = 0, so the direct-sum law gives the base shape, not base + (1|1)
    for k, l in [(1, 1), (2, 1), (1, 3), (3, 2)]:
        fam = Dim1Family(0, 0, 1, k - 1, l - 1)
        composed = multiplier2_closed(FamilySpec.from_dim1(fam)).dims
        cands = dim1_even_candidates(k, l)
        assert composed == cands["base"] != cands["plus_one"]


@pytest.mark.parametrize("fam", dim1_families(7), ids=str)
def test_catalog_agrees_with_direct_sum_law(fam):
    k, l = fam.dim
    assert dim1_derived_multiplier2(k, l, fam) == multiplier2_closed(FamilySpec.from_dim1(fam)).dims


@pytest.mark.parametrize("fam", dim1_families(7), ids=str)
def test_total_law_and_bound(fam):
    k, l = fam.dim
    got = dim1_derived_multiplier2(k, l, fam).total
    offset = {"plus_three": 3, "plus_one": 2, "base": 0}[dim1_case(fam)]
    assert got == dim1_total_base(k + l) + offset
    r, s = (1, 0) if fam.parity == 0 else (0, 1)
    ub = multiplier2_upper_bound(k, l, r, s)
    assert got <= ub.fine <= ub.coarse
    assert (got == ub.coarse) == (ub.equality_family == fam)


def test_upper_bound_examples():
    ub = multiplier2_upper_bound(3, 0, 1, 0)
    assert ub.fine == 5 and ub.equality_family == Dim1Family(0, 1, 0, 0, 0)
    assert multiplier2_upper_bound(4, 0, 1, 0).coarse == 11
    for k in range(0, 7):
        for l in range(0, 7):
            for q in range(1, k + l):
                ub = multiplier2_upper_bound(k, l, q, 0)
                assert ub.fine <= ub.coarse
    with pytest.raises(PreconditionError):
        multiplier2_upper_bound(3, 0, 0, 0)


def test_gen_heisenberg_bound_examples():
    assert gen_heisenberg_bound(3, 0, 1, 0, 2) == 6
    assert gen_heisenberg_bound(1, 2, 0, 1, 2) >= 4
    assert gen_heisenberg_bound(2, 1, 0, 0, 2) == abelian_multiplier(2, 1, 2).total
    with pytest.raises(PreconditionError):
        gen_heisenberg_bound(1, 0, 2, 0, 2)


def test_abelian_threshold():
    assert abelian_threshold_check(3, 0, 8)
    assert not abelian_threshold_check(3, 0, 5)
    assert not abelian_threshold_check(1, 2, 4)
    with pytest.raises(PreconditionError):
        abelian_threshold_check(1, 1, 0)


def test_non_integral_third_raises():
    from supermult.multiplier import _third

    with pytest.raises(ArithmeticError):
        _third(4)
