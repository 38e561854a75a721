"""Symmetric-space catalogue, the coupling-triple duality, and pair matching."""

from fractions import Fraction

import pytest

from negdim.exact_algebra import RatFunc, ratfunc_equal
from negdim.spaces import (EXPECTED_PAIRS, KPQ, a_dual, bc_dual, catalogue,
                           dual_space, tabulated_kpq, space, to_kpq,
                           verify_table)

N = RatFunc.symbol("N")


def const(x):
    return RatFunc.const(Fraction(x))


def kpq(k, p, q, n=N):
    return KPQ(const(k) if not isinstance(k, RatFunc) else k,
               const(p) if not isinstance(p, RatFunc) else p,
               const(q) if not isinstance(q, RatFunc) else q,
               n)


def assert_kpq(x, k, p, q, n):
    assert ratfunc_equal(x.k, k)
    assert ratfunc_equal(x.p, p)
    assert ratfunc_equal(x.q, q)
    assert ratfunc_equal(x.n, n)


def test_to_kpq_examples():
    assert ratfunc_equal(to_kpq(space("AI")).k, const(Fraction(-1, 2)))
    ci = to_kpq(space("CI"))
    assert_kpq(ci, const(Fraction(-1, 2)), const(0), const(Fraction(-1, 2)), N)
    so_even = to_kpq(space("group-D"))
    assert_kpq(so_even, const(-1), const(0), const(0), N)


def test_group_rows_have_k_minus_one():
    for s in catalogue():
        if s.key.startswith("group-"):
            assert ratfunc_equal(to_kpq(s).k, const(-1))


def test_bc_dual_frozen_values():
    image = bc_dual(kpq(Fraction(-1, 2), 0, Fraction(-1, 2)))
    assert_kpq(image, const(-2), const(0), const(Fraction(-1, 2)), -2 * N)

    image = bc_dual(kpq(-1, 0, 0))
    assert_kpq(image, const(-1), const(0), const(-1), -N)


def test_bc_dual_involution_symbolic():
    x = KPQ(RatFunc.symbol("vk"), RatFunc.symbol("vp"), RatFunc.symbol("vq"),
            RatFunc.symbol("vn"))
    twice = bc_dual(bc_dual(x))
    assert ratfunc_equal(twice.k, x.k)
    assert ratfunc_equal(twice.p, x.p)
    assert ratfunc_equal(twice.q, x.q)
    assert ratfunc_equal(twice.n, x.n)


def test_bc_dual_involution_at_half():
    x = kpq(Fraction(-1, 2), Fraction(7, 3), 0)
    twice = bc_dual(bc_dual(x))
    assert_kpq(twice, x.k, x.p, x.q, x.n)


def test_a_dual_examples():
    k2, n2 = a_dual(const(Fraction(-1, 2)), N)
    assert ratfunc_equal(k2, const(-2)) and ratfunc_equal(n2, -2 * N)
    k2, n2 = a_dual(const(-1), N)
    assert ratfunc_equal(k2, const(-1)) and ratfunc_equal(n2, -N)
    kk = RatFunc.symbol("vk")
    k3, n3 = a_dual(*a_dual(kk, N))
    assert ratfunc_equal(k3, kk) and ratfunc_equal(n3, N)


def test_dual_rejects_zero_coupling():
    with pytest.raises(ZeroDivisionError):
        bc_dual(kpq(0, 1, 1))
    with pytest.raises(ZeroDivisionError):
        a_dual(const(0), N)


def test_table_pairings():
    for source, target in EXPECTED_PAIRS:
        match = dual_space(source)
        assert match.matched, f"{source} found no partner"
        assert match.partner == target


def test_pairings_with_numeric_sizes():
    match = dual_space("BDI", m=3, n=2)
    assert match.matched and match.partner == "CII"
    match = dual_space("AIII", m=4, n=1)
    assert match.matched and match.partner == "AIII"


def test_bdi_discrepancy_is_the_only_one():
    ids = []
    for s in catalogue():
        match = dual_space(s.key) if s.in_matching else None
        if match:
            ids.extend(d["id"] for d in match.discrepancies)
    assert ids == ["bdi-p-normalization"]


def test_bdi_tabulated_vs_derived():
    s = space("BDI")
    derived = to_kpq(s)
    shown = tabulated_kpq(s)
    # derived p is half the tabulated one
    assert ratfunc_equal(derived.p * 2, shown.p)
    assert ratfunc_equal(derived.k, shown.k)
    assert ratfunc_equal(derived.q, shown.q)


def test_diii_split():
    even = space("DIII-even")
    assert_kpq(to_kpq(even), const(-2), const(0), const(Fraction(-1, 2)), N)
    odd = space("DIII-odd")
    assert not odd.in_matching
    assert space("DIII").key == "DIII-even"


def test_ci_diii_link():
    # bc_dual of CI's triple lands exactly on DIII-even's
    image = bc_dual(to_kpq(space("CI")))
    target = to_kpq(space("DIII-even"))
    assert ratfunc_equal(image.k, target.k)
    assert ratfunc_equal(image.p, target.p)
    assert ratfunc_equal(image.q, target.q)


def test_group_b_finds_no_partner():
    match = dual_space("group-B")
    assert not match.matched


def test_unknown_label():
    with pytest.raises(KeyError):
        space("EVII")


def test_verify_table_green():
    report = verify_table()
    assert report.all_ok
    assert report.failed == 0
    assert report.expected == 1  # exactly the BDI normalization
