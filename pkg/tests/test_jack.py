"""Jack eigenfunctions, the transpose duality and the projection diagram."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from negdim.exact_algebra import RatFunc, ratfunc_equal
from negdim.jack import (K, P0, JackFunction, MExpr, PExpr,
                         SingularCouplingError, apply_L_N, apply_L_inf,
                         check_conjugation, check_diagram, check_p0_scalar,
                         check_schur, check_triangularity, degree_basis, jack,
                         kostka_number, m_to_p, macdonald_duality,
                         operator_matrix, p_basis_element, p_to_m, phi_N,
                         schur_m_expansion, theta)
from negdim.partitions import (partitions_of_weight, partitions_up_to_weight,
                               transpose, weight)

ONE = RatFunc.const(1)


def mexpr(*pairs):
    terms = {mu: RatFunc.const(c) for mu, c in pairs}
    return MExpr(weight(next(iter(terms))), terms)


def test_apply_on_p1():
    image = apply_L_inf(p_basis_element((1,)))
    assert image == PExpr(1, {(1,): ONE + K - K * P0})


def test_operator_matrix_degree_one():
    mat = operator_matrix(1)
    assert len(mat) == 1 and len(mat[0]) == 1
    assert ratfunc_equal(mat[0][0], ONE + K - K * P0)


def test_apply_is_linear():
    x = p_basis_element((2, 1))
    c = RatFunc.const(Fraction(7, 3))
    assert apply_L_inf(x.scale(c)) == apply_L_inf(x).scale(c)


def test_apply_preserves_degree():
    for d in range(1, 6):
        for mu in partitions_of_weight(d):
            assert apply_L_inf(p_basis_element(mu)).degree == d


def test_p0_dependence_is_scalar():
    for d in range(1, 5):
        assert check_p0_scalar(d).holds


def test_triangular_in_monomial_basis():
    for d in range(1, 6):
        assert check_triangularity(d).holds


def test_basis_change_examples():
    assert p_to_m(p_basis_element((1,))) == mexpr(((1,), 1))
    assert p_to_m(p_basis_element((2,))) == mexpr(((2,), 1))
    assert p_to_m(p_basis_element((1, 1))) == mexpr(((2,), 1), ((1, 1), 2))


@given(st.integers(1, 6))
@settings(max_examples=6, deadline=None)
def test_basis_change_roundtrip(d):
    for mu in degree_basis(d):
        x = p_basis_element(mu)
        assert m_to_p(p_to_m(x)) == x


def test_jack_single_box():
    assert jack((1,)).m_expansion == mexpr(((1,), 1))


def test_jack_column_is_single_monomial():
    assert jack((1, 1)).m_expansion == mexpr(((1, 1), 1))
    assert jack((1, 1, 1), Fraction(5, 2)).m_expansion == mexpr(((1, 1, 1), 1))


def test_jack_row_at_schur_point():
    assert jack((2,), -1).m_expansion == mexpr(((2,), 1), ((1, 1), 1))


def test_jack_symbolic_row():
    jf = jack((2,))
    coeff = jf.m_expansion.terms[(1, 1)]
    assert ratfunc_equal(coeff, 2 * K / (K - 1))


def test_eigenvalue_formula():
    # e = sum(lam_i^2) + 2k*n(lam) + k|lam| - k|lam|*p0
    jf = jack((2, 1))
    expected = RatFunc.const(5) + 2 * K + 3 * K - 3 * K * P0
    assert ratfunc_equal(jf.eigenvalue, expected)


def test_singular_coupling_reported():
    # e_(2) - e_(1,1) = 2 - 2k vanishes at k = 1
    with pytest.raises(SingularCouplingError) as err:
        jack((2,), 1)
    assert "k = 1" in str(err.value)


def test_incomparable_degeneracy_is_harmless():
    # (4,1,1) and (3,3) share an eigenvalue but neither dominates the other
    a = jack((4, 1, 1))
    b = jack((3, 3))
    assert ratfunc_equal(a.eigenvalue, b.eigenvalue)
    assert a.m_expansion.terms[(4, 1, 1)] == ONE
    assert b.m_expansion.terms[(3, 3)] == ONE


def test_theta_examples():
    x = p_basis_element((1,))
    assert theta(x) == PExpr(1, {(1,): 1 / K})
    y = p_basis_element((2, 1))
    assert theta(y) == PExpr(3, {(2, 1): 1 / (K * K)})


def test_theta_rejects_zero():
    with pytest.raises(ZeroDivisionError):
        theta(p_basis_element((1,)), 0)


def test_theta_involution():
    y = PExpr(3, {(2, 1): RatFunc.const(3), (1, 1, 1): RatFunc.const(-2)})
    kv = RatFunc.const(Fraction(5, 7))
    assert theta(theta(y, kv), 1 / kv) == y


def test_conjugation_low_degrees():
    for d in range(1, 5):
        assert check_conjugation(d).holds


def test_macdonald_coefficient_single_box():
    assert ratfunc_equal(macdonald_duality((1,)), 1 / K)


def test_macdonald_at_schur_point():
    c = macdonald_duality((2,), -1)
    assert not c.is_zero()
    # theta(s_2) at k=-1 scales p_mu by (-1)^{-len(mu)}; compare by hand
    s2 = jack((2,), -1).p_expansion
    image = theta(s2, -1)
    s11 = jack((1, 1), -1).p_expansion
    lhs = {mu: v for mu, v in image.terms.items()}
    for mu, v in s11.terms.items():
        assert ratfunc_equal(lhs[mu], c * v)


def test_macdonald_symbolic_weight_four():
    for lam in partitions_of_weight(4):
        c = macdonald_duality(lam)
        assert not c.is_zero()


def test_schur_oracle_basics():
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert kostka_number((2, 1), (2, 1)) == 1
    assert kostka_number((2, 1), (3,)) == 0
    assert schur_m_expansion((2, 1)) == mexpr(((2, 1), 1), ((1, 1, 1), 2))


def test_schur_specialization_sweep():
    for lam in partitions_up_to_weight(5):
        if lam:
            assert check_schur(lam).holds


def test_phi_examples():
    z1 = RatFunc.symbol("z1")
    z2 = RatFunc.symbol("z2")
    assert ratfunc_equal(phi_N(p_basis_element((1,)), 2), z1 + z2)
    sq = PExpr(2, {(1, 1): ONE})
    assert ratfunc_equal(phi_N(sq, 2), (z1 + z2) * (z1 + z2))
    assert ratfunc_equal(phi_N(p_basis_element((3,)), 1), z1 ** 3)


def test_apply_L_N_fundamental():
    z1 = RatFunc.symbol("z1")
    z2 = RatFunc.symbol("z2")
    image = apply_L_N(z1 + z2, n=2)
    assert ratfunc_equal(image, (ONE - K) * (z1 + z2))


def test_apply_L_N_kills_constants():
    assert apply_L_N(RatFunc.const(5), n=3).is_zero()


def test_apply_L_N_rejects_nonsymmetric():
    z1 = RatFunc.symbol("z1")
    z2 = RatFunc.symbol("z2")
    with pytest.raises(ArithmeticError):
        apply_L_N(z1 * z1 + z2, n=2)


def test_diagram_examples():
    assert check_diagram((1,), n=2).holds
    assert check_diagram((1,), n=1).holds
    assert check_diagram((2, 1), n=3).holds


def test_jack_projects_to_eigenfunction():
    """phi_N(P) is an eigenfunction of the N-variable operator.

    The eigenvalue comes from the infinite-variable one at p0 = N.
    """
    n = 3
    jf = jack((2, 1))
    f = phi_N(jf.p_expansion, n)
    lhs = apply_L_N(f, n=n)
    e = jf.eigenvalue.substitute({"p0": RatFunc.const(n)})
    assert ratfunc_equal(lhs, e * f)
