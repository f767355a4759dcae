from fractions import Fraction

import pytest

from chromaq.chromallt import (
    as_expansion,
    asc,
    csf,
    d_coeffs,
    e_expansion_X,
    is_nonneg_int_poly,
    llt_vertical,
    palindromicity_check,
)
from chromaq.combinatorics import (
    DyckPath,
    IndiffGraph,
    SchroderPath,
    area,
    diag,
    gen_dyck,
    gen_tall_schroder,
    graph_of,
    indifference_graphs,
    mesa,
)
from chromaq.exactnum import LaurentPoly, RationalFunc
from chromaq.guards import SizeGuardError
from chromaq.symfunc import expand_in_basis, symfunc_to_sympoly

T = LaurentPoly.t()
RF = RationalFunc


def path3():
    return IndiffGraph(3, frozenset({(1, 2), (2, 3)}))


# -- ascent statistic -----------------------------------------------------------

def test_asc_worked_example():
    g = IndiffGraph(4, frozenset({(1, 2), (2, 3), (1, 3), (3, 4)}))
    assert asc(g, (2, 5, 1, 5)) == 2


def test_asc_edgeless():
    g = IndiffGraph(5, frozenset())
    assert asc(g, (1, 2, 3, 4, 5)) == 0


def test_asc_complete_increasing():
    n = 4
    g = IndiffGraph(n, frozenset((i, j) for i in range(1, n) for j in range(i + 1, n + 1)))
    assert asc(g, tuple(range(1, n + 1))) == n * (n - 1) // 2


# -- chromatic quasisymmetric function ---------------------------------------------

def test_csf_path3_worked_example():
    X = csf(path3())
    assert X.coeff((2, 1)) == RF(T)
    assert X.coeff((1, 1, 1)) == RF(T * T + 4 * T + 1)
    assert X.coeff((3,)) == RF(0)


def test_csf_single_vertex():
    X = csf(IndiffGraph(1, frozenset()))
    assert X.coeffs == {(1,): RF(LaurentPoly.const(1))}


def test_csf_single_edge():
    X = csf(IndiffGraph(2, frozenset({(1, 2)})))
    assert X.coeffs == {(1, 1): RF(1 + T)}


def test_csf_empty_graph_is_one():
    X = csf(IndiffGraph(0, frozenset()))
    assert X.coeffs == {(): RF(LaurentPoly.const(1))}


def test_llt_empty_path_is_one():
    G = llt_vertical(SchroderPath(""))
    assert G.coeffs == {(): RF(LaurentPoly.const(1))}


def test_csf_guard():
    with pytest.raises(SizeGuardError):
        csf(IndiffGraph(9, frozenset()))


def test_csf_eval_at_two():
    X = csf(path3()).eval_t(2)
    assert X.coeff((2, 1)) == RF(2)
    assert X.coeff((1, 1, 1)) == RF(13)


# -- vertical strip LLT ------------------------------------------------------------

def test_llt_eedss_worked_example():
    G = llt_vertical(SchroderPath("EEDSS"))
    assert G.coeff((2, 1)) == RF(T)
    assert G.coeff((1, 1, 1)) == RF(T * T + 2 * T)
    assert G.coeff((3,)) == RF(0)


def test_llt_dyck_case_unrestricted():
    # with empty Diag every coloring contributes; total count is n^n
    G = llt_vertical(DyckPath("EESS").as_schroder())
    total = sum(c.evaluate(1) * len(_orbit(mu, 2)) for mu, c in G.coeffs.items())
    assert total == 4


def _orbit(mu, n):
    from chromaq.symfunc import _orbit_monomials
    return _orbit_monomials(tuple(mu), n)


def test_llt_staircase_of_diags_is_en():
    for n in range(1, 6):
        sigma = SchroderPath("E" + "D" * (n - 1) + "S")
        G = llt_vertical(sigma)
        assert G.coeffs == {tuple([1] * n): RF(1)}


def test_llt_rejects_non_tall():
    with pytest.raises(ValueError):
        llt_vertical(SchroderPath("DD"))


# -- orientation e-expansion ----------------------------------------------------

def test_as_expansion_single_vertex():
    F = as_expansion(SchroderPath("ES"))
    assert F.coeffs == {(1,): RF(1)}


def test_as_expansion_single_diag():
    F = as_expansion(SchroderPath("EDS"))
    assert F.coeffs == {(2,): RF(1)}


def test_as_expansion_matches_llt_ts3():
    for sigma in gen_tall_schroder(3):
        lhs = symfunc_to_sympoly(as_expansion(sigma))
        assert lhs == llt_vertical(sigma), sigma


# -- palindromicity ---------------------------------------------------------------

def test_palindromicity_path3():
    assert palindromicity_check(path3())


def test_palindromicity_edgeless():
    assert palindromicity_check(IndiffGraph(4, frozenset()))


def test_palindromicity_ig4():
    for g in indifference_graphs(4):
        assert palindromicity_check(g)


# -- d-coefficients -------------------------------------------------------------

def test_d_coeffs_reconstruct():
    from chromaq.symfunc import SymFunc
    for n in (3, 4):
        for g in indifference_graphs(n):
            d = d_coeffs(g)
            F = SymFunc(n, "PT", {lam: RF(c) for lam, c in d.items()})
            assert symfunc_to_sympoly(F) == csf(g)


def test_d_coeffs_scaled_positive_ig4():
    for g in indifference_graphs(4):
        shift = len(g.edges)
        for lam, c in d_coeffs(g).items():
            assert is_nonneg_int_poly(c.shift(-shift)), (g, lam)


def test_d_coeffs_known_values_degree2():
    # edgeless on [2]: X = m_2 + 2 m_11 = PT_(2) + (t+1) PT_(1,1)
    g = IndiffGraph(2, frozenset())
    d = d_coeffs(g)
    assert d[(2,)] == LaurentPoly.const(1)
    assert d[(1, 1)] == T + 1


# -- e-expansion -----------------------------------------------------------------

def test_e_expansion_path3_positive():
    F, bad = e_expansion_X(path3())
    assert bad == []


def test_e_expansion_complete_triangle():
    g = IndiffGraph(3, frozenset({(1, 2), (2, 3), (1, 3)}))
    F, bad = e_expansion_X(g)
    assert bad == []
    tfact = (1 + T) * (1 + T + T * T)
    assert F.coeffs == {(3,): RF(tfact)}


def test_e_expansion_edgeless_constant():
    g = IndiffGraph(3, frozenset())
    F, bad = e_expansion_X(g)
    assert bad == []
    for c in F.coeffs.values():
        num = c.num
        assert num.is_zero or (num.low == 0 and len(num.coeffs) == 1)


# -- symmetry across the board -----------------------------------------------------

def test_symmetry_tables_up_to_4():
    # csf/llt construction asserts check_symmetric internally; exercise it
    for n in range(5):
        for g in indifference_graphs(n):
            csf(g)
        for sigma in gen_tall_schroder(n):
            llt_vertical(sigma)


def test_every_dyck_llt_matches_mesa_union():
    # Area(mesa) u Diag(mesa) = Area(pi) so both sides color the same graph
    for pi in gen_dyck(4):
        m = mesa(pi)
        assert area(m) | diag(m) == area(pi)
