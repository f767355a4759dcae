import json
from fractions import Fraction

import pytest

from chromaq.bridge import (
    ALL_CHECKS,
    DEPENDENCIES,
    CheckReport,
    check_cqs,
    check_gg,
    check_llt,
    check_st_en,
    omega_sympoly,
    p_brace1,
    p_one,
    run_check,
)
from chromaq.combinatorics import IndiffGraph, gen_partitions, indifference_graphs
from chromaq.exactnum import RationalFunc
from chromaq.fqoracle import UnipClassFn, chi_bar, induce_to_GL, psi_pseudo
from chromaq.guards import SizeGuardError
from chromaq.symfunc import basis_element, eval_t, expand_in_basis, omega, plethysm_frac, symfunc_to_sympoly

RF = RationalFunc.const


# -- p_brace1 -----------------------------------------------------------------

def test_p_brace1_column_indicator():
    # indicator of the identity class maps to q^{-binom(n,2)} e_n
    for n, q in [(2, 2), (3, 2), (3, 3)]:
        phi = UnipClassFn(n, q, {tuple([1] * n): Fraction(1)})
        f = p_brace1(phi)
        want = basis_element("E", (n,), n).scale(RF(Fraction(1, q ** (n * (n - 1) // 2))))
        assert f == want


def test_p_brace1_zero():
    phi = UnipClassFn(3, 2, {})
    assert p_brace1(phi).is_zero


def test_p_brace1_linear():
    q = 2
    a = induce_to_GL(chi_bar(IndiffGraph(3, frozenset({(1, 2)})), q))
    b = induce_to_GL(chi_bar(IndiffGraph(3, frozenset()), q))
    combo = a.scale(Fraction(3, 5)) + b.scale(-2)
    lhs = p_brace1(combo)
    rhs = p_brace1(a).scale(RF(Fraction(3, 5))) + p_brace1(b).scale(RF(-2))
    assert lhs == rhs


# -- p_one ---------------------------------------------------------------------

def test_p_one_two_code_paths_agree():
    # omega and the plethystic substitution both act diagonally on power sums,
    # so applying them in either order must give the same Schur expansion
    q = 2
    for gamma in indifference_graphs(3):
        phi = induce_to_GL(chi_bar(gamma, q))
        a = p_one(phi)
        F = expand_in_basis(p_brace1(phi), "P")
        F = omega(F)
        F = plethysm_frac(F)
        F = eval_t(F, Fraction(q))
        b = expand_in_basis(symfunc_to_sympoly(F, phi.n), "S")
        assert a == b


def test_p_one_linear():
    q = 3
    a = induce_to_GL(chi_bar(IndiffGraph(2, frozenset({(1, 2)})), q))
    b = induce_to_GL(chi_bar(IndiffGraph(2, frozenset()), q))
    combo = a.scale(2) + b.scale(Fraction(1, 7))
    lhs = p_one(combo)
    want = {}
    fa, fb = p_one(a), p_one(b)
    for lam in gen_partitions(2):
        want[lam] = fa.coeff(lam) * RF(2) + fb.coeff(lam) * RF(Fraction(1, 7))
    assert {k: v for k, v in want.items() if not v.is_zero} == lhs.coeffs


def test_p_one_schur_coefficients_are_nonneg_integers():
    # observed: induced pseudosupercharacters have genuine unipotent constituents
    from chromaq.combinatorics import gen_tall_schroder
    for q in (2, 3):
        for sigma in gen_tall_schroder(3):
            F = p_one(induce_to_GL(psi_pseudo(sigma, q)))
            for lam, c in F.coeffs.items():
                assert c.is_laurent and c.num.low == 0 and len(c.num.coeffs) <= 1
                val = c.evaluate(0)
                assert val.denominator == 1 and val >= 0


# -- the check family -----------------------------------------------------------

def test_all_checks_pass_n2():
    for name in ALL_CHECKS:
        rep = run_check(name, 2, 2)
        assert rep.ok, (name, rep.witness)
        assert rep.witness is None


def test_check_llt_n3_q3():
    assert check_llt(3, 3).ok


def test_check_gg_n2_q3():
    assert check_gg(2, 3).ok


def test_check_st_en_n5():
    assert check_st_en(5).ok


def test_check_report_shape():
    rep = check_cqs(2, 2)
    d = rep.to_json()
    assert set(d) == {"check", "n", "q", "status", "witness"}
    assert d["status"] == "pass" and d["witness"] is None


def test_fail_requires_witness():
    with pytest.raises(AssertionError):
        CheckReport("check_x", 1, None, "fail")


def test_scan_reports_first_failure():
    from chromaq.bridge import _scan
    rep = _scan("check_x", 3, 2, [1, 2, 3], lambda k: (k != 2, f"L{k}", f"R{k}"))
    assert not rep.ok
    assert rep.witness == {"index": "2", "lhs": "L2", "rhs": "R2"}


def test_dependencies_declared():
    assert DEPENDENCIES["check_cor66"] == ("check_llt", "check_as")


def test_run_check_unknown():
    with pytest.raises(ValueError):
        run_check("check_nonsense", 2, 2)


def test_run_check_guard_propagates():
    with pytest.raises(SizeGuardError):
        run_check("check_cqs", 5, 2)


# -- omega on sympoly ------------------------------------------------------------

def test_omega_sympoly_en_hn():
    for n in range(1, 5):
        e = basis_element("E", (n,), n)
        h = basis_element("H", (n,), n)
        assert omega_sympoly(e) == h
        assert omega_sympoly(h) == e


# -- CLI -------------------------------------------------------------------------

def test_cli_compute_csf(capsys):
    from chromaq.cli import main
    assert main(["compute", "csf", "EESESS"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coeffs"] == [
        {"partition": [2, 1], "value": "t"},
        {"partition": [1, 1, 1], "value": "t^2+4*t+1"},
    ]


def test_cli_compute_llt(capsys):
    from chromaq.cli import main
    assert main(["compute", "llt", "EEDSS"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coeffs"] == [
        {"partition": [2, 1], "value": "t"},
        {"partition": [1, 1, 1], "value": "t^2+2*t"},
    ]


def test_cli_verify_all_point(capsys):
    from chromaq.cli import main
    assert main(["verify", "all", "--n", "2", "--q", "2", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out) == 14
    assert all(r["status"] == "pass" for r in out)


def test_cli_verify_guard_exit_code(capsys):
    from chromaq.cli import main
    assert main(["verify", "check_cqs", "--n", "5", "--q", "2"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_bad_path(capsys):
    from chromaq.cli import main
    assert main(["compute", "csf", "SSEE"]) == 2


def test_cli_hess_count_matrix_digits(capsys):
    from chromaq.cli import main
    # zero matrix on the edgeless graph counts every flag: [3]_2! = 21
    graph = '{"n": 3, "edges": []}'
    assert main(["compute", "hess-count", graph, "--q", "2", "--matrix", "0" * 9]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"count": 21}


def test_cli_d_coeffs_and_as_expand(capsys):
    from chromaq.cli import main
    assert main(["compute", "d-coeffs", "EESESS"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["basis"] == "PT" and len(d["coeffs"]) >= 2
    assert main(["compute", "as-expand", "EDS"]) == 0
    e = json.loads(capsys.readouterr().out)
    assert e == {"degree": 2, "basis": "E", "coeffs": [{"partition": [2], "value": "1"}]}


def test_cli_exit_one_on_failure(capsys, monkeypatch):
    import chromaq.cli as cli
    monkeypatch.setattr(cli, "run_check",
                        lambda name, n, q, allow_big=False: CheckReport(
                            name, n, q, "fail", {"index": "x", "lhs": "0", "rhs": "1"}))
    assert cli.main(["verify", "check_cqs", "--n", "2", "--q", "2"]) == 1
    out = capsys.readouterr().out
    assert "FAIL check_cqs" in out and "witness" in out


def test_cli_threaded_merge_deterministic(capsys, monkeypatch):
    from chromaq.cli import main
    monkeypatch.setenv("CHROMAQ_THREADS", "4")
    assert main(["verify", "all", "--n", "2", "--q", "2", "--json"]) == 0
    a = json.loads(capsys.readouterr().out)
    monkeypatch.setenv("CHROMAQ_THREADS", "1")
    assert main(["verify", "all", "--n", "2", "--q", "2", "--json"]) == 0
    b = json.loads(capsys.readouterr().out)
    assert a == b
