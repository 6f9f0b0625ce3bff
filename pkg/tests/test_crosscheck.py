from a3calogero.crosscheck import (affine_symbolic, compare_affine_print,
                                   compare_hyperbolic_print, K, L, M, N, Q, R, S)
from a3calogero.lattice import RootVector
from a3calogero.weyl import coxeter_matrix, mat_vec, matrix_power


def test_affine_symbolic_evaluates_to_matrix_powers():
    exprs = affine_symbolic()
    rv = RootVector(2, -3, 1, 4, -1)
    for k in range(-6, 7):
        subs = {**dict(zip((Q, R, L, M, N), rv)), K: k, S: (-1) ** k}
        assert tuple(int(e.subs(subs)) for e in exprs) == \
            mat_vec(matrix_power(coxeter_matrix("affine"), k), rv)


def test_affine_print_only_alpha0_line_differs():
    rows = {r["root"]: r for r in compare_affine_print()}
    assert all(rows[f"alpha_{i}"]["match"] for i in (-1, 1, 2, 3))
    assert not rows["alpha_0"]["match"]
    assert rows["alpha_0"]["difference"] not in (None, "0")


def test_hyperbolic_print_comparison():
    rows = compare_hyperbolic_print()
    assert len(rows) == 20
    assert all(r["match"] for r in rows)
    odd = [r for r in rows if not r["verbatim"]]
    assert [(r["power"], r["root"]) for r in odd] == [(2, "alpha_0")]
    assert odd[0]["parse_error"] and odd[0]["repaired"]
    assert {r["basis_symbol"] for r in rows if r["power"] == -2} == {"beta"}
