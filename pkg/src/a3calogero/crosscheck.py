"""Symbolic comparison of computed Coxeter powers with transcribed formulas.

Mismatches are returned as data (erratum records), never raised: the
exact matrix power is the ground truth and the transcriptions are only
checked against it.
"""

from __future__ import annotations

import sympy as sp

from .lattice import INDICES
from .tables import (AFFINE_CLOSED_FORM_PRINTED, HYPERBOLIC_POWERS_BASIS,
                     HYPERBOLIC_POWERS_PRINTED)
from .weyl import build_affine_closed_form, coxeter_matrix, matrix_power

Q, R, L, M, N, K, S = sp.symbols("q r l m n k s")
GENERIC = sp.Matrix([Q, R, L, M, N])


def _parse(text: str):
    try:
        return sp.sympify(text, locals={"q": Q, "r": R, "l": L, "m": M, "n": N, "k": K, "s": S}), None
    except (sp.SympifyError, SyntaxError, TypeError) as exc:
        return None, f"{type(exc).__name__}: cannot parse {text!r}"


def affine_symbolic():
    """sigma^k(alpha) coefficients with s = (-1)^k, from the solved A, B, C, D."""
    cf = build_affine_closed_form()
    mat = (sp.Matrix(cf.A) * S + sp.Matrix(cf.B) + sp.Matrix(cf.C) * K
           + sp.Matrix(cf.D) * K ** 2)
    return [sp.expand(e) for e in mat * GENERIC]


def compare_affine_print() -> list[dict]:
    solved = affine_symbolic()
    rows = []
    for idx, expr in zip(INDICES, solved):
        printed, err = _parse(AFFINE_CLOSED_FORM_PRINTED[idx])
        row = {"root": f"alpha_{idx}", "solved": str(sp.factor(expr)),
               "printed": AFFINE_CLOSED_FORM_PRINTED[idx]}
        if printed is None:
            row.update(match=False, difference=None, parse_error=err)
        else:
            diff = sp.expand(expr - printed)
            row.update(match=diff == 0, difference=str(diff), parse_error=None)
        rows.append(row)
    return rows


def hyperbolic_symbolic(power: int):
    mat = sp.Matrix(matrix_power(coxeter_matrix("hyperbolic"), power))
    return [sp.expand(e) for e in mat * GENERIC]


def compare_hyperbolic_print() -> list[dict]:
    """One record per (power, simple root) of the printed sigma_hat expansions.

    A coefficient that fails to parse is retried with trailing operators
    stripped; the record keeps both outcomes.
    """
    rows = []
    for power, texts in sorted(HYPERBOLIC_POWERS_PRINTED.items()):
        computed = hyperbolic_symbolic(power)
        for idx, text, expr in zip(INDICES, texts, computed):
            row = {"power": power, "root": f"alpha_{idx}", "printed": text,
                   "basis_symbol": HYPERBOLIC_POWERS_BASIS[power],
                   "computed": str(expr)}
            printed, err = _parse(text)
            row["parse_error"] = err
            if printed is None:
                printed, _ = _parse(text.rstrip("+-* "))
                row["repaired"] = printed is not None
            row["match"] = printed is not None and sp.expand(expr - printed) == 0
            row["verbatim"] = err is None and row["match"]
            rows.append(row)
    return rows
