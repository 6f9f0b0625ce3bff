"""Weyl reflections, Coxeter elements and closed forms for their powers.

Matrices are 5x5 tuples of ints acting on coefficient columns (q, r, l, m, n).
Words are sequences of reflection indices applied rightmost first, so
``(2, 0, 1, 3)`` is s2 s0 s1 s3 and acts with s3 before anything else.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import IntegralityError, PrecisionError, SpectralError
from .lattice import CARTAN, INDICES, SIMPLE_ROOTS, RootVector, inner6, position

IntMatrix = tuple  # tuple[tuple[int, ...], ...]

AFFINE_WORD = (2, 0, 1, 3)
HYPERBOLIC_WORD = (-1, 2, 0, 1, 3)
WORDS = {"affine": AFFINE_WORD, "hyperbolic": HYPERBOLIC_WORD}

HYPERBOLIC_K_GUARD = 120
ROUNDING_TOL = 1e-6


# --------------------------------------------------------------------------
# reflections

def reflect_coeff(i: int, rv: Sequence[int]) -> RootVector:
    """s_i on coefficients: only the alpha_i slot changes.

    >>> reflect_coeff(0, (0, 0, 1, 0, 0))
    RootVector(q=0, r=1, l=1, m=0, n=0)
    """
    p = position(i)
    row = CARTAN[p]
    pairing = sum(row[j] * rv[j] for j in range(5))
    out = list(rv)
    out[p] -= pairing
    return RootVector(*out)


def reflect_vec6(i: int, v: Sequence) -> tuple:
    """s_i(v) = v - (alpha_i . v) alpha_i in the 4+2 space."""
    a = SIMPLE_ROOTS[i]
    c = inner6(a, v)
    return tuple(x - c * y for x, y in zip(v, a))


def apply_word(word: Iterable[int], rv: Sequence[int]) -> RootVector:
    out = RootVector(*rv)
    for i in reversed(tuple(word)):
        out = reflect_coeff(i, out)
    return out


def word_power(word: Sequence[int], k: int) -> tuple[int, ...]:
    """The word for w**k; negative powers use the reversed word."""
    if k >= 0:
        return tuple(word) * k
    return tuple(reversed(word)) * (-k)


def word_matrix(word: Sequence[int]) -> IntMatrix:
    cols = [apply_word(word, RootVector.unit(i)) for i in INDICES]
    return tuple(tuple(cols[c][r] for c in range(5)) for r in range(5))


def coxeter_matrix(kind: str = "affine") -> IntMatrix:
    """Matrix of sigma (``affine``) or sigma_hat (``hyperbolic``)."""
    try:
        word = WORDS[kind]
    except KeyError:
        raise ValueError(f"kind must be 'affine' or 'hyperbolic', got {kind!r}") from None
    return word_matrix(word)


# --------------------------------------------------------------------------
# exact matrix arithmetic

def identity(n: int = 5) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: IntMatrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: IntMatrix) -> IntMatrix:
    return tuple(tuple(c * x for x in row) for row in a)


def determinant(a: IntMatrix):
    """Exact determinant by fraction-valued elimination."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for t in range(c, n):
                    m[r][t] -= f * m[c][t]
    return int(det) if det.denominator == 1 else det


def solve_exact(a: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan over the rationals: returns X with a X = rhs."""
    n = len(a)
    aug = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in rhs[i]] for i in range(n)]
    width = len(aug[0])
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:width] for row in aug]


def inverse(a: IntMatrix) -> IntMatrix:
    """Integer inverse of a unimodular matrix."""
    inv = solve_exact(a, identity(len(a)))
    if any(x.denominator != 1 for row in inv for x in row):
        raise IntegralityError("matrix is not unimodular; inverse is not integral")
    return tuple(tuple(int(x) for x in row) for row in inv)


def matrix_power(a: IntMatrix, k: int) -> IntMatrix:
    """a**k by binary exponentiation; negative k goes through the inverse."""
    if k < 0:
        a, k = inverse(a), -k
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def characteristic_polynomial(a: IntMatrix) -> list[int]:
    """det(x I - a) as integer coefficients, leading term first (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [Fraction(1)]
    mk = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ;  c_k = -tr(A M_k) / k
        mk = mat_add(mat_mul(a, mk), mat_scale(c_prev, identity(n)))
        am = mat_mul(a, mk)
        c_prev = -sum(am[i][i] for i in range(n)) / Fraction(k)
        coeffs.append(c_prev)
    if any(c.denominator != 1 for c in coeffs):
        raise IntegralityError("characteristic polynomial of an integer matrix must be integral")
    return [int(c) for c in coeffs]


# --------------------------------------------------------------------------
# affine closed form a(k) = A (-1)^k + B + C k + D k^2

@dataclass(frozen=True)
class ClosedFormAffine:
    A: tuple
    B: tuple
    C: tuple
    D: tuple
    recurrence: tuple = (2, 0, -2, 1)

    def matrix(self, k: int) -> tuple:
        """a(k) with Fraction entries."""
        s = 1 if k % 2 == 0 else -1
        return tuple(
            tuple(s * a + b + c * k + d * k * k for a, b, c, d in zip(ra, rb, rc, rd))
            for ra, rb, rc, rd in zip(self.A, self.B, self.C, self.D))

    @cached_property
    def _integral(self):
        # common denominator so a(k) can be evaluated in integer arithmetic
        den = math.lcm(*(Fraction(x).denominator
                         for mat in (self.A, self.B, self.C, self.D) for row in mat for x in row))
        nums = tuple(tuple(tuple(int(Fraction(x) * den) for x in row) for row in mat)
                     for mat in (self.A, self.B, self.C, self.D))
        return den, nums

    def numerators(self, k: int) -> tuple[int, tuple]:
        """(den, N) with a(k) = N / den and N integral."""
        den, (a, b, c, d) = self._integral
        s = 1 if k % 2 == 0 else -1
        kk = k * k
        return den, tuple(
            tuple(s * x + y + z * k + w * kk for x, y, z, w in zip(ra, rb, rc, rd))
            for ra, rb, rc, rd in zip(a, b, c, d))


@lru_cache(maxsize=None)
def build_affine_closed_form() -> ClosedFormAffine:
    """Solve A+B = I, -A+B+C+D = M, A+B+2C+4D = M^2, -A+B+3C+9D = M^3 exactly."""
    m = coxeter_matrix("affine")
    powers = [matrix_power(m, k) for k in range(4)]
    basis = [[(-1) ** k, 1, k, k * k] for k in range(4)]
    # one 4x4 solve with 25 right-hand sides, one per matrix entry
    rhs = [[powers[k][r][c] for r in range(5) for c in range(5)] for k in range(4)]
    sol = solve_exact(basis, rhs)
    mats = [tuple(tuple(sol[t][5 * r + c] for c in range(5)) for r in range(5)) for t in range(4)]
    return ClosedFormAffine(*mats)


def eval_affine_closed_form(cf: ClosedFormAffine, k: int, rv: Sequence[int]) -> RootVector:
    den, nums = cf.numerators(k)
    out = []
    for row in nums:
        q, rem = divmod(sum(x * v for x, v in zip(row, rv)), den)
        if rem:
            raise IntegralityError(
                f"closed form gave non-integer coefficient {Fraction(q * den + rem, den)} at k={k}")
        out.append(q)
    return RootVector(*out)


# --------------------------------------------------------------------------
# hyperbolic spectral form a_hat(k) = sum_i P_i lambda_i^k

LABELS = ("lambda_1", "lambda_2", "lambda_plus", "lambda_minus", "lambda_5")


def radical_eigenvalues() -> dict[str, complex]:
    """Closed radical expressions for the roots of x^5 - 3x^3 - 3x^2 + 1."""
    r17 = math.sqrt(17)
    kp = math.sqrt(2 * r17 + 2)
    km = math.sqrt(2 * r17 - 2)
    lam1 = complex(1 - r17, -km) / 4
    return {
        "lambda_1": lam1,
        "lambda_2": lam1.conjugate(),
        "lambda_plus": complex((1 + r17 + kp) / 4),
        "lambda_minus": complex((1 + r17 - kp) / 4),
        "lambda_5": complex(-1.0),
    }


@dataclass(frozen=True)
class SpectralDecomp:
    eigenvalues: tuple          # complex, ordered as LABELS
    projectors: tuple           # complex 5x5 numpy arrays, same order
    labels: tuple = LABELS

    def matrix(self, k: int) -> np.ndarray:
        out = np.zeros((5, 5), dtype=complex)
        for lam, proj in zip(self.eigenvalues, self.projectors):
            out += proj * lam ** k
        return out


def _order_eigen(values: np.ndarray) -> list[int]:
    idx = list(range(len(values)))
    real = [i for i in idx if abs(values[i].imag) < 1e-9]
    cplx = [i for i in idx if i not in real]
    if len(real) != 3 or len(cplx) != 2:
        raise SpectralError(f"unexpected eigenvalue pattern {values}")
    lam5 = min(real, key=lambda i: abs(values[i] + 1))
    plus, minus = sorted((i for i in real if i != lam5), key=lambda i: -values[i].real)
    lam1, lam2 = sorted(cplx, key=lambda i: values[i].imag)
    return [lam1, lam2, plus, minus, lam5]


@lru_cache(maxsize=None)
def build_hyperbolic_spectral(tol: float = 1e-10, separation: float = 1e-6) -> SpectralDecomp:
    """Numerical eigen-projectors of the hyperbolic Coxeter matrix."""
    m = np.array(coxeter_matrix("hyperbolic"), dtype=float)
    values, right = np.linalg.eig(m)
    gaps = [abs(a - b) for t, a in enumerate(values) for b in values[t + 1:]]
    if min(gaps) < separation:
        raise SpectralError(f"eigenvalues not separated (min gap {min(gaps):.3g})")
    left = np.linalg.inv(right)
    order = _order_eigen(values)
    lams = tuple(complex(values[i]) for i in order)
    projs = tuple(np.outer(right[:, i], left[i, :]) for i in order)

    coeffs = characteristic_polynomial(coxeter_matrix("hyperbolic"))
    for lam in lams:
        if abs(np.polyval(coeffs, lam)) > tol:
            raise SpectralError(f"eigenvalue {lam} misses the characteristic polynomial")
    expected = radical_eigenvalues()
    for label, lam in zip(LABELS, lams):
        if abs(lam - expected[label]) > tol:
            raise SpectralError(f"{label}={lam} disagrees with radical form {expected[label]}")
    if np.max(np.abs(sum(projs) - np.eye(5))) > tol:
        raise SpectralError("projectors do not resolve the identity")
    return SpectralDecomp(lams, projs)


def eval_hyperbolic_closed_form(sd: SpectralDecomp, k: int, rv: Sequence[int]) -> RootVector:
    """sigma_hat^k(rv) from the spectral form, rounded and certified integral.

    Raises PrecisionError when a coefficient's distance to the nearest
    integer exceeds 1e-6 relative, or when its magnitude leaves the range
    where doubles represent every integer (2**53).
    """
    if abs(k) > HYPERBOLIC_K_GUARD:
        raise PrecisionError(f"|k|={abs(k)} exceeds guard {HYPERBOLIC_K_GUARD}")
    vals = sd.matrix(k) @ np.array(rv, dtype=float)
    out = []
    for v in vals:
        nearest = round(v.real)
        residual = max(abs(v.real - nearest), abs(v.imag))
        if residual >= ROUNDING_TOL * max(1.0, abs(v.real)):
            raise PrecisionError(f"coefficient {v} not integral at k={k}", residual=residual)
        if abs(nearest) >= 2 ** 53:
            raise PrecisionError(f"coefficient {v.real:.3g} beyond exact double range at k={k}",
                                 residual=residual)
        out.append(int(nearest))
    return RootVector(*out)


def spectral_summary(sd: SpectralDecomp) -> dict:
    """Checks on a decomposition, as plain floats for reports."""
    lam = dict(zip(sd.labels, sd.eigenvalues))
    return {
        "eigenvalues": {k: [v.real, v.imag] for k, v in lam.items()},
        "abs_lambda_1": abs(lam["lambda_1"]),
        "lambda_plus_times_minus": (lam["lambda_plus"] * lam["lambda_minus"]).real,
        "projector_sum_error": float(np.max(np.abs(sum(sd.projectors) - np.eye(5)))),
        "phase_lambda_1": cmath.phase(lam["lambda_1"]),
    }
