"""Extended Calogero Hamiltonian invariant under the affine A3 Weyl group.

    H = 1/2 p.p + sum_i sum_n g / (gamma_i(n) . q)^2

Three evaluators of the potential are provided and cross-checked:
a truncated direct sum over the root strings, a sum over enumerated real
roots, and the closed trigonometric form

    V = pi^2 g / (4 q6^2) * sum_{i<j} [1/sin^2 x_ij + 1/cos^2 x_ij],
    x_ij = pi (q_i - q_j) / (2 q6).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import SingularityError
from .lattice import SIMPLE_ROOTS, embed, inner6
from .strings import enumerate_real_roots, gamma, positive_representative
from .tables import TERM_TABLE
from .weyl import AFFINE_WORD

PAIRS = tuple(combinations(range(1, 5), 2))
SLOTS = tuple(f"{i}{j}{t}" for t in "sc" for i, j in PAIRS)
TRIG_EPS = 1e-13

# simple roots as rows, for vectorised embedding
_SIMPLE = np.array([SIMPLE_ROOTS[i] for i in (-1, 0, 1, 2, 3)], dtype=float)


@dataclass(frozen=True)
class CouplingConfig:
    g: float = 1.0
    both_signs: bool = False

    def __post_init__(self):
        if not math.isfinite(self.g):
            raise ValueError("coupling g must be finite")

    @property
    def multiplicity(self) -> int:
        return 2 if self.both_signs else 1


@dataclass(frozen=True)
class PhasePoint:
    q: tuple
    p: tuple

    def __post_init__(self):
        if len(self.q) != 6 or len(self.p) != 6:
            raise ValueError("phase point needs 6 coordinates and 6 momenta")


@dataclass
class PotentialReport:
    total: float
    breakdown: dict          # slot "ijs"/"ijc" -> 1/sin^2 or 1/cos^2 value
    prefactor: float
    truncation: object = None
    residuals: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "breakdown": dict(self.breakdown),
            "prefactor": self.prefactor,
            "truncation": self.truncation,
            "residuals": dict(self.residuals),
        }


def kinetic(p: Sequence) -> float:
    """1/2 p.p with the Lorentzian form; exact for Fraction input."""
    return inner6(p, p) / 2


def inverse_square_sum(a: float, b: float) -> float:
    """sum_{n in Z} (a + b n)^-2 = pi^2 / (b^2 sin^2(pi a / b))."""
    if b == 0:
        raise ValueError("b must be nonzero")
    s = math.sin(math.pi * a / b)
    if abs(s) < TRIG_EPS:
        raise SingularityError(f"a/b = {a / b!r} is an integer: the sum diverges",
                               where=("sin", a, b))
    return math.pi ** 2 / (b * b * s * s)


def _check_q6(q):
    if len(q) != 6:
        raise ValueError("expected 6 coordinates")
    if q[5] == 0:
        raise SingularityError("q6 = 0: the closed form is undefined", where="q6")


def string_linear_form(i: int, q: Sequence) -> tuple[float, float, float]:
    """(a, b, c) with gamma_i(n).q = a + b n + c (-1)^n."""
    f0, f1, f2 = (float(inner6(embed(gamma(i, n)), q)) for n in (0, 1, 2))
    b = (f2 - f0) / 2
    c = (f0 - f1 + b) / 2
    return f0 - c, b, c


def string_potential_closed(i: int, q: Sequence, c: CouplingConfig = CouplingConfig()) -> float:
    """V_i summed exactly by splitting n into even and odd parts."""
    _check_q6(q)
    a, b, alt = string_linear_form(i, q)
    # n = 2m: (a + alt) + 2b m ;  n = 2m + 1: (a + b - alt) + 2b m
    try:
        total = inverse_square_sum(a + alt, 2 * b) + inverse_square_sum(a + b - alt, 2 * b)
    except SingularityError as exc:
        raise SingularityError(f"string {i}: {exc}", where=("string", i)) from None
    return c.multiplicity * c.g * total


def _breakdown(q: Sequence) -> dict:
    q6 = q[5]
    out = {}
    for i, j in PAIRS:
        x = math.pi * (q[i - 1] - q[j - 1]) / (2 * q6)
        s, co = math.sin(x), math.cos(x)
        if abs(s) < TRIG_EPS:
            raise SingularityError(f"sin factor of pair ({i},{j}) vanishes", where=(i, j, "s"))
        if abs(co) < TRIG_EPS:
            raise SingularityError(f"cos factor of pair ({i},{j}) vanishes", where=(i, j, "c"))
        out[f"{i}{j}s"] = 1.0 / (s * s)
        out[f"{i}{j}c"] = 1.0 / (co * co)
    return {slot: out[slot] for slot in SLOTS}


def potential_closed(q: Sequence, c: CouplingConfig = CouplingConfig()) -> PotentialReport:
    _check_q6(q)
    q = tuple(float(x) for x in q)
    parts = _breakdown(q)
    pref = c.multiplicity * math.pi ** 2 * c.g / (4 * q[5] ** 2)
    return PotentialReport(total=pref * math.fsum(parts.values()), breakdown=parts,
                           prefactor=pref)


def _string_denominators(i: int, q: np.ndarray, n: np.ndarray) -> np.ndarray:
    """gamma_i(n).q for an integer array n, through exact integer coefficients."""
    even = (n % 2 == 0)
    ppp = np.where(even, 1 + n, n)          # (1 + (-1)^n + 2n)/2
    pmp = np.where(even, n, n + 1)          # (1 - (-1)^n + 2n)/2
    ppm = np.where(even, 1 - n, -n)         # (1 + (-1)^n - 2n)/2
    pmm = np.where(even, -n, 1 - n)         # (1 - (-1)^n - 2n)/2
    zero = np.zeros_like(n)
    coeffs = {
        0: (zero, ppp, n, pmp, n),
        1: (zero, -n, ppm, -n, pmm),
        2: (zero, pmp, n, ppp, n),
        3: (zero, -n, pmm, -n, ppm),
        4: (zero, -n, ppm, 1 - n, pmm),
        5: (zero, -n, pmm, 1 - n, ppm),
    }[i]
    vec6 = np.stack(coeffs, axis=1).astype(float) @ _SIMPLE
    metric_q = np.array([q[0], q[1], q[2], q[3], -q[5], -q[4]])
    return vec6 @ metric_q


def potential_direct(q: Sequence, c: CouplingConfig = CouplingConfig(), N: int = 100_000,
                     per_string: bool = False):
    """Truncated string sum over |n| <= N (error O(1/N))."""
    _check_q6(q)
    qa = np.asarray(q, dtype=float)
    n = np.arange(-N, N + 1, dtype=np.int64)
    totals = []
    for i in range(6):
        den = _string_denominators(i, qa, n)
        bad = np.flatnonzero(den == 0)
        if bad.size:
            raise SingularityError(f"gamma_{i}({int(n[bad[0]])}).q = 0", where=(i, int(n[bad[0]])))
        totals.append(c.multiplicity * c.g * math.fsum(1.0 / (den * den)))
    return totals if per_string else math.fsum(totals)


def string_partial_sum(q: Sequence, c: CouplingConfig, bound: int) -> tuple[float, list]:
    """Sum over gamma_i(k) whose coefficients are all within ``bound``."""
    terms, members = [], []
    for i in range(6):
        for k in range(-bound - 1, bound + 2):
            g = gamma(i, k)
            if max(abs(x) for x in g) <= bound:
                d = inner6(embed(g), q)
                if d == 0:
                    raise SingularityError(f"gamma_{i}({k}).q = 0", where=(i, k))
                terms.append(c.multiplicity * c.g / (d * d))
                members.append(g)
    return math.fsum(terms), members


def potential_enumerated(q: Sequence, c: CouplingConfig = CouplingConfig(), bound: int = 3,
                         affine_only: bool = True) -> float:
    """Sum of g/(alpha.q)^2 over enumerated real roots, one per +/- pair."""
    roots = {positive_representative(rv) for rv in enumerate_real_roots(bound, affine_only)}
    terms = []
    for rv in sorted(roots):
        d = inner6(embed(rv), q)
        if d == 0:
            raise SingularityError(f"root {tuple(rv)} is orthogonal to q", where=tuple(rv))
        terms.append(c.multiplicity * c.g / (d * d))
    return math.fsum(terms)


def finite_a3_potential(x: Sequence, g: float = 1.0, prefactor: float = 1.0) -> float:
    """prefactor * g * sum_{i<j} 1/(x_i - x_j)^2 over four particles."""
    terms = []
    for i, j in combinations(range(4), 2):
        d = x[i] - x[j]
        if d == 0:
            raise SingularityError(f"coordinates {i + 1} and {j + 1} coincide", where=(i + 1, j + 1))
        terms.append(1 / (d * d))
    return prefactor * g * math.fsum(terms)


# --------------------------------------------------------------------------
# Weyl action on coordinates

def coordinate_reflection(i: int, v: Sequence, variant: str = "derived") -> tuple:
    """s_i on a coordinate (or momentum) vector.

    ``derived`` is v - (alpha_i.v) alpha_i. ``printed`` swaps in the
    alternative s_0 map (q2 -> -q3, q3 -> -q2, ...) that agrees with the
    derived one on all differences q_i - q_j but not on the kinetic form.
    """
    if variant == "printed" and i == 0:
        q1, q2, q3, q4, q5, q6 = v
        return (-q2 - q3 + q4 - q6, -q3, -q2, q1 - q2 - q3 + q6, q1 - q4 + q5 + q6, q6)
    if variant not in ("derived", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    a = SIMPLE_ROOTS[i]
    c = inner6(a, v)
    return tuple(x - c * y for x, y in zip(v, a))


def coordinate_word(word: Sequence[int], v: Sequence, variant: str = "derived") -> tuple:
    out = tuple(v)
    for i in reversed(tuple(word)):
        out = coordinate_reflection(i, out, variant)
    return out


TRANSFORMS = {0: (0,), 1: (1,), 2: (2,), 3: (3,), "sigma": AFFINE_WORD}


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def term_permutation_check(q: Sequence, key) -> dict:
    """Per slot, relative mismatch between V(w q)[slot] and V(q)[table slot]."""
    before = potential_closed(q).breakdown
    after = potential_closed(coordinate_word(TRANSFORMS[key], q)).breakdown
    return {slot: _rel(after[slot], before[dst]) for slot, dst in TERM_TABLE[key].items()}


def invariance_residual(point: PhasePoint, c: CouplingConfig = CouplingConfig(),
                        tol: float = 1e-12) -> dict:
    """Potential/kinetic residuals and slot-table checks under s_0..s_3 and sigma.

    The kinetic residual is exact whenever the momenta are Fractions.
    """
    v0 = potential_closed(point.q, c).total
    t0 = kinetic(point.p)
    out = {}
    for key, word in TRANSFORMS.items():
        qt = coordinate_word(word, point.q)
        pt = coordinate_word(word, point.p)
        v1 = potential_closed(qt, c).total
        slots = term_permutation_check(point.q, key)
        bad = sorted(s for s, r in slots.items() if r >= tol)
        out[f"s{key}" if key != "sigma" else "sigma"] = {
            "potential_rel_residual": _rel(v1, v0),
            "kinetic_residual": kinetic(pt) - t0,
            "table_max_rel_mismatch": max(slots.values()),
            "table_mismatched_slots": bad,
        }
    return out


def potential_gradient(q: Sequence, c: CouplingConfig = CouplingConfig()) -> tuple:
    """Analytic gradient of the closed-form potential; dV/dq5 is zero."""
    _check_q6(q)
    q = tuple(float(x) for x in q)
    q6 = q[5]
    pref = c.multiplicity * math.pi ** 2 * c.g / (4 * q6 * q6)
    grad = [0.0] * 6
    total_h = 0.0
    dq6 = 0.0
    for i, j in PAIRS:
        x = math.pi * (q[i - 1] - q[j - 1]) / (2 * q6)
        s, co = math.sin(x), math.cos(x)
        if abs(s) < TRIG_EPS or abs(co) < TRIG_EPS:
            raise SingularityError(f"pair ({i},{j}) sits on a pole", where=(i, j))
        h = 1 / (s * s) + 1 / (co * co)
        dh = -2 * co / s ** 3 + 2 * s / co ** 3
        dx = math.pi / (2 * q6)
        grad[i - 1] += pref * dh * dx
        grad[j - 1] -= pref * dh * dx
        total_h += h
        dq6 += pref * dh * (-x / q6)
    grad[5] = -2 * pref * total_h / q6 + dq6
    return tuple(grad)


def limit_scan(q_base: Sequence, c: CouplingConfig, q6_values: Sequence[float]) -> list[dict]:
    """Closed potential against the finite A3 model as q6 grows."""
    target = finite_a3_potential(q_base[:4], c.g, prefactor=1.0)
    rows = []
    for q6 in q6_values:
        q = tuple(q_base[:5]) + (float(q6),)
        value = potential_closed(q, c).total
        ratio = value / target
        rows.append({
            "q6": float(q6),
            "potential": value,
            "finite_a3": target,
            "ratio": ratio,
            "rel_error_vs_prefactor": abs(ratio - c.multiplicity) / c.multiplicity,
        })
    return rows


def sample_regular_points(count: int, seed: int = 0, margin: float = 0.05,
                          q6_range=(1.0, 3.0)) -> list[tuple]:
    """Random coordinates kept away from every pole of the closed form.

    ``margin`` bounds |sin| and |cos| of every x_ij from below.
    """
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        q6 = rng.uniform(*q6_range) * rng.choice((-1.0, 1.0))
        q = tuple(float(x) for x in rng.uniform(-2.0, 2.0, size=5)) + (float(q6),)
        xs = [math.pi * (q[i - 1] - q[j - 1]) / (2 * q6) for i, j in PAIRS]
        if min(min(abs(math.sin(x)), abs(math.cos(x))) for x in xs) > margin:
            points.append(q)
    return points
