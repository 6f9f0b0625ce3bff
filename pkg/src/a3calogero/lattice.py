"""Root lattice of hyperbolic A3 in the 4+2 Lorentzian space.

Roots are integer combinations ``q a_{-1} + r a_0 + l a_1 + m a_2 + n a_3``
of five simple roots, each a six-component vector. The bilinear form is

    x.y = x1 y1 + x2 y2 + x3 y3 + x4 y4 - x5 y6 - x6 y5
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

INDICES = (-1, 0, 1, 2, 3)

SIMPLE_ROOTS = {
    -1: (0, 0, 0, 0, -1, 1),
    0: (-1, 0, 0, 1, 1, 0),
    1: (1, -1, 0, 0, 0, 0),
    2: (0, 1, -1, 0, 0, 0),
    3: (0, 0, 1, -1, 0, 0),
}

Vec6 = tuple


class RootVector(NamedTuple):
    """Coefficients of a lattice vector over alpha_{-1}, ..., alpha_3."""

    q: int
    r: int
    l: int
    m: int
    n: int

    def __neg__(self) -> "RootVector":
        return RootVector(*(-c for c in self))

    def __add__(self, other) -> "RootVector":
        return RootVector(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other) -> "RootVector":
        return RootVector(*(a - b for a, b in zip(self, other)))

    def scaled(self, factor: int) -> "RootVector":
        return RootVector(*(factor * c for c in self))

    @classmethod
    def unit(cls, i: int) -> "RootVector":
        """Coefficient vector of the simple root alpha_i."""
        return cls(*(int(j == i) for j in INDICES))


def position(i: int) -> int:
    """Slot of alpha_i inside a RootVector."""
    if i not in SIMPLE_ROOTS:
        raise ValueError(f"reflection index must be one of {INDICES}, got {i!r}")
    return i + 1


def inner6(x: Sequence, y: Sequence):
    """Lorentzian form on the 4+2 space; exact for int/Fraction input."""
    return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]
            - x[4] * y[5] - x[5] * y[4])


def add6(x: Sequence, y: Sequence) -> Vec6:
    return tuple(a + b for a, b in zip(x, y))


def scale6(c, x: Sequence) -> Vec6:
    return tuple(c * a for a in x)


def embed(rv: Sequence[int]) -> Vec6:
    """Six-vector of the root with coefficients ``rv``."""
    out = [0] * 6
    for coeff, i in zip(rv, INDICES):
        if coeff:
            for t, a in enumerate(SIMPLE_ROOTS[i]):
                out[t] += coeff * a
    return tuple(out)


def gram_matrix() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the stored simple roots, computed via ``inner6``."""
    return tuple(tuple(inner6(SIMPLE_ROOTS[i], SIMPLE_ROOTS[j]) for j in INDICES)
                 for i in INDICES)


CARTAN = gram_matrix()


def inner_coeff(a: Sequence[int], b: Sequence[int]) -> int:
    """Bilinear form a^T K b in the simple-root basis."""
    return sum(a[i] * CARTAN[i][j] * b[j]
               for i in range(5) if a[i] for j in range(5) if b[j])


def norm2(rv: Sequence[int]) -> int:
    return inner_coeff(rv, rv)


def is_real_root(rv: Sequence[int]) -> bool:
    """True iff rv solves the root-length Diophantine equation (length^2 = 2)."""
    q, r, l, m, n = rv
    return (l * l - l * m - l * r + m * m - m * n + n * n - n * r
            + q * q - q * r + r * r) == 1


def as_fractions(v: Sequence) -> Vec6:
    return tuple(Fraction(x) for x in v)
