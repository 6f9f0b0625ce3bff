"""Root strings gamma_0..gamma_5 spanning the affine real roots.

Each affine real root is ``sign * gamma_i(k)`` for exactly one
(sign, i, k); this module builds the strings, inverts them, checks their
Weyl action against the transcribed table, and runs a brute-force
Diophantine enumeration as an independent oracle for coverage.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .errors import IdentificationError
from .lattice import CARTAN, RootVector, is_real_root
from .tables import STRING_TABLE
from .weyl import reflect_coeff

STRING_INDICES = range(6)


def parity_coefficient(m: int, n: int, k: int) -> int:
    """(1 + m (-1)^k + 2 n k) / 2 for m, n in {+1, -1}; always an integer."""
    if m not in (1, -1) or n not in (1, -1):
        raise ValueError("m and n must be +1 or -1")
    num = 1 + m * (1 if k % 2 == 0 else -1) + 2 * n * k
    assert num % 2 == 0
    return num // 2


def gamma(i: int, k: int) -> RootVector:
    """The k-th root of string i (zero alpha_{-1} coefficient)."""
    ppp = parity_coefficient(1, 1, k)
    pmp = parity_coefficient(-1, 1, k)
    ppm = parity_coefficient(1, -1, k)
    pmm = parity_coefficient(-1, -1, k)
    if i == 0:
        return RootVector(0, ppp, k, pmp, k)
    if i == 1:
        return RootVector(0, -k, ppm, -k, pmm)
    if i == 2:
        return RootVector(0, pmp, k, ppp, k)
    if i == 3:
        return RootVector(0, -k, pmm, -k, ppm)
    if i == 4:
        return RootVector(0, -k, ppm, 1 - k, pmm)
    if i == 5:
        return RootVector(0, -k, pmm, 1 - k, ppm)
    raise ValueError(f"string index must be in 0..5, got {i!r}")


@dataclass(frozen=True, order=True)
class SignedString:
    sign: int
    i: int
    k: int

    def vector(self) -> RootVector:
        g = gamma(self.i, self.k)
        return g if self.sign > 0 else -g

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}gamma_{self.i}({self.k})"


def identify_all(rv: Sequence[int]) -> list[SignedString]:
    """Every (sign, i, k) with sign * gamma_i(k) == rv.

    k is read off a slot that is linear in k (alpha_1 for strings 0 and 2,
    minus alpha_0 for the rest) and then the whole vector is compared.
    """
    rv = RootVector(*rv)
    if rv.q != 0:
        return []
    hits = []
    for sign in (1, -1):
        v = rv if sign > 0 else -rv
        for i in STRING_INDICES:
            k = v.l if i in (0, 2) else -v.r
            if gamma(i, k) == v:
                hits.append(SignedString(sign, i, k))
    return hits


def identify(rv: Sequence[int]) -> Optional[SignedString]:
    hits = identify_all(rv)
    return hits[0] if hits else None


def reflect_string(i: int, s: SignedString) -> SignedString:
    """s_i applied to a signed string, re-identified as a signed string."""
    image = reflect_coeff(i, s.vector())
    hit = identify(image)
    if hit is None:
        raise IdentificationError(f"s_{i}[{s}] = {tuple(image)} is not on any root string")
    return hit


def table_image(i: int, s: SignedString) -> SignedString:
    """Image of ``s`` under s_i as read from the transcribed string table."""
    parity = s.k % 2
    half = (s.k - parity) // 2
    sign, j, a, b = STRING_TABLE[(s.i, parity)][i]
    return SignedString(sign * s.sign, j, a * half + b)


# --------------------------------------------------------------------------
# enumeration oracle

def _solve_slot(v: list[int], slot: int) -> list[int]:
    """Integer x with the real-root equation satisfied when v[slot] = x.

    The quadratic form is x^2 + b x + c with b from the Cartan row and c the
    form on the remaining coordinates.
    """
    b = sum(CARTAN[slot][j] * v[j] for j in range(5) if j != slot)
    c = sum(v[a] * CARTAN[a][j] * v[j] for a in range(5) if a != slot
            for j in range(5) if j != slot) // 2
    disc = b * b - 4 * (c - 1)
    if disc < 0:
        return []
    root = math.isqrt(disc)
    if root * root != disc or (root - b) % 2:
        return []
    return sorted({(-b - root) // 2, (-b + root) // 2})


def enumerate_real_roots(bound: int, affine_only: bool = False) -> list[RootVector]:
    """All real roots with every |coefficient| <= bound, sorted lexicographically.

    Scans a box over all but the last coefficient and solves the quadratic
    for the last one.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    span = range(-bound, bound + 1)
    q_range = (0,) if affine_only else span
    found = []
    for q, r, l, m in product(q_range, span, span, span):
        v = [q, r, l, m, 0]
        for n in _solve_slot(v, 4):
            if abs(n) <= bound:
                rv = RootVector(q, r, l, m, n)
                assert is_real_root(rv)
                found.append(rv)
    found.sort()
    return found


def positive_representative(rv: RootVector) -> RootVector:
    """The member of {rv, -rv} whose first nonzero coefficient is positive."""
    for c in rv:
        if c:
            return rv if c > 0 else -rv
    return rv


@dataclass
class CoverageReport:
    bound: int
    n_roots: int
    misses: list = field(default_factory=list)
    multiple_hits: list = field(default_factory=list)
    hits_per_string: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.misses and not self.multiple_hits

    def as_dict(self) -> dict:
        return {
            "bound": self.bound,
            "n_roots": self.n_roots,
            "misses": [list(v) for v in self.misses],
            "multiple_hits": [[list(v), [str(h) for h in hs]] for v, hs in self.multiple_hits],
            "hits_per_string": {str(k): v for k, v in sorted(self.hits_per_string.items())},
            "ok": self.ok,
        }


def coverage_report(bound: int = 8) -> CoverageReport:
    """Check every affine real root in the box is +/-gamma_i(k) exactly once."""
    roots = enumerate_real_roots(bound, affine_only=True)
    report = CoverageReport(bound=bound, n_roots=len(roots))
    per_string = Counter()
    for rv in roots:
        hits = identify_all(rv)
        if not hits:
            report.misses.append(rv)
        elif len(hits) > 1:
            report.multiple_hits.append((rv, hits))
        for h in hits:
            per_string[h.i] += 1
    report.hits_per_string = dict(per_string)
    return report


@dataclass
class ClosureReport:
    kmin: int
    kmax: int
    cases: int = 0
    failures: list = field(default_factory=list)
    matrix: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.cases > 0 and not self.failures

    def as_dict(self) -> dict:
        return {
            "kmin": self.kmin,
            "kmax": self.kmax,
            "cases": self.cases,
            "entries": len(self.matrix),
            "failures": self.failures,
            "matrix": self.matrix,
            "ok": self.ok,
        }


def closure_check(kmin: int, kmax: int) -> ClosureReport:
    """Compare the generic Weyl action on strings with the string table.

    Every table entry (reflection i, string j, parity of k) is evaluated
    at k = 2K + parity for K in [kmin, kmax].
    """
    if kmin > kmax:
        raise ValueError("empty window")
    report = ClosureReport(kmin, kmax)
    for (j, parity), row in sorted(STRING_TABLE.items()):
        for i in range(4):
            key = f"s{i}[gamma_{j}(2K+{parity})]"
            good = 0
            for half in range(kmin, kmax + 1):
                s = SignedString(1, j, 2 * half + parity)
                expected = table_image(i, s)
                try:
                    got = reflect_string(i, s)
                except IdentificationError as exc:
                    got = None
                    detail = str(exc)
                report.cases += 1
                if got == expected:
                    good += 1
                else:
                    report.failures.append({
                        "entry": key, "K": half,
                        "expected": str(expected),
                        "got": str(got) if got is not None else detail,
                    })
            report.matrix[key] = good
    return report
