"""Integral closure of powers of monomial ideals via Newton polyhedra.

Membership ``e in k * NP(I)`` is decided with an exact rational phase-one
simplex: find ``lam >= 0`` with ``sum(lam) = k`` and ``sum lam_u * exp(u) <= e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .monomial import InputError, Monomial, MonomialIdeal, membership, power


def feasible_point(A: Sequence[Sequence], b: Sequence) -> Optional[list]:
    """A point ``x >= 0`` with ``A x = b`` over the rationals, or None.

    Phase one of the simplex method with one artificial variable per row and
    Bland's rule, so it terminates on degenerate systems.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    T = []
    for i in range(rows):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]]
        row += [Fraction(1 if j == i else 0) for j in range(rows)]
        row.append(Fraction(sign * b[i]))
        T.append(row)
    basis = [cols + i for i in range(rows)]
    width = cols + rows
    # objective: minimise the sum of artificials, reduced-cost row
    obj = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(cols):
            obj[j] -= row[j]
        obj[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(rows):
            if T[i][enter] > 0:
                ratio = T[i][width] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen in phase one: objective is bounded below by 0
            break
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(rows):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, T[r])]
        basis[r] = enter

    if obj[width] != 0:
        return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = T[i][width]
    return x


def newton_certificate(e: Sequence[int], ideal: MonomialIdeal, k: int) -> Optional[list]:
    """Weights ``lam`` (one per generator) placing ``e`` in ``k * NP(I)``, or None."""
    n = ideal.n
    if len(e) != n:
        raise InputError(f"exponent vector has length {len(e)}, expected {n}")
    if ideal.is_zero():
        return None
    gens = ideal.exps
    m = len(gens)
    A = []
    for i in range(n):
        A.append([g[i] for g in gens] + [1 if j == i else 0 for j in range(n)])
    A.append([1] * m + [0] * n)
    x = feasible_point(A, list(e) + [k])
    return None if x is None else x[:m]


def newton_member(e: Sequence[int], ideal: MonomialIdeal, k: int = 1) -> bool:
    if k < 1:
        raise InputError("k must be positive")
    return newton_certificate(tuple(e), ideal, k) is not None


def in_power(w: Sequence[int], ideal: MonomialIdeal, s: int) -> bool:
    """Is the monomial ``w`` in ``I^s``? Decided without expanding the power."""
    gens = ideal.exps

    @lru_cache(maxsize=None)
    def search(rest: tuple, left: int, idx: int) -> bool:
        if left == 0:
            return True
        if idx == len(gens):
            return False
        g = gens[idx]
        most = min((r // a for r, a in zip(rest, g) if a), default=left)
        for c in range(min(most, left), -1, -1):
            nxt = tuple(r - c * a for r, a in zip(rest, g))
            if search(nxt, left - c, idx + 1):
                return True
        return False

    return search(tuple(w), s, 0)


def power_oracle_member(e: Sequence[int], ideal: MonomialIdeal, k: int, jmax: int = 12) -> bool:
    """``(x^e)^j in I^(k j)`` for some ``j <= jmax``: the classical integrality test."""
    return any(in_power(tuple(j * a for a in e), ideal, k * j) for j in range(1, jmax + 1))


def integral_closure_of_power(ideal: MonomialIdeal, k: int = 1) -> MonomialIdeal:
    """Integral closure of ``I^k``: the lattice points of ``k * NP(I)``.

    Only the box ``[0, k * M_i]`` (``M_i`` the largest exponent of ``x_i`` in
    G(I)) is scanned: lowering a coordinate above ``k * M_i`` by one keeps the
    point inside the polyhedron, so no minimal generator lies outside the box.
    """
    if k < 1:
        raise InputError("k must be positive")
    n = ideal.n
    if ideal.is_zero() or ideal.is_unit():
        return ideal
    top = ideal.max_exponents()
    pw = power(ideal, k)
    points = sorted(product(*(range(k * t + 1) for t in top)), key=lambda p: (sum(p), p))
    kept: list = []
    for p in points:
        if any(all(a <= b for a, b in zip(q, p)) for q in kept):
            continue
        if membership(p, pw) or newton_member(p, ideal, k):
            kept.append(p)
    return MonomialIdeal(n, kept)


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    return integral_closure_of_power(ideal, 1)


@dataclass(frozen=True)
class NormalityReport:
    bound: int
    normal: bool
    first_failure: Optional[int]
    witness: Optional[Monomial]

    def to_json(self) -> dict:
        return {
            "normal_up_to": self.bound,
            "normal": self.normal,
            "first_failure": self.first_failure,
            "witness": None if self.witness is None else str(self.witness),
        }


def is_normal_up_to(ideal: MonomialIdeal, bound: int) -> NormalityReport:
    """Check that ``I^k`` is integrally closed for ``k = 1..bound``."""
    if bound < 1:
        raise InputError("bound must be positive")
    for k in range(1, bound + 1):
        closed = integral_closure_of_power(ideal, k)
        pw = power(ideal, k)
        if closed != pw:
            witness = next(Monomial(e) for e in closed.exps if not membership(e, pw))
            return NormalityReport(bound, False, k, witness)
    return NormalityReport(bound, True, None, None)
