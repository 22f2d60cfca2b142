"""Irreducible decompositions, associated and minimal primes, symbolic powers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .monomial import (
    InputError,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    _INT64_SAFE,
    colon,
    intersect_all,
    localization,
    minimal_exponents,
    power,
    saturation,
)


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """The irreducible ideal ``(x_i^a_i : (i, a_i) in entries)``."""

    entries: tuple  # ((var, exp), ...) sorted by var, exp >= 1

    def __post_init__(self):
        items = tuple(sorted((int(i), int(a)) for i, a in self.entries))
        if any(a < 1 for _, a in items):
            raise InputError("irreducible component exponents must be positive")
        if len({i for i, _ in items}) != len(items):
            raise InputError("repeated variable in irreducible component")
        object.__setattr__(self, "entries", items)

    @property
    def support(self) -> tuple:
        return tuple(i for i, _ in self.entries)

    def prime(self, n: int) -> PrimeSupport:
        return PrimeSupport(n, self.support)

    def ideal(self, n: int) -> MonomialIdeal:
        rows = []
        for i, a in self.entries:
            e = [0] * n
            e[i - 1] = a
            rows.append(tuple(e))
        return MonomialIdeal(n, rows)

    def to_json(self) -> list:
        return [{"var": i, "exp": a} for i, a in self.entries]

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in self.entries) + ")"


def _check_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise InputError("operation needs a non-zero ideal")
    if ideal.is_unit():
        raise InputError("operation needs a proper ideal")


def _corners(ideal: MonomialIdeal) -> np.ndarray:
    """Rows ``c`` with ``ideal = intersection of (x_i^c_i : c_i < inf)``.

    Generators are added one at a time. A component ``q`` not containing the
    new generator ``g`` is replaced by the components ``q + (x_i^g_i)`` for
    ``i`` in supp(g); a component is redundant exactly when it contains another
    one, i.e. its row is componentwise <= another row ("inf" is max+1).
    """
    n = ideal.n
    top = max(ideal.max_exponents()) + 1
    dtype = np.int64 if top < _INT64_SAFE else object
    comps = np.full((1, n), top, dtype=dtype)
    gens = sorted(ideal.exps, key=lambda e: (sum(e), e))
    for g in gens:
        supp = [i for i in range(n) if g[i]]
        garr = np.array(g, dtype=dtype)
        affected = np.all(comps[:, supp] > garr[supp], axis=1)
        if not affected.any():
            continue
        old = comps[~affected]
        aff = comps[affected]
        fresh = []
        for i in supp:
            rows = aff.copy()
            rows[:, i] = g[i]
            # only rows built on the same variable can dominate each other ...
            dominated = np.zeros(len(rows), dtype=bool)
            if len(rows) > 1:
                le = np.all(rows[:, None, :] <= rows[None, :, :], axis=2)
                np.fill_diagonal(le, False)
                eq = np.all(rows[:, None, :] == rows[None, :, :], axis=2)
                # among equal rows keep the first one
                tie = np.triu(eq, 1).T
                dominated |= (le & ~eq).any(axis=1) | tie.any(axis=1)
            # ... and an untouched row can only dominate if it sits at x_i^g_i
            peers = old[old[:, i] == g[i]]
            if len(peers):
                dominated |= np.all(rows[:, None, :] <= peers[None, :, :], axis=2).any(axis=1)
            fresh.append(rows[~dominated])
        comps = np.concatenate([old] + fresh, axis=0)
    return comps, top


def irreducible_decomposition(ideal: MonomialIdeal) -> tuple:
    """Irredundant irreducible decomposition, canonically sorted."""
    _check_proper(ideal)
    return _irreducible_cached(ideal)


@lru_cache(maxsize=256)
def _irreducible_cached(ideal: MonomialIdeal) -> tuple:
    comps, top = _corners(ideal)
    out = set()
    for row in comps.tolist():
        out.add(IrreducibleComponent(tuple((i + 1, int(a)) for i, a in enumerate(row) if a < top)))
    return tuple(sorted(out))


def irreducible_decomposition_split(ideal: MonomialIdeal) -> tuple:
    """Reference decomposition by recursive splitting of non-pure-power generators.

    The lexicographically first generator ``u`` that is not a pure power is
    written ``u = v * w`` with ``v`` the power of its lowest-index variable;
    then ``I = (I + (v)) & (I + (w))``. Redundant components are dropped at the end.
    """
    _check_proper(ideal)
    n = ideal.n

    def split(exps: tuple) -> list:
        for u in exps:
            supp = [i for i in range(n) if u[i]]
            if len(supp) > 1:
                v = tuple(u[i] if i == supp[0] else 0 for i in range(n))
                w = tuple(0 if i == supp[0] else u[i] for i in range(n))
                left = minimal_exponents(exps + (v,), n)
                right = minimal_exponents(exps + (w,), n)
                return split(left) + split(right)
        return [_pure(exps, n)]

    comps = set(split(ideal.exps))
    irredundant = []
    for c in comps:
        ci = c.ideal(n)
        if not any(d != c and d.ideal(n) <= ci for d in comps):
            irredundant.append(c)
    return tuple(sorted(irredundant))


def _pure(exps: tuple, n: int) -> IrreducibleComponent:
    entries = []
    for u in exps:
        i = next(k for k in range(n) if u[k])
        entries.append((i + 1, u[i]))
    return IrreducibleComponent(tuple(entries))


def associated_primes(ideal: MonomialIdeal) -> tuple:
    """Ass(R/I): the supports of the irredundant irreducible components."""
    return tuple(sorted({c.prime(ideal.n) for c in irreducible_decomposition(ideal)}))


def _minimal_sets(primes) -> tuple:
    primes = sorted(set(primes), key=lambda p: (len(p), p.vars))
    kept = []
    for p in primes:
        if not any(q.issubset(p) for q in kept):
            kept.append(p)
    return tuple(sorted(kept))


def minimal_primes(ideal: MonomialIdeal) -> tuple:
    _check_proper(ideal)
    if ideal.is_squarefree():
        # the minimal primes of a square-free ideal are its minimal transversals
        return _minimal_sets(
            PrimeSupport(ideal.n, c.support) for c in irreducible_decomposition(ideal)
        )
    return _minimal_sets(associated_primes(ideal))


def embedded_primes(ideal: MonomialIdeal) -> tuple:
    mins = set(minimal_primes(ideal))
    return tuple(p for p in associated_primes(ideal) if p not in mins)


def complement_monomial(p: PrimeSupport) -> Monomial:
    """Product of the variables outside ``p``."""
    return Monomial(tuple(0 if i + 1 in p.vars else 1 for i in range(p.n)))


def primary_component(ideal: MonomialIdeal, p: PrimeSupport) -> MonomialIdeal:
    """The ``p``-primary component at a minimal prime ``p``: saturate away the other variables."""
    return saturation(ideal, complement_monomial(p))


def symbolic_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^(k)``: intersect the primary components of ``I^k`` at the minimal primes of ``I``."""
    _check_proper(ideal)
    if k < 1:
        raise InputError("symbolic power needs k >= 1")
    pw = power(ideal, k)
    return intersect_all((primary_component(pw, p) for p in minimal_primes(ideal)), ideal.n)


def symbolic_power_from_components(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^(k)`` from the irreducible components of ``I^k`` supported on a minimal prime."""
    _check_proper(ideal)
    mins = {p.vars for p in minimal_primes(ideal)}
    comps = [c.ideal(ideal.n) for c in irreducible_decomposition(power(ideal, k)) if c.support in mins]
    return intersect_all(comps, ideal.n)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """``I^vee``: intersection over generators u of the prime on supp(u)."""
    if not ideal.is_squarefree():
        raise InputError("Alexander dual is only defined here for square-free ideals")
    n = ideal.n
    primes = []
    for e in ideal.exps:
        supp = [i + 1 for i in range(n) if e[i]]
        if not supp:
            return MonomialIdeal.zero(n)
        primes.append(PrimeSupport(n, supp).ideal())
    return intersect_all(primes, n)


def colon_witness(ideal: MonomialIdeal, p: PrimeSupport):
    """A monomial ``v`` with ``(I : v) = p``, or None if ``p`` is not associated.

    Inside the localization at ``p`` a witness is a socle monomial
    (``x_i v`` in the ideal for all i in p, v itself not); outside ``p`` the
    exponents are pushed to the generator maxima.
    """
    _check_proper(ideal)
    loc = localization(ideal, p).padded
    if loc.is_unit():
        return None
    n = ideal.n
    top = ideal.max_exponents()
    socle = intersect_all((colon(loc, _var(i, n)) for i in p.vars), n)
    for e in socle.exps:
        if e in loc:
            continue
        v = Monomial(tuple(e[i] if (i + 1) in p.vars else top[i] for i in range(n)))
        if colon(ideal, v) == p.ideal():
            return v
    return None


def _var(i: int, n: int) -> Monomial:
    return Monomial.variable(i, n)


def ass_by_witness_search(ideal: MonomialIdeal) -> tuple:
    """Brute-force Ass(R/I): every colon ``(I : v)`` that is prime, ``v`` in the generator box.

    Exponential; meant as an independent oracle on small inputs.
    """
    _check_proper(ideal)
    n = ideal.n
    top = ideal.max_exponents()
    found = set()
    for v in product(*(range(t + 1) for t in top)):
        q = colon(ideal, v)
        if q.is_unit():
            continue
        if all(sum(e) == 1 for e in q.exps):
            found.add(PrimeSupport(n, q.support()))
    return tuple(sorted(found))
