"""Monomials, monomial ideals and the exact ideal operations built on them.

Exponent vectors are plain tuples of Python ints, so exponents never overflow.
Bulk work (products, lcm tables, divisibility filtering) is pushed through
numpy when the exponents fit comfortably in int64, and falls back to object
arrays otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

Exp = tuple  # tuple[int, ...]

# numpy int64 is used below this bound; beyond it object arrays keep exactness.
_INT64_SAFE = 1 << 60

# Largest boolean block (elements) built during vectorised divisibility checks.
_BLOCK = 1 << 22


class InputError(ValueError):
    """Raised for malformed or inconsistent input (wrong arity, bad index, ...)."""


def _as_array(exps: Sequence[Exp], n: int) -> np.ndarray:
    if not exps:
        return np.zeros((0, n), dtype=np.int64)
    top = max(max(e) if e else 0 for e in exps)
    dtype = np.int64 if top < _INT64_SAFE else object
    return np.array(exps, dtype=dtype).reshape(len(exps), n)


def _to_tuples(arr: np.ndarray) -> list:
    return [tuple(int(x) for x in row) for row in arr.tolist()]


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_exponents(exps: Iterable[Exp], n: int) -> tuple:
    """Return the divisibility-minimal vectors of ``exps``, sorted ascending."""
    uniq = sorted(set(exps), key=sum)
    if len(uniq) <= 48:
        kept: list = []
        for e in uniq:
            if not any(_divides(k, e) for k in kept):
                kept.append(e)
        return tuple(sorted(kept))

    # Equal-degree vectors only divide each other when equal (already deduped),
    # so each degree class is filtered against everything kept from lower degrees.
    kept_rows: list = []
    kept_arr = np.zeros((0, n), dtype=np.int64)
    i = 0
    while i < len(uniq):
        deg = sum(uniq[i])
        j = i
        while j < len(uniq) and sum(uniq[j]) == deg:
            j += 1
        group = uniq[i:j]
        if len(kept_rows) == 0:
            survivors = group
        else:
            garr = _as_array(group, n)
            alive = np.ones(len(group), dtype=bool)
            step = max(1, _BLOCK // max(1, len(kept_rows) * n))
            for s in range(0, len(group), step):
                block = garr[s:s + step]
                hit = np.all(kept_arr[None, :, :] <= block[:, None, :], axis=2).any(axis=1)
                alive[s:s + step] = ~hit
            survivors = [g for g, ok in zip(group, alive) if ok]
        if survivors:
            kept_rows.extend(survivors)
            kept_arr = _as_array(kept_rows, n)
        i = j
    return tuple(sorted(kept_rows))


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial ``x1^a1 * ... * xn^an`` stored as its exponent vector."""

    exponents: Exp

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in exps):
            raise InputError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> Monomial:
        """The variable ``x_i`` (1-based) in ``n`` variables."""
        if not 1 <= i <= n:
            raise InputError(f"variable index {i} outside 1..{n}")
        return cls(tuple(1 if k == i - 1 else 0 for k in range(n)))

    @classmethod
    def from_support(cls, indices: Iterable[int], n: int) -> Monomial:
        exps = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise InputError(f"variable index {i} outside 1..{n}")
            exps[i - 1] += 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple:
        """1-based indices of the variables dividing this monomial."""
        return tuple(i + 1 for i, a in enumerate(self.exponents) if a)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    def is_pure_power(self) -> bool:
        return len(self.support) <= 1

    def _check(self, other: Monomial) -> None:
        if other.n != self.n:
            raise InputError(f"monomials in {self.n} and {other.n} variables")

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return _divides(self.exponents, other.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple(a * k for a in self.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        self._check(other)
        if not other.divides(self):
            raise InputError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_exponents(self.exponents)


def format_exponents(e: Exp, sep: str = "*") -> str:
    parts = []
    for i, a in enumerate(e):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return sep.join(parts) if parts else "1"


_TERM = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int, offset: int = 0) -> Monomial:
    """Parse ``x1^4*x3`` (or ``1``) into a monomial in ``n`` variables.

    ``offset`` is only used to report positions inside a larger string.
    """
    s = text.strip()
    if s == "1":
        return Monomial.one(n)
    if not s:
        raise InputError(f"empty monomial at position {offset}")
    exps = [0] * n
    pos = offset + (len(text) - len(text.lstrip()))
    for factor in s.split("*"):
        m = _TERM.match(factor.strip())
        if m is None:
            raise InputError(f"malformed factor {factor.strip()!r} at position {pos}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise InputError(f"variable x{i} outside x1..x{n} at position {pos}")
        exps[i - 1] += int(m.group(2)) if m.group(2) is not None else 1
        pos += len(factor) + 1
    return Monomial(tuple(exps))


@dataclass(frozen=True, order=True)
class PrimeSupport:
    """The monomial prime ``(x_i : i in vars)`` in ``n`` variables."""

    n: int
    vars: tuple

    def __post_init__(self):
        vs = tuple(sorted(set(int(i) for i in self.vars)))
        if any(not 1 <= i <= self.n for i in vs):
            raise InputError(f"prime variables {vs} outside 1..{self.n}")
        object.__setattr__(self, "vars", vs)

    @classmethod
    def maximal(cls, n: int) -> PrimeSupport:
        return cls(n, tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.vars)

    def __contains__(self, i: int) -> bool:
        return i in self.vars

    def issubset(self, other: PrimeSupport) -> bool:
        return set(self.vars) <= set(other.vars)

    def without(self, i: int) -> PrimeSupport:
        return PrimeSupport(self.n, tuple(v for v in self.vars if v != i))

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, [Monomial.variable(i, self.n) for i in self.vars])

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" for i in self.vars) + ")"


class Localization(NamedTuple):
    """A monomial localization in both of its representations.

    ``restricted`` lives in the polynomial ring on ``variables`` (its i-th
    variable is ``x_{variables[i]}``); ``padded`` is the same ideal in the
    original ambient ring.
    """

    restricted: "MonomialIdeal"
    variables: tuple
    padded: "MonomialIdeal"

    def __str__(self) -> str:
        return self.padded.to_text(with_header=False)


GenLike = Union[Monomial, Sequence[int]]


class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generating set.

    ``gens`` are the minimal generators in ascending lexicographic order of
    their exponent vectors, so equality of objects is equality of ideals.
    The zero ideal has no generators; the unit ideal has the single generator 1.
    """

    __slots__ = ("n", "exps", "_hash")

    def __init__(self, n: int, gens: Iterable[GenLike] = ()):
        if n < 0:
            raise InputError("number of variables must be non-negative")
        rows = []
        for g in gens:
            e = g.exponents if isinstance(g, Monomial) else tuple(int(a) for a in g)
            if len(e) != n:
                raise InputError(f"generator {e} has length {len(e)}, expected {n}")
            if any(a < 0 for a in e):
                raise InputError(f"negative exponent in {e}")
            rows.append(e)
        self.n = n
        self.exps = minimal_exponents(rows, n)
        self._hash = None

    @classmethod
    def _canonical(cls, n: int, exps: tuple) -> MonomialIdeal:
        obj = cls.__new__(cls)
        obj.n = n
        obj.exps = exps
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls._canonical(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls._canonical(n, ((0,) * n,))

    # -- basic structure -------------------------------------------------
    @property
    def gens(self) -> tuple:
        return tuple(Monomial(e) for e in self.exps)

    def __len__(self) -> int:
        return len(self.exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.exps == other.exps

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.exps))
        return self._hash

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.n}, [{', '.join(map(str, self.gens))}])"

    def __str__(self) -> str:
        return self.to_text(with_header=False)

    def to_text(self, with_header: bool = True) -> str:
        body = ", ".join(format_exponents(e) for e in self.exps)
        body = f"({body})" if not with_header else body
        return f"vars={self.n}; {body}" if with_header else body

    def to_json(self) -> dict:
        return {"vars": self.n, "gens": [list(e) for e in self.exps]}

    def is_zero(self) -> bool:
        return not self.exps

    def is_unit(self) -> bool:
        return len(self.exps) == 1 and not any(self.exps[0])

    def is_proper(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(a <= 1 for e in self.exps for a in e)

    def is_equigenerated(self) -> bool:
        return len({sum(e) for e in self.exps}) <= 1

    def support(self) -> tuple:
        return tuple(i + 1 for i in range(self.n) if any(e[i] for e in self.exps))

    def max_exponents(self) -> Exp:
        return tuple(max((e[i] for e in self.exps), default=0) for i in range(self.n))

    def _check(self, other) -> None:
        if other.n != self.n:
            raise InputError(f"ideals in {self.n} and {other.n} variables")

    # -- membership and containment ---------------------------------------
    def __contains__(self, m: GenLike) -> bool:
        return membership(m, self)

    def __le__(self, other: MonomialIdeal) -> bool:
        self._check(other)
        return all(membership(e, other) for e in self.exps)

    def __ge__(self, other: MonomialIdeal) -> bool:
        return other <= self

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check(other)
        return MonomialIdeal._canonical(self.n, minimal_exponents(self.exps + other.exps, self.n))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return multiply(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)


def minimalize(monomials: Iterable[GenLike], n: int) -> MonomialIdeal:
    """The ideal generated by ``monomials``, in canonical minimal form."""
    return MonomialIdeal(n, monomials)


def _exps_of(m: GenLike) -> Exp:
    return m.exponents if isinstance(m, Monomial) else tuple(m)


def membership(m: GenLike, ideal: MonomialIdeal) -> bool:
    e = _exps_of(m)
    if len(e) != ideal.n:
        raise InputError(f"monomial has {len(e)} variables, ideal has {ideal.n}")
    return any(_divides(g, e) for g in ideal.exps)


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    a._check(b)
    n = a.n
    if a.is_zero() or b.is_zero():
        return MonomialIdeal.zero(n)
    if len(a) * len(b) <= 256:
        cand = [tuple(x + y for x, y in zip(u, v)) for u in a.exps for v in b.exps]
    else:
        A, B = _as_array(a.exps, n), _as_array(b.exps, n)
        cand = _to_tuples((A[:, None, :] + B[None, :, :]).reshape(-1, n))
    return MonomialIdeal._canonical(n, minimal_exponents(cand, n))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """``ideal ** k``; ``k = 0`` gives the unit ideal by convention."""
    if k < 0:
        raise InputError("power must be non-negative")
    if k == 0:
        return MonomialIdeal.unit(ideal.n)
    result = ideal
    for _ in range(k - 1):
        result = multiply(result, ideal)
    return result


def _colon_exps(exps: tuple, v: Exp) -> list:
    return [tuple(max(a - b, 0) for a, b in zip(u, v)) for u in exps]


def colon(ideal: MonomialIdeal, by: Union[GenLike, MonomialIdeal]) -> MonomialIdeal:
    """``(ideal : by)`` for a monomial or a monomial ideal ``by``."""
    n = ideal.n
    if isinstance(by, MonomialIdeal):
        ideal._check(by)
        if by.is_zero():
            raise InputError("colon by the zero ideal")
        return reduce(intersect, (colon(ideal, g) for g in by.exps))
    v = _exps_of(by)
    if len(v) != n:
        raise InputError(f"monomial has {len(v)} variables, ideal has {n}")
    return MonomialIdeal._canonical(n, minimal_exponents(_colon_exps(ideal.exps, v), n))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    a._check(b)
    n = a.n
    if a.is_zero() or b.is_zero():
        return MonomialIdeal.zero(n)
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    if len(a) * len(b) <= 256:
        cand = [tuple(max(x, y) for x, y in zip(u, v)) for u in a.exps for v in b.exps]
    else:
        A, B = _as_array(a.exps, n), _as_array(b.exps, n)
        cand = _to_tuples(np.maximum(A[:, None, :], B[None, :, :]).reshape(-1, n))
    return MonomialIdeal._canonical(n, minimal_exponents(cand, n))


def intersect_all(ideals: Iterable[MonomialIdeal], n: int) -> MonomialIdeal:
    """Intersection of a family of ideals; the empty family gives the unit ideal."""
    result = MonomialIdeal.unit(n)
    # small ideals first keeps the intermediate lcm tables short
    for ideal in sorted(ideals, key=len):
        result = intersect(result, ideal)
    return result


def saturation(ideal: MonomialIdeal, v: GenLike) -> MonomialIdeal:
    """``(ideal : v^infinity)``, computed by iterating the colon until it stabilises."""
    current = ideal
    while True:
        nxt = colon(current, v)
        if nxt == current:
            return current
        current = nxt


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    n = ideal.n
    return MonomialIdeal._canonical(
        n, minimal_exponents((tuple(min(a, 1) for a in e) for e in ideal.exps), n)
    )


def deletion(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """Set ``x_i = 0``: drop every generator divisible by ``x_i``."""
    if not 1 <= i <= ideal.n:
        raise InputError(f"variable index {i} outside 1..{ideal.n}")
    return MonomialIdeal._canonical(ideal.n, tuple(e for e in ideal.exps if e[i - 1] == 0))


def localization(ideal: MonomialIdeal, p: PrimeSupport) -> Localization:
    """Monomial localization at ``p``: every variable outside ``p`` becomes 1."""
    if p.n != ideal.n:
        raise InputError(f"prime in {p.n} variables, ideal in {ideal.n}")
    keep = [i - 1 for i in p.vars]
    mask = [0] * ideal.n
    for i in keep:
        mask[i] = 1
    padded = MonomialIdeal._canonical(
        ideal.n,
        minimal_exponents((tuple(a * m for a, m in zip(e, mask)) for e in ideal.exps), ideal.n),
    )
    restricted = MonomialIdeal._canonical(
        len(keep), tuple(sorted(tuple(e[i] for i in keep) for e in padded.exps))
    )
    return Localization(restricted, p.vars, padded)


def strip_common_factor(ideal: MonomialIdeal) -> tuple:
    """Split ``ideal = h * J`` with ``h`` the gcd of all minimal generators."""
    if ideal.is_zero():
        raise InputError("the zero ideal has no common factor")
    h = tuple(min(col) for col in zip(*ideal.exps))
    rest = MonomialIdeal._canonical(
        ideal.n, tuple(sorted(tuple(a - b for a, b in zip(e, h)) for e in ideal.exps))
    )
    return Monomial(h), rest


def principal(m: GenLike, n: int) -> MonomialIdeal:
    return MonomialIdeal(n, [m])


def embed(ideal: MonomialIdeal, n: int, variables: Sequence[int] | None = None) -> MonomialIdeal:
    """Place ``ideal`` into ``n`` variables, its i-th variable going to ``variables[i]``."""
    if variables is None:
        variables = range(1, ideal.n + 1)
    variables = list(variables)
    if len(variables) != ideal.n:
        raise InputError("variable map has the wrong length")
    rows = []
    for e in ideal.exps:
        row = [0] * n
        for a, v in zip(e, variables):
            row[v - 1] += a
        rows.append(tuple(row))
    return MonomialIdeal(n, rows)
