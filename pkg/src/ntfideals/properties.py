"""Bounded checks of torsion-freeness and persistence properties.

Every verdict here is only claimed up to an explicit power bound ``K``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .decomposition import associated_primes, minimal_primes, symbolic_power
from .monomial import (
    InputError,
    MonomialIdeal,
    PrimeSupport,
    colon,
    intersect_all,
    localization,
    multiply,
    power,
)

DEFAULT_K = 4


def _primes_json(primes) -> list:
    return [list(p.vars) for p in primes]


@dataclass(frozen=True)
class AssProfile:
    """``k -> Ass(R/I^k)`` for ``k = 1..K``."""

    by_power: dict

    @property
    def bound(self) -> int:
        return max(self.by_power)

    def __getitem__(self, k: int) -> tuple:
        return self.by_power[k]

    def to_json(self) -> dict:
        return {str(k): _primes_json(v) for k, v in sorted(self.by_power.items())}


def _powers(ideal: MonomialIdeal, bound: int):
    pw = ideal
    for k in range(1, bound + 1):
        if k > 1:
            pw = multiply(pw, ideal)
        yield k, pw


def ass_of_powers(ideal: MonomialIdeal, bound: int) -> AssProfile:
    if bound < 1:
        raise InputError("power bound must be >= 1")
    if ideal.is_unit():
        return AssProfile({k: () for k in range(1, bound + 1)})
    return AssProfile({k: associated_primes(pw) for k, pw in _powers(ideal, bound)})


@dataclass(frozen=True)
class Verdict:
    """One of ``ntf``, ``nearly_ntf`` or ``fails``.

    ``nearly_ntf`` carries the exceptional prime (None when no exceptional
    prime showed up) and the threshold ``k0``; ``fails`` carries the witness
    primes and the power at which failure became certain.
    """

    kind: str
    prime: Optional[PrimeSupport] = None
    threshold: Optional[int] = None
    witnesses: tuple = ()
    power: Optional[int] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "nearly_ntf":
            out["prime"] = None if self.prime is None else list(self.prime.vars)
            out["threshold"] = self.threshold
        if self.kind == "fails":
            out["witnesses"] = _primes_json(self.witnesses)
            out["power"] = self.power
        return out


@dataclass(frozen=True)
class NtfReport:
    bound: int
    profile: AssProfile
    min_primes: tuple
    verdict: Verdict
    symbolic_equal: dict = field(default_factory=dict)

    def describe(self) -> str:
        v = self.verdict
        if v.kind == "ntf":
            return f"normally torsion-free up to K={self.bound}"
        if v.kind == "nearly_ntf":
            if v.prime is None:
                return f"nearly normally torsion-free up to K={self.bound} (no exceptional prime)"
            return (f"nearly normally torsion-free up to K={self.bound} "
                    f"(exceptional prime {v.prime}, threshold k0={v.threshold})")
        wit = ", ".join(map(str, v.witnesses))
        return f"fails at power {v.power} within K={self.bound}: {wit}"

    def to_json(self) -> dict:
        out = {
            "bound": self.bound,
            "verdict": self.verdict.to_json(),
            "summary": self.describe(),
            "min_primes": _primes_json(self.min_primes),
            "profile": self.profile.to_json(),
        }
        if self.symbolic_equal:
            out["symbolic_equals_ordinary"] = {str(k): v for k, v in sorted(self.symbolic_equal.items())}
        return out


def is_ntf_up_to(ideal: MonomialIdeal, bound: int = DEFAULT_K, stop_early: bool = False,
                 cross_check: bool = True) -> NtfReport:
    """``Ass(I^k) <= Ass(I)`` for ``k <= bound``.

    For square-free ideals ``I^k == I^(k)`` is also computed for each checked
    ``k`` and must agree with the associated-prime test. With ``stop_early``
    the profile ends at the first failing power.
    """
    if bound < 1:
        raise InputError("power bound must be >= 1")
    if ideal.is_unit():
        profile = AssProfile({k: () for k in range(1, bound + 1)})
        return NtfReport(bound, profile, (), Verdict("ntf"))
    mins = minimal_primes(ideal)
    by_power = {}
    base = None
    verdict = Verdict("ntf")
    symbolic = {}
    for k, pw in _powers(ideal, bound):
        ass = associated_primes(pw)
        by_power[k] = ass
        if base is None:
            base = set(ass)
        extra = tuple(p for p in ass if p not in base)
        if cross_check and ideal.is_squarefree():
            symbolic[k] = symbolic_power(ideal, k) == pw
            if symbolic[k] != (not extra):
                raise RuntimeError(f"symbolic power test disagrees with Ass at k={k}")
        if extra and verdict.kind == "ntf":
            verdict = Verdict("fails", witnesses=extra, power=k)
            if stop_early:
                break
    return NtfReport(bound, AssProfile(by_power), mins, verdict, symbolic)


def nearly_ntf_verdict(profile: AssProfile, mins: tuple) -> Verdict:
    """Classify a bounded Ass profile against the nearly torsion-free pattern."""
    bound = profile.bound
    minset = set(mins)
    first = [p for p in profile[1] if p not in minset]
    if first:
        return Verdict("fails", witnesses=tuple(first), power=1)
    k0 = bound
    for k in range(1, bound + 1):
        if any(p not in minset for p in profile[k]):
            k0 = k - 1
            break
    if k0 == bound:
        return Verdict("nearly_ntf", prime=None, threshold=bound)
    seen: list = []
    for k in range(k0 + 1, bound + 1):
        for p in profile[k]:
            if p not in minset and p not in seen:
                seen.append(p)
        if len(seen) >= 2:
            return Verdict("fails", witnesses=tuple(seen), power=k)
    return Verdict("nearly_ntf", prime=seen[0], threshold=k0)


def is_nearly_ntf_up_to(ideal: MonomialIdeal, bound: int = DEFAULT_K) -> NtfReport:
    """Ass equal to Min up to some ``k0``, then inside Min plus one fixed prime, up to ``bound``."""
    profile = ass_of_powers(ideal, bound)
    if ideal.is_unit():
        return NtfReport(bound, profile, (), Verdict("nearly_ntf", threshold=bound))
    mins = minimal_primes(ideal)
    return NtfReport(bound, profile, mins, nearly_ntf_verdict(profile, mins))


@dataclass(frozen=True)
class PersistenceReport:
    bound: int
    persistence: bool
    strong: bool
    symbolic_strong: bool
    first_violation: Optional[int]
    violations: dict

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "persistence": self.persistence,
            "strong": self.strong,
            "symbolic_strong": self.symbolic_strong,
            "first_violation": self.first_violation,
            "violations": {k: v for k, v in sorted(self.violations.items())},
        }


def persistence_checks(ideal: MonomialIdeal, bound: int = DEFAULT_K) -> PersistenceReport:
    """Persistence, strong persistence and symbolic strong persistence for ``k < bound``."""
    if bound < 2:
        raise InputError("persistence needs a bound of at least 2")
    if not ideal.is_proper():
        raise InputError("persistence checks need a proper non-zero ideal")
    pows = dict(_powers(ideal, bound))
    ass = {k: set(associated_primes(p)) for k, p in pows.items()}
    sym = {k: symbolic_power(ideal, k) for k in range(1, bound + 1)}
    violations = {"persistence": None, "strong": None, "symbolic_strong": None}
    for k in range(1, bound):
        if violations["persistence"] is None and not ass[k] <= ass[k + 1]:
            violations["persistence"] = k
        if violations["strong"] is None and colon(pows[k + 1], ideal) != pows[k]:
            violations["strong"] = k
        if violations["symbolic_strong"] is None and colon(sym[k + 1], sym[1]) != sym[k]:
            violations["symbolic_strong"] = k
    if violations["strong"] is None and violations["persistence"] is not None:
        raise RuntimeError("strong persistence held but persistence failed")
    hits = [k for k in violations.values() if k is not None]
    return PersistenceReport(
        bound,
        violations["persistence"] is None,
        violations["strong"] is None,
        violations["symbolic_strong"] is None,
        min(hits) if hits else None,
        violations,
    )


@dataclass(frozen=True)
class LocalizationCriterionReport:
    bound: int
    precondition: bool
    localizations: dict  # variable index -> NtfReport of I(m \ x_i)
    predicted_nearly_ntf: bool
    conclusion: Optional[NtfReport]

    @property
    def consistent(self) -> bool:
        if not self.predicted_nearly_ntf or self.conclusion is None:
            return True
        return self.conclusion.verdict.kind in ("ntf", "nearly_ntf")

    def describe(self) -> str:
        if not self.precondition:
            return "precondition failed: Ass(R/I) differs from Min(I)"
        if self.predicted_nearly_ntf:
            return (f"nearly-ntf predicted (every I(m \\ x_i) normally torsion-free up to K={self.bound}); "
                    f"direct check: {self.conclusion.describe()}")
        bad = [i for i, r in self.localizations.items() if r.verdict.kind != "ntf"]
        return f"no prediction: I(m \\ x_i) not ntf up to K={self.bound} for i in {bad}"

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "precondition": self.precondition,
            "predicted_nearly_ntf": self.predicted_nearly_ntf,
            "consistent": self.consistent,
            "summary": self.describe(),
            "localizations": {str(i): r.verdict.to_json() for i, r in sorted(self.localizations.items())},
            "conclusion": None if self.conclusion is None else self.conclusion.verdict.to_json(),
        }


def localization_criterion_check(ideal: MonomialIdeal, bound: int = DEFAULT_K) -> LocalizationCriterionReport:
    """If Ass = Min and every ``I(m \\ x_i)`` is ntf, ``I`` should be nearly ntf.

    ``m`` is the maximal ideal on the support of ``I``.
    """
    if not ideal.is_proper():
        raise InputError("criterion needs a proper non-zero ideal")
    if set(associated_primes(ideal)) != set(minimal_primes(ideal)):
        return LocalizationCriterionReport(bound, False, {}, False, None)
    m = PrimeSupport(ideal.n, ideal.support())
    locs = {}
    for i in m.vars:
        loc = localization(ideal, m.without(i)).padded
        locs[i] = is_ntf_up_to(loc, bound)
    predicted = all(r.verdict.kind == "ntf" for r in locs.values())
    conclusion = is_nearly_ntf_up_to(ideal, bound)
    return LocalizationCriterionReport(bound, True, locs, predicted, conclusion)


def intersection_type_ideal(degrees) -> MonomialIdeal:
    """``(m \\ x_1)^d_1 & ... & (m \\ x_n)^d_n`` in ``n = len(degrees)`` variables."""
    n = len(degrees)
    m = PrimeSupport.maximal(n)
    return intersect_all((power(m.without(i + 1).ideal(), d) for i, d in enumerate(degrees)), n)


def random_squarefree_ideal(rng: random.Random, n: int, max_gens: int = 4) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        supp = rng.sample(range(1, n + 1), rng.randint(1, n))
        gens.append(tuple(1 if i + 1 in supp else 0 for i in range(n)))
    return MonomialIdeal(n, gens)


def search_nearly_ntf_persistence(trials: int, n: int = 5, bound: int = 3, seed: int = 0) -> list:
    """Random search for nearly-ntf square-free ideals lacking (strong) persistence.

    Returns the ideals found (each with both reports). An empty list proves nothing.
    """
    rng = random.Random(seed)
    found = []
    for _ in range(trials):
        ideal = random_squarefree_ideal(rng, n)
        if not ideal.is_proper():
            continue
        near = is_nearly_ntf_up_to(ideal, bound)
        if near.verdict.kind != "nearly_ntf":
            continue
        pers = persistence_checks(ideal, bound)
        if not (pers.persistence and pers.strong):
            found.append((ideal, near, pers))
    return found
