"""Identities of the shape ``c * S(n) = sum_i S(n + e_i)``.

Symbolic verification rewrites each shifted term in the basis
``(S(n), S(n-1))``: for any solution of ``S(n+2) = s S(n+1) + t S(n)``,

    S(n + e) = U(e+1) S(n) + t U(e) S(n-1)

where ``U`` is the same recurrence started at ``(0, 1)`` and extended to
negative indices.  An identity holds for every ``n`` exactly when the
coefficients sum to ``(c, 0)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    FamilyNotSecondOrder,
    OddPellLucasValue,
    OddR,
    RangeBelowMinN,
    TNotOne,
    WindowTooLarge,
)
from .quadring import PHI, SILVER, QuadInt, one, ring_pow
from .recurrence import (
    FIBONACCI,
    LUCAS,
    PELL,
    PELL_LUCAS,
    SequenceFamily,
    eval_at,
    family_from_json,
    terms,
)

SYMBOLIC = "symbolic"
NUMERIC = "numeric"
MAX_WINDOW = 16


def default_min_n(offsets: Sequence[int]) -> int:
    return max(0, -min(offsets))


@dataclass(frozen=True)
class IdentityPattern:
    family: SequenceFamily
    multiplier: int
    offsets: tuple[int, ...]
    min_n: int | None = None

    def __post_init__(self) -> None:
        offsets = tuple(sorted((int(e) for e in self.offsets), reverse=True))
        if not offsets:
            raise ValueError("an identity needs at least one offset")
        if len(set(offsets)) != len(offsets):
            raise ValueError(f"offsets {list(self.offsets)} are not distinct")
        if self.multiplier < 1:
            raise ValueError(f"multiplier must be a positive integer, got {self.multiplier}")
        object.__setattr__(self, "offsets", offsets)
        floor = default_min_n(offsets)
        if self.min_n is None:
            object.__setattr__(self, "min_n", floor)
        elif self.min_n < floor:
            raise ValueError(f"min_n = {self.min_n} would touch negative indices; need at least {floor}")

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "multiplier": self.multiplier,
            "offsets": list(self.offsets),
            "min_n": self.min_n,
        }

    @classmethod
    def from_json(cls, data: dict) -> IdentityPattern:
        return cls(
            family_from_json(data["family"]),
            int(data["multiplier"]),
            tuple(data["offsets"]),
            data.get("min_n"),
        )

    def __str__(self) -> str:
        sym = {"fibonacci": "F", "lucas": "L", "pell": "P", "pell-lucas": "Q"}.get(self.family.tag, "S")
        rhs = " + ".join(f"{sym}(n{e:+d})" if e else f"{sym}(n)" for e in self.offsets)
        return f"{self.multiplier}{sym}(n) = {rhs}, n >= {self.min_n}"


@dataclass(frozen=True)
class Witness:
    n: int
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {"n": self.n, "lhs": _num_json(self.lhs), "rhs": _num_json(self.rhs)}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    mode: str
    witness: Witness | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"holds": self.holds, "mode": self.mode}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        out.update(self.detail)
        return out


@dataclass(frozen=True)
class LinearForm:
    alpha: Fraction
    beta: Fraction


def _num_json(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def verify_numeric(p: IdentityPattern, n_lo: int, n_hi: int) -> Verdict:
    if n_lo < p.min_n:
        raise RangeBelowMinN(f"range starts at {n_lo}, below the identity's min_n = {p.min_n}")
    if n_hi < n_lo:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    values = terms(p.family, n_lo + min(0, min(p.offsets)), n_hi + max(0, max(p.offsets)))
    for n in range(n_lo, n_hi + 1):
        lhs = p.multiplier * values[n]
        rhs = sum((values[n + e] for e in p.offsets), Fraction(0))
        if lhs != rhs:
            return Verdict(False, NUMERIC, Witness(n, lhs, rhs))
    return Verdict(True, NUMERIC)


def reduce_to_linear_form(family: SequenceFamily, e: int) -> LinearForm:
    """Coefficients with ``S(n+e) = alpha S(n) + beta S(n-1)``."""
    if not family.is_second_order:
        raise FamilyNotSecondOrder(f"family {family.tag!r} has order {family.spec.order}")
    u = family.fundamental()
    return LinearForm(eval_at(u, e + 1), family.spec.t * eval_at(u, e))


def verify_symbolic(p: IdentityPattern) -> Verdict:
    forms = [reduce_to_linear_form(p.family, e) for e in p.offsets]
    alpha = sum((f.alpha for f in forms), Fraction(0))
    beta = sum((f.beta for f in forms), Fraction(0))
    holds = alpha == p.multiplier and beta == 0
    return Verdict(holds, SYMBOLIC, detail={"alpha_sum": _num_json(alpha), "beta_sum": _num_json(beta)})


def family_pattern(family: SequenceFamily, r: int) -> IdentityPattern:
    """``(U(r+1) + U(r-1)) S(n) = S(n+r) + S(n-r)`` without checking hypotheses."""
    u = family.fundamental()
    c = eval_at(u, r + 1) + eval_at(u, r - 1)
    if c.denominator != 1 or c < 1:
        raise ValueError(f"multiplier {c} is not a positive integer")
    return IdentityPattern(family, int(c), (r, -r), min_n=r)


def family_generate(family: SequenceFamily, r: int) -> IdentityPattern:
    if not family.is_second_order:
        raise FamilyNotSecondOrder(f"family {family.tag!r} has order {family.spec.order}")
    if family.spec.t != 1:
        raise TNotOne(f"the family identity needs t = 1, family {family.tag!r} has t = {family.spec.t}")
    if r < 2 or r % 2:
        raise OddR(f"r must be even and at least 2, got {r}")
    return family_pattern(family, r)


# --- discovery by exact power sums -------------------------------------------

_RINGS = {"fibonacci": (PHI, 2), "pell": (SILVER, 1)}


def _subset_sums(exponents: list[int], powers: dict[int, QuadInt], gap: int):
    """Yield ``(subset, (a, b))`` for subsets of ascending ``exponents`` with the given gap."""

    def rec(i: int, last: int | None, chosen: tuple[int, ...], a: int, b: int):
        if i == len(exponents):
            yield chosen, (a, b)
            return
        yield from rec(i + 1, last, chosen, a, b)
        e = exponents[i]
        if last is None or e - last >= gap:
            w = powers[e]
            yield from rec(i + 1, e, chosen + (e,), a + w.a, b + w.b)

    return rec(0, None, (), 0, 0)


def discover(family: SequenceFamily | str, c: int, window: int = 12, *, gap: int | None = None) -> list[IdentityPattern]:
    """All offset sets ``E`` in ``[-window, window]`` with ``sum w^e = c`` exactly.

    ``w`` is the golden ratio for Fibonacci and the silver ratio for Pell.
    ``gap`` is the minimum spacing between chosen exponents (default 2 for
    Fibonacci, 1 for Pell).  The search splits the window into negative and
    nonnegative halves and joins them on the exact ring value.
    """
    if isinstance(family, str):
        family = {"fibonacci": FIBONACCI, "pell": PELL}.get(family.lower(), None) or family_from_json(family)
    if family.tag not in _RINGS:
        raise ValueError(f"discovery supports fibonacci and pell, not {family.tag!r}")
    if window > MAX_WINDOW:
        raise WindowTooLarge(f"window {window} exceeds the search bound {MAX_WINDOW}")
    if window < 0:
        raise ValueError("window must be nonnegative")
    if c < 1:
        return []
    w, default_gap = _RINGS[family.tag]
    gap = default_gap if gap is None else gap
    powers = {0: one(w.ring)}
    for e in range(1, window + 1):
        powers[e] = powers[e - 1] * w
        powers[-e] = ring_pow(w, -e)

    # low half indexed by value; the second table excludes subsets touching -1
    low_all: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    low_far: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for subset, value in _subset_sums(list(range(-window, 0)), powers, gap):
        low_all.setdefault(value, []).append(subset)
        if not subset or 0 - subset[-1] >= gap:
            low_far.setdefault(value, []).append(subset)

    found = []
    for high, (a, b) in _subset_sums(list(range(0, window + 1)), powers, gap):
        table = low_far if high and high[0] == 0 else low_all
        for low in table.get((c - a, -b), ()):
            offsets = low + high
            if offsets:
                found.append(IdentityPattern(family, c, offsets))
    found.sort(key=lambda p: p.offsets, reverse=True)
    return found


def power_sum(family: SequenceFamily | str, offsets: Sequence[int]) -> QuadInt:
    tag = family if isinstance(family, str) else family.tag
    w, _ = _RINGS[tag]
    total = QuadInt(w.ring, 0, 0)
    for e in offsets:
        total = total + ring_pow(w, e)
    return total


def approx_terms(family: SequenceFamily | str, offsets: Sequence[int]) -> list[float]:
    """Floating values of each ``w^e``, for display."""
    tag = family if isinstance(family, str) else family.tag
    w = (1 + math.sqrt(5)) / 2 if tag == "fibonacci" else 1 + math.sqrt(2)
    return [w**e for e in offsets]


# --- Diophantine characterisations -------------------------------------------

FIB_LUCAS = "fib-lucas"
PELL_PELL_LUCAS = "pell-pell-lucas"


def diophantine_check(kind: str, n: int) -> bool:
    if n < 0:
        raise ValueError("n must be nonnegative")
    sign = -1 if n % 2 else 1
    if kind == FIB_LUCAS:
        f, l = int(eval_at(FIBONACCI, n)), int(eval_at(LUCAS, n))
        return l * l - 5 * f * f == 4 * sign
    if kind == PELL_PELL_LUCAS:
        p, q = int(eval_at(PELL, n)), int(eval_at(PELL_LUCAS, n))
        if q % 2:
            raise OddPellLucasValue(f"Q_{n} = {q} is odd")
        x = q // 2
        return x * x - 2 * p * p == sign
    raise ValueError(f"kind must be {FIB_LUCAS!r} or {PELL_PELL_LUCAS!r}, got {kind!r}")
