"""Exact arithmetic in Z[phi] and Z[sqrt 2].

Elements are ``a + b*w`` with integer coordinates, where ``w`` is the golden
ratio (``w^2 = w + 1``) or ``sqrt 2`` (``w^2 = 2``).  No division: inverses
exist only for units, and every identity is checked by exact equality.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import OddParameter, NotAUnit
from .recurrence import FIBONACCI, PELL, eval_at


class RingTag(enum.Enum):
    GOLDEN = "golden"
    SILVER = "silver"


@dataclass(frozen=True)
class QuadInt:
    ring: RingTag
    a: int
    b: int = 0

    def _coerce(self, other) -> QuadInt:
        if isinstance(other, QuadInt):
            if other.ring is not self.ring:
                raise TypeError(f"cannot mix {self.ring.value} and {other.ring.value} ring elements")
            return other
        if isinstance(other, int):
            return QuadInt(self.ring, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.ring, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> QuadInt:
        return QuadInt(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadInt(self.ring, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        if self.ring is RingTag.GOLDEN:
            return QuadInt(self.ring, a * c + b * d, a * d + b * c + b * d)
        return QuadInt(self.ring, a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, r: int) -> QuadInt:
        return ring_pow(self, r)

    def conj(self) -> QuadInt:
        if self.ring is RingTag.GOLDEN:
            # phi -> 1 - phi
            return QuadInt(self.ring, self.a + self.b, -self.b)
        return QuadInt(self.ring, self.a, -self.b)

    def norm(self) -> int:
        prod = self * self.conj()
        assert prod.b == 0
        return prod.a

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def inverse(self) -> QuadInt:
        n = self.norm()
        if n not in (1, -1):
            raise NotAUnit(f"{self} has norm {n} and is not invertible in the {self.ring.value} ring")
        c = self.conj()
        return QuadInt(self.ring, c.a * n, c.b * n)

    def is_integer(self) -> bool:
        return self.b == 0

    def approx(self) -> float:
        """Floating value, for display only."""
        w = (1 + math.sqrt(5)) / 2 if self.ring is RingTag.GOLDEN else math.sqrt(2)
        return self.a + self.b * w

    def __str__(self) -> str:
        sym = "φ" if self.ring is RingTag.GOLDEN else "√2"
        return f"{self.a}{self.b:+}{sym}"


def one(ring: RingTag) -> QuadInt:
    return QuadInt(ring, 1, 0)


PHI = QuadInt(RingTag.GOLDEN, 0, 1)
PHI_BAR = PHI.conj()
SQRT5 = QuadInt(RingTag.GOLDEN, -1, 2)
SQRT2 = QuadInt(RingTag.SILVER, 0, 1)
SILVER = QuadInt(RingTag.SILVER, 1, 1)
SILVER_BAR = SILVER.conj()


def ring_pow(x: QuadInt, r: int) -> QuadInt:
    if r < 0:
        return ring_pow(x.inverse(), -r)
    result, base = one(x.ring), x
    while r:
        if r & 1:
            result = result * base
        base = base * base
        r >>= 1
    return result


def _family_setup(family: str):
    key = family.lower()
    if key in ("fibonacci", "golden"):
        return PHI, FIBONACCI
    if key in ("pell", "silver"):
        return SILVER, PELL
    raise ValueError(f"family must be 'fibonacci' or 'pell', got {family!r}")


def _int(value) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer sequence value, got {value}")
    return int(value.numerator)


def binet_check(n: int) -> bool:
    """Exact Binet check at index ``n`` for both Fibonacci and Pell."""
    f_n = _int(eval_at(FIBONACCI, n))
    p_n = _int(eval_at(PELL, n))
    golden = ring_pow(PHI, n) - ring_pow(PHI_BAR, n) == SQRT5 * f_n
    silver = ring_pow(SILVER, n) - ring_pow(SILVER_BAR, n) == (2 * SQRT2) * p_n
    return golden and silver


def lucas_power_sum(r: int, family: str = "fibonacci", *, strict: bool = True) -> tuple[int, bool]:
    """Return ``(a, holds)`` where ``w^r + w^-r = a + b*w``.

    ``holds`` is true when ``b == 0`` and ``a`` equals ``S_{r+1} + S_{r-1}``.
    With ``strict`` set, odd ``r`` raises :class:`OddParameter`; otherwise the
    sum is still computed and reported.
    """
    if strict and r % 2:
        raise OddParameter(f"r = {r} is odd; the power-sum identity is stated for even r")
    w, fam = _family_setup(family)
    total = ring_pow(w, r) + ring_pow(w, -r)
    expected = _int(eval_at(fam, r + 1) + eval_at(fam, r - 1))
    return total.a, total.b == 0 and total.a == expected
