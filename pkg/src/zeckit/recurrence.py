"""Exact evaluation of integer linear recurrences.

A recurrence of order ``k`` is

    a_n = c_1 a_{n-1} + c_2 a_{n-2} + ... + c_k a_{n-k}

with initial values ``a_0 .. a_{k-1}``.  Forward evaluation keeps only a
rolling window of the last ``k`` terms.  Negative indices are reached by
solving the recurrence for its oldest term, which may leave the integers
when ``|c_k| != 1``; those values come back as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    IndexCapExceeded,
    NegativeIndexUnsupported,
    SpecNotSecondOrder,
    SpecNotTilingConvention,
)

DEFAULT_INDEX_CAP = 10**6
CAP_ENV_VAR = "ZECKIT_INDEX_CAP"


def index_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_INDEX_CAP


def _check_cap(n: int, cap: int | None) -> None:
    limit = index_cap(cap)
    if abs(n) > limit:
        raise IndexCapExceeded(f"|n| = {abs(n)} exceeds the index cap {limit}")


@dataclass(frozen=True)
class RecurrenceSpec:
    coefficients: tuple[int, ...]
    initials: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        object.__setattr__(self, "initials", tuple(int(a) for a in self.initials))
        if not self.coefficients:
            raise ValueError("a recurrence needs at least one coefficient")
        if len(self.initials) != len(self.coefficients):
            raise ValueError(
                f"order {len(self.coefficients)} recurrence needs "
                f"{len(self.coefficients)} initial values, got {len(self.initials)}"
            )

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def s(self) -> int:
        return self.coefficients[0]

    @property
    def t(self) -> int:
        if self.order != 2:
            raise SpecNotSecondOrder(f"order {self.order} spec has no 't' coefficient")
        return self.coefficients[1]

    def with_initials(self, initials: Sequence[int]) -> RecurrenceSpec:
        return RecurrenceSpec(self.coefficients, tuple(initials))

    def to_json(self) -> dict:
        return {"coefficients": list(self.coefficients), "initials": list(self.initials)}

    @classmethod
    def from_json(cls, data: dict) -> RecurrenceSpec:
        return cls(tuple(data["coefficients"]), tuple(data["initials"]))


def tiling_initials(coefficients: Sequence[int]) -> tuple[int, ...]:
    """Initial values that make ``a_n`` count colored n-board tilings (``a_0 = 1``)."""
    values = [1]
    for j in range(1, len(coefficients)):
        values.append(sum(coefficients[i - 1] * values[j - i] for i in range(1, j + 1)))
    return tuple(values)


def is_tiling_convention(spec: RecurrenceSpec) -> bool:
    return spec.initials == tiling_initials(spec.coefficients)


def tiling_spec(spec: RecurrenceSpec) -> RecurrenceSpec:
    return spec.with_initials(tiling_initials(spec.coefficients))


@dataclass(frozen=True)
class SequenceFamily:
    """A named (or custom) sequence: a tag plus the recurrence it expands to."""

    tag: str
    spec: RecurrenceSpec

    @property
    def is_second_order(self) -> bool:
        return self.spec.order == 2

    def fundamental(self) -> SequenceFamily:
        """Same recurrence started at (0, 1); for second order this is the ``U`` sequence."""
        if not self.is_second_order:
            raise SpecNotSecondOrder(f"family {self.tag!r} is not second order")
        if self.spec.initials == (0, 1):
            return self
        return SequenceFamily(f"fundamental({self.tag})", self.spec.with_initials((0, 1)))

    def to_json(self):
        if self.tag in NAMED_FAMILIES:
            return self.tag
        return self.spec.to_json()


FIBONACCI = SequenceFamily("fibonacci", RecurrenceSpec((1, 1), (0, 1)))
LUCAS = SequenceFamily("lucas", RecurrenceSpec((1, 1), (2, 1)))
PELL = SequenceFamily("pell", RecurrenceSpec((2, 1), (0, 1)))
# Seeds (2, 2): with (2, 1) the sequence would be 2, 1, 4, 9, ... and Q_n/2 would not be integral.
PELL_LUCAS = SequenceFamily("pell-lucas", RecurrenceSpec((2, 1), (2, 2)))

NAMED_FAMILIES = {f.tag: f for f in (FIBONACCI, LUCAS, PELL, PELL_LUCAS)}


def tiling_of(spec_or_family: RecurrenceSpec | SequenceFamily) -> SequenceFamily:
    spec = spec_or_family.spec if isinstance(spec_or_family, SequenceFamily) else spec_or_family
    name = spec_or_family.tag if isinstance(spec_or_family, SequenceFamily) else "custom"
    return SequenceFamily(f"tiling({name})", tiling_spec(spec))


def custom(spec: RecurrenceSpec) -> SequenceFamily:
    return SequenceFamily("custom", spec)


def family_from_json(data) -> SequenceFamily:
    if isinstance(data, str):
        return get_family(data)
    return custom(RecurrenceSpec.from_json(data))


def get_family(name: str) -> SequenceFamily:
    key = name.strip().lower().replace("_", "-")
    if key == "pelllucas":
        key = "pell-lucas"
    try:
        return NAMED_FAMILIES[key]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; expected one of {', '.join(NAMED_FAMILIES)}"
        ) from None


def _as_spec(source: RecurrenceSpec | SequenceFamily) -> RecurrenceSpec:
    return source.spec if isinstance(source, SequenceFamily) else source


def step_forward(spec: RecurrenceSpec, window: Sequence) -> tuple:
    """Given ``(a_{m}, ..., a_{m+k-1})`` return ``(a_{m+1}, ..., a_{m+k})``."""
    k = spec.order
    nxt = sum(spec.coefficients[i] * window[k - 1 - i] for i in range(k))
    return tuple(window[1:]) + (nxt,)


def step_backward(spec: RecurrenceSpec, window: Sequence) -> tuple:
    """Given ``(a_{m}, ..., a_{m+k-1})`` return ``(a_{m-1}, ..., a_{m+k-2})``."""
    k = spec.order
    c_k = spec.coefficients[-1]
    if c_k == 0:
        raise NegativeIndexUnsupported("trailing coefficient is zero; recurrence cannot run backwards")
    # a_{m+k-1} = sum_{i=1..k-1} c_i a_{m+k-1-i} + c_k a_{m-1}
    partial = sum(spec.coefficients[i - 1] * window[k - 1 - i] for i in range(1, k))
    prev = Fraction(window[k - 1] - partial, c_k)
    if prev.denominator == 1:
        prev = int(prev)
    return (prev,) + tuple(window[:-1])


def iterate(source: RecurrenceSpec | SequenceFamily) -> Iterator[int]:
    """Yield ``a_0, a_1, a_2, ...`` forever."""
    spec = _as_spec(source)
    window: deque[int] = deque(spec.initials, maxlen=spec.order)
    yield from spec.initials
    while True:
        nxt = sum(c * window[-1 - i] for i, c in enumerate(spec.coefficients))
        window.append(nxt)
        yield nxt


def eval_general(spec: RecurrenceSpec, n: int, *, cap: int | None = None) -> int:
    if n < 0:
        raise ValueError("eval_general takes nonnegative indices; use eval_at for negative ones")
    _check_cap(n, cap)
    k = spec.order
    if n < k:
        return spec.initials[n]
    window = spec.initials
    for _ in range(n - k + 1):
        window = step_forward(spec, window)
    return window[-1]


def eval_at(family: SequenceFamily | RecurrenceSpec, n: int, *, cap: int | None = None) -> Fraction:
    """Exact value at any signed index, as a reduced fraction."""
    spec = _as_spec(family)
    _check_cap(n, cap)
    if n >= 0:
        return Fraction(eval_general(spec, n, cap=cap))
    window = spec.initials
    for _ in range(-n):
        window = step_backward(spec, window)
    return Fraction(window[0])


def terms(family: SequenceFamily | RecurrenceSpec, lo: int, hi: int, *, cap: int | None = None) -> dict[int, Fraction]:
    """All values on ``[lo, hi]`` in one sweep, keyed by index."""
    spec = _as_spec(family)
    _check_cap(lo, cap)
    _check_cap(hi, cap)
    out: dict[int, Fraction] = {}
    if hi < lo:
        return out
    k = spec.order
    # window holds indices [start, start+k)
    start, window = 0, tuple(spec.initials)
    while start > lo:
        window = step_backward(spec, window)
        start -= 1
    while start < lo:
        window = step_forward(spec, window)
        start += 1
    for idx in range(lo, hi + 1):
        out[idx] = Fraction(window[0])
        window = step_forward(spec, window)
    return out


def add_formula(spec: RecurrenceSpec, m: int, n: int) -> int:
    """``u_{m+n}`` computed as ``u_m u_n + t u_{m-1} u_{n-1}`` (tiling convention)."""
    if spec.order != 2:
        raise SpecNotSecondOrder(f"addition formula needs a second-order spec, got order {spec.order}")
    if not is_tiling_convention(spec):
        raise SpecNotTilingConvention(
            f"initials {spec.initials} are not the tiling initials {tiling_initials(spec.coefficients)}"
        )
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    u = terms(spec, 0, max(m, n))
    return int(u[m] * u[n] + spec.t * u[m - 1] * u[n - 1])
