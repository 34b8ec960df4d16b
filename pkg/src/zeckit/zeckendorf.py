"""Zeckendorf and negafibonacci codecs."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import islice
from typing import Iterable

from .errors import InvalidRepresentation, NonPositiveInput
from .recurrence import FIBONACCI, iterate

ZECKENDORF = "zeckendorf"
NEGAFIBONACCI = "negafibonacci"

_fib_table: list[int] = list(islice(iterate(FIBONACCI), 100))


def fib(k: int) -> int:
    """Fibonacci number at any signed index, from a growing table."""
    m = abs(k)
    while m >= len(_fib_table):
        _fib_table.append(_fib_table[-1] + _fib_table[-2])
    value = _fib_table[m]
    if k < 0 and m % 2 == 0:
        return -value
    return value


@dataclass(frozen=True)
class Representation:
    kind: str
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in (ZECKENDORF, NEGAFIBONACCI):
            raise ValueError(f"unknown representation kind {self.kind!r}")
        object.__setattr__(self, "indices", tuple(self.indices))

    def to_text(self) -> str:
        if not self.indices:
            return "0"
        return "+".join(f"F[{k}]" for k in sorted(self.indices, reverse=True))

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": sorted(self.indices)}

    @classmethod
    def from_json(cls, data: dict | str) -> Representation:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["kind"], tuple(data["indices"]))

    @classmethod
    def parse(cls, text: str, kind: str | None = None) -> Representation:
        """Parse ``F[10]+F[8]+F[4]`` (kind inferred from index signs when omitted)."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(text)
        if text == "0":
            indices: list[int] = []
        else:
            parts = [p.strip() for p in text.split("+")]
            indices = []
            for part in parts:
                match = re.fullmatch(r"F\[(-?\d+)\]", part)
                if not match:
                    raise InvalidRepresentation(f"cannot parse term {part!r}; expected F[k]")
                indices.append(int(match.group(1)))
        if kind is None:
            kind = NEGAFIBONACCI if indices and all(k < 0 for k in indices) else ZECKENDORF
        return cls(kind, tuple(sorted(indices)))

    def __str__(self) -> str:
        return self.to_text()


def is_zeckendorf_form(indices: Iterable[int], strict: bool = False) -> bool:
    """Distinct, monotone, neighbouring indices at least 2 apart.

    ``strict`` additionally requires every index to be at least 2.
    """
    idx = list(indices)
    if idx != sorted(idx) and idx != sorted(idx, reverse=True):
        return False
    ordered = sorted(idx)
    if any(b - a < 2 for a, b in zip(ordered, ordered[1:])):
        return False
    return not strict or all(k >= 2 for k in ordered)


def _validate(rep: Representation) -> None:
    idx = rep.indices
    if list(idx) != sorted(set(idx)):
        raise InvalidRepresentation(f"indices {list(idx)} are not distinct and ascending")
    if not is_zeckendorf_form(idx):
        raise InvalidRepresentation(f"indices {list(idx)} contain consecutive entries")
    if rep.kind == ZECKENDORF:
        if not idx:
            raise InvalidRepresentation("a Zeckendorf representation needs at least one term")
        if idx[0] < 2:
            raise InvalidRepresentation(f"Zeckendorf index {idx[0]} is below 2")
    elif idx and idx[-1] > -1:
        raise InvalidRepresentation(f"negafibonacci index {idx[-1]} is not negative")


def zeck_encode(n: int) -> Representation:
    if n < 1:
        raise NonPositiveInput(f"Zeckendorf representation needs n >= 1, got {n}")
    k = 2
    while fib(k + 1) <= n:
        k += 1
    chosen = []
    remainder = n
    while remainder:
        while fib(k) > remainder:
            k -= 1
        chosen.append(k)
        remainder -= fib(k)
        k -= 2
    return Representation(ZECKENDORF, tuple(sorted(chosen)))


def decode(rep: Representation) -> int:
    _validate(rep)
    return sum(fib(k) for k in rep.indices)


zeck_decode = decode


def _nega_bounds(k: int) -> tuple[int, int]:
    """Range of sums of nonconsecutive terms drawn from F_{-1} .. F_{-k}.

    Even positions are all negative and odd ones all positive, and each
    parity class is already nonconsecutive, so the extremes take every term
    of one sign.
    """
    lo = sum(fib(-j) for j in range(2, k + 1, 2))
    hi = sum(fib(-j) for j in range(1, k + 1, 2))
    return lo, hi


def nega_encode(n: int) -> Representation:
    chosen = []
    remainder = n
    while remainder:
        k = 1
        while True:
            lo, hi = _nega_bounds(k)
            if lo <= remainder <= hi:
                break
            k += 1
        # remainder is out of reach of F_{-1}..F_{-(k-1)}, so F_{-k} is forced
        chosen.append(-k)
        remainder -= fib(-k)
    return Representation(NEGAFIBONACCI, tuple(sorted(chosen)))


def nonconsecutive_subsets(indices: list[int]) -> Iterable[tuple[int, ...]]:
    """Every subset of the ascending ``indices`` with gaps >= 2 (including the empty one)."""

    def rec(i: int, last: int | None):
        if i == len(indices):
            yield ()
            return
        yield from rec(i + 1, last)
        if last is None or indices[i] - last >= 2:
            for rest in rec(i + 1, indices[i]):
                yield (indices[i],) + rest

    return rec(0, None)


def nega_encode_exhaustive(n: int, depth: int = 16) -> list[Representation]:
    """All negafibonacci representations of ``n`` using indices in ``[-depth, -1]``."""
    found = []
    for subset in nonconsecutive_subsets(list(range(-depth, 0))):
        if sum(fib(k) for k in subset) == n:
            found.append(Representation(NEGAFIBONACCI, subset))
    return found
