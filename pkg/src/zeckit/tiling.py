"""Brute-force enumeration of colored board tilings.

A tile of length ``i`` comes in ``c_i`` colors, so tilings of an n-board are
counted by the recurrence with coefficients ``c_1 .. c_k`` in tiling
convention.  Everything here is exhaustive on purpose: it is the independent
check for the closed-form machinery elsewhere in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache, total_ordering
from itertools import accumulate
from math import prod
from typing import NamedTuple

from .errors import BoardTooLarge, CellOutOfRange, SpecNotTilingConvention
from .recurrence import RecurrenceSpec, is_tiling_convention, tiling_initials

MAX_BOARD = 25

BLACK, WHITE = 1, 2


class Tile(NamedTuple):
    length: int
    color: int


@total_ordering
@dataclass(frozen=True)
class Tiling:
    tiles: tuple[Tile, ...]

    def __post_init__(self) -> None:
        if not all(type(t) is Tile for t in self.tiles):
            object.__setattr__(self, "tiles", tuple(Tile(*t) for t in self.tiles))

    @property
    def size(self) -> int:
        return sum(t.length for t in self.tiles)

    def key(self) -> tuple:
        return _key(self.tiles)

    def __lt__(self, other: Tiling) -> bool:
        return self.key() < other.key()

    def boundaries(self) -> set[int]:
        """Cells after which a tile ends."""
        return set(accumulate(t.length for t in self.tiles))

    def __add__(self, other: Tiling) -> Tiling:
        return Tiling(self.tiles + other.tiles)

    def to_text(self) -> str:
        return " ".join(_tile_text(t) for t in self.tiles)

    def to_json(self) -> list[dict]:
        return [{"len": t.length, "color": t.color} for t in self.tiles]

    @classmethod
    def from_json(cls, data: list[dict]) -> Tiling:
        return cls(tuple(Tile(d["len"], d["color"]) for d in data))

    @classmethod
    def parse(cls, text: str) -> Tiling:
        tiles = []
        for token in text.split():
            m = re.fullmatch(r"S(\d+)|D(\d*)|\[(\d+):(\d+)\]", token)
            if not m:
                raise ValueError(f"bad tile token {token!r}")
            if m.group(1):
                tiles.append(Tile(1, int(m.group(1))))
            elif m.group(3):
                tiles.append(Tile(int(m.group(3)), int(m.group(4))))
            else:
                tiles.append(Tile(2, int(m.group(2) or 1)))
        return cls(tuple(tiles))

    def __str__(self) -> str:
        return self.to_text() or "(empty)"


def _key(tiles: tuple[Tile, ...]) -> tuple:
    return tuple(t.length for t in tiles), tuple(t.color for t in tiles)


def _tile_text(t: Tile) -> str:
    if t.length == 1:
        return f"S{t.color}"
    if t.length == 2:
        return "D" if t.color == 1 else f"D{t.color}"
    return f"[{t.length}:{t.color}]"


EMPTY = Tiling(())


def _check(spec: RecurrenceSpec, n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError("board size must be nonnegative")
    if n > max_n:
        raise BoardTooLarge(f"board size {n} exceeds the enumeration limit {max_n}")
    if not is_tiling_convention(spec):
        raise SpecNotTilingConvention(
            f"initials {spec.initials} are not the tiling initials {tiling_initials(spec.coefficients)}"
        )


def _tilings(coefficients: tuple[int, ...], n: int, memo: dict) -> list[tuple[Tile, ...]]:
    if n in memo:
        return memo[n]
    if n == 0:
        return [()]
    out = []
    # split on the first tile, as in the counting argument
    for length, colors in enumerate(coefficients, start=1):
        if length > n:
            break
        rests = _tilings(coefficients, n - length, memo)
        for color in range(1, colors + 1):
            first = Tile(length, color)
            out.extend((first,) + rest for rest in rests)
    memo[n] = out
    return out


@lru_cache(maxsize=64)
def _sorted_tilings(coefficients: tuple[int, ...], n: int) -> tuple[Tiling, ...]:
    raw = sorted(_tilings(coefficients, n, {}), key=_key)
    return tuple(Tiling(t) for t in raw)


def enumerate_tilings(spec: RecurrenceSpec, n: int, *, max_n: int = MAX_BOARD) -> list[Tiling]:
    """All colored tilings of an n-board, ordered by (lengths, colors)."""
    _check(spec, n, max_n)
    return list(_sorted_tilings(spec.coefficients, n))


def tile_shapes(max_length: int, n: int) -> list[tuple[int, ...]]:
    """Every ordered sequence of tile lengths in ``[1, max_length]`` covering n cells."""
    if n == 0:
        return [()]
    out = []
    for length in range(1, min(max_length, n) + 1):
        out.extend((length,) + rest for rest in tile_shapes(max_length, n - length))
    return out


def count_tilings(spec: RecurrenceSpec, n: int, *, max_n: int = MAX_BOARD) -> int:
    """Number of tilings: exhaustive over uncolored shapes, colors multiplied in.

    Cheaper than :func:`enumerate_tilings` when palettes are large, and uses
    no recurrence values.
    """
    _check(spec, n, max_n)
    return sum(prod(spec.coefficients[length - 1] for length in shape) for shape in tile_shapes(spec.order, n))


@dataclass
class BreakPartition:
    cell: int
    breakable: list[Tiling] = field(default_factory=list)
    unbreakable: list[Tiling] = field(default_factory=list)


def break_at(spec: RecurrenceSpec, n: int, m: int, *, max_n: int = MAX_BOARD) -> BreakPartition:
    """Split the n-board tilings by whether a tile ends exactly at cell ``m``."""
    _check(spec, n, max_n)
    if not 1 <= m < n:
        raise CellOutOfRange(f"cell {m} must lie in [1, {n - 1}]")
    part = BreakPartition(cell=m)
    for tiling in _sorted_tilings(spec.coefficients, n):
        if m in accumulate(t.length for t in tiling.tiles):
            part.breakable.append(tiling)
        else:
            part.unbreakable.append(tiling)
    return part


def break_counts(spec: RecurrenceSpec, n: int, m: int, *, max_n: int = MAX_BOARD) -> tuple[int, int]:
    """``(breakable, unbreakable)`` sizes at cell ``m`` without listing colored tilings."""
    _check(spec, n, max_n)
    if not 1 <= m < n:
        raise CellOutOfRange(f"cell {m} must lie in [1, {n - 1}]")
    breakable = unbreakable = 0
    for shape in tile_shapes(spec.order, n):
        weight = prod(spec.coefficients[length - 1] for length in shape)
        if m in accumulate(shape):
            breakable += weight
        else:
            unbreakable += weight
    return breakable, unbreakable


# --- six-fold Pell bijection -------------------------------------------------

PELL_TILING = RecurrenceSpec((2, 1), (1, 2))
MAX_BIJECTION_BOARD = 12

_DOMINO = Tile(2, 1)
_GLUE = {
    1: (_DOMINO,),
    2: (Tile(1, BLACK), Tile(1, BLACK)),
    3: (Tile(1, BLACK), Tile(1, WHITE)),
    4: (Tile(1, WHITE), Tile(1, BLACK)),
    5: (Tile(1, WHITE), Tile(1, WHITE)),
}


def six_pell_forward(copy: int, tiling: Tiling) -> Tiling:
    """Image of an n-board tiling taken from labelled copy 1..6."""
    if copy in _GLUE:
        return Tiling(tiling.tiles + _GLUE[copy])
    if copy != 6:
        raise ValueError(f"copy must be in 1..6, got {copy}")
    if not tiling.tiles:
        raise ValueError("copy 6 needs a nonempty tiling")
    last = tiling.tiles[-1]
    if last.length == 1:
        return Tiling(tiling.tiles[:-1] + (_DOMINO, last))
    return Tiling(tiling.tiles[:-1])


def six_pell_inverse(target: Tiling, n: int) -> tuple[int, Tiling]:
    """Preimage ``(copy, tiling)`` of an (n+2)- or (n-2)-board tiling."""
    if target.size == n - 2:
        return 6, Tiling(target.tiles + (_DOMINO,))
    if target.size != n + 2:
        raise ValueError(f"target covers {target.size} cells, expected {n + 2} or {n - 2}")
    tiles = target.tiles
    if tiles[-1].length == 2:
        return 1, Tiling(tiles[:-1])
    if tiles[-2].length == 1:
        tail = tiles[-2:]
        copy = next(c for c, glue in _GLUE.items() if glue == tail)
        return copy, Tiling(tiles[:-2])
    return 6, Tiling(tiles[:-2] + tiles[-1:])


@dataclass
class BijectionReport:
    n: int
    domain_size: int
    plus_size: int
    minus_size: int
    total: bool
    injective: bool
    surjective: bool
    round_trip: bool

    @property
    def verified(self) -> bool:
        return (
            self.total
            and self.injective
            and self.surjective
            and self.round_trip
            and self.domain_size == self.plus_size + self.minus_size
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "domain_size": self.domain_size,
            "plus_size": self.plus_size,
            "minus_size": self.minus_size,
            "total": self.total,
            "injective": self.injective,
            "surjective": self.surjective,
            "round_trip": self.round_trip,
            "verified": self.verified,
        }


def six_pell_bijection(n: int, *, max_n: int = MAX_BIJECTION_BOARD) -> BijectionReport:
    """Check that six copies of the n-board Pell tilings biject onto (n+2) and (n-2) boards."""
    if n < 2:
        raise ValueError(f"the bijection needs n >= 2, got {n}")
    if n > max_n:
        raise BoardTooLarge(f"board size {n} exceeds the bijection limit {max_n}")
    base = enumerate_tilings(PELL_TILING, n, max_n=max_n + 2)
    plus = set(enumerate_tilings(PELL_TILING, n + 2, max_n=max_n + 2))
    minus = set(enumerate_tilings(PELL_TILING, n - 2, max_n=max_n + 2))
    codomain = plus | minus

    images = []
    total = True
    for copy in range(1, 7):
        for tiling in base:
            try:
                image = six_pell_forward(copy, tiling)
            except ValueError:
                total = False
                continue
            if image not in codomain:
                total = False
            images.append(((copy, tiling), image))

    image_set = {img for _, img in images}
    injective = len(image_set) == len(images)
    surjective = image_set == codomain
    round_trip = all(six_pell_inverse(img, n) == src for src, img in images) and all(
        six_pell_forward(*six_pell_inverse(t, n)) == t for t in codomain
    )
    return BijectionReport(
        n=n,
        domain_size=6 * len(base),
        plus_size=len(plus),
        minus_size=len(minus),
        total=total,
        injective=injective,
        surjective=surjective,
        round_trip=round_trip,
    )
