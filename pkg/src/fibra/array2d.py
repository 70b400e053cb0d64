"""Rectangular 2D words and the recursive Fibonacci arrays f_{m,n}.

Coordinates here are 1-based and inclusive, matching the subarray notation
u[(i, j), (i', j')].  Internally a grid is a tuple of row strings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .errors import BoundsError, DomainError, ResourceError, ShapeError, StructuralViolation
from .fibcore import fib
from .word1d import SYMBOLS, fib_word

DEFAULT_CELL_BUDGET = 10**7
DEFAULT_SEEDS = ("a", "b", "c", "d")  # f_{0,0}, f_{0,1}, f_{1,0}, f_{1,1}

__all__ = [
    "Grid",
    "EMPTY",
    "FibArrayParams",
    "StructureReport",
    "cell_budget",
    "check_budget",
    "col_concat",
    "row_concat",
    "subgrid",
    "fib_array",
    "is_horizontal_power",
    "is_vertical_power",
    "is_2d_primitive",
    "primitive_root_2d",
    "is_2d_palindrome",
    "check_row_column_structure",
]


def cell_budget() -> int:
    """Active cell budget; ``FIBRA_CELL_BUDGET`` overrides the default."""
    raw = os.environ.get("FIBRA_CELL_BUDGET")
    if raw is None:
        return DEFAULT_CELL_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"FIBRA_CELL_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError("FIBRA_CELL_BUDGET must be positive")
    return value


def check_budget(rows: int, cols: int, budget: int | None = None) -> None:
    limit = cell_budget() if budget is None else budget
    if rows * cols > limit:
        raise ResourceError(f"{rows}x{cols} grid exceeds cell budget {limit}")


@dataclass(frozen=True)
class Grid:
    """Immutable 2D word; ``Grid(())`` is the empty array."""

    lines: tuple[str, ...]

    def __post_init__(self):
        lines = tuple(self.lines) if not isinstance(self.lines, str) else (self.lines,)
        object.__setattr__(self, "lines", lines)
        if lines:
            width = len(lines[0])
            if width == 0:
                raise ShapeError("arrays of size (m,0) are not defined")
            for idx, line in enumerate(lines, 1):
                if len(line) != width:
                    raise ShapeError(f"row {idx} has length {len(line)}, expected {width}")
                bad = set(line) - set(SYMBOLS)
                if bad:
                    raise DomainError(f"row {idx} contains symbols outside {SYMBOLS!r}: {sorted(bad)}")

    @classmethod
    def from_text(cls, text: str) -> Grid:
        return cls(tuple(line for line in text.strip("\n").split("\n") if line) if text.strip() else ())

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[str]]) -> Grid:
        return cls(tuple("".join(row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.lines)

    @property
    def cols(self) -> int:
        return len(self.lines[0]) if self.lines else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def cells(self) -> str:
        return "".join(self.lines)

    def is_empty(self) -> bool:
        return not self.lines

    def at(self, i: int, j: int) -> str:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise BoundsError(f"({i},{j}) outside {self.rows}x{self.cols} grid")
        return self.lines[i - 1][j - 1]

    def row(self, i: int) -> str:
        return self.lines[i - 1]

    def column(self, j: int) -> str:
        return "".join(line[j - 1] for line in self.lines)

    def transpose(self) -> Grid:
        return Grid(tuple("".join(col) for col in zip(*self.lines)))

    def to_text(self) -> str:
        return "\n".join(self.lines)

    def to_rows(self) -> list[list[str]]:
        return [list(line) for line in self.lines]

    def __str__(self) -> str:
        return self.to_text()


EMPTY = Grid(())


@dataclass(frozen=True)
class FibArrayParams:
    m: int
    n: int
    seeds: tuple[str, str, str, str] = DEFAULT_SEEDS

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise DomainError(f"array indices must be non-negative, got ({self.m},{self.n})")
        seeds = tuple(self.seeds)
        object.__setattr__(self, "seeds", seeds)
        if len(seeds) != 4:
            raise DomainError("exactly four seed symbols are required")
        for ch in seeds:
            if ch not in SYMBOLS or len(ch) != 1:
                raise DomainError(f"seed {ch!r} is not one of {SYMBOLS!r}")
        if len(set(seeds)) == 1:
            raise DomainError("seed symbols may not all be identical")

    @property
    def distinct_seeds(self) -> bool:
        return len(set(self.seeds)) == 4

    @property
    def size(self) -> tuple[int, int]:
        return fib(self.m), fib(self.n)


def col_concat(u: Grid, v: Grid) -> Grid:
    """u to the left of v; the empty grid is neutral."""
    if u.is_empty():
        return v
    if v.is_empty():
        return u
    if u.rows != v.rows:
        raise ShapeError(f"column concatenation needs equal row counts, got {u.rows} and {v.rows}")
    return Grid(tuple(a + b for a, b in zip(u.lines, v.lines)))


def row_concat(u: Grid, v: Grid) -> Grid:
    """u on top of v; the empty grid is neutral."""
    if u.is_empty():
        return v
    if v.is_empty():
        return u
    if u.cols != v.cols:
        raise ShapeError(f"row concatenation needs equal column counts, got {u.cols} and {v.cols}")
    return Grid(u.lines + v.lines)


def subgrid(u: Grid, top: int, left: int, bottom: int, right: int) -> Grid:
    """The region u[(top, left), (bottom, right)], 1-based inclusive."""
    if not (1 <= top <= bottom <= u.rows and 1 <= left <= right <= u.cols):
        raise BoundsError(
            f"subgrid [({top},{left}),({bottom},{right})] outside {u.rows}x{u.cols} grid"
        )
    return Grid(tuple(line[left - 1:right] for line in u.lines[top - 1:bottom]))


def fib_array(m: int, n: int, seeds=DEFAULT_SEEDS, *, order: str = "rows", budget: int | None = None) -> Grid:
    """f_{m,n} of size F(m) x F(n) by the concatenation recurrences.

    ``order="rows"`` expands row-wise down to f_{0,k}, f_{1,k} first, then
    builds those column-wise; ``order="cols"`` does the reverse.
    """
    params = FibArrayParams(m, n, seeds)
    check_budget(*params.size, budget)
    a, b, c, d = params.seeds
    base = {(0, 0): Grid((a,)), (0, 1): Grid((b,)), (1, 0): Grid((c,)), (1, 1): Grid((d,))}
    if order == "rows":
        strips = [_expand(base[(k, 0)], base[(k, 1)], n, col_concat) for k in (0, 1)]
        return _expand(strips[0], strips[1], m, row_concat)
    if order == "cols":
        strips = [_expand(base[(0, k)], base[(1, k)], m, row_concat) for k in (0, 1)]
        return _expand(strips[0], strips[1], n, col_concat)
    raise DomainError(f"unknown expansion order {order!r}")


def _expand(g0: Grid, g1: Grid, steps: int, concat) -> Grid:
    prev, cur = g0, g1
    if steps == 0:
        return prev
    for _ in range(steps - 1):
        prev, cur = cur, concat(cur, prev)
    return cur


def _divisors(k: int) -> list[int]:
    return [p for p in range(1, k + 1) if k % p == 0]


def is_horizontal_power(w: Grid) -> bool:
    """w = x^{k (col)} for some k > 1."""
    return any(
        all(line == line[:q] * (w.cols // q) for line in w.lines)
        for q in _divisors(w.cols)[:-1]
    )


def is_vertical_power(w: Grid) -> bool:
    """w = x^{k (row)} for some k > 1."""
    return any(w.lines == w.lines[:p] * (w.rows // p) for p in _divisors(w.rows)[:-1])


def _tiles(w: Grid, p: int, q: int) -> bool:
    block = [line[:q] for line in w.lines[:p]]
    return all(
        w.lines[i][j:j + q] == block[i % p]
        for i in range(w.rows)
        for j in range(0, w.cols, q)
    )


def _tilings(w: Grid):
    if w.is_empty():
        raise DomainError("primitivity is undefined for the empty grid")
    for p in _divisors(w.rows):
        for q in _divisors(w.cols):
            if _tiles(w, p, q):
                yield p, q


def is_2d_primitive(w: Grid) -> bool:
    """True iff the only exact tiling of w is by w itself."""
    return all((p, q) == w.shape for p, q in _tilings(w))


def primitive_root_2d(w: Grid) -> Grid:
    p, q = min(_tilings(w), key=lambda pq: pq[0] * pq[1])
    return Grid(tuple(line[:q] for line in w.lines[:p]))


def is_2d_palindrome(w: Grid) -> bool:
    return w.lines == tuple(line[::-1] for line in reversed(w.lines))


@dataclass(frozen=True)
class StructureReport:
    """Alphabet class of every row and column of a checked Fibonacci array."""

    rows: int
    cols: int
    row_alphabets: tuple[str, ...]
    col_alphabets: tuple[str, ...]


def _classify(word: str, pairs, what: str, index: int) -> str:
    length = len(word)
    candidates = [k for k in range(0, 64) if fib(k) == length]
    for first, second in pairs:
        if any(word == fib_word(k, first, second).content for k in candidates):
            return first + second
    raise StructuralViolation(
        f"{what} {index} ({word!r}) is not a Fibonacci word over any of {['/'.join(p) for p in pairs]}"
    )


def check_row_column_structure(g: Grid, seeds=DEFAULT_SEEDS) -> StructureReport:
    """Check every row/column is a 1D Fibonacci word and same-alphabet ones agree.

    Rows are words over (f_{1,0}, f_{1,1}) or (f_{0,0}, f_{0,1}); columns
    over (f_{0,0}, f_{1,0}) or (f_{0,1}, f_{1,1}).  Raises
    :class:`StructuralViolation` naming the offending row or column.
    """
    a, b, c, d = seeds
    row_pairs = [(c, d), (a, b)]
    col_pairs = [(a, c), (b, d)]
    row_tags = tuple(_classify(g.row(i), row_pairs, "row", i) for i in range(1, g.rows + 1))
    col_tags = tuple(_classify(g.column(j), col_pairs, "column", j) for j in range(1, g.cols + 1))
    for tags, getter, what, pairs in (
        (row_tags, g.row, "row", row_pairs),
        (col_tags, g.column, "column", col_pairs),
    ):
        if len({frozenset(p) for p in pairs}) < 2:
            continue
        seen: dict[str, tuple[int, str]] = {}
        for idx, tag in enumerate(tags, 1):
            word = getter(idx)
            if tag in seen and seen[tag][1] != word:
                raise StructuralViolation(
                    f"{what} {idx} differs from {what} {seen[tag][0]} over the same alphabet {tag}"
                )
            seen.setdefault(tag, (idx, word))
    return StructureReport(g.rows, g.cols, row_tags, col_tags)
