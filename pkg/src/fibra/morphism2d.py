"""The 2D Fibonacci morphism and morphic generation of Fibonacci arrays.

mu:  d -> dc/ba,  c -> d/b,  b -> dc,  a -> d

Applying mu to f_{m,n} gives f_{m+1,n+1}; iterating from ``d`` converges to
the infinite 2D Fibonacci word.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .array2d import Grid, check_budget
from .errors import DomainError, InconsistentImageError
from .word1d import fib_word

__all__ = [
    "MorphismTable",
    "ShapeConditionWitness",
    "FIB_MORPHISM",
    "shape_witness",
    "apply_mu",
    "mu_power",
    "fib_array_via_mu",
    "infinite_prefix_2d",
]


@dataclass(frozen=True)
class MorphismTable:
    images: dict = field(hash=False)
    start: str = "d"

    def __post_init__(self):
        if self.start not in self.images or self.images[self.start].at(1, 1) != self.start:
            raise DomainError(f"morphism is not prolongable on {self.start!r}")

    def height(self, symbol: str) -> int:
        return self.images[symbol].rows

    def width(self, symbol: str) -> int:
        return self.images[symbol].cols

    def restrict_rows(self) -> dict[str, str]:
        """First-row 1D morphism on the letters of the image of ``start``'s top row."""
        letters = self.images[self.start].row(1)
        return {s: self.images[s].row(1) for s in dict.fromkeys(letters)}

    def restrict_cols(self) -> dict[str, str]:
        letters = self.images[self.start].column(1)
        return {s: self.images[s].column(1) for s in dict.fromkeys(letters)}


FIB_MORPHISM = MorphismTable(
    {
        "d": Grid(("dc", "ba")),
        "c": Grid(("d", "b")),
        "b": Grid(("dc",)),
        "a": Grid(("d",)),
    }
)


@dataclass(frozen=True)
class ShapeConditionWitness:
    row_heights: tuple[int, ...]
    col_widths: tuple[int, ...]


def shape_witness(g: Grid, table: MorphismTable = FIB_MORPHISM) -> ShapeConditionWitness:
    """Image height of each row and width of each column of ``g``.

    Raises :class:`InconsistentImageError` if some row (column) mixes
    symbols with different image heights (widths).
    """
    for s in set(g.cells):
        if s not in table.images:
            raise InconsistentImageError(f"symbol {s!r} has no image")
    heights = []
    for i, line in enumerate(g.lines, 1):
        hs = {table.height(s) for s in line}
        if len(hs) != 1:
            raise InconsistentImageError(f"row {i} mixes image heights {sorted(hs)}")
        heights.append(hs.pop())
    widths = []
    for j in range(1, g.cols + 1):
        ws = {table.width(s) for s in g.column(j)}
        if len(ws) != 1:
            raise InconsistentImageError(f"column {j} mixes image widths {sorted(ws)}")
        widths.append(ws.pop())
    return ShapeConditionWitness(tuple(heights), tuple(widths))


def apply_mu(g: Grid, table: MorphismTable = FIB_MORPHISM, *, budget: int | None = None) -> Grid:
    """Replace each cell by its image block, assembling band by band."""
    witness = shape_witness(g, table)
    check_budget(sum(witness.row_heights), sum(witness.col_widths), budget)
    images = table.images
    out = []
    for line, height in zip(g.lines, witness.row_heights):
        for t in range(height):
            out.append("".join(images[s].lines[t] for s in line))
    return Grid(tuple(out))


def mu_power(seed: Grid, k: int, table: MorphismTable = FIB_MORPHISM, *, budget: int | None = None) -> Grid:
    if k < 0:
        raise DomainError(f"iteration count must be non-negative, got {k}")
    g = seed
    for _ in range(k):
        g = apply_mu(g, table, budget=budget)
    return g


def fib_array_via_mu(m: int, n: int, *, budget: int | None = None) -> Grid:
    """f_{m,n} generated morphically from a one-row or one-column seed.

    m < n: mu^(m-1)(f_{1,n-m+1}); m > n: mu^(n-1)(f_{m-n+1,1});
    m == n: mu^(m-1)(d).  Seeds are 1D Fibonacci words over {c,d} / {b,d}.
    """
    if m < 1 or n < 1:
        raise DomainError(f"morphic generation needs m, n >= 1, got ({m},{n})")
    if m < n:
        seed = Grid((fib_word(n - m + 1, "c", "d").content,))
        return mu_power(seed, m - 1, budget=budget)
    if m > n:
        seed = Grid(tuple(fib_word(m - n + 1, "b", "d").content))
        return mu_power(seed, n - 1, budget=budget)
    return mu_power(Grid(("d",)), m - 1, budget=budget)


def infinite_prefix_2d(s: int, t: int, *, budget: int | None = None) -> Grid:
    """Top-left s x t block of the fixed point of mu started at d."""
    if s < 1 or t < 1:
        raise DomainError(f"prefix size must be positive, got ({s},{t})")
    check_budget(s, t, budget)
    g = Grid(("d",))
    while g.rows < s or g.cols < t:
        g = apply_mu(g, budget=budget)
    return Grid(tuple(line[:t] for line in g.lines[:s]))
