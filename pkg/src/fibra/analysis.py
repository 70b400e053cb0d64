"""Tandem and quartic counts in Fibonacci arrays, closed form vs brute force.

Every closed-form count here has an enumeration counterpart that scans all
root sizes and positions of an actual grid; :func:`verify_sweep` pairs them.
Occurrence positions are 1-based (row, col) of the first W copy.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from . import kernels
from .array2d import (
    DEFAULT_SEEDS,
    FibArrayParams,
    Grid,
    fib_array,
    is_2d_primitive,
    is_horizontal_power,
    is_vertical_power,
)
from .errors import BoundsError, DomainError, ResourceError
from .fibcore import fib
from .word1d import (
    complexity_closed,
    distinct_squares_closed,
    enumerate_squares,
    fib_word,
    square_occurrences_closed,
    total_distinct_factors,
)

__all__ = [
    "TandemType",
    "PrimitivityMode",
    "TandemOccurrence",
    "QuarticOccurrence",
    "ReportEntry",
    "CountReport",
    "count_Ia_closed",
    "count_Ib_closed",
    "count_quartics_closed",
    "distinct_Ia_closed",
    "distinct_Ib_closed",
    "distinct_quartics_closed",
    "distinct_square_count",
    "root_is_primitive",
    "enumerate_tandems",
    "enumerate_quartics",
    "nested_tandem_check",
    "complexity2d_infinite",
    "complexity2d_finite",
    "enumerate_factors_2d",
    "count_factors_2d",
    "verify_sweep",
    "ORACLE_CELL_CAP",
]

ORACLE_CELL_CAP = 34 * 34


class TandemType(str, enum.Enum):
    IA = "Ia"  # W beside W
    IB = "Ib"  # W above W
    IIA = "IIa"  # W at top-left and bottom-right corners
    IIB = "IIb"  # W at top-right and bottom-left corners

    def __str__(self) -> str:
        return self.value


class PrimitivityMode(str, enum.Enum):
    DIRECTIONAL = "directional"
    STRICT = "strict-2d"

    def __str__(self) -> str:
        return self.value


_KERNEL_KIND = {
    TandemType.IA: kernels.IA,
    TandemType.IB: kernels.IB,
    TandemType.IIA: kernels.IIA,
    TandemType.IIB: kernels.IIB,
}


@dataclass(frozen=True, order=True)
class TandemOccurrence:
    type: TandemType
    root_rows: int
    root_cols: int
    row: int
    col: int


@dataclass(frozen=True, order=True)
class QuarticOccurrence:
    root_rows: int
    root_cols: int
    row: int
    col: int


# ---------------------------------------------------------------- closed forms

def _require_distinct(seeds) -> None:
    if not FibArrayParams(0, 0, seeds).distinct_seeds:
        raise DomainError("closed-form counts are only established for four distinct seeds")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def _triangle(k: int) -> int:
    return k * (k + 1) // 2


def count_Ia_closed(m: int, n: int, seeds=DEFAULT_SEEDS) -> int:
    """R(n) F(m)(F(m)+1)/2 for m >= 1, n >= 3."""
    _require(m >= 1 and n >= 3, f"Type I(a) count needs m >= 1, n >= 3, got ({m},{n})")
    _require_distinct(seeds)
    return square_occurrences_closed(n) * _triangle(fib(m))


def count_Ib_closed(m: int, n: int, seeds=DEFAULT_SEEDS) -> int:
    """R(m) F(n)(F(n)+1)/2 for m >= 3, n >= 1."""
    _require(m >= 3 and n >= 1, f"Type I(b) count needs m >= 3, n >= 1, got ({m},{n})")
    _require_distinct(seeds)
    return square_occurrences_closed(m) * _triangle(fib(n))


def count_quartics_closed(m: int, n: int, seeds=DEFAULT_SEEDS) -> int:
    """R(m) R(n); also the number of Type II(a) and of Type II(b) tandems."""
    _require(m >= 3 and n >= 3, f"quartic count needs m, n >= 3, got ({m},{n})")
    _require_distinct(seeds)
    return square_occurrences_closed(m) * square_occurrences_closed(n)


def distinct_square_count(n: int) -> tuple[int, bool]:
    """D(n) and whether it was substituted by enumeration (n < 5)."""
    if n >= 5:
        return distinct_squares_closed(n), False
    _require(n >= 0, f"word index must be non-negative, got {n}")
    return len(enumerate_squares(fib_word(n).content, distinct=True)), True


def distinct_Ia_closed(m: int, n: int, seeds=DEFAULT_SEEDS) -> int:
    """D(n) p(f_m) for m >= 2, n >= 5."""
    _require(m >= 2 and n >= 5, f"distinct Type I(a) count needs m >= 2, n >= 5, got ({m},{n})")
    _require_distinct(seeds)
    return distinct_squares_closed(n) * total_distinct_factors(m)


def distinct_Ib_closed(m: int, n: int, seeds=DEFAULT_SEEDS) -> int:
    """D(m) p(f_n) for m >= 5, n >= 2."""
    _require(m >= 5 and n >= 2, f"distinct Type I(b) count needs m >= 5, n >= 2, got ({m},{n})")
    _require_distinct(seeds)
    return distinct_squares_closed(m) * total_distinct_factors(n)


def distinct_quartics_closed(m: int, n: int, seeds=DEFAULT_SEEDS) -> int:
    """D(m) D(n) for m, n >= 3; D(3), D(4) come from enumeration."""
    _require(m >= 3 and n >= 3, f"distinct quartic count needs m, n >= 3, got ({m},{n})")
    _require_distinct(seeds)
    return distinct_square_count(m)[0] * distinct_square_count(n)[0]


# -------------------------------------------------------------------- oracles

@lru_cache(maxsize=65536)
def _root_ok(lines: tuple[str, ...], axis: str, mode: PrimitivityMode) -> bool:
    w = Grid(lines)
    if mode is PrimitivityMode.STRICT:
        return is_2d_primitive(w)
    if axis == "h":
        return not is_horizontal_power(w)
    if axis == "v":
        return not is_vertical_power(w)
    return not (is_horizontal_power(w) or is_vertical_power(w))


def root_is_primitive(w: Grid, kind, mode=PrimitivityMode.DIRECTIONAL) -> bool:
    """Primitivity test applied to tandem roots of ``kind``.

    Directional mode only forbids powers along the contact axis: horizontal
    for Ia, vertical for Ib, either for corner types and quartics.
    """
    mode = PrimitivityMode(mode)
    axis = {TandemType.IA: "h", TandemType.IB: "v"}.get(kind, "hv")
    return _root_ok(w.lines, axis, mode)


def _block(g: Grid, i: int, j: int, r: int, c: int) -> tuple[str, ...]:
    return tuple(line[j:j + c] for line in g.lines[i:i + r])


def enumerate_tandems(g: Grid, t, mode=PrimitivityMode.DIRECTIONAL, distinct: bool = False):
    """Every tandem of type ``t`` in ``g`` whose root passes ``mode``.

    Type II configurations must fit entirely (2r x 2c) inside ``g``.  With
    ``distinct=True`` returns the set of distinct tandem words: W beside W
    (Ia), W above W (Ib), or the root W (IIa, IIb).
    """
    t = TandemType(t)
    mode = PrimitivityMode(mode)
    if g.is_empty():
        raise DomainError("cannot enumerate tandems of the empty grid")
    found = []
    words = set()
    for r, c, i, j in kernels.block_matches(g.lines, _KERNEL_KIND[t]):
        top, left = (i, j + c) if t is TandemType.IIB else (i, j)
        root = _block(g, top, left, r, c)
        if not root_is_primitive(Grid(root), t, mode):
            continue
        if distinct:
            if t is TandemType.IA:
                words.add(_block(g, i, j, r, 2 * c))
            elif t is TandemType.IB:
                words.add(_block(g, i, j, 2 * r, c))
            else:
                words.add(root)
        else:
            found.append(TandemOccurrence(t, r, c, top + 1, left + 1))
    if distinct:
        return {Grid(w) for w in words}
    return sorted(found)


def enumerate_quartics(g: Grid, mode=PrimitivityMode.DIRECTIONAL, distinct: bool = False):
    """2x2 arrangements of one primitive block W; ``distinct`` dedups by W."""
    mode = PrimitivityMode(mode)
    if g.is_empty():
        raise DomainError("cannot enumerate quartics of the empty grid")
    found = []
    roots = set()
    for r, c, i, j in kernels.block_matches(g.lines, kernels.QUARTIC):
        root = _block(g, i, j, r, c)
        if not _root_ok(root, "hv", mode):
            continue
        roots.add(root)
        found.append(QuarticOccurrence(r, c, i + 1, j + 1))
    if distinct:
        return {Grid(w) for w in roots}
    return sorted(found)


def nested_tandem_check(occurrences) -> list[tuple[TandemOccurrence, int, int]]:
    """For each vertically maximal Ia tandem, count the Ia tandems nested in it.

    Returns (maximal occurrence, expected r(r+1)/2, found) triples, where
    nested tandems share the maximal one's column span.
    """
    spans = defaultdict(list)
    for occ in occurrences:
        if occ.type is not TandemType.IA:
            raise DomainError("nesting check applies to Type I(a) tandems")
        spans[(occ.col, occ.root_cols)].append(occ)
    out = []
    for key in sorted(spans):
        group = spans[key]
        intervals = [(o.row, o.row + o.root_rows - 1) for o in group]
        for occ, (top, bottom) in zip(group, intervals):
            if any(a <= top and bottom <= b and (a, b) != (top, bottom) for a, b in intervals):
                continue
            inside = sum(1 for a, b in intervals if top <= a and b <= bottom)
            out.append((occ, _triangle(bottom - top + 1), inside))
    return out


# ----------------------------------------------------------- 2D complexity

def complexity2d_infinite(k: int, l: int) -> int:
    _require(k >= 1 and l >= 1, f"factor size must be positive, got ({k},{l})")
    return (k + 1) * (l + 1)


def complexity2d_finite(m: int, n: int, k: int, l: int, seeds=DEFAULT_SEEDS) -> int:
    """p_k(f_m) p_l(f_n) for m, n >= 2."""
    _require(m >= 2 and n >= 2, f"2D complexity needs m, n >= 2, got ({m},{n})")
    _require(1 <= k <= fib(m) and 1 <= l <= fib(n),
             f"factor size ({k},{l}) outside {fib(m)}x{fib(n)}")
    _require_distinct(seeds)
    return complexity_closed(m, k) * complexity_closed(n, l)


def _windows(g: Grid, k: int, l: int) -> set[tuple[str, ...]]:
    if not (1 <= k <= g.rows and 1 <= l <= g.cols):
        raise BoundsError(f"factor size ({k},{l}) outside {g.rows}x{g.cols} grid")
    segs = [[line[j:j + l] for j in range(g.cols - l + 1)] for line in g.lines]
    seen: set[tuple[str, ...]] = set()
    for i in range(g.rows - k + 1):
        seen.update(zip(*segs[i:i + k]))
    return seen


def enumerate_factors_2d(g: Grid, k: int, l: int) -> set[Grid]:
    """Distinct k x l subgrids by exhaustive window scan."""
    return {Grid(w) for w in _windows(g, k, l)}


def count_factors_2d(g: Grid, k: int, l: int) -> int:
    return len(_windows(g, k, l))


# ------------------------------------------------------------------ reports

@dataclass
class ReportEntry:
    quantity: str
    closed: int
    oracle: int
    note: str = ""

    @property
    def match(self) -> bool:
        return self.closed == self.oracle

    def to_dict(self) -> dict:
        d = asdict(self)
        d["match"] = self.match
        return d


@dataclass
class CountReport:
    m: int
    n: int
    mode: str
    entries: list[ReportEntry] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return all(e.match for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "mode": self.mode,
            "match": self.match,
            "entries": [e.to_dict() for e in self.entries],
        }


def tandem_report(m: int, n: int, mode=PrimitivityMode.DIRECTIONAL, *, complexity: bool = True) -> CountReport:
    """Closed form vs enumeration for every count whose closed form covers (m, n)."""
    mode = PrimitivityMode(mode)
    report = CountReport(m, n, mode.value)
    g = fib_array(m, n)
    add = report.entries.append
    ia = None
    if m >= 1 and n >= 3:
        ia = enumerate_tandems(g, TandemType.IA, mode)
        add(ReportEntry("Ia", count_Ia_closed(m, n), len(ia)))
        nests = nested_tandem_check(ia)
        add(ReportEntry("Ia-nesting", len(nests), sum(e == f for _, e, f in nests),
                        "maximal Ia blocks holding r(r+1)/2 nested tandems"))
    if m >= 3 and n >= 1:
        add(ReportEntry("Ib", count_Ib_closed(m, n), len(enumerate_tandems(g, TandemType.IB, mode))))
    if m >= 3 and n >= 3:
        quartics = count_quartics_closed(m, n)
        add(ReportEntry("quartic", quartics, len(enumerate_quartics(g, mode))))
        add(ReportEntry("IIa", quartics, len(enumerate_tandems(g, TandemType.IIA, mode))))
        add(ReportEntry("IIb", quartics, len(enumerate_tandems(g, TandemType.IIB, mode))))
    if m >= 2 and n >= 5:
        add(ReportEntry("Ia-distinct", distinct_Ia_closed(m, n),
                        len(enumerate_tandems(g, TandemType.IA, mode, distinct=True))))
    if m >= 5 and n >= 2:
        add(ReportEntry("Ib-distinct", distinct_Ib_closed(m, n),
                        len(enumerate_tandems(g, TandemType.IB, mode, distinct=True))))
    if m >= 3 and n >= 3:
        note = "D(3), D(4) taken from enumeration" if min(m, n) < 5 else ""
        dq = distinct_quartics_closed(m, n)
        add(ReportEntry("quartic-distinct", dq, len(enumerate_quartics(g, mode, distinct=True)), note))
        add(ReportEntry("IIa-distinct", dq,
                        len(enumerate_tandems(g, TandemType.IIA, mode, distinct=True)), note))
        add(ReportEntry("IIb-distinct", dq,
                        len(enumerate_tandems(g, TandemType.IIB, mode, distinct=True)), note))
    if complexity and m >= 2 and n >= 2:
        pairs = [(k, l) for k in range(1, g.rows + 1) for l in range(1, g.cols + 1)]
        bad = [(k, l) for k, l in pairs if complexity2d_finite(m, n, k, l) != count_factors_2d(g, k, l)]
        note = "(k,l) sizes checked vs sizes agreeing"
        if bad:
            note += "; mismatch at " + " ".join(f"({k},{l})" for k, l in bad[:10])
        add(ReportEntry("p2d", len(pairs), len(pairs) - len(bad), note))
    return report


def verify_sweep(max_m: int, max_n: int, mode=PrimitivityMode.DIRECTIONAL, *,
                 complexity: bool = True, cell_cap: int = ORACLE_CELL_CAP) -> list[CountReport]:
    """One report per (m, n) in [0, max_m] x [0, max_n] with some closed form in range."""
    _require(max_m >= 0 and max_n >= 0, "sweep bounds must be non-negative")
    if fib(max_m) * fib(max_n) > cell_cap:
        raise ResourceError(
            f"largest host grid {fib(max_m)}x{fib(max_n)} exceeds oracle cap of {cell_cap} cells"
        )
    reports = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            report = tandem_report(m, n, mode, complexity=complexity)
            if report.entries:
                reports.append(report)
    return reports
