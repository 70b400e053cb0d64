"""One-dimensional Fibonacci words, their squares and factor complexity.

Positions in this module are 1-based, as in the usual ``f[i; k]`` notation
for the length-k factor starting at position i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import DomainError, InsufficientPrefixError
from .fibcore import fib, fib_index_at_most

SYMBOLS = "abcd"

__all__ = [
    "Alphabet",
    "FibWord",
    "SquareOccurrence",
    "FactorPositionList",
    "fib_word",
    "infinite_prefix",
    "complexity_closed",
    "complexity_enum",
    "total_distinct_factors",
    "distinct_squares_closed",
    "square_occurrences_closed",
    "enumerate_squares",
    "is_primitive",
    "distinct_factor_positions",
]


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise DomainError("alphabet must be non-empty")
        if len(set(self.letters)) != len(self.letters):
            raise DomainError(f"alphabet letters must be distinct: {self.letters}")
        for ch in self.letters:
            _check_symbol(ch)


@dataclass(frozen=True)
class FibWord:
    n: int
    first: str
    second: str
    content: str

    def __str__(self) -> str:
        return self.content

    def __len__(self) -> int:
        return len(self.content)


@dataclass(frozen=True, order=True)
class SquareOccurrence:
    start: int
    root_length: int


@dataclass(frozen=True)
class FactorPositionList:
    k: int
    entries: tuple[tuple[int, str], ...]

    @property
    def factors(self) -> list[str]:
        return [w for _, w in self.entries]


def _check_symbol(ch: str) -> None:
    if len(ch) != 1 or ch not in SYMBOLS:
        raise DomainError(f"symbol must be one of {SYMBOLS!r}, got {ch!r}")


@lru_cache(maxsize=256)
def _fib_word_text(n: int, first: str, second: str) -> str:
    prev, cur = first, second
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur + prev
    return cur


def fib_word(n: int, first: str = "a", second: str = "b") -> FibWord:
    """f_0 = first, f_1 = second, f_n = f_{n-1} f_{n-2}."""
    if n < 0:
        raise DomainError(f"word index must be non-negative, got {n}")
    _check_symbol(first)
    _check_symbol(second)
    return FibWord(n, first, second, _fib_word_text(n, first, second))


def infinite_prefix(length: int) -> str:
    """Length-``length`` prefix of the fixed point of a -> b, b -> ba."""
    if length < 0:
        raise DomainError(f"prefix length must be non-negative, got {length}")
    word = "b"  # h(a); the bare seed "a" is not a prefix of the limit
    while len(word) < length:
        word = "".join("ba" if ch == "b" else "b" for ch in word)
    return word[:length]


def complexity_closed(n: int, k: int) -> int:
    """Number of distinct length-k factors of f_n, from the three-branch formula."""
    if n < 2:
        raise DomainError(f"closed complexity needs n >= 2, got {n}")
    if not 1 <= k <= fib(n):
        raise DomainError(f"factor length {k} outside 1..{fib(n)} for f_{n}")
    # branches are tried in order; at small n some ranges are empty
    if k <= fib(n - 2):
        return k + 1
    if fib(n - 2) + 1 <= k <= fib(n - 1) - 1:
        return fib(n - 2) + 2
    return fib(n) + 1 - k


def complexity_enum(word: str, k: int) -> int:
    """Distinct length-k factors of ``word`` by sliding window."""
    word = str(word)
    if not 1 <= k <= len(word):
        raise DomainError(f"factor length {k} outside 1..{len(word)}")
    return len({word[i:i + k] for i in range(len(word) - k + 1)})


def total_distinct_factors(n: int) -> int:
    """p(f_n): all distinct non-empty factors of f_n."""
    return sum(complexity_closed(n, k) for k in range(1, fib(n) + 1))


def distinct_squares_closed(n: int) -> int:
    """D(n) = 2(F(n-2) - 1), valid for n >= 5."""
    if n < 5:
        raise DomainError(f"distinct-square formula holds for n >= 5, got {n}")
    return 2 * (fib(n - 2) - 1)


def square_occurrences_closed(n: int) -> int:
    """R(n), square occurrences in f_n counted with repetition (n >= 3)."""
    if n < 3:
        raise DomainError(f"square-occurrence formula holds for n >= 3, got {n}")
    scaled = 4 * n * fib(n) - 2 * (n + 6) * fib(n - 1)
    if scaled % 5:
        raise ArithmeticError(f"4nF(n) - 2(n+6)F(n-1) not divisible by 5 at n={n}")
    return scaled // 5 - 4 * fib(n - 2) + n + 1


def is_primitive(word: str) -> bool:
    """True unless word = u^k with k > 1 (the empty word is not primitive)."""
    if not word:
        return False
    return (word + word).find(word, 1) == len(word)


def enumerate_squares(word: str, distinct: bool = False):
    """Brute-force squares xx with x primitive.

    Returns a sorted list of :class:`SquareOccurrence` (1-based starts), or
    with ``distinct=True`` the set of square factors xx.
    """
    word = str(word)
    hits = [
        (start, half)
        for start, half in kernels.square_matches(word)
        if is_primitive(word[start:start + half])
    ]
    if distinct:
        return {word[start:start + 2 * half] for start, half in hits}
    return [SquareOccurrence(start + 1, half) for start, half in hits]


def distinct_factor_positions(k: int, f_prefix: str | None = None) -> FactorPositionList:
    """The k+1 distinct length-k factors of f_inf, in order of first occurrence.

    Uses n with F(n) <= k < F(n+1): the j-th factor starts at j+1 for
    j < F(n) and at j + F(n+1) - k otherwise.
    """
    if k < 1:
        raise DomainError(f"factor length must be >= 1, got {k}")
    n = fib_index_at_most(k)
    needed = fib(n + 1) + k - 1
    if f_prefix is None:
        f_prefix = infinite_prefix(needed)
    if len(f_prefix) < needed:
        raise InsufficientPrefixError(
            f"k={k} reads up to position {needed}, prefix has {len(f_prefix)}"
        )
    entries = []
    for j in range(k + 1):
        start = j + 1 if j <= fib(n) - 1 else j + fib(n + 1) - k
        entries.append((start, f_prefix[start - 1:start - 1 + k]))
    return FactorPositionList(k, tuple(entries))
