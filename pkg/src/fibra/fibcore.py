"""Fibonacci numbers and the Zeckendorf (Fibonacci) numeration system.

Indexing follows F(0) = F(1) = 1, so the Zeckendorf weights read from the
least significant digit are F(1), F(2), F(3), ... = 1, 2, 3, 5, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InvalidRepresentationError

__all__ = [
    "fib",
    "fib_index_at_most",
    "ZeckRep",
    "zeckendorf",
    "zeck_value",
]


@lru_cache(maxsize=None)
def _fib_table(n: int) -> tuple[int, ...]:
    table = [1, 1]
    while len(table) <= n:
        table.append(table[-1] + table[-2])
    return tuple(table)


def fib(n: int) -> int:
    """Return F(n) with F(0) = F(1) = 1.

    >>> [fib(i) for i in range(8)]
    [1, 1, 2, 3, 5, 8, 13, 21]
    """
    if n < 0:
        raise DomainError(f"fib index must be non-negative, got {n}")
    # grow the cached table in chunks so repeated calls stay O(1)
    size = 64
    while size <= n:
        size *= 2
    return _fib_table(size)[n]


def fib_index_at_most(value: int) -> int:
    """Largest n >= 1 with F(n) <= value (value >= 1)."""
    if value < 1:
        raise DomainError(f"need value >= 1, got {value}")
    n = 1
    while fib(n + 1) <= value:
        n += 1
    return n


@dataclass(frozen=True)
class ZeckRep:
    """Zeckendorf digits, most significant first.

    ``digits`` is always canonical (no leading zero); ``pad`` counts the
    extra leading zeros requested by :meth:`padded`-style callers.
    """

    digits: str
    pad: int = 0

    def __post_init__(self):
        _validate(self.digits)
        if self.digits.startswith("0"):
            raise InvalidRepresentationError(
                f"canonical digits may not start with 0: {self.digits!r}"
            )
        if self.pad < 0:
            raise InvalidRepresentationError("pad must be non-negative")

    @property
    def value(self) -> int:
        return zeck_value(self.digits)

    @property
    def text(self) -> str:
        """The digit string including padding."""
        return "0" * self.pad + self.digits

    def padded(self, length: int) -> ZeckRep:
        if length < len(self.digits):
            raise InvalidRepresentationError(
                f"cannot pad {self.digits!r} down to length {length}"
            )
        return ZeckRep(self.digits, length - len(self.digits))

    def __len__(self) -> int:
        return self.pad + len(self.digits)

    def __str__(self) -> str:
        return self.text


def _validate(digits: str) -> None:
    if any(ch not in "01" for ch in digits):
        raise InvalidRepresentationError(f"non-binary digit in {digits!r}")
    if "11" in digits:
        raise InvalidRepresentationError(f"adjacent ones in {digits!r}")


def zeckendorf(m: int) -> ZeckRep:
    """Greedy Zeckendorf representation of ``m``; ``zeckendorf(0)`` is empty.

    >>> str(zeckendorf(4))
    '101'
    """
    if m < 0:
        raise DomainError(f"cannot represent negative integer {m}")
    if m == 0:
        return ZeckRep("")
    top = fib_index_at_most(m)
    out = []
    rest = m
    for i in range(top, 0, -1):
        if fib(i) <= rest:
            out.append("1")
            rest -= fib(i)
        else:
            out.append("0")
    return ZeckRep("".join(out))


def zeck_value(rep: ZeckRep | str) -> int:
    """Inverse of :func:`zeckendorf`; accepts a ``ZeckRep`` or a digit string.

    Leading zeros in a plain string are allowed and contribute nothing.
    """
    digits = rep.text if isinstance(rep, ZeckRep) else rep
    _validate(digits)
    length = len(digits)
    return sum(fib(length - i) for i, ch in enumerate(digits) if ch == "1")
