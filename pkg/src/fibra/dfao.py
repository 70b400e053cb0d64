"""DFAO reading Zeckendorf digit pairs and emitting cells of f_{inf,inf}.

Coordinates are 0-based.  A transition on digit pair (i, j) from state s
moves to the symbol at row i, column j of mu(s).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .array2d import Grid, check_budget
from .errors import DomainError, UndefinedTransitionError
from .fibcore import zeckendorf
from .morphism2d import FIB_MORPHISM, MorphismTable

__all__ = [
    "FibDFAO",
    "PaddedRepPair",
    "FIB_DFAO",
    "padded_pair",
    "transition",
    "symbol_at",
    "prefix_via_dfao",
    "export_automaton",
    "RestrictedAutomaton",
    "directive_language",
]

Pair = tuple[int, int]


@dataclass(frozen=True)
class PaddedRepPair:
    row_rep: str
    col_rep: str

    def pairs(self) -> list[Pair]:
        return [(int(r), int(c)) for r, c in zip(self.row_rep, self.col_rep)]


def padded_pair(m: int, n: int) -> PaddedRepPair:
    """Zeckendorf digits of m and n, left-padded with zeros to equal length."""
    rm, rn = zeckendorf(m), zeckendorf(n)
    length = max(len(rm), len(rn))
    return PaddedRepPair(rm.padded(length).text, rn.padded(length).text)


class FibDFAO:
    """All states final; output is the state itself."""

    def __init__(self, table: MorphismTable = FIB_MORPHISM):
        self.table = table
        self.states = tuple(table.images)
        self.initial = table.start
        self.alphabet = tuple(itertools.product((0, 1), repeat=2))
        self.delta: dict[tuple[str, Pair], str] = {}
        for s, img in table.images.items():
            for i in range(img.rows):
                for j in range(img.cols):
                    self.delta[(s, (i, j))] = img.lines[i][j]
        radix = max(max(img.rows, img.cols) for img in table.images.values())
        if radix != 2:
            raise DomainError(f"expected binary digit pairs, morphism radix is {radix}")

    def transition(self, state: str, pair: Pair) -> str:
        try:
            return self.delta[(state, tuple(pair))]
        except KeyError:
            raise UndefinedTransitionError(
                f"no transition from {state!r} on {tuple(pair)}"
            ) from None

    def run(self, pairs) -> str:
        state = self.initial
        for pair in pairs:
            state = self.transition(state, pair)
        return state

    def symbol_at(self, m: int, n: int) -> str:
        if m < 0 or n < 0:
            raise DomainError(f"coordinates must be non-negative, got ({m},{n})")
        return self.run(padded_pair(m, n).pairs())

    def edges(self) -> list[tuple[str, Pair, str]]:
        return [(s, pair, t) for (s, pair), t in self.delta.items()]

    def to_dot(self) -> str:
        lines = ["digraph fibonacci_dfao {", "  rankdir=LR;", f"  // initial: {self.initial}"]
        for s in self.states:
            style = ", style=bold" if s == self.initial else ""
            lines.append(f"  {s} [shape=doublecircle{style}];")
        for s, (i, j), t in self.edges():
            lines.append(f"  {s} -> {t} [label=\"({i},{j})\"];")
        lines.append("}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "states": list(self.states),
            "initial": self.initial,
            "final": list(self.states),
            "input_alphabet": [list(p) for p in self.alphabet],
            "transitions": [
                {"from": s, "input": list(pair), "to": t} for s, pair, t in self.edges()
            ],
        }


FIB_DFAO = FibDFAO()


def transition(s: str, d: Pair) -> str:
    return FIB_DFAO.transition(s, d)


def symbol_at(m: int, n: int) -> str:
    """Symbol at 0-based (m, n) of the infinite 2D Fibonacci word."""
    return FIB_DFAO.symbol_at(m, n)


def prefix_via_dfao(s: int, t: int, *, budget: int | None = None) -> Grid:
    if s < 1 or t < 1:
        raise DomainError(f"prefix size must be positive, got ({s},{t})")
    check_budget(s, t, budget)
    return Grid(tuple("".join(symbol_at(i, j) for j in range(t)) for i in range(s)))


def export_automaton(fmt: str = "dot"):
    """Graph description of the DFAO: ``"dot"`` text or a ``"dict"``."""
    if fmt == "dot":
        return FIB_DFAO.to_dot()
    if fmt == "dict":
        return FIB_DFAO.to_dict()
    raise DomainError(f"unknown export format {fmt!r}")


class RestrictedAutomaton:
    """1D automaton of a restricted morphism such as d -> dc, c -> d."""

    def __init__(self, morphism: dict[str, str], initial: str = "d"):
        self.morphism = dict(morphism)
        self.initial = initial

    def run(self, digits: str) -> str | None:
        """Final state, or None when a transition is undefined (input rejected)."""
        state = self.initial
        for ch in digits:
            image = self.morphism.get(state, "")
            k = int(ch)
            if k >= len(image):
                return None
            state = image[k]
        return state

    def accepts(self, digits: str) -> bool:
        return self.run(digits) is not None


def directive_language(max_length: int, automaton: RestrictedAutomaton | None = None) -> list[str]:
    """Accepted words without a leading zero, in length-then-lexicographic order."""
    if automaton is None:
        automaton = RestrictedAutomaton(FIB_MORPHISM.restrict_rows())
    words = [""]
    for length in range(1, max_length + 1):
        for tail in itertools.product("01", repeat=length - 1):
            word = "1" + "".join(tail)
            if automaton.accepts(word):
                words.append(word)
    return words
