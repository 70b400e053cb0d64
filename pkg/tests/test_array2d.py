import pytest
from hypothesis import given, strategies as st

import naive
from fibra.array2d import (
    EMPTY,
    FibArrayParams,
    Grid,
    check_budget,
    check_row_column_structure,
    col_concat,
    fib_array,
    is_2d_palindrome,
    is_2d_primitive,
    is_horizontal_power,
    is_vertical_power,
    primitive_root_2d,
    row_concat,
    subgrid,
)
from fibra.errors import BoundsError, DomainError, ResourceError, ShapeError, StructuralViolation
from fibra.fibcore import fib
from fibra.word1d import fib_word

F23 = Grid(("dcd", "bab"))
F34 = Grid(("dcddc", "babba", "dcddc"))


def test_grid_invariants():
    assert EMPTY.shape == (0, 0)
    with pytest.raises(ShapeError):
        Grid(("",))
    with pytest.raises(ShapeError):
        Grid(("ab", "a"))
    with pytest.raises(DomainError):
        Grid(("ax",))


def test_grid_text_round_trip():
    assert Grid.from_text("dcd\nbab\n") == F23
    assert Grid.from_text(F23.to_text()) == F23
    assert F23.at(2, 2) == "a"
    assert F23.column(3) == "db"


def test_col_concat():
    assert col_concat(Grid("d"), Grid("c")) == Grid("dc")
    assert col_concat(EMPTY, F23) == F23 and col_concat(F23, EMPTY) == F23
    assert col_concat(fib_array(2, 2), fib_array(2, 1)) == fib_array(2, 3)
    with pytest.raises(ShapeError):
        col_concat(F23, Grid("d"))


def test_row_concat():
    assert row_concat(Grid("d"), Grid("b")) == Grid(("d", "b"))
    assert row_concat(fib_array(1, 3), fib_array(0, 3)) == fib_array(2, 3)
    assert row_concat(F23, EMPTY) == F23
    with pytest.raises(ShapeError):
        row_concat(F23, Grid("dc"))


def test_subgrid():
    assert subgrid(F23, 1, 1, 2, 2) == Grid(("dc", "ba"))
    assert subgrid(F23, 1, 1, 2, 3) == F23
    assert subgrid(F23, 1, 3, 2, 3) == Grid(("d", "b"))
    for bad in [(0, 1, 1, 1), (1, 1, 3, 1), (2, 1, 1, 1), (1, 2, 1, 4)]:
        with pytest.raises(BoundsError):
            subgrid(F23, *bad)


def test_fib_array_examples():
    assert fib_array(2, 3) == F23
    assert fib_array(1, 1) == Grid("d")
    assert fib_array(3, 4) == F34


def test_fib_array_size_law_and_naive_agreement():
    for m in range(11):
        for n in range(11):
            g = fib_array(m, n)
            assert g.shape == (fib(m), fib(n))
            if m <= 7 and n <= 7:
                assert g.lines == naive.fib_grid(m, n)


def test_expansion_order_independence():
    for m in range(10):
        for n in range(10):
            assert fib_array(m, n, order="rows") == fib_array(m, n, order="cols")
    with pytest.raises(DomainError):
        fib_array(2, 2, order="diagonal")


def test_concatenation_recurrences():
    for m in range(9):
        for n in range(1, 9):
            assert fib_array(m, n + 1) == col_concat(fib_array(m, n), fib_array(m, n - 1))
            assert fib_array(n + 1, m) == row_concat(fib_array(n, m), fib_array(n - 1, m))


def test_seed_validation_and_budget():
    assert fib_array(2, 2, "aabb") == Grid(("bb", "aa"))
    with pytest.raises(DomainError):
        FibArrayParams(2, 2, ("a", "a", "a", "a"))
    with pytest.raises(DomainError):
        fib_array(-1, 2)
    with pytest.raises(ResourceError):
        fib_array(20, 20)
    with pytest.raises(ResourceError):
        fib_array(5, 5, budget=10)
    check_budget(10, 10, budget=100)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("FIBRA_CELL_BUDGET", "100")
    with pytest.raises(ResourceError):
        fib_array(6, 6)
    monkeypatch.setenv("FIBRA_CELL_BUDGET", "lots")
    with pytest.raises(DomainError):
        fib_array(1, 1)


@pytest.mark.parametrize(
    "grid, primitive, root",
    [
        (Grid(("aa", "aa")), False, Grid("a")),
        (Grid("d"), True, Grid("d")),
        (F23, True, F23),
        (Grid("dcdc"), False, Grid("dc")),
        (Grid(("dc", "ba", "dc", "ba")), False, Grid(("dc", "ba"))),
        (Grid(("abab", "cdcd", "abab", "cdcd")), False, Grid(("ab", "cd"))),
    ],
)
def test_primitivity(grid, primitive, root):
    assert is_2d_primitive(grid) is primitive
    assert primitive_root_2d(grid) == root


def test_primitivity_empty():
    with pytest.raises(DomainError):
        is_2d_primitive(EMPTY)


@st.composite
def grids(draw, alphabet="ab", max_side=4):
    rows = draw(st.integers(1, max_side))
    cols = draw(st.integers(1, max_side))
    line = st.text(alphabet, min_size=cols, max_size=cols)
    return Grid(tuple(draw(st.lists(line, min_size=rows, max_size=rows))))


@given(grids())
def test_primitive_root_properties(g):
    root = primitive_root_2d(g)
    assert is_2d_primitive(root)
    assert primitive_root_2d(root) == root
    assert g.rows % root.rows == 0 and g.cols % root.cols == 0
    tiled = tuple((line * (g.cols // root.cols)) for line in root.lines) * (g.rows // root.rows)
    assert tiled == g.lines
    # 2D primitive <=> neither a horizontal nor a vertical proper power
    assert is_2d_primitive(g) == (not is_horizontal_power(g) and not is_vertical_power(g))


def test_palindrome_predicate():
    assert is_2d_palindrome(Grid(("ab", "ba")))
    assert not is_2d_palindrome(F23)


def test_structure_examples():
    rep = check_row_column_structure(F23)
    assert rep.row_alphabets == ("cd", "ab")
    assert F23.row(1) == fib_word(3, "c", "d").content and F23.row(2) == fib_word(3, "a", "b").content
    rep = check_row_column_structure(F34)
    assert F34.row(1) == F34.row(3)
    assert rep.row_alphabets == ("cd", "ab", "cd")
    check_row_column_structure(Grid("d"))


def test_structure_sweep():
    for m in range(2, 9):
        for n in range(2, 9):
            rep = check_row_column_structure(fib_array(m, n))
            assert set(rep.row_alphabets) == {"cd", "ab"}
            assert set(rep.col_alphabets) == {"ac", "bd"}


def test_structure_violation_names_the_row():
    broken = Grid(("dcd", "bba"))
    with pytest.raises(StructuralViolation, match="row 2"):
        check_row_column_structure(broken)
    broken = Grid(("dcddc", "babba", "dcdcd"))
    with pytest.raises(StructuralViolation, match="row 3"):
        check_row_column_structure(broken)
