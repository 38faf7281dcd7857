from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hexatile import formulas
from hexatile.errors import DomainError, ResourceError
from hexatile.lgvpaths import (
    PathSystem,
    StepRule,
    brute_families,
    is_nonpermutable,
    lgv_count,
    lgv_matrix,
    path_count,
    path_system,
    pentagon_entry_closed,
)
from hexatile.matrices import build, principal_minor

F = Fraction


def test_pentagon_points():
    a = path_system("A", 1, 1)
    assert a.starts == ((0, 1),) and a.ends == ((1, 1),)
    assert a.rule is StepRule.HALF_LAST_HORIZONTAL
    b = path_system("B", 1, 1)
    assert (b.starts, b.ends) == (a.starts, a.ends)
    assert b.rule is StepRule.HALF_FIRST_VERTICAL


def test_minor_system_points():
    s = path_system("minor", 2, 0, index_set={0, 1})
    assert s.starts == ((1, 0), (0, 0))
    assert s.ends == ((1, 0), (1, 1))


def test_path_count_examples():
    assert path_count((0, 0), (2, 1)) == 3
    assert path_count((0, 0), (2, 1), StepRule.HALF_LAST_HORIZONTAL) == 2
    assert path_count((0, 1), (1, 1), StepRule.HALF_LAST_HORIZONTAL) == F(1, 2)
    assert path_count((0, 0), (0, 0), StepRule.HALF_FIRST_VERTICAL) == 1
    assert path_count((1, 1), (0, 5)) == 0


def test_lgv_matrix_small():
    assert lgv_matrix(path_system("A", 1, 1)).tolist() == [[F(1, 2)]]
    assert lgv_matrix(path_system("B", 1, 1)).tolist() == [[1]]
    M = lgv_matrix(path_system("A", 2, 1))
    # start (1,1) lies straight below end (1,3): one all-north path
    assert M[1, 0] == 1
    # start (0,3) lies above end (3,2): no path; this is the vanishing K_2(1,0) entry
    assert M[0, 1] == 0 == build("K", 2, 1, 0)[1, 0]


@pytest.mark.parametrize("kind", ["A", "B", "C"])
def test_entries_match_binomial_forms(kind):
    for x in range(0, 5):
        for n in range(1, 5):
            M = lgv_matrix(path_system(kind, n, x))
            for i in range(n):
                for j in range(n):
                    if x == i == j == 0:
                        continue  # empty path: binomial form is off here
                    assert M[i, j] == pentagon_entry_closed(kind, x, i, j)


@pytest.mark.parametrize("kind", ["A", "B"])
def test_factored_entry_forms(kind):
    # (x+3i)/2 row prefactor for A, (2x+3j)/2 column prefactor for B
    for x in range(1, 5):
        for i in range(4):
            for j in range(4):
                if 2 * i - j < 0 or x - i + 2 * j < 0:
                    continue
                pre = F(x + 3 * i, 2) if kind == "A" else F(2 * x + 3 * j, 2)
                tail = F(formulas.factorial(x + i + j - 1),
                         formulas.factorial(x - i + 2 * j) * formulas.factorial(2 * i - j))
                assert pentagon_entry_closed(kind, x, i, j) == pre * tail


def test_lgv_count_examples():
    assert lgv_count(path_system("A", 1, 1)) == F(1, 2)
    assert lgv_count(path_system("A", 2, 1)) == 1
    assert lgv_count(path_system("minor", 2, 0, index_set=[])) == 1


@pytest.mark.parametrize("kind", ["A", "B", "C"])
def test_lgv_equals_brute_families(kind):
    for n in range(1, 4):
        for x in range(0, 4):
            sys = path_system(kind, n, x)
            assert lgv_count(sys) == brute_families(sys)


def test_minor_systems_give_principal_minors():
    for n in range(1, 4):
        for x in range(0, 3):
            B = build("B", n, x)
            for mask in range(1 << n):
                S = [i for i in range(n) if mask >> i & 1]
                sys = path_system("minor", n, x, index_set=S)
                assert brute_families(sys) == principal_minor(B, S)


def test_box_system_counts_plane_partitions():
    for a in range(4):
        for b in range(4):
            for c in range(4):
                assert lgv_count(path_system("box", a, b, c=c)) == formulas.macmahon_PP(a, b, c)


def test_L_closed_agrees_with_lgv():
    for kind in "AB":
        for n in range(1, 5):
            for x in range(1, 5):
                assert lgv_count(path_system(kind, n, x)) == formulas.L_closed(kind, n, x)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from("ABC"), st.integers(1, 3), st.integers(0, 3))
def test_pentagon_systems_are_nonpermutable(kind, n, x):
    assert is_nonpermutable(path_system(kind, n, x))


def test_errors():
    with pytest.raises(DomainError):
        path_system("A", 0, 1)
    with pytest.raises(DomainError):
        path_system("minor", 2, 0, index_set=[2])
    with pytest.raises(DomainError):
        path_system("nope", 1, 1)
    with pytest.raises(DomainError):
        PathSystem(((0, 0),), ())
    with pytest.raises(ResourceError):
        brute_families(path_system("C", 5, 1))
