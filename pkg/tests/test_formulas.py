from fractions import Fraction

import pytest

from hexatile import formulas
from hexatile.errors import DomainError
from hexatile.matrices import build, determinant, sum_principal_minors

F = Fraction


def test_detK_closed_examples():
    assert formulas.detK_closed(0, 3, 4) == 1
    assert formulas.detK_closed(1, 2, 1) == 1
    assert formulas.detK_closed(2, 1, 1) == F(25, 18)
    with pytest.raises(DomainError):
        formulas.detK_closed(2, 0, 0)


def test_L_closed_examples():
    for x in (1, 2, 3):
        assert formulas.L_closed("A", 1, x) == F(1, 2)
        assert formulas.L_closed("B", 1, x) == 1
    assert formulas.L_closed("A", 2, 1) == 1
    with pytest.raises(DomainError):
        formulas.L_closed("A", 2, 0)
    with pytest.raises(DomainError):
        formulas.L_closed("C", 2, 1)


def test_CS_examples():
    assert formulas.CS_closed(1, 3) == 2
    assert formulas.CS_closed(2, 3) == 8
    assert formulas.CS_closed(3, 0) == 20
    with pytest.raises(DomainError):
        formulas.cs_formula_direct(2, 4)


def test_CS_polynomial_degree_and_values():
    for n in range(1, 6):
        P = formulas.cs_polynomial(n)
        assert P.degree <= formulas.cs_degree_bound(n)
        assert formulas.cs_polynomial(n, extra=2) == P
    assert formulas.cs_polynomial(2).to_string("t") == "2*t + 6"


@pytest.mark.parametrize("n", range(1, 6))
def test_CS_closed_equals_det_I_plus_B(n):
    for x in range(0, 7):
        assert formulas.CS_closed(n, x) == sum_principal_minors(build("B", n, x))


def test_CSTC_examples():
    for x in (0, 1, 2):
        assert formulas.CSTC_closed(2, 2 * x) == 1
    assert formulas.CSTC_closed(4, 2) == 3
    assert formulas.CSTC_closed(3, 2) == 0
    assert formulas.CSTC_closed(4, 3) == 0


def test_CSTC_closed_equals_det_C():
    for n in range(1, 5):
        for x in range(0, 5):
            assert formulas.CSTC_closed(2 * n, 2 * x) == determinant(build("C", n, x))


def test_self_complementary_sequences():
    assert [formulas.TSSC_closed(s) for s in (2, 4, 6, 8, 10)] == [1, 2, 7, 42, 429]
    assert formulas.CSSC_closed(2) == 1
    assert formulas.CSSC_closed(4) == 4
    for s in (2, 4, 6, 8, 10):
        assert formulas.CSSC_closed(s) == formulas.TSSC_closed(s) ** 2
    with pytest.raises(DomainError):
        formulas.CSSC_closed(3)


def test_TC_examples():
    assert formulas.TC_closed(2, 0) == 1
    assert formulas.TC_closed(2, 1) == 2
    assert formulas.TC_closed(3, 1) == 5


def test_PP_examples():
    assert formulas.macmahon_PP(3, 4, 0) == 1
    assert formulas.macmahon_PP(1, 1, 1) == 2
    assert formulas.macmahon_PP(2, 2, 2) == 20


def test_PP_symmetric_in_sides():
    for a in range(4):
        for b in range(4):
            for c in range(4):
                v = formulas.macmahon_PP(a, b, c)
                assert v == formulas.macmahon_PP(b, c, a) == formulas.macmahon_PP(b, a, c)


def test_SC_examples():
    assert formulas.SC_closed(2, 2) == 4
    assert formulas.SC_closed(2, 3) == 6
    assert formulas.SC_closed(3, 2) == 9
    assert formulas.SC_closed(3, 3) == 0


def test_class_tags():
    assert [t.value for t in formulas.ClassTag] == ["base", "cs", "cstc", "cssc", "tssc", "tc", "sc"]
