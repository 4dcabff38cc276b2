import pytest

from edgeideals.ideal import MonomialIdeal, parse_ideal
from edgeideals.monomial import VariableContext
from edgeideals.polarize import is_squarefree, polarize


def test_spec_example():
    pol, pmap = polarize(parse_ideal("(x1^2*x2^2, x2*x3)"))
    assert str(pol) == "(x1_1*x1_2*x2_1*x2_2, x2_1*x3_1)"
    assert pmap.widths == (2, 2, 1)
    assert pmap.target.names == ("x1_1", "x1_2", "x2_1", "x2_2", "x3_1")
    assert is_squarefree(pol)


def test_pure_power():
    pol, _ = polarize(parse_ideal("(x1^3)"))
    assert str(pol) == "(x1_1*x1_2*x1_3)"


def test_squarefree_is_a_relabeling():
    ideal = parse_ideal("(x1*x2, x2*x3)")
    pol, pmap = polarize(ideal)
    assert pol.exponents == ideal.exponents
    assert pmap.added_variables == 0


def test_unused_variables_are_kept():
    ideal = parse_ideal("(x1^2*x3)", VariableContext(4))
    pol, pmap = polarize(ideal)
    assert pmap.unused == (False, True, False, True)
    assert pol.nvars == 5
    assert pmap.describe()[1] == "x2 -> x2_1  (unused)"


def test_squarefree_checks():
    assert is_squarefree(parse_ideal("(x1*x2)"))
    assert not is_squarefree(parse_ideal("(x1^2*x2^2)"))


def test_zero_ideal_rejected():
    with pytest.raises(ValueError):
        polarize(MonomialIdeal.zero(VariableContext(2)))
