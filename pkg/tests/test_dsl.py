"""Ring-definition language: parsing, errors, round-trip printing."""

import pytest

from ringlab.dsl import parse_ring_dsl, print_ring_dsl
from ringlab.errors import (
    DslSyntaxError,
    DuplicateName,
    NonMonicPoly,
    UndefinedName,
)
from ringlab.rings import same_tables


def test_single_zmod():
    script = parse_ring_dsl("ring Z6 = zmod(6)")
    assert script.names() == ["Z6"]
    assert script.get("Z6").size == 6
    assert script.get("Z6").label == "Z6"


def test_quotient_after_base():
    script = parse_ring_dsl("ring Z2 = zmod(2)\nring G = quotient(Z2, [1,1,1])")
    g = script.get("G")
    assert g.size == 4
    assert g.mul[2][2] == 3  # x*x = x+1 in the four-element field


def test_product_needs_two_names():
    with pytest.raises(DslSyntaxError) as exc:
        parse_ring_dsl("ring Z6 = zmod(6)\nring P = product(Z6)")
    assert exc.value.line == 2
    assert "another ring name" in exc.value.expected


def test_comments_and_whitespace():
    text = """
    # two rings
    ring   A = zmod( 4 )   # four elements
    ring B=product(A,A)
    """
    script = parse_ring_dsl(text)
    assert script.names() == ["A", "B"]
    assert script.get("B").size == 16


def test_undefined_name():
    with pytest.raises(UndefinedName) as exc:
        parse_ring_dsl("ring P = product(X, Y)")
    assert exc.value.details["name"] == "X"
    assert exc.value.details["line"] == 1


def test_duplicate_name():
    with pytest.raises(DuplicateName):
        parse_ring_dsl("ring A = zmod(2)\nring A = zmod(3)")


def test_constructor_error_carries_line():
    with pytest.raises(NonMonicPoly) as exc:
        parse_ring_dsl("ring Z3 = zmod(3)\n\nring Q = quotient(Z3, [1,2])")
    assert exc.value.details["line"] == 3


def test_syntax_error_position():
    with pytest.raises(DslSyntaxError) as exc:
        parse_ring_dsl("ring A = zmod(6")
    assert exc.value.line == 1
    assert exc.value.column == 16
    assert exc.value.expected == "')'"


def test_garbage_statement():
    with pytest.raises(DslSyntaxError):
        parse_ring_dsl("circle A = zmod(6)")


def test_table_statement():
    text = (
        "ring K = table { n=2; one=1; add=0, 1, 1, 0; mul=0, 0, 0, 1 }"
    )
    script = parse_ring_dsl(text)
    k = script.get("K")
    assert k.size == 2 and k.zero == 0


def test_table_wrong_length():
    with pytest.raises(DslSyntaxError):
        parse_ring_dsl("ring K = table { n=2; one=1; add=0, 1, 1; mul=0, 0, 0, 1 }")


def test_print_parse_round_trip():
    text = """
    ring Z2 = zmod(2)
    ring Z3 = zmod(3)
    ring G = quotient(Z2, [1,1,1])
    ring P = product(Z2, Z3, G)
    ring K = table { n=2; one=1; add=0, 1, 1, 0; mul=0, 0, 0, 1 }
    """
    script = parse_ring_dsl(text)
    printed = print_ring_dsl(script)
    reparsed = parse_ring_dsl(printed)
    assert script.names() == reparsed.names()
    for name in script.names():
        assert same_tables(script.get(name), reparsed.get(name))
    # printing is idempotent
    assert print_ring_dsl(reparsed) == printed


def test_get_unknown_ring():
    script = parse_ring_dsl("ring A = zmod(2)")
    with pytest.raises(UndefinedName):
        script.get("B")
