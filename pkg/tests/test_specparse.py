import pytest

from hopfgalois import (
    Alternating4,
    Cyclic,
    Dihedral,
    DirectProduct,
    Holomorph,
    SemidirectCC,
    SemidirectZ2,
    canonical_text,
    catalog,
    parse_group_spec,
)
from hopfgalois.errors import SpecSemanticError, SpecSyntaxError


def test_atoms():
    assert parse_group_spec("D30") == Dihedral(30)
    assert parse_group_spec("C6") == Cyclic(6)
    assert parse_group_spec("SD(7,3;2)") == SemidirectCC(7, 3, 2)
    assert parse_group_spec("SDZ2(15;4)") == SemidirectZ2(15, 4)
    assert parse_group_spec("A4") == Alternating4()
    assert parse_group_spec("Hol(D6)") == Holomorph(Dihedral(6))


def test_products_left_associate():
    spec = parse_group_spec("C2xC3xC5")
    assert spec == DirectProduct(DirectProduct(Cyclic(2), Cyclic(3)), Cyclic(5))


def test_whitespace_insensitive():
    assert parse_group_spec(" SD( 7 , 3 ; 2 ) ") == SemidirectCC(7, 3, 2)
    assert parse_group_spec("C2 x C6") == DirectProduct(Cyclic(2), Cyclic(6))


def test_nested_holomorph():
    assert parse_group_spec("Hol(C2xC3)") == Holomorph(
        DirectProduct(Cyclic(2), Cyclic(3))
    )


def test_semantic_error_distinct_from_syntax():
    with pytest.raises(SpecSemanticError):
        parse_group_spec("SD(7,3;3)")
    with pytest.raises(SpecSyntaxError):
        parse_group_spec("SD(7,3)")


def test_syntax_error_position_and_expected():
    with pytest.raises(SpecSyntaxError) as info:
        parse_group_spec("C6x")
    assert info.value.position == 3
    with pytest.raises(SpecSyntaxError) as info:
        parse_group_spec("Cx6")
    assert info.value.expected == "integer"
    assert info.value.position == 1
    with pytest.raises(SpecSyntaxError) as info:
        parse_group_spec("C6 D6")
    assert "end of input" in str(info.value)
    with pytest.raises(SpecSyntaxError):
        parse_group_spec("@")
    with pytest.raises(SpecSyntaxError):
        parse_group_spec("")


def test_round_trip_handwritten():
    for text in ("C6", "D30", "SD(7,3;2)", "SDZ2(15;4)", "A4", "Hol(D6)", "C2xC6"):
        spec = parse_group_spec(text)
        assert canonical_text(spec) == text
        assert parse_group_spec(canonical_text(spec)) == spec


@pytest.mark.parametrize("order", [1, 2, 4, 6, 10, 12, 14, 15, 21, 30])
def test_round_trip_catalog(order):
    for entry in catalog(order):
        text = canonical_text(entry.spec)
        assert parse_group_spec(text) == entry.spec


def test_parse_then_print_idempotent():
    # print(parse(s)) is a fixed point of parse/print
    for text in ("C2 x C3", "Hol( C6 )", "SD(5,4;2)"):
        spec = parse_group_spec(text)
        again = parse_group_spec(canonical_text(spec))
        assert canonical_text(again) == canonical_text(spec)
