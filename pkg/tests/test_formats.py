import pytest

from linarr.exactfield import BadFieldElement, finite_field
from linarr.families import FamilySpec, generate
from linarr.formats import FormatSyntaxError, parse_arrangement, read_arrangement, serialize_arrangement
from linarr.incidence import DuplicateLine, TVector, compute_incidence

FANO = """field GF 2 1
line 1 0 0
line 0 1 0
line 0 0 1
line 1 1 0
line 1 0 1
line 0 1 1
line 1 1 1
"""


def test_parse_pencil():
    arr = parse_arrangement("field Q\nline 1 0 0\nline 0 1 0\nline 1 -1 0")
    assert compute_incidence(arr).tvector() == TVector(3, {3: 1})


def test_parse_fano_with_comments():
    text = "# Fano plane\n\n" + FANO.replace("line 1 1 1", "line 1 1 1   # the last one")
    arr = parse_arrangement(text)
    assert arr.field is finite_field(2)
    assert compute_incidence(arr).tvector() == TVector(7, {3: 7})


def test_duplicate_line():
    with pytest.raises(DuplicateLine, match="line 3"):
        parse_arrangement("field Q\nline 1 0 0\nline 2 0 0")


@pytest.mark.parametrize(
    "text, lineno, col",
    [
        ("line 1 0 0\n", 1, 1),
        ("field Q\nline 1 0\n", 2, 1),
        ("field Q\nline 0 0 0\nline 1 0 0\n", 2, 1),
        ("field Q\nfield Q\n", 2, 1),
        ("field Q\npoint 1 0 0\n", 2, 1),
        ("field GF 4 1\n", 1, 7),
        ("", 1, 1),
    ],
)
def test_syntax_errors_carry_position(text, lineno, col):
    with pytest.raises(FormatSyntaxError) as info:
        parse_arrangement(text)
    assert (info.value.lineno, info.value.col) == (lineno, col)


def test_bad_elements():
    with pytest.raises(BadFieldElement, match="line 2, column 8"):
        parse_arrangement("field Q\nline 1 x 0\nline 0 1 0\n")
    with pytest.raises(BadFieldElement):
        parse_arrangement("field GF 2 2\nline [1,0] [0,2] [0,0]\n")
    with pytest.raises(BadFieldElement):
        parse_arrangement("field CYCLO 3\nline [1,0] [0,1/0] [0,0]\n")


def test_cyclotomic_vectors_parse():
    arr = parse_arrangement("field CYCLO 3\nline [1,0] [0,-1] [0,0]\nline [0,0] [1,0] [-1, 0]\nline [1,0] [0,0] [0,0]\n")
    assert arr.d == 3


def _specs():
    yield FamilySpec("quadrilateral", ())
    yield FamilySpec("polygon", (5,))
    yield FamilySpec("ceva", (4,))
    yield FamilySpec("hesse", ())
    yield FamilySpec("pg", (3, 2))
    yield FamilySpec("right-triangle", (3,))
    yield FamilySpec("ceva", (5, 11))


@pytest.mark.parametrize("spec", list(_specs()), ids=str)
def test_roundtrip_is_byte_identical(spec, tmp_path):
    arr = generate(spec)
    text = serialize_arrangement(arr)
    again = parse_arrangement(text)
    assert again.lines == arr.lines and again.field is arr.field
    assert serialize_arrangement(again) == text
    path = tmp_path / "a.arr"
    path.write_text(text)
    assert read_arrangement(path).lines == arr.lines


def test_serialize_normalizes():
    arr = parse_arrangement("field Q\nline 2 4 6\nline 0 3 0\n")
    assert serialize_arrangement(arr) == "field Q\nline 1 2 3\nline 0 1 0\n"

