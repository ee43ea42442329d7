from pathlib import Path

import pytest

from derivant import ParseError, equals
from derivant import constructors as C
from derivant.specfile import FAMILIES, load_group, load_spec, parse_spec

DATA = Path(__file__).parent / "data"


def test_explicit_spec():
    G = load_group(DATA / "d8.grp")
    assert G.degree == 4 and G.order() == 8
    assert equals(G, C.dihedral(8))


def test_family_spec_with_relative_reference():
    G = load_group(DATA / "d8wrc2.grp")
    assert G.degree == 8 and G.order() == 128


def test_sym_shorthand():
    spec = load_spec("sym:6")
    assert spec.family == "symmetric"
    assert load_group("sym:6").order() == 720


@pytest.mark.parametrize("text, order", [
    ("family cyclic n=9", 9),
    ("family dihedral order=10", 10),
    ("family quaternion", 8),
    ("family central_product", 32),
    ("family extraspecial2 m=2 sign=-", 32),
    ("family metacyclic m=7 n=6 r=3", 42),
    ("family out_group d=8 f=2 p=3", 32),
    ("family agl d=1 q=8", 56),
    ("family asl d=2 q=3", 216),
    ("family translations d=2 q=5", 25),
    ("family agammal1 q=9", 144),
    ("family affine_squares q=11", 55),
    ("family gl d=2 q=3", 48),
    ("family sl d=2 q=3", 24),
    ("family psl d=2 q=7", 168),
    ("family pgl d=2 q=5", 120),
    ("family pgammal d=2 q=9", 1440),
    ("family holomorph n=7", 42),
    ("family holomorph p=3 d=2", 432),
    ("family case5 name=3^2:Q8", 72),
    ("family data_file name=case5_d2_q5_nsl.mat", 600),
    ("  family symmetric n=5   # trailing comment", 120),
])
def test_family_lines(text, order):
    assert parse_spec(text).build().order() == order


def test_every_family_is_documented():
    assert {"cyclic", "wreath", "holomorph", "data_file", "direct"} <= set(FAMILIES)


@pytest.mark.parametrize("text, line, column", [
    ("degree 4\n(1 2 3 4)\n(1 2)(2 3)", 3, 7),
    ("(1 2)", 1, 1),
    ("degree x", 1, 1),
    ("degree 4\ndegree 5", 2, 1),
    ("family nosuch n=3", 1, 8),
    ("family cyclic n=x", 1, 15),
    ("family cyclic m=3", 1, 15),
    ("family cyclic", 1, 8),
    ("family cyclic n=3\n(1 2)", 2, 1),
    ("hello", 1, 1),
    ("", 1, 1),
])
def test_parse_errors_have_positions(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_spec(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_bad_file_reports_position():
    with pytest.raises(ParseError) as info:
        load_spec(DATA / "bad.grp")
    assert info.value.line == 3 and info.value.column == 7
    assert "bad.grp" in str(info.value)


def test_missing_file_and_invalid_parameters():
    with pytest.raises(ParseError):
        load_spec(DATA / "missing.grp")
    with pytest.raises(ParseError):
        parse_spec("family dihedral order=7").build()
    with pytest.raises(ParseError):
        parse_spec("family data_file").build()
