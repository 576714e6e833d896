import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hercat import serialize as io
from hercat.classify import CurveCat, DirectSum, QuiverCat, TubeCat, classify
from hercat.errors import ParseError
from hercat.klattice import EulerLattice, curve_lattice
from hercat.quiver import Quiver, random_acyclic_quiver, random_rep
from hercat.tube import TubeObject

A2 = Quiver.linear_a(2)


def roundtrip(obj):
    return json.loads(io.dumps(obj))


def test_rationals():
    assert io.encode_rational(Fraction(3)) == 3
    assert io.encode_rational(Fraction(-2, 6)) == "-1/3"
    assert io.parse_rational("4/6", "x") == Fraction(2, 3)
    assert io.parse_rational(-5, "x") == -5
    for bad in (0.5, True, "1/0", "one", None, "1.5"):
        with pytest.raises(ParseError):
            io.parse_rational(bad, "x")


@given(st.fractions())
def test_rational_roundtrip(x):
    assert io.parse_rational(roundtrip(io.encode_rational(x)), "x") == x


def test_lattice_roundtrip_and_schema():
    lat = curve_lattice(2)
    doc = io.lattice_to_json(lat)
    assert doc["schema"] == 1 and doc["rank"] == 2 and doc["labels"] == ["k(P)", "O_X"]
    assert io.parse_lattice(roundtrip(doc)) == lat
    assert io.parse_lattice([[1, 0], [0, 1]]).rank == 2


@pytest.mark.parametrize(
    "doc,where",
    [
        ({"gram": [[1, 0.5], [0, 1]]}, "gram[0][1]"),
        ({"gram": [[1, 0], [0]]}, "gram[1]"),
        ({"gram": [[1, 0]]}, "gram"),
        ({"rank": 3, "gram": [[1]]}, "rank"),
        ({"gram": [[1]], "labels": ["a", "b"]}, "labels"),
        ({"schema": 2, "gram": [[1]]}, "schema"),
        ({"rank": 1}, ""),
    ],
)
def test_lattice_errors(doc, where):
    with pytest.raises(ParseError) as info:
        io.parse_lattice(doc)
    assert info.value.path == where or (where == "" and "missing" in str(info.value))


def test_quiver_roundtrip_and_errors():
    q = Quiver(3, ((0, 1), (0, 1), (2, 1)))
    assert io.parse_quiver(roundtrip(io.quiver_to_json(q))) == q
    with pytest.raises(ParseError) as info:
        io.parse_quiver({"vertices": 2, "arrows": [[0, 1], [1, 2]]})
    assert info.value.path == "arrows[1][1]"
    with pytest.raises(ParseError):
        io.parse_quiver({"vertices": -1})


@given(st.integers(0, 10**6))
def test_rep_roundtrip(seed):
    rng = random.Random(seed)
    q = random_acyclic_quiver(rng)
    m = random_rep(rng, q)
    assert io.parse_rep(roundtrip(io.rep_to_json(m)), q) == m


def test_rep_positional_errors():
    with pytest.raises(ParseError) as info:
        io.parse_rep({"dims": [1, 2], "maps": [[[1], ["x"]]]}, A2, "--left")
    assert info.value.path == "--left.maps[0][1][0]"
    with pytest.raises(ParseError) as info:
        io.parse_rep({"dims": [1, 2], "maps": [[[1]]]}, A2)
    assert info.value.path == "maps[0]"
    with pytest.raises(ParseError) as info:
        io.parse_rep({"dims": [1], "maps": []}, A2)
    assert info.value.path == "dims"


def test_rep_zero_blocks():
    m = io.parse_rep({"dims": [0, 1], "maps": [[]]}, A2)
    assert m.dims == (0, 1) and m.maps == (((),),)
    assert io.parse_rep({"dims": [0, 1], "maps": [[[]]]}, A2) == m


def test_tube_object_roundtrip():
    x = TubeObject(3, 2, 5)
    assert io.parse_tube_object(roundtrip(io.tube_object_to_json(x))) == x
    assert io.parse_tube_object({"base": 1, "length": 2}, 3) == TubeObject(3, 1, 2)
    with pytest.raises(ParseError):
        io.parse_tube_object({"base": 1, "length": 2})
    with pytest.raises(ParseError) as info:
        io.parse_tube_object({"base": 3, "length": 2}, 3)
    assert info.value.path == "base"


@pytest.mark.parametrize(
    "d",
    [
        TubeCat(3),
        CurveCat(2),
        QuiverCat(Quiver.linear_a(3)),
        DirectSum((TubeCat(1), DirectSum((CurveCat(0), QuiverCat(A2))))),
    ],
)
def test_descriptor_roundtrip(d):
    assert io.parse_descriptor(roundtrip(io.descriptor_to_json(d))) == d


def test_descriptor_variants():
    assert io.parse_descriptor({"type": "sum", "summands": [{"type": "tube", "rank": 2}]}) == DirectSum((TubeCat(2),))
    assert io.parse_descriptor({"type": "quiver", "quiver": {"vertices": 2, "arrows": [[0, 1]]}}) == QuiverCat(A2)
    with pytest.raises(ParseError):
        io.parse_descriptor({"type": "quiver", "vertices": 2, "arrows": [[0, 1], [1, 0]]})
    with pytest.raises(ParseError) as info:
        io.parse_descriptor({"type": "sheaf"})
    assert info.value.path == "type"


def test_report_json_stable():
    r = classify(DirectSum((CurveCat(1), TubeCat(2))))
    doc = io.report_to_json(r)
    assert doc["schema"] == 1
    assert io.dumps(doc) == io.dumps(io.report_to_json(classify(DirectSum((CurveCat(1), TubeCat(2))))))
    assert roundtrip(doc) == doc
    assert io.parse_descriptor(doc["descriptor"]) == r.descriptor


def test_loads_reports_position():
    with pytest.raises(ParseError) as info:
        io.loads('{"a": [1, 2,]}', "--gram")
    assert "line 1" in str(info.value)


def test_lattice_does_not_accept_floats_anywhere():
    doc = {"gram": [[1.0]]}
    with pytest.raises(ParseError):
        io.parse_lattice(doc)
    assert io.parse_lattice({"gram": [[1]]}) == EulerLattice.from_rows([[1]])
