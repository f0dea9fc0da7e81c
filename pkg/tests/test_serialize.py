from fractions import Fraction

import pytest

from hpbundles import (
    DomainError,
    FactoredRational,
    HNType,
    LaurentPoly,
    ReductiveClass,
    TruncatedSeries,
    WeightSystem,
)
from hpbundles import serialize
from hpbundles.rank2 import weight_system_adjoint_sl2


def test_poly_roundtrip():
    p = LaurentPoly({(0, 0): 1, (2, 1): Fraction(-3, 2), (-1, 4): 7})
    assert serialize.poly_from_obj(serialize.poly_to_obj(p)) == p


def test_poly_obj_is_sorted_and_stringly_exact():
    p = LaurentPoly({(2, 2): 1, (0, 0): Fraction(1, 2)})
    obj = serialize.poly_to_obj(p)
    assert obj == [{"p": 0, "q": 0, "c": "1/2"}, {"p": 2, "q": 2, "c": "1"}]


def test_rational_roundtrip():
    f = FactoredRational(
        LaurentPoly({(0, 0): 1, (1, 1): -2}),
        {(1, 1): 2, (2, 2): 1},
        Fraction(1, 2),
    )
    g = serialize.rational_from_obj(serialize.rational_to_obj(f))
    assert g.num == f.num and g.den == f.den and g.scalar == f.scalar


def test_rational_json_shape():
    f = FactoredRational(LaurentPoly({(0, 0): 1}), {(1, 1): 2}, Fraction(1, 2))
    obj = serialize.rational_to_obj(f)
    assert obj == {
        "scalar": "1/2",
        "num": [{"p": 0, "q": 0, "c": "1"}],
        "den": [{"a": 1, "b": 1, "k": 2}],
    }


def test_series_roundtrip():
    s = TruncatedSeries({(0, 0): 1, (1, 1): 3}, 5)
    assert serialize.series_from_obj(serialize.series_to_obj(s)) == s


def test_weight_system_roundtrip():
    ws = weight_system_adjoint_sl2(3)
    again = serialize.weight_system_from_obj(serialize.weight_system_to_obj(ws))
    assert again == ws


def test_weight_system_fraction_entries():
    ws = WeightSystem(
        dim=2,
        weights=(((Fraction(1, 2), 1), 2),),
        roots=(),
        chamber=((1, 0),),
    )
    obj = serialize.weight_system_to_obj(ws)
    assert obj["weights"][0]["v"] == ["1/2", 1]
    assert serialize.weight_system_from_obj(obj) == ws


def test_weight_system_malformed_rejected():
    with pytest.raises(DomainError):
        serialize.weight_system_from_obj({"weights": []})


def test_hn_type_roundtrip():
    t = HNType(((1, 3), (2, -1)))
    assert serialize.hn_type_from_obj(serialize.hn_type_to_obj(t)) == t


def test_reductive_class_roundtrip():
    c = ReductiveClass(((1, 1), (2, 1)), at_dimension_bound=True)
    back = serialize.reductive_class_from_obj(serialize.reductive_class_to_obj(c))
    assert back.pairs == c.pairs
    assert back.at_dimension_bound == c.at_dimension_bound


def test_dumps_deterministic():
    f = FactoredRational(LaurentPoly({(1, 1): 1, (0, 0): 1}), {(2, 2): 1, (1, 1): 1})
    first = serialize.dumps(serialize.rational_to_obj(f))
    second = serialize.dumps(serialize.rational_to_obj(f))
    assert first == second


def test_fraction_strings_never_floats():
    with pytest.raises(DomainError):
        serialize.parse_fraction(0.5)
