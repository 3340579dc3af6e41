import json

import pytest

from wstirling.ring import P, Q, RingValue, Z, parse
from wstirling.weights import (
    CATALOG,
    NegativeQInteger,
    UndefinedIndex,
    UnknownBuiltin,
    WeightPair,
    WeightSpec,
    builtin,
    combinatorial_catalog,
    eval_weight,
    swap,
)


def test_polynomial_weight():
    spec = WeightSpec("polynomial", coefficients=[4, 2])
    assert eval_weight(spec, 3) == 10
    assert eval_weight(spec, 0) == 4
    assert eval_weight(spec, -2) == 0


def test_polynomial_weight_ring_coefficients():
    spec = WeightSpec("polynomial", coefficients=[0, "z", 1])
    assert eval_weight(spec, 2) == 4 + 2 * Z
    assert eval_weight(spec, 1) == 1 + Z


def test_monomial_weight_laurent():
    spec = WeightSpec("monomial", base="p")
    assert eval_weight(spec, -1) == P ** -1
    assert eval_weight(spec, 0) == 1
    assert eval_weight(spec, 4) == P ** 4
    with pytest.raises(ValueError):
        WeightSpec("monomial", base="x")


def test_monomial_recursion_invariant():
    for base, var in [("p", P), ("q", Q), ("z", Z)]:
        spec = WeightSpec("monomial", base=base)
        for i in range(-10, 11):
            assert eval_weight(spec, i + 1) == var * eval_weight(spec, i)


def test_q_integer_weight():
    spec = WeightSpec("q-integer")
    assert eval_weight(spec, 0) == 0
    assert eval_weight(spec, 1) == 1
    assert eval_weight(spec, 3) == 1 + Q + Q ** 2
    with pytest.raises(NegativeQInteger):
        eval_weight(spec, -1)


def test_pq_integer_weight():
    spec = WeightSpec("pq-integer")
    assert eval_weight(spec, 2) == P + Q
    assert eval_weight(spec, 3) == P ** 2 + P * Q + Q ** 2
    assert eval_weight(spec, 0) == 0
    with pytest.raises(NegativeQInteger):
        eval_weight(spec, -2)


def test_pq_integer_specializes_to_integer():
    spec = WeightSpec("pq-integer")
    for i in range(21):
        assert eval_weight(spec, i).substitute({"p": 1, "q": 1}) == i


def test_product_shifted_weight():
    spec = WeightSpec("product-shifted", shifts=[0, 1])
    assert eval_weight(spec, 3) == 12
    assert eval_weight(spec, 0) == 0
    assert eval_weight(spec, -3) == 6


def test_oeis_row_weight():
    spec = WeightSpec("oeis-T", row=2)
    assert [eval_weight(spec, j).as_int() for j in range(-1, 4)] == [0, 3, 3, 4, 0]
    wide = WeightSpec("oeis-T", row=5)
    assert [eval_weight(wide, j).as_int() for j in range(6)] == [6, 6, 10, 10, 12, 12]


def test_table_weight():
    spec = WeightSpec("table", values={0: 1, 1: 3, 2: 2})
    assert eval_weight(spec, 1) == 3
    with pytest.raises(UndefinedIndex):
        eval_weight(spec, 5)
    with_default = WeightSpec("table", values={0: 7}, default=0)
    assert eval_weight(with_default, 99) == 0


def test_offset_shifts_the_index():
    spec = WeightSpec("polynomial", coefficients=[0, 1], offset=-1)
    assert eval_weight(spec, 0) == -1
    assert eval_weight(spec, 5) == 4


def test_swap_examples():
    pair = builtin("classical")
    swapped = swap(pair)
    assert eval_weight(swapped.v, 4) == 1
    assert eval_weight(swapped.w, 4) == 4
    assert swap(swapped) == pair
    pq = builtin("pq-binomial")
    assert eval_weight(swap(pq).v, 2) == Q ** 2
    assert eval_weight(swap(pq).w, 2) == P ** 2


def test_builtin_classical_and_friends():
    classical = builtin("classical")
    assert eval_weight(classical.v, 6) == 6
    assert eval_weight(classical.w, 6) == 1
    b = builtin("b-stirling")
    assert eval_weight(b.v, 5) == 5
    assert eval_weight(b.w, 5) == 5
    legendre = builtin("legendre")
    assert eval_weight(legendre.v, 3) == 12
    jacobi = builtin("jacobi")
    assert eval_weight(jacobi.v, 3) == 9 + 3 * Z
    zeta = builtin("zeta")
    assert eval_weight(zeta.v, -2) == Z ** -2
    assert eval_weight(zeta.w, 0) == -1
    assert eval_weight(zeta.w, 3) == 2


def test_builtin_parameterized():
    assert eval_weight(builtin("noncentral(-1)").v, 3) == 2
    assert eval_weight(builtin("merris(2)").v, 3) == 5
    assert eval_weight(builtin("sun(2)").v, 3) == 9
    assert eval_weight(builtin("sun(0)").v, 3) == 1


def test_builtin_rejections():
    for bad in ["nope", "merris", "merris(-1)", "sun(-2)", "classical(3)", "Merris(2)", ""]:
        with pytest.raises(UnknownBuiltin):
            builtin(bad)


def test_b_stirling_products_match_oeis_rows():
    b = builtin("b-stirling")
    for k in range(2, 13):
        row = WeightSpec("oeis-T", row=k - 2)
        products = sorted(
            (eval_weight(b.v, k - j) * eval_weight(b.w, j)).as_int() for j in range(k + 1))
        entries = sorted(eval_weight(row, j).as_int() for j in range(k + 1))
        assert products == entries, f"k={k}: {products} != {entries}"


def test_json_round_trip():
    pair = builtin("jacobi")
    text = pair.to_json()
    again = WeightPair.from_json(text)
    assert again == pair
    assert again.id == pair.id
    for i in range(-3, 4):
        assert eval_weight(again.v, i) == eval_weight(pair.v, i)


def test_json_format_shape():
    data = json.loads(builtin("zeta").to_json())
    assert set(data) == {"v", "w"}
    assert data["v"] == {"kind": "monomial", "base": "z"}
    assert data["w"] == {"kind": "polynomial", "coefficients": [0, 1], "offset": -1}


def test_table_json_uses_string_keys():
    spec = WeightSpec("table", values={-1: 5, 2: parse("p + q")})
    data = spec.to_dict()
    assert data["values"] == {"-1": 5, "2": "p + q"}
    assert WeightSpec.from_dict(data) == spec


def test_id_is_stable_and_content_based():
    a = WeightSpec("polynomial", coefficients=[0, 1])
    b = WeightSpec("polynomial", coefficients=[0, 1, 0])
    assert a.id == b.id
    assert a == b
    assert a.id != WeightSpec("polynomial", coefficients=[1, 1]).id


def test_is_combinatorial():
    expected = {"classical", "b-stirling", "legendre", "noncentral(1)", "merris(2)", "sun(2)"}
    assert set(combinatorial_catalog()) == expected
    assert not builtin("noncentral(-1)").is_combinatorial()
    assert not builtin("zeta").is_combinatorial()
    assert WeightSpec("table", values={0: 2}, default=0).is_combinatorial()
    assert not WeightSpec("table", values={0: -2}).is_combinatorial()
    assert not WeightSpec("polynomial", coefficients=[0, 1], offset=-1).is_combinatorial()


def test_catalog_evaluates_everywhere():
    # every catalog weight is total on a window, up to documented errors
    for name in CATALOG:
        pair = builtin(name)
        for spec in (pair.v, pair.w):
            for i in range(-4, 8):
                try:
                    eval_weight(spec, i)
                except NegativeQInteger:
                    assert spec.kind in ("q-integer", "pq-integer") and i < 0
