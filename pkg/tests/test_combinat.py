"""Tests for the colored combinatorial models."""

from itertools import permutations

import pytest

from wstirling.combinat import (
    ColoredPartition,
    ColoredPermutation,
    EnumerationCapExceeded,
    InvalidColorBudget,
    NonCombinatorialWeights,
    SignedPartition,
    ZeroOneTableau,
    count_01v,
    enumerate_01v,
    enumerate_part,
    enumerate_perm,
    enumerate_signed_partitions,
    from_partition,
    from_permutation,
    part_is_member,
    perm_is_member,
    to_partition,
    to_permutation,
    tuple_decomposition_check,
)
from wstirling.stirling import first_kind, second_kind
from wstirling.tableaux import BTableau, enumerate_T, enumerate_Td, weight
from wstirling.weights import WeightPair, WeightSpec, builtin, combinatorial_catalog

ONE = WeightSpec("constant", value=1)
IDENT = WeightSpec("polynomial", coefficients=[0, 1])
V24 = WeightSpec("polynomial", coefficients=[4, 2])


def _pair(v: WeightSpec) -> WeightPair:
    return WeightPair(v, ONE)


# -- counting and enumerating colored tableaux ----------------------------------

def test_count_matches_weight_for_catalog():
    shapes = list(enumerate_T(0, 0, 3, 2)) + list(enumerate_Td(0, 0, 3, 2))
    for name in combinatorial_catalog():
        pair = builtin(name)
        for shape in shapes:
            assert count_01v(shape, pair) == weight(shape, pair).as_int()


def test_count_rejects_symbolic_weights():
    shape = BTableau.from_tops((1,), 1)
    with pytest.raises(NonCombinatorialWeights):
        count_01v(shape, builtin("pq-binomial"))
    with pytest.raises(NonCombinatorialWeights):
        enumerate_01v(shape, builtin("jacobi"))


def test_invalid_color_budget_from_table_weights():
    # value(2) - value(0) = 1 is not divisible by 2
    corrupted = WeightSpec("table", values={0: 1, 1: 3, 2: 2})
    shape = BTableau.from_tops((2,), 2)
    assert corrupted.is_combinatorial()
    with pytest.raises(InvalidColorBudget):
        count_01v(shape, _pair(corrupted))
    # a drop below value(0) is just as invalid
    decreasing = WeightSpec("table", values={0: 3, 1: 1})
    with pytest.raises(InvalidColorBudget):
        count_01v(BTableau.from_tops((1,), 1), _pair(decreasing))


def test_enumerate_01v_example():
    shape = BTableau.from_tops((1,), 1)
    out = enumerate_01v(shape, _pair(V24))
    # 4 first-row colors plus one interior row with (6 - 4) / 1 = 2 colors
    assert len(out) == count_01v(shape, _pair(V24)) == 6
    assert out[0].render() == "[1 / 0] above 1_1 below 1_1"
    assert {t.above[0] for t in out} == {(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)}
    with pytest.raises(EnumerationCapExceeded):
        enumerate_01v(shape, _pair(V24), cap=5)


def test_zero_one_tableau_validation():
    shape = BTableau.from_tops((1,), 1)
    with pytest.raises(ValueError):
        ZeroOneTableau(shape, ((3, 1),), ((1, 1),))
    with pytest.raises(ValueError):
        ZeroOneTableau(shape, ((1, 1),), ((1, 0),))
    with pytest.raises(ValueError):
        ZeroOneTableau(shape, ((1, 1),), ((1, 1),), rows=5)
    with pytest.raises(ValueError):
        ZeroOneTableau(BTableau(()), (), ())
    assert ZeroOneTableau(BTableau(()), (), (), rows=3).path() == "VVV"


def test_path_from_shape():
    phi = ZeroOneTableau(BTableau.from_tops((3, 1, 1), 5),
                         ((3, 2), (1, 3), (2, 1)), ((1, 1),) * 3)
    assert phi.rows == 7
    assert phi.path() == "VVHHVVHVVV"
    psi = ZeroOneTableau(BTableau.from_tops((3, 1, 0), 5),
                         ((4, 1), (2, 1), (1, 4)), ((1, 1),) * 3)
    assert psi.path() == "VHVHVVHVVV"


# -- the worked partition and permutation examples ------------------------------

def test_partition_golden():
    t = ZeroOneTableau(BTableau.from_tops((3, 1, 1), 5),
                       ((3, 2), (1, 3), (2, 1)), ((1, 1),) * 3)
    p = to_partition(t)
    assert p.render() == "{0,3_3}{1,2_1}{4,6_2}{5}{7}{8}"
    assert part_is_member(p, 8, 5, V24)
    assert from_partition(p, _pair(V24)) == t


def test_permutation_golden():
    t = ZeroOneTableau(BTableau.from_tops((3, 1, 0), 5),
                       ((4, 1), (2, 1), (1, 4)), ((1, 1),) * 3)
    q = to_permutation(t)
    assert q.render() == "(0 1_4 2_1)(3 4_1)(5)(6)"
    assert q.word() == ((0, None), (1, 4), (2, 1), (3, None), (4, 1), (5, None), (6, None))
    assert perm_is_member(q, 6, 3, V24)
    assert from_permutation(q, _pair(V24)) == t


def test_all_vertical_paths_give_singletons():
    t = ZeroOneTableau(BTableau(()), (), (), rows=5)
    assert to_partition(t).render() == "{0}{1}{2}{3}"
    assert to_permutation(t).render() == "(0)(1)(2)(3)(4)"


# -- bijections over exhaustive domains ------------------------------------------

def _colored_tableaux(shapes, v, rows):
    out = []
    for shape in shapes:
        out.extend(enumerate_01v(shape, _pair(v), rows=rows))
    return out


@pytest.mark.parametrize("v", [IDENT, V24], ids=["classical", "shifted"])
@pytest.mark.parametrize("alpha,beta", [(0, 0), (1, 0), (0, 1), (1, 1)])
def test_partition_bijection(v, alpha, beta):
    for n, k in ((3, 1), (4, 2), (4, 4)):
        rows = alpha + beta + k + 2
        tableaux = _colored_tableaux(enumerate_T(alpha, beta, k, n - k), v, rows)
        images = [to_partition(t) for t in tableaux]
        assert len(set(images)) == len(images)
        big_n, big_k = n + alpha + beta, k + alpha + beta
        for t, p in zip(tableaux, images):
            assert part_is_member(p, big_n, big_k, v)
            assert from_partition(p, _pair(v)) == t
        expected = [p for p in enumerate_part(big_n, big_k, v)
                    if _restricted(p.blocks, big_n, alpha, beta)]
        assert set(images) == set(expected)
        assert len(images) == second_kind(_pair(v), alpha, beta, n, k).as_int()


@pytest.mark.parametrize("v", [IDENT, V24], ids=["classical", "shifted"])
@pytest.mark.parametrize("alpha,beta", [(0, 0), (1, 0), (0, 1), (1, 1)])
def test_permutation_bijection(v, alpha, beta):
    for n, k in ((3, 1), (4, 2), (4, 4)):
        rows = alpha + beta + n + 1
        tableaux = _colored_tableaux(enumerate_Td(alpha, beta, n - 1, n - k), v, rows)
        images = [to_permutation(t) for t in tableaux]
        assert len(set(images)) == len(images)
        big_n, big_k = n + alpha + beta, k + alpha + beta
        for t, q in zip(tableaux, images):
            assert perm_is_member(q, big_n, big_k, v)
            assert from_permutation(q, _pair(v)) == t
        expected = [q for q in enumerate_perm(big_n, big_k, v)
                    if _restricted(q.cycles, big_n, alpha, beta)]
        assert set(images) == set(expected)
        assert len(images) == first_kind(_pair(v), alpha, beta, n, k).as_int()


def _restricted(groups, big_n, alpha, beta):
    # ambient offsets pin the small labels to minima and the large ones to
    # singleton groups
    minima = {g[0][0] for g in groups}
    if any(e not in minima for e in range(alpha + 1)):
        return False
    if any(e not in minima for e in range(big_n - beta + 1, big_n + 1)):
        return False
    return all(len(g) == 1 for g in groups if g[0][0] > big_n - beta)


def test_round_trip_on_full_partition_set():
    for p in enumerate_part(4, 2, V24):
        assert to_partition(from_partition(p, _pair(V24))) == p


def test_round_trip_on_full_permutation_set():
    for q in enumerate_perm(4, 2, V24):
        assert to_permutation(from_permutation(q, _pair(V24))) == q


# -- direct enumerations ----------------------------------------------------------

def test_enumerate_part_counts():
    assert len(enumerate_part(2, 1, V24)) == 10
    legendre = WeightSpec("product-shifted", shifts=[0, 1])
    squares = WeightSpec("polynomial", coefficients=[0, 0, 1])
    for v in (IDENT, V24, legendre, squares):
        for n in range(6):
            for k in range(n + 1):
                assert len(enumerate_part(n, k, v)) == \
                    second_kind(_pair(v), 0, 0, n, k).as_int()


def test_enumerate_perm_counts():
    assert len(enumerate_perm(2, 1, IDENT)) == 1
    assert len(enumerate_perm(4, 2, IDENT)) == 11
    for v in (IDENT, V24):
        for n in range(6):
            for k in range(n + 1):
                out = enumerate_perm(n, k, v)
                assert len(set(out)) == len(out)
                assert all(perm_is_member(q, n, k, v) for q in out)
                assert len(out) == first_kind(_pair(v), 0, 0, n, k).as_int()


def test_perm_budget_follows_insertion_position_not_cycle():
    # Counting classes of {0..3} into two cycles with the budget read off the
    # final cycle membership (v(0) = 4 colors anywhere in the cycle of 0,
    # (v(a-1) - v(0)) / (a-1) = 2 otherwise) overcounts: insertions below the
    # first row can land in the cycle of 0 but never carry the v(0) budget.
    by_cycle_rule = 0
    for image in permutations(range(4)):
        seen, cycles = set(), []
        for start in range(4):
            if start in seen:
                continue
            cycle, x = [], start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = image[x]
            cycles.append(cycle)
        if len(cycles) != 2:
            continue
        weight_product = 1
        for cycle in cycles:
            for a in cycle:
                if a == min(cycle):
                    continue
                weight_product *= 4 if 0 in cycle else 2
        by_cycle_rule += weight_product
    assert by_cycle_rule == 128
    true_count = first_kind(_pair(V24), 0, 0, 3, 1).as_int()
    assert true_count == 104
    assert len(enumerate_perm(3, 1, V24)) == true_count


def test_enumeration_caps():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_part(5, 2, V24, cap=10)
    with pytest.raises(EnumerationCapExceeded):
        enumerate_perm(5, 2, V24, cap=10)
    with pytest.raises(EnumerationCapExceeded):
        enumerate_signed_partitions(6, 3, cap=10)


def test_colored_type_validation():
    with pytest.raises(ValueError):
        ColoredPartition((((1, None), (0, 2)),))
    with pytest.raises(ValueError):
        ColoredPartition((((0, 5),),))
    with pytest.raises(ValueError):
        ColoredPartition((((0, None), (2, 1)),))
    with pytest.raises(ValueError):
        ColoredPermutation((((1, None), (0, 1)),))
    with pytest.raises(ValueError):
        ColoredPermutation((((0, None),), ((1, None), (2, 0))))
    with pytest.raises(ValueError):
        from_partition(ColoredPartition((((0, None), (1, 9)),)), _pair(V24))


# -- signed partitions -------------------------------------------------------------

def test_signed_partition_examples():
    out = enumerate_signed_partitions(2, 1)
    assert {sp.render() for sp in out} == {"{0,-2}{1,-1,2}", "{0,2}{1,-1,-2}"}
    assert len(enumerate_signed_partitions(3, 2)) == 8
    assert [sp.render() for sp in enumerate_signed_partitions(2, 2)] == ["{0}{1,-1}{2,-2}"]
    assert enumerate_signed_partitions(2, 0) == []


def test_signed_partition_counts_match_legendre():
    legendre = builtin("legendre")
    for n in range(6):
        for k in range(n + 1):
            out = enumerate_signed_partitions(n, k)
            assert len(set(out)) == len(out)
            assert len(out) == second_kind(legendre, 0, 0, n, k).as_int()


def test_signed_partition_validation():
    with pytest.raises(ValueError):
        SignedPartition(((0, 1, -1),))
    with pytest.raises(ValueError):
        SignedPartition(((0,), (1, 2, -2)))
    with pytest.raises(ValueError):
        SignedPartition(((0,), (1, -1, 2, -2)))


# -- special weight families --------------------------------------------------------

def test_tuple_decompositions():
    assert tuple_decomposition_check("sun", 4, 2, p=2)
    assert tuple_decomposition_check("sun", 3, 1, p=3)
    assert tuple_decomposition_check("product-shifted", 4, 2, shifts=(0, 1))
    assert tuple_decomposition_check("product-shifted", 3, 2, shifts=(1, 2))
    with pytest.raises(ValueError):
        tuple_decomposition_check("mystery", 3, 1)


def test_shifted_weights_match_offset_ambient():
    # a shift by m in the weight equals an offset of m in the first parameter,
    # which pins the labels 1..m to pairwise distinct cycles
    for m in (1, 2):
        shifted = WeightSpec("polynomial", coefficients=[m, 1])
        for n in range(1, 5):
            for k in range(n + 1):
                direct = len(enumerate_perm(n, k, shifted))
                assert direct == first_kind(_pair(shifted), 0, 0, n, k).as_int()
                ambient = [q for q in enumerate_perm(n + m, k + m, IDENT)
                           if _distinct_cycles(q, m)]
                assert direct == len(ambient)


def _distinct_cycles(q, m):
    homes = []
    for idx, cycle in enumerate(q.cycles):
        homes.extend(idx for e, _ in cycle if 1 <= e <= m)
    return len(set(homes)) == len(homes) == m


def test_pairs_of_permutations_oracle():
    # with both weight components equal to the index, first-kind values count
    # pairs of permutations whose sorted cycle minima are complementary
    for n in range(2, 6):
        buckets = {}
        for image in permutations(range(1, n + 1)):
            seen, minima = set(), []
            for start in range(1, n + 1):
                if start in seen:
                    continue
                cycle, x = [], start
                while x not in seen:
                    seen.add(x)
                    cycle.append(x)
                    x = image[x - 1]
                minima.append(min(cycle))
            buckets.setdefault(len(minima), []).append(sorted(minima))
        for k in range(1, n + 1):
            count = sum(
                1
                for left in buckets.get(k, [])
                for right in buckets.get(k, [])
                if all(left[j] + right[k - 1 - j] == n + 1 for j in range(k)))
            assert count == first_kind(builtin("b-stirling"), 0, 0, n, k).as_int()
