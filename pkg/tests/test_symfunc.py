import itertools
import random

from wstirling.ring import ONE, P, Q, RingValue, X, ZERO, ring_sum, product
from wstirling.symfunc import elementary, elementary_all, homogeneous, homogeneous_upto


def brute_elementary(t, xs):
    return ring_sum(product(sub) for sub in itertools.combinations(xs, t))


def brute_homogeneous(t, xs):
    return ring_sum(product(sub) for sub in itertools.combinations_with_replacement(xs, t))


def test_elementary_examples():
    assert elementary(0, ()) == 1
    assert elementary(0, (5, 7)) == 1
    assert elementary(2, (0, 1, 2, 3)) == 11
    assert elementary(3, (1, 1)) == 0
    assert elementary(-1, (1, 2)) == 0
    assert elementary(1, (P, Q)) == P + Q


def test_homogeneous_examples():
    assert homogeneous(2, (1, Q)) == 1 + Q + Q ** 2
    assert homogeneous(2, (P ** 2, P * Q, Q ** 2)) == \
        P ** 4 + P ** 3 * Q + 2 * P ** 2 * Q ** 2 + P * Q ** 3 + Q ** 4
    assert homogeneous(5, ()) == 0
    assert homogeneous(0, ()) == 1
    assert homogeneous(-2, (1,)) == 0


def test_matches_brute_force():
    rng = random.Random(1158)
    for _ in range(120):
        n = rng.randrange(6)
        xs = [rng.choice([rng.randint(-3, 3), P, Q, P + Q, 2 * Q]) for _ in range(n)]
        for t in range(6):
            assert elementary(t, xs) == brute_elementary(t, xs)
            assert homogeneous(t, xs) == brute_homogeneous(t, xs)


def test_permutation_invariance():
    rng = random.Random(52)
    xs = [1, 2, P, Q, P + 1]
    for _ in range(20):
        shuffled = xs[:]
        rng.shuffle(shuffled)
        for t in range(6):
            assert elementary(t, shuffled) == elementary(t, xs)
            assert homogeneous(t, shuffled) == homogeneous(t, xs)


def test_generating_function_duality():
    # sum_t e_t x^t times sum_t (-1)^t h_t x^t is 1 up to x^6
    rng = random.Random(7310)
    for _ in range(25):
        n = rng.randrange(7)
        xs = [rng.choice([rng.randint(-2, 3), P, Q]) for _ in range(n)]
        egf = ring_sum(elementary(t, xs) * X ** t for t in range(7))
        hgf = ring_sum((-1) ** t * homogeneous(t, xs) * X ** t for t in range(7))
        prod = egf * hgf
        truncated = ring_sum(prod.coefficient("x", t) * X ** t for t in range(7))
        assert truncated == ONE


def test_bulk_helpers_agree():
    xs = (P, Q, 3, P * Q)
    assert elementary_all(xs) == [elementary(t, xs) for t in range(5)]
    assert homogeneous_upto(4, xs) == [homogeneous(t, xs) for t in range(5)]
    assert homogeneous_upto(0, ()) == [ONE]
    assert elementary_all(()) == [ONE]
