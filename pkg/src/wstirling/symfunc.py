"""Elementary and complete homogeneous symmetric functions by DP.

elementary(t, xs) sums products over t-subsets of xs; homogeneous(t, xs)
over size-t multisets.  Both run in O(t * len(xs)) ring operations, which
keeps triangle construction polynomial; brute-force enumeration lives in
the tests as an oracle.  Negative t gives 0 at this layer so callers can
pass raw index differences.
"""

from __future__ import annotations

from typing import Sequence

from .ring import ONE, ZERO, Coercible, RingValue


def elementary(t: int, xs: Sequence[Coercible]) -> RingValue:
    if t < 0:
        return ZERO
    values = [RingValue.coerce(x) for x in xs]
    if t > len(values):
        return ZERO
    return elementary_all(values)[t]


def elementary_all(xs: Sequence[Coercible]) -> list:
    """All of e_0 .. e_len(xs) in one pass."""
    values = [RingValue.coerce(x) for x in xs]
    e = [ONE] + [ZERO] * len(values)
    for r, x in enumerate(values):
        # descending t so e[t-1] is still the previous row's value
        for t in range(r + 1, 0, -1):
            e[t] = e[t] + x * e[t - 1]
    return e


def homogeneous(t: int, xs: Sequence[Coercible]) -> RingValue:
    if t < 0:
        return ZERO
    return homogeneous_upto(t, xs)[t]


def homogeneous_upto(t: int, xs: Sequence[Coercible]) -> list:
    """All of h_0 .. h_t; h_0 = 1 even on the empty list."""
    values = [RingValue.coerce(x) for x in xs]
    h = [ONE] + [ZERO] * t
    for x in values:
        # ascending t reuses the already-updated h[t-1]: that is what
        # admits repeated picks of x
        for s in range(1, t + 1):
            h[s] = h[s] + x * h[s - 1]
    return h
