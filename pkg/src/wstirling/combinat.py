"""Colored objects counted by the weighted triangles.

When both weight components take nonnegative integer values, the weight of a
two-row tableau is a count: the number of ways to drop one colored 1 above the
lattice path and one below it in every column of a grid.  This module builds
those colored tableaux explicitly and carries them along bijections to colored
set partitions (second kind) and colored permutations (first kind), plus the
signed-partition model for the Legendre-Stirling case.

Color budgets per column with parts (t, b): the first grid row offers v(0)
colors and each of the t interior rows above the path offers
(v(t) - v(0)) / t; mirrored below with w.  Those quotients are nonnegative
integers for every polynomial weight; a table weight can break divisibility,
which raises InvalidColorBudget rather than truncating.
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .tableaux import ENUMERATION_CAP, BTableau
from .weights import WeightPair, WeightSpec


class NonCombinatorialWeights(ValueError):
    """The requested enumeration needs nonnegative-integer weights."""


class EnumerationCapExceeded(ValueError):
    """The enumeration would produce more objects than the configured cap."""


class InvalidColorBudget(ArithmeticError):
    """An interior color budget is not a nonnegative integer."""


def _value_at(spec: WeightSpec, i: int) -> int:
    value = spec.eval(i)
    if not value.is_constant():
        raise NonCombinatorialWeights(f"weight value at {i} is not an integer")
    n = value.as_int()
    if n < 0:
        raise NonCombinatorialWeights(f"weight value at {i} is negative")
    return n


def _interior_budget(spec: WeightSpec, ell: int) -> int:
    diff = _value_at(spec, ell) - _value_at(spec, 0)
    if diff < 0 or diff % ell:
        raise InvalidColorBudget(
            f"(value({ell}) - value(0)) = {diff} is not a nonnegative multiple of {ell}")
    return diff // ell


def _placements(spec: WeightSpec, ell: int) -> list:
    # row 1 is the extremal grid row; rows 2..ell+1 are interior
    opts = [(1, c) for c in range(1, _value_at(spec, 0) + 1)]
    if ell:
        budget = _interior_budget(spec, ell)
        opts.extend((row, c) for row in range(2, ell + 2) for c in range(1, budget + 1))
    return opts


@dataclass(frozen=True)
class ZeroOneTableau:
    """A tableau shape with one colored 1 above and one below the path per column.

    ``above[j]`` and ``below[j]`` are (row, color) pairs for column j, left to
    right.  Above rows are 1-based from the top of the grid, below rows 1-based
    from the bottom, so row 1 always names the extremal row on its side.  The
    grid height is ``column sum + 2``; for a width-0 shape it must be given.
    """

    shape: BTableau
    above: tuple
    below: tuple
    rows: int = 0

    def __post_init__(self):
        width = self.shape.width
        if len(self.above) != width or len(self.below) != width:
            raise ValueError("need one above and one below placement per column")
        for (top, bottom), (ra, ca), (rb, cb) in zip(self.shape.columns, self.above, self.below):
            if not 1 <= ra <= top + 1:
                raise ValueError(f"above row {ra} outside 1..{top + 1}")
            if not 1 <= rb <= bottom + 1:
                raise ValueError(f"below row {rb} outside 1..{bottom + 1}")
            if ca < 1 or cb < 1:
                raise ValueError("colors are 1-based")
        if width:
            expected = self.shape.column_sum + 2
            if self.rows == 0:
                object.__setattr__(self, "rows", expected)
            elif self.rows != expected:
                raise ValueError("grid height must equal column sum + 2")
        elif self.rows < 1:
            raise ValueError("a width-0 tableau needs an explicit grid height")

    def path(self) -> str:
        """Full lattice path from the upper-right corner, over {V, H}."""
        steps = []
        depth = 0
        for top in reversed(self.shape.tops()):
            steps.append("V" * (top + 1 - depth))
            steps.append("H")
            depth = top + 1
        steps.append("V" * (self.rows - depth))
        return "".join(steps)

    def render(self) -> str:
        if not self.shape.width:
            return self.shape.render()
        mark = lambda rc: f"{rc[0]}_{rc[1]}"
        return "{} above {} below {}".format(self.shape.render(),
                                             " ".join(mark(rc) for rc in self.above),
                                             " ".join(mark(rc) for rc in self.below))


def count_01v(shape: BTableau, weights: WeightPair) -> int:
    """Number of colored 0,1-tableaux on a shape; equals its weight."""
    if not weights.is_combinatorial():
        raise NonCombinatorialWeights("counting needs nonnegative integer weights")
    total = 1
    for top, bottom in shape.columns:
        above = _value_at(weights.v, 0) + (top and top * _interior_budget(weights.v, top))
        below = _value_at(weights.w, 0) + (bottom and bottom * _interior_budget(weights.w, bottom))
        total *= above * below
    return total


def enumerate_01v(shape: BTableau, weights: WeightPair,
                  cap: int = ENUMERATION_CAP, rows: int = 0) -> list:
    if not weights.is_combinatorial():
        raise NonCombinatorialWeights("enumeration needs nonnegative integer weights")
    per_column = []
    total = 1
    for top, bottom in shape.columns:
        above = _placements(weights.v, top)
        below = _placements(weights.w, bottom)
        total *= len(above) * len(below)
        per_column.extend((above, below))
    if total > cap:
        raise EnumerationCapExceeded(f"{total} tableaux exceeds the cap of {cap}")
    out = []
    for choice in product(*per_column):
        out.append(ZeroOneTableau(shape, choice[0::2], choice[1::2], rows))
    return out


# -- colored partitions and permutations ---------------------------------------

@dataclass(frozen=True)
class ColoredPartition:
    """Set partition of {0..n} with colored non-minima.

    Each block is a tuple of (element, color) pairs sorted by element; block
    minima carry color None.  Blocks are ordered by their minima, so the block
    containing 0 comes first.
    """

    blocks: tuple

    def __post_init__(self):
        minima = []
        elements = []
        for block in self.blocks:
            if not block:
                raise ValueError("blocks are nonempty")
            if list(block) != sorted(block, key=lambda ec: ec[0]):
                raise ValueError("block elements are sorted")
            if block[0][1] is not None:
                raise ValueError("block minima are uncolored")
            for e, c in block[1:]:
                if not isinstance(c, int) or c < 1:
                    raise ValueError("non-minima carry a color >= 1")
            minima.append(block[0][0])
            elements.extend(e for e, _ in block)
        if minima != sorted(minima):
            raise ValueError("blocks are ordered by minima")
        if sorted(elements) != list(range(len(elements))):
            raise ValueError("ground set must be 0..n without repeats")

    def render(self) -> str:
        return "".join(
            "{" + ",".join(_mark(e, c) for e, c in block) + "}" for block in self.blocks)


@dataclass(frozen=True)
class ColoredPermutation:
    """Permutation in cycle form with colored non-minima.

    Each cycle is a tuple of (element, color) pairs starting at the cycle
    minimum (color None); following pairs are in cycle order.  Cycles are
    sorted by their minima.
    """

    cycles: tuple

    def __post_init__(self):
        minima = []
        elements = []
        for cycle in self.cycles:
            if not cycle:
                raise ValueError("cycles are nonempty")
            if cycle[0][0] != min(e for e, _ in cycle):
                raise ValueError("cycles start at their minimum")
            if cycle[0][1] is not None:
                raise ValueError("cycle minima are uncolored")
            for e, c in cycle[1:]:
                if not isinstance(c, int) or c < 1:
                    raise ValueError("non-minima carry a color >= 1")
            minima.append(cycle[0][0])
            elements.extend(e for e, _ in cycle)
        if minima != sorted(minima):
            raise ValueError("cycles are ordered by minima")
        if sorted(elements) != list(range(len(elements))):
            raise ValueError("ground set must be 0..n without repeats")

    def word(self) -> tuple:
        return tuple(item for cycle in self.cycles for item in cycle)

    def render(self) -> str:
        return "".join(
            "(" + " ".join(_mark(e, c) for e, c in cycle) + ")" for cycle in self.cycles)


def _mark(e: int, c) -> str:
    return str(e) if c is None else f"{e}_{c}"


def to_partition(t: ZeroOneTableau) -> ColoredPartition:
    """Read a colored partition off a tableau whose shape allows repeated tops.

    Path steps except the final one are labeled from 0; a vertical step opens a
    block with its label as minimum, and the j-th horizontal step (right to
    left) sends its label to the block indexed by the above-1 row of column
    s + 1 - j, carrying that 1's color.
    """
    s = t.shape.width
    blocks = []
    h = 0
    for label, step in enumerate(t.path()[:-1]):
        if step == "V":
            blocks.append([(label, None)])
        else:
            h += 1
            row, color = t.above[s - h]
            blocks[row - 1].append((label, color))
    return ColoredPartition(tuple(tuple(block) for block in blocks))


def from_partition(p: ColoredPartition, weights: WeightPair) -> ZeroOneTableau:
    """Inverse of to_partition; validates colors against the weight budgets."""
    if _value_at(weights.w, 0) < 1:
        raise ValueError("the below placement needs w(0) >= 1")
    marked = sorted((e, c, i) for i, block in enumerate(p.blocks) for e, c in block[1:])
    tops = []
    above = []
    for j, (e, c, i) in enumerate(marked, start=1):
        top = e - j
        if i and c > _interior_budget(weights.v, top):
            raise ValueError(f"color {c} exceeds the interior budget at {top}")
        if not i and c > _value_at(weights.v, 0):
            raise ValueError(f"color {c} exceeds the v(0) budget")
        tops.append(top)
        above.append((i + 1, c))
    shape = BTableau.from_tops(tuple(reversed(tops)), len(p.blocks) - 1)
    return ZeroOneTableau(shape, tuple(reversed(above)), ((1, 1),) * len(tops),
                          rows=len(p.blocks) + 1)


def to_permutation(t: ZeroOneTableau) -> ColoredPermutation:
    """Read a colored permutation off a tableau with distinct column tops.

    One vertical step after every horizontal step is removed, the remaining
    steps are labeled from 0, vertical labels become cycle minima, and the
    j-th horizontal label is inserted into the growing word after the letter
    position given by its column's above-1 row.
    """
    s = t.shape.width
    if len(set(t.shape.tops())) != s:
        raise ValueError("permutation labeling needs distinct column tops")
    reduced = []
    drop = False
    for step in t.path():
        if step == "H":
            reduced.append(step)
            drop = True
        elif drop:
            drop = False
        else:
            reduced.append(step)
    word = []
    minima = set()
    h = 0
    for label, step in enumerate(reduced):
        if step == "V":
            minima.add(label)
            word.append((label, None))
        else:
            h += 1
            row, color = t.above[s - h]
            word.insert(row, (label, color))
    return _word_to_cycles(word, minima)


def from_permutation(p: ColoredPermutation, weights: WeightPair) -> ZeroOneTableau:
    """Inverse of to_permutation; validates colors against the weight budgets."""
    if _value_at(weights.w, 0) < 1:
        raise ValueError("the below placement needs w(0) >= 1")
    word = list(p.word())
    minima = {cycle[0][0] for cycle in p.cycles}
    non_minima = sorted(e for e, _ in word if e not in minima)
    positions = {}
    for e in reversed(non_minima):
        idx = next(i for i, (x, _) in enumerate(word) if x == e)
        positions[e] = (idx, word[idx][1])
        del word[idx]
    tops = []
    above = []
    for e in non_minima:
        row, c = positions[e]
        if row == 1:
            if c > _value_at(weights.v, 0):
                raise ValueError(f"color {c} exceeds the v(0) budget")
        elif c > _interior_budget(weights.v, e - 1):
            raise ValueError(f"color {c} exceeds the interior budget at {e - 1}")
        tops.append(e - 1)
        above.append((row, c))
    shape = BTableau.from_tops(tuple(reversed(tops)), len(word) + len(non_minima) - 2)
    return ZeroOneTableau(shape, tuple(reversed(above)), ((1, 1),) * len(tops),
                          rows=len(word) + len(non_minima))


def _word_to_cycles(word: list, minima: set) -> ColoredPermutation:
    cycles = []
    for item in word:
        if item[0] in minima:
            cycles.append([item])
        else:
            cycles[-1].append(item)
    return ColoredPermutation(tuple(tuple(cycle) for cycle in cycles))


# -- direct enumerations --------------------------------------------------------

def enumerate_part(n: int, k: int, v: WeightSpec, cap: int = ENUMERATION_CAP) -> list:
    """All colored partitions of {0..n} into k+1 blocks under the v budgets.

    The j-th smallest non-minimum a_j takes one of v(0) colors inside the
    first block and one of (v(a_j - j) - v(0)) / (a_j - j) colors elsewhere.
    """
    base = _value_at(v, 0)
    out = []
    for blocks in _set_partitions(n, k):
        labeled = sorted((block[i], bi) for bi, block in enumerate(blocks)
                         for i in range(1, len(block)))
        budgets = []
        for j, (e, bi) in enumerate(labeled, start=1):
            budgets.append(base if bi == 0 else _interior_budget(v, e - j))
        total = prod(budgets)
        if not total:
            continue
        if len(out) + total > cap:
            raise EnumerationCapExceeded(f"more than {cap} colored partitions")
        for colors in product(*(range(1, b + 1) for b in budgets)):
            cmap = {e: c for (e, _), c in zip(labeled, colors)}
            out.append(ColoredPartition(tuple(
                tuple((e, cmap.get(e) if i else None) for i, e in enumerate(block))
                for block in blocks)))
    return out


def _set_partitions(n: int, k: int):
    # blocks in creation order, which is minima order; 0 seeds the first block
    def extend(e, blocks):
        if e > n:
            if len(blocks) == k + 1:
                yield [list(block) for block in blocks]
            return
        for block in blocks:
            block.append(e)
            yield from extend(e + 1, blocks)
            block.pop()
        if len(blocks) <= k:
            blocks.append([e])
            yield from extend(e + 1, blocks)
            blocks.pop()

    if k < 0 or k > n:
        return
    yield from extend(1, [[0]])


def enumerate_perm(n: int, k: int, v: WeightSpec, cap: int = ENUMERATION_CAP) -> list:
    """All colored permutations of {0..n} with k+1 cycles under the v budgets.

    Objects are generated through their insertion encoding: the j-th smallest
    non-minimum a_j enters the word after letter position r in 1..a_j, with
    v(0) colors at r = 1 and (v(a_j - 1) - v(0)) / (a_j - 1) colors deeper.
    Position, not final cycle membership, decides the budget; an insertion at
    r >= 2 can still land in the cycle of 0 once that cycle has grown.
    """
    if k < 0 or k > n:
        return []
    base = _value_at(v, 0)
    out = []
    for non_minima in combinations(range(1, n + 1), n - k):
        minima = [e for e in range(n + 1) if e not in set(non_minima)]
        options = []
        for a in non_minima:
            opts = [(1, c) for c in range(1, base + 1)]
            if a > 1:
                budget = _interior_budget(v, a - 1)
                opts.extend((r, c) for r in range(2, a + 1) for c in range(1, budget + 1))
            options.append(opts)
        total = prod(len(opts) for opts in options)
        if not total:
            continue
        if len(out) + total > cap:
            raise EnumerationCapExceeded(f"more than {cap} colored permutations")
        for choice in product(*options):
            word = [(m, None) for m in minima]
            for a, (r, c) in zip(non_minima, choice):
                word.insert(r, (a, c))
            out.append(_word_to_cycles(word, set(minima)))
    return out


def part_is_member(p: ColoredPartition, n: int, k: int, v: WeightSpec) -> bool:
    """Check ground set, block count, and color budgets of a colored partition."""
    elements = [e for block in p.blocks for e, _ in block]
    if sorted(elements) != list(range(n + 1)) or len(p.blocks) != k + 1:
        return False
    labeled = sorted((e, bi) for bi, block in enumerate(p.blocks) for e, _ in block[1:])
    colors = {e: c for block in p.blocks for e, c in block[1:]}
    for j, (e, bi) in enumerate(labeled, start=1):
        budget = _value_at(v, 0) if bi == 0 else _interior_budget(v, e - j)
        if colors[e] > budget:
            return False
    return True


def perm_is_member(p: ColoredPermutation, n: int, k: int, v: WeightSpec) -> bool:
    """Check a colored permutation's budgets through its insertion encoding."""
    elements = [e for cycle in p.cycles for e, _ in cycle]
    if sorted(elements) != list(range(n + 1)) or len(p.cycles) != k + 1:
        return False
    word = list(p.word())
    minima = {cycle[0][0] for cycle in p.cycles}
    for e in sorted((x for x in elements if x not in minima), reverse=True):
        idx, color = next((i, c) for i, (x, c) in enumerate(word) if x == e)
        budget = _value_at(v, 0) if idx == 1 else _interior_budget(v, e - 1)
        if color > budget:
            return False
        del word[idx]
    return True


# -- signed partitions ----------------------------------------------------------

@dataclass(frozen=True)
class SignedPartition:
    """Partition of {0, +-1, .., +-n} into a zero block and k doubled blocks.

    The first block contains 0 and never both copies of a value; every other
    block contains both copies of its absolute minimum and single copies
    otherwise.  Blocks are ordered by minimum absolute value, elements by
    (absolute value, positive first).
    """

    blocks: tuple

    def __post_init__(self):
        if not self.blocks or 0 not in self.blocks[0]:
            raise ValueError("the first block contains 0")
        seen = []
        minima = [0]
        for block in self.blocks:
            if list(block) != sorted(block, key=_signed_key):
                raise ValueError("block elements are ordered by absolute value")
            counts = {}
            for e in block:
                counts[abs(e)] = counts.get(abs(e), 0) + 1
            seen.extend(block)
            if block is self.blocks[0]:
                if any(c > 1 for a, c in counts.items() if a):
                    raise ValueError("the zero block holds at most one copy per value")
                continue
            m = min(abs(e) for e in block)
            minima.append(m)
            if counts.get(m) != 2:
                raise ValueError("a doubled block holds both copies of its minimum")
            if any(c > 1 for a, c in counts.items() if a != m):
                raise ValueError("only the block minimum appears in two copies")
        if minima != sorted(minima):
            raise ValueError("blocks are ordered by minimum absolute value")
        universe = sorted(seen, key=_signed_key)
        n = max(abs(e) for e in seen) if len(seen) > 1 else 0
        expected = [0] + [s * a for a in range(1, n + 1) for s in (1, -1)]
        if universe != sorted(expected, key=_signed_key):
            raise ValueError("ground set must be 0 and both copies of 1..n")

    def render(self) -> str:
        return "".join(
            "{" + ",".join(str(e) for e in block) + "}" for block in self.blocks)


def _signed_key(e: int) -> tuple:
    return (abs(e), 0 if e >= 0 else 1)


def enumerate_signed_partitions(n: int, k: int, cap: int = ENUMERATION_CAP) -> list:
    """All signed partitions; the two copies of a non-minimum land in
    different blocks, each no newer than the value's own."""
    if k < 0 or k > n:
        return []
    out = []
    for minima in combinations(range(1, n + 1), k):
        rest = [a for a in range(1, n + 1) if a not in minima]
        slots = []
        for a in rest:
            allowed = [0] + [j + 1 for j, m in enumerate(minima) if m < a]
            slots.append([(bp, bm) for bp in allowed for bm in allowed if bp != bm])
        total = prod(len(s) for s in slots)
        if not total:
            continue
        if len(out) + total > cap:
            raise EnumerationCapExceeded(f"more than {cap} signed partitions")
        for choice in product(*slots):
            blocks = [[0]] + [[m, -m] for m in minima]
            for a, (bp, bm) in zip(rest, choice):
                blocks[bp].append(a)
                blocks[bm].append(-a)
            out.append(SignedPartition(tuple(
                tuple(sorted(block, key=_signed_key)) for block in blocks)))
    return out


def tuple_decomposition_check(family: str, n: int, k: int, *, p: int = 0,
                              shifts: tuple = (), cap: int = ENUMERATION_CAP) -> bool:
    """Check the product-weight tableau count against per-factor counts.

    On every shape the number of colored tableaux for v = product of the
    factors must equal the product over factors of the per-shape counts,
    which is the cardinality form of the tuples-of-identical-shape bijection.
    """
    from .tableaux import enumerate_T, enumerate_Td

    one = WeightSpec("constant", value=1)
    if family == "sun":
        if p < 1:
            raise ValueError("sun needs a positive power")
        factors = [WeightSpec("polynomial", coefficients=[0, 1])] * p
        combined = WeightSpec("polynomial", coefficients=[0] * p + [1])
    elif family == "product-shifted":
        if not shifts:
            raise ValueError("product-shifted needs at least one shift")
        factors = [WeightSpec("polynomial", coefficients=[a, 1]) for a in shifts]
        combined = WeightSpec("product-shifted", shifts=list(shifts))
    else:
        raise ValueError(f"unknown tuple decomposition family {family!r}")
    combined_pair = WeightPair(combined, one)
    factor_pairs = [WeightPair(f, one) for f in factors]
    shape_sets = (enumerate_T(0, 0, k, n - k, cap=cap),
                  enumerate_Td(0, 0, n - 1, n - k, cap=cap))
    for shapes, rows in zip(shape_sets, (k + 2, n + 1)):
        for shape in shapes:
            lhs = len(enumerate_01v(shape, combined_pair, cap=cap, rows=rows))
            rhs = prod(count_01v(shape, pair) for pair in factor_pairs)
            if lhs != rhs:
                return False
    return True
