"""Exact ring arithmetic: integers and sparse multivariate Laurent polynomials.

Every value lives in Z[p, q, z, p^-1, q^-1, z^-1][x]: integer coefficients,
signed exponents for p, q, z, nonnegative exponents for x.  A value is stored
as a map from exponent vector (ep, eq, ez, ex) to a nonzero integer
coefficient; the zero polynomial is the empty map.  Plain Python ints coerce
to constant values and compare equal to them.

Rendering sorts monomials by graded lexicographic order (total degree first,
then exponent vector, both descending) so output is stable, e.g.
"p^4 + p^3*q + 2*p^2*q^2".  parse() accepts exactly what render() emits,
modulo whitespace.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

VARIABLES = ("p", "q", "z", "x")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_UNIT = (0, 0, 0, 0)

# x is the generating-function variable; nothing in the library ever divides
# by it, so a negative x exponent is always a construction error.
_X = 3

Coercible = Union[int, "RingValue"]


class NonInvertibleSubstitution(ValueError):
    """A negative exponent met an image that is not a unit."""


class InexactDivision(ArithmeticError):
    """exact_div was asked for a quotient that does not exist in the ring."""


class RingParseError(ValueError):
    """Input text is not in the canonical polynomial format."""


class RingValue:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        # Canonicalize defensively; internal fast paths use _raw instead.
        clean = {}
        for key, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            key = tuple(key)
            if len(key) != 4:
                raise ValueError(f"exponent vector must have 4 entries, got {key!r}")
            if key[_X] < 0:
                raise ValueError("negative exponent for x is not representable")
            clean[key] = clean.get(key, 0) + coeff
        self.terms = {k: c for k, c in clean.items() if c != 0}

    # -- construction ------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict) -> "RingValue":
        """Trusted constructor: terms already canonical."""
        self = object.__new__(cls)
        self.terms = terms
        return self

    @classmethod
    def from_int(cls, n: int) -> "RingValue":
        return cls._raw({_UNIT: n} if n else {})

    @classmethod
    def variable(cls, name: str) -> "RingValue":
        return cls.monomial(1, **{name: 1})

    @classmethod
    def monomial(cls, coeff: int, p: int = 0, q: int = 0, z: int = 0, x: int = 0) -> "RingValue":
        if x < 0:
            raise ValueError("negative exponent for x is not representable")
        if coeff == 0:
            return ZERO
        return cls._raw({(p, q, z, x): coeff})

    @staticmethod
    def coerce(value: Coercible) -> "RingValue":
        if isinstance(value, RingValue):
            return value
        if isinstance(value, int):
            return RingValue.from_int(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into the ring")

    # -- predicates and conversions ----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_UNIT: 1}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {_UNIT}

    def as_int(self) -> int:
        """The value as a plain integer; raises if any variable is present."""
        if not self.terms:
            return 0
        if set(self.terms) == {_UNIT}:
            return self.terms[_UNIT]
        raise ValueError(f"not a constant: {self}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Coercible) -> "RingValue":
        other = RingValue.coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                del out[key]
        return RingValue._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "RingValue":
        return RingValue._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Coercible) -> "RingValue":
        return self + (-RingValue.coerce(other))

    def __rsub__(self, other: Coercible) -> "RingValue":
        return RingValue.coerce(other) + (-self)

    def __mul__(self, other: Coercible) -> "RingValue":
        other = RingValue.coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ka, ca in a.items():
            pa, qa, za, xa = ka
            for kb, cb in b.items():
                key = (pa + kb[0], qa + kb[1], za + kb[2], xa + kb[3])
                acc = out.get(key, 0) + ca * cb
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return RingValue._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingValue":
        if n < 0:
            return self.invert() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self) -> "RingValue":
        """Inverse of a unit (+-1 times a monomial in p, q, z)."""
        if len(self.terms) == 1:
            (key, coeff), = self.terms.items()
            if coeff in (1, -1) and key[_X] == 0:
                return RingValue._raw({(-key[0], -key[1], -key[2], 0): coeff})
        raise NonInvertibleSubstitution(f"not a unit: {self}")

    def substitute(self, assignment: Mapping[str, Coercible]) -> "RingValue":
        """Ring homomorphism sending each assigned variable to its image."""
        images = {}
        for name, value in assignment.items():
            if name not in _VAR_INDEX:
                raise KeyError(f"unknown variable {name!r}")
            images[_VAR_INDEX[name]] = RingValue.coerce(value)
        result = ZERO
        power_cache: dict = {}
        for key, coeff in sorted(self.terms.items()):
            term = RingValue.from_int(coeff)
            for idx, exp in enumerate(key):
                if exp == 0:
                    continue
                if idx in images:
                    cached = power_cache.get((idx, exp))
                    if cached is None:
                        image = images[idx]
                        if exp < 0 and len(image.terms) != 1:
                            raise NonInvertibleSubstitution(
                                f"negative exponent of {VARIABLES[idx]} with non-unit image {image}")
                        cached = image ** exp
                        power_cache[(idx, exp)] = cached
                    term = term * cached
                else:
                    mono_exps = [0, 0, 0, 0]
                    mono_exps[idx] = exp
                    term = term * RingValue._raw({tuple(mono_exps): 1})
            result = result + term
        return result

    def exact_div(self, divisor: Coercible) -> "RingValue":
        """Quotient self/divisor when it exists in the ring, else InexactDivision.

        Both operands are first shifted so every exponent is nonnegative (the
        shift monomials are units except for x, whose valuation must not
        drop).  Greedy leading-term cancellation under graded lex then
        terminates because the order is a well-order on shifted exponents,
        and any divisibility failure certifies the quotient does not exist.
        """
        divisor = RingValue.coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("exact_div by zero")
        if not self.terms:
            return ZERO
        smin = [min(key[i] for key in self.terms) for i in range(4)]
        dmin = [min(key[i] for key in divisor.terms) for i in range(4)]
        shift = tuple(smin[i] - dmin[i] for i in range(4))
        if shift[_X] < 0:
            raise InexactDivision("quotient would need a negative power of x")
        dividend = {tuple(k[i] - smin[i] for i in range(4)): c for k, c in self.terms.items()}
        dpoly = {tuple(k[i] - dmin[i] for i in range(4)): c for k, c in divisor.terms.items()}
        lead_key = max(dpoly, key=_order_key)
        lead_coeff = dpoly[lead_key]
        quotient: dict = {}
        while dividend:
            rkey = max(dividend, key=_order_key)
            qkey = tuple(rkey[i] - lead_key[i] for i in range(4))
            if any(e < 0 for e in qkey):
                raise InexactDivision(f"{divisor} does not divide {self}")
            c, rem = divmod(dividend[rkey], lead_coeff)
            if rem:
                raise InexactDivision(
                    f"leading coefficient {dividend[rkey]} not divisible by {lead_coeff}")
            quotient[qkey] = c
            for dk, dc in dpoly.items():
                key = (qkey[0] + dk[0], qkey[1] + dk[1], qkey[2] + dk[2], qkey[3] + dk[3])
                acc = dividend.get(key, 0) - c * dc
                if acc:
                    dividend[key] = acc
                else:
                    dividend.pop(key, None)
        return RingValue._raw(
            {(k[0] + shift[0], k[1] + shift[1], k[2] + shift[2], k[3] + shift[3]): c
             for k, c in quotient.items()})

    # -- coefficient access --------------------------------------------------

    def coefficient(self, name: str, exponent: int) -> "RingValue":
        """Coefficient of name^exponent, as a value in the remaining variables."""
        idx = _VAR_INDEX[name]
        out = {}
        for key, coeff in self.terms.items():
            if key[idx] == exponent:
                reduced = list(key)
                reduced[idx] = 0
                out[tuple(reduced)] = coeff
        return RingValue._raw(out)

    def degree(self, name: str) -> int:
        """Largest exponent of name present (0 for the zero value)."""
        idx = _VAR_INDEX[name]
        return max((key[idx] for key in self.terms), default=0)

    # -- equality, hashing, rendering ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({_UNIT: other} if other else {})
        if isinstance(other, RingValue):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.terms.get(_UNIT, 0))
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"RingValue({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=_order_key, reverse=True):
            coeff = self.terms[key]
            factors = []
            for idx, exp in enumerate(key):
                if exp == 0:
                    continue
                factors.append(VARIABLES[idx] if exp == 1 else f"{VARIABLES[idx]}^{exp}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)


def _order_key(key: tuple):
    return (key[0] + key[1] + key[2] + key[3], key)


ZERO = RingValue._raw({})
ONE = RingValue._raw({_UNIT: 1})

P = RingValue._raw({(1, 0, 0, 0): 1})
Q = RingValue._raw({(0, 1, 0, 0): 1})
Z = RingValue._raw({(0, 0, 1, 0): 1})
X = RingValue._raw({(0, 0, 0, 1): 1})


def parse(text: str) -> RingValue:
    """Inverse of RingValue.render (whitespace-insensitive)."""
    compact = text.replace(" ", "")
    if not compact:
        raise RingParseError("empty input")
    # Split into signed terms; a '-' directly after '^' is an exponent sign.
    terms = []
    start = 0
    for i in range(1, len(compact)):
        if compact[i] in "+-" and compact[i - 1] not in "^+-*":
            terms.append(compact[start:i])
            start = i
    terms.append(compact[start:])
    total: dict = {}
    for term in terms:
        sign = 1
        if term.startswith("+"):
            term = term[1:]
        elif term.startswith("-"):
            sign = -1
            term = term[1:]
        if not term:
            raise RingParseError(f"dangling sign in {text!r}")
        coeff = sign
        exps = [0, 0, 0, 0]
        for factor in term.split("*"):
            if not factor:
                raise RingParseError(f"empty factor in {text!r}")
            if factor[0].isdigit():
                if not factor.isdigit():
                    raise RingParseError(f"bad integer factor {factor!r}")
                coeff *= int(factor)
                continue
            name, caret, exp_text = factor.partition("^")
            if name not in _VAR_INDEX:
                raise RingParseError(f"unknown variable {name!r}")
            if caret and not exp_text:
                raise RingParseError(f"missing exponent in {factor!r}")
            if exp_text:
                try:
                    exp = int(exp_text)
                except ValueError as err:
                    raise RingParseError(f"bad exponent {exp_text!r}") from err
            else:
                exp = 1
            exps[_VAR_INDEX[name]] += exp
        if exps[_X] < 0:
            raise RingParseError("negative exponent for x is not representable")
        key = tuple(exps)
        acc = total.get(key, 0) + coeff
        if acc:
            total[key] = acc
        else:
            total.pop(key, None)
    return RingValue._raw(total)


def product(values: Iterable[Coercible]) -> RingValue:
    result = ONE
    for value in values:
        result = result * RingValue.coerce(value)
    return result


def ring_sum(values: Iterable[Coercible]) -> RingValue:
    result = ZERO
    for value in values:
        result = result + RingValue.coerce(value)
    return result
