"""Exact arithmetic in the rationals extended by square roots of squarefree integers.

An ``ExactReal`` is a finite map from squarefree radicand ``d`` to a rational
coefficient; ``d == 1`` holds the rational part. ``ExactComplex`` pairs two of
them. Values are immutable and hashable.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, Tuple, Union

import mpmath
from sympy import factorint, primefactors

from spinfermion.core.errors import DivisionByZero, ParseError

Rational = Fraction


@lru_cache(maxsize=8192)
def normalize_radical(n: int) -> Tuple[int, int]:
    """Split ``n`` into ``(factor, core)`` with ``n == factor**2 * core``, core squarefree."""
    if n < 1:
        raise ValueError(f"Radicand must be a positive integer, got {n}")
    factor, core = 1, 1
    for prime, exponent in factorint(n).items():
        factor *= prime ** (exponent // 2)
        if exponent % 2:
            core *= prime
    return factor, core


class ExactReal:
    """Rational linear combination of square roots of distinct squarefree integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Dict[int, object], None] = None):
        canonical: Dict[int, Fraction] = {}
        for radicand, coefficient in (terms or {}).items():
            factor, core = normalize_radical(int(radicand))
            canonical[core] = canonical.get(core, Fraction(0)) + Fraction(coefficient) * factor
        self._terms = {d: c for d, c in sorted(canonical.items()) if c}
        self._hash = None

    @classmethod
    def _canonical(cls, terms: Dict[int, Fraction]) -> "ExactReal":
        """Build from a mapping that is already squarefree-keyed."""
        obj = cls.__new__(cls)
        obj._terms = {d: c for d, c in sorted(terms.items()) if c}
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, value: Union[int, Fraction, str]) -> "ExactReal":
        return cls._canonical({1: Fraction(value)})

    @classmethod
    def sqrt(cls, value: Union[int, Fraction]) -> "ExactReal":
        """Positive square root of a non-negative rational."""
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"Negative radicands are not representable: {value}")
        if value == 0:
            return ZERO
        # sqrt(p/q) = sqrt(p*q)/q
        factor, core = normalize_radical(value.numerator * value.denominator)
        return cls._canonical({core: Fraction(factor, value.denominator)})

    # -- inspection -----------------------------------------------------

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def radicands(self) -> Tuple[int, ...]:
        return tuple(self._terms)

    def coefficient(self, radicand: int) -> Fraction:
        return self._terms.get(radicand, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    def rational_part(self) -> Fraction:
        return self._terms.get(1, Fraction(0))

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.rational_part()

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = as_exact_real(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "ExactReal":
        return ExactReal._canonical({d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        other = as_exact_real(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = as_exact_real(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = as_exact_real(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_exact_real(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, invert(other))

    def __rtruediv__(self, other):
        other = as_exact_real(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return mul(other, invert(self))

    def __pow__(self, exponent: int) -> "ExactReal":
        if exponent < 0:
            return invert(self) ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            base = mul(base, base)
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = as_exact_real(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational_part())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __float__(self) -> float:
        return float(to_float(self, 17))

    def __str__(self) -> str:
        return format_exact_real(self)

    def __repr__(self) -> str:
        return f"ExactReal({format_exact_real(self)!r})"


ZERO = ExactReal._canonical({})
ONE = ExactReal._canonical({1: Fraction(1)})


def as_exact_real(value, strict: bool = True):
    """Coerce ints, fractions and strings to ``ExactReal``."""
    if isinstance(value, ExactReal):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ExactReal._canonical({1: Fraction(value)})
    if isinstance(value, str):
        return parse_exact_real(value)
    if strict:
        raise TypeError(f"Cannot interpret {value!r} as an exact real")
    return NotImplemented


def add(a: ExactReal, b: ExactReal) -> ExactReal:
    """Termwise sum."""
    if not a._terms:
        return b
    if not b._terms:
        return a
    terms = dict(a._terms)
    for d, c in b._terms.items():
        terms[d] = terms.get(d, Fraction(0)) + c
    return ExactReal._canonical(terms)


def mul(a: ExactReal, b: ExactReal) -> ExactReal:
    """Distributive product with sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g**2), g = gcd(d1, d2)."""
    if not a._terms or not b._terms:
        return ZERO
    terms: Dict[int, Fraction] = {}
    for d1, c1 in a._terms.items():
        for d2, c2 in b._terms.items():
            if d1 == 1:
                key, coefficient = d2, c1 * c2
            elif d2 == 1:
                key, coefficient = d1, c1 * c2
            else:
                g = gcd(d1, d2)
                key, coefficient = (d1 // g) * (d2 // g), c1 * c2 * g
            terms[key] = terms.get(key, Fraction(0)) + coefficient
    return ExactReal._canonical(terms)


def invert(a: ExactReal) -> ExactReal:
    """Multiplicative inverse by conjugation over one prime at a time."""
    if not a._terms:
        raise DivisionByZero("Cannot invert exact zero")
    if a.is_rational():
        return ExactReal._canonical({1: 1 / a.rational_part()})
    prime = max(p for d in a.radicands() if d != 1 for p in primefactors(d))
    # a = u + v*sqrt(p) with u, v free of p
    u_terms: Dict[int, Fraction] = {}
    v_terms: Dict[int, Fraction] = {}
    for d, c in a.items():
        if d % prime == 0:
            v_terms[d // prime] = c
        else:
            u_terms[d] = c
    u = ExactReal._canonical(u_terms)
    v = ExactReal._canonical(v_terms)
    norm = add(mul(u, u), -mul(ExactReal.rational(prime), mul(v, v)))
    conjugate = add(u, -mul(v, ExactReal.sqrt(prime)))
    return mul(conjugate, invert(norm))


def to_float(a: ExactReal, digits: int = 15) -> mpmath.mpf:
    """Approximation of ``a`` within ``10**-digits``."""
    with mpmath.workdps(digits + 10):
        total = mpmath.mpf(0)
        for d, c in a.items():
            term = mpmath.mpf(c.numerator) / c.denominator
            if d != 1:
                term *= mpmath.sqrt(d)
            total += term
        return +total


def format_decimal(a: ExactReal, digits: int = 12) -> str:
    """Fixed-point decimal rendering with ``digits`` places after the point."""
    with mpmath.workdps(digits + 10):
        scaled = int(mpmath.nint(to_float(a, digits + 5) * mpmath.mpf(10) ** digits))
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    if digits == 0:
        return f"{sign}{text}"
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


# -- serialization -------------------------------------------------------

def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_exact_real(a: ExactReal) -> str:
    """Canonical text form, e.g. ``3/8+1/12*sqrt(3)`` or ``-sqrt(7)``."""
    if not a._terms:
        return "0"
    pieces = []
    for d, c in a.items():
        magnitude = abs(c)
        if d == 1:
            body = _format_fraction(magnitude)
        elif magnitude == 1:
            body = f"sqrt({d})"
        else:
            body = f"{_format_fraction(magnitude)}*sqrt({d})"
        sign = "-" if c < 0 else "+"
        if not pieces and sign == "+":
            pieces.append(body)
        else:
            pieces.append(f"{sign}{body}")
    return "".join(pieces)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_BODY_RE = re.compile(r"^(?:(\d+)(?:/(\d+))?)?(?:(?<=\d)\*)?(?:sqrt\((\d+)\))?$")


def parse_exact_real(text: str) -> ExactReal:
    """Inverse of :func:`format_exact_real`; accepts ``p``, ``p/q``, ``p/q*sqrt(d)``, ``sqrt(d)``."""
    compact = "".join(text.split())
    if not compact:
        raise ParseError("Empty scalar")
    position = 0
    total = ZERO
    for match in _TERM_RE.finditer(compact):
        if match.start() != position:
            raise ParseError(f"Malformed scalar: {text!r}")
        position = match.end()
        sign, body = match.groups()
        parts = _BODY_RE.match(body)
        if parts is None or parts.group(0) == "" or (parts.group(1) is None and parts.group(3) is None):
            raise ParseError(f"Malformed term {body!r} in {text!r}")
        numerator, denominator, radicand = parts.groups()
        if body.endswith("*") or (numerator is not None and radicand is not None and "*" not in body):
            raise ParseError(f"Malformed term {body!r} in {text!r}")
        if denominator is not None and int(denominator) == 0:
            raise ParseError(f"Zero denominator in {body!r} of {text!r}")
        coefficient = Fraction(int(numerator or 1), int(denominator or 1))
        if sign == "-":
            coefficient = -coefficient
        term = ExactReal.rational(coefficient)
        if radicand is not None:
            if int(radicand) == 0:
                raise ParseError(f"Zero radicand in {text!r}")
            term = mul(term, ExactReal.sqrt(int(radicand)))
        total = add(total, term)
    if position != len(compact):
        raise ParseError(f"Malformed scalar: {text!r}")
    return total


class ExactComplex:
    """Pair ``(re, im)`` of exact reals."""

    __slots__ = ("re", "im")

    def __init__(self, re=ZERO, im=ZERO):
        self.re = as_exact_real(re)
        self.im = as_exact_real(im)

    @classmethod
    def _pair(cls, re: ExactReal, im: ExactReal) -> "ExactComplex":
        obj = cls.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    def is_zero(self) -> bool:
        return not self.re._terms and not self.im._terms

    def is_real(self) -> bool:
        return not self.im._terms

    def conjugate(self) -> "ExactComplex":
        if not self.im._terms:
            return self
        return ExactComplex._pair(self.re, -self.im)

    def inverse(self) -> "ExactComplex":
        if self.is_zero():
            raise DivisionByZero("Cannot invert exact complex zero")
        if not self.im._terms:
            return ExactComplex._pair(invert(self.re), ZERO)
        norm = invert(add(mul(self.re, self.re), mul(self.im, self.im)))
        return ExactComplex._pair(mul(self.re, norm), -mul(self.im, norm))

    def __add__(self, other):
        other = as_exact_complex(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return ExactComplex._pair(add(self.re, other.re), add(self.im, other.im))

    __radd__ = __add__

    def __neg__(self) -> "ExactComplex":
        return ExactComplex._pair(-self.re, -self.im)

    def __sub__(self, other):
        other = as_exact_complex(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_exact_complex(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_exact_complex(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        if not self.im._terms and not other.im._terms:
            return ExactComplex._pair(mul(self.re, other.re), ZERO)
        re = add(mul(self.re, other.re), -mul(self.im, other.im))
        im = add(mul(self.re, other.im), mul(self.im, other.re))
        return ExactComplex._pair(re, im)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_exact_complex(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = as_exact_complex(other, strict=False)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im._terms:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self) -> str:
        return format_exact_complex(self)

    def __repr__(self) -> str:
        return f"ExactComplex({format_exact_complex(self)!r})"


CZERO = ExactComplex._pair(ZERO, ZERO)
CONE = ExactComplex._pair(ONE, ZERO)
IMAG_UNIT = ExactComplex._pair(ZERO, ONE)


def as_exact_complex(value, strict: bool = True):
    """Coerce reals, ints and fractions to ``ExactComplex``."""
    if isinstance(value, ExactComplex):
        return value
    real = as_exact_real(value, strict=False) if not isinstance(value, str) else None
    if real is None:
        return parse_exact_complex(value)
    if real is NotImplemented:
        if strict:
            raise TypeError(f"Cannot interpret {value!r} as an exact complex")
        return NotImplemented
    return ExactComplex._pair(real, ZERO)


def format_exact_complex(z: ExactComplex) -> str:
    return f"({format_exact_real(z.re)}, {format_exact_real(z.im)})"


def parse_exact_complex(text: str) -> ExactComplex:
    """Read ``(re, im)``; a bare real is accepted with zero imaginary part."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        return ExactComplex._pair(parse_exact_real(stripped), ZERO)
    inner = stripped[1:-1]
    if inner.count(",") != 1:
        raise ParseError(f"Malformed complex scalar: {text!r}")
    re_text, im_text = inner.split(",")
    return ExactComplex._pair(parse_exact_real(re_text), parse_exact_real(im_text))
