"""Exact scalar arithmetic over GF(2), GF(p) with prime p, and rationals.

A FieldSpec describes the field and performs arithmetic on *raw* canonical
values (Python ints for the prime fields, fractions.Fraction for the
rationals).  Scalar wraps a raw value together with its field for the
element-level API; matrix code works on raw values for speed.

Canonical forms are unique: residues live in [0, p) and rationals are
fully reduced with a positive denominator (Fraction guarantees this), so
equality of scalars is equality of representations.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    FieldMismatchError,
    NotInvertibleError,
    ParseError,
    PreconditionError,
)

#: Moduli are limited so residues stay machine-word sized.
MAX_MODULUS = 1 << 63

_ZERO = Fraction(0)
_ONE = Fraction(1)

_INT_RE = re.compile(r"[+-]?\d+")
_FRACTION_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


class FieldKind(enum.Enum):
    GF2 = "gf2"
    GFP = "gfp"
    RATIONAL = "rational"


def _is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, valid for all p < 2**64."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d = p - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, p)
        if x == 1 or x == p - 1:
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Descriptor of an exact field; GF(2) and GF(p) carry their modulus."""

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONAL:
            if self.modulus is not None:
                raise PreconditionError("rational field takes no modulus")
        elif self.kind is FieldKind.GF2:
            if self.modulus != 2:
                raise PreconditionError("GF2 must have modulus 2")
        else:
            p = self.modulus
            if p is None:
                raise PreconditionError("GF(p) needs a modulus")
            if p == 2:
                raise PreconditionError("use the GF2 spec for modulus 2")
            if p >= MAX_MODULUS:
                raise PreconditionError(f"modulus {p} exceeds the 63-bit limit")
            if not _is_prime(p):
                raise PreconditionError(f"modulus {p} is not prime")

    # -- description ---------------------------------------------------

    def describe(self) -> str:
        """The text form used in file headers: 'gf2' | 'gfp <p>' | 'rational'."""
        if self.kind is FieldKind.RATIONAL:
            return "rational"
        if self.kind is FieldKind.GF2:
            return "gf2"
        return f"gfp {self.modulus}"

    def __str__(self) -> str:
        return self.describe()

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    @property
    def order(self) -> int:
        if self.modulus is None:
            raise PreconditionError("rational field is infinite")
        return self.modulus

    def elements(self):
        """All canonical values, ascending. Finite fields only."""
        if self.modulus is None:
            raise PreconditionError("rational field is infinite")
        return range(self.modulus)

    # -- raw-value arithmetic -------------------------------------------

    @property
    def zero(self):
        return 0 if self.modulus is not None else _ZERO

    @property
    def one(self):
        return 1 if self.modulus is not None else _ONE

    def coerce(self, x):
        """Canonicalize a raw value into this field."""
        p = self.modulus
        if p is not None:
            if isinstance(x, bool) or not isinstance(x, int):
                raise PreconditionError(f"not an integer residue: {x!r}")
            return x % p
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise PreconditionError(f"not an exact rational: {x!r}")

    def add(self, a, b):
        p = self.modulus
        return (a + b) % p if p is not None else a + b

    def sub(self, a, b):
        p = self.modulus
        return (a - b) % p if p is not None else a - b

    def mul(self, a, b):
        p = self.modulus
        return a * b % p if p is not None else a * b

    def neg(self, a):
        p = self.modulus
        return -a % p if p is not None else -a

    def inv(self, a):
        if not a:
            raise NotInvertibleError("0 has no multiplicative inverse")
        p = self.modulus
        return pow(a, -1, p) if p is not None else 1 / a

    # -- scalar text ----------------------------------------------------

    def parse_scalar(self, text: str):
        """Parse one scalar literal: signed integer, or 'p/q' for rationals."""
        text = text.strip()
        if self.modulus is not None:
            if not _INT_RE.fullmatch(text):
                raise ParseError(f"bad {self.describe()} scalar: {text!r}")
            return int(text) % self.modulus
        if not _FRACTION_RE.fullmatch(text):
            raise ParseError(f"bad rational scalar: {text!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator: {text!r}") from None

    def format_scalar(self, v) -> str:
        return str(v)


GF2 = FieldSpec(FieldKind.GF2, 2)
RATIONAL = FieldSpec(FieldKind.RATIONAL)


def gfp(p: int) -> FieldSpec:
    """The prime field with p elements; p = 2 yields the GF2 spec."""
    if p == 2:
        return GF2
    return FieldSpec(FieldKind.GFP, p)


def field_parse(text: str) -> FieldSpec:
    """Parse a field descriptor: 'gf2' | 'gfp <p>' | 'rational'."""
    tokens = text.split()
    if tokens == ["gf2"]:
        return GF2
    if tokens == ["rational"]:
        return RATIONAL
    if len(tokens) == 2 and tokens[0] == "gfp":
        if not tokens[1].isdigit():
            raise ParseError(f"bad gfp modulus: {tokens[1]!r}")
        try:
            return gfp(int(tokens[1]))
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field descriptor: {text.strip()!r}")


class Scalar:
    """A field element: canonical raw value plus its FieldSpec."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: FieldSpec):
        object.__setattr__(self, "value", field.coerce(value))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, _value):
        raise AttributeError(f"Scalar is immutable; cannot set {name!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"Scalar({self.field.format_scalar(self.value)}, {self.field})"

    def __str__(self) -> str:
        return self.field.format_scalar(self.value)

    def __bool__(self) -> bool:
        return bool(self.value)

    def __add__(self, other: "Scalar") -> "Scalar":
        return add(self, other)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return add(self, neg(other))

    def __mul__(self, other: "Scalar") -> "Scalar":
        return mul(self, other)

    def __neg__(self) -> "Scalar":
        return neg(self)

    def inv(self) -> "Scalar":
        return inv(self)


def _same_field(a: Scalar, b: Scalar) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatchError(f"mixed fields: {a.field} vs {b.field}")
    return a.field


def add(a: Scalar, b: Scalar) -> Scalar:
    f = _same_field(a, b)
    return Scalar(f.add(a.value, b.value), f)


def mul(a: Scalar, b: Scalar) -> Scalar:
    f = _same_field(a, b)
    return Scalar(f.mul(a.value, b.value), f)


def neg(a: Scalar) -> Scalar:
    return Scalar(a.field.neg(a.value), a.field)


def inv(a: Scalar) -> Scalar:
    return Scalar(a.field.inv(a.value), a.field)


def scalar_parse(text: str, field: FieldSpec) -> Scalar:
    return Scalar(field.parse_scalar(text), field)
