"""Exact scalar arithmetic: prime fields GF(p) and the rationals.

Scalars are plain Python values (canonical residues ``0 <= v < p`` for
GF(p), :class:`fractions.Fraction` for the rationals); a :class:`Field`
instance supplies the operations. Characteristic two is the default
everywhere in this package, but signs are always carried through the
field arithmetic rather than dropped textually, so the same code is
correct over GF(p) for odd p and over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """A prime field GF(p) (``kind == "prime"``) or the rationals."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == "prime":
            if p is None or not _is_prime(p):
                raise ValueError(f"field modulus must be prime, got {p!r}")
        elif kind == "rational":
            if p is not None:
                raise ValueError("the rational field has no modulus")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls("prime", p)

    @classmethod
    def rationals(cls) -> "Field":
        return cls("rational")

    @classmethod
    def from_spec(cls, spec: str) -> "Field":
        """Parse a field name: ``gf2``, ``gf<p>`` or ``rational``."""
        text = spec.strip().lower()
        if text == "rational":
            return cls.rationals()
        if text.startswith("gf"):
            try:
                p = int(text[2:])
            except ValueError:
                raise ValueError(f"bad field spec {spec!r}") from None
            return cls.gf(p)
        raise ValueError(f"bad field spec {spec!r} (want gf<p> or rational)")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0

    @property
    def zero(self) -> Scalar:
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.kind == "prime" else Fraction(1)

    def from_int(self, n: int) -> Scalar:
        """Reduce an integer into the field."""
        return n % self.p if self.kind == "prime" else Fraction(n)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.kind == "prime" else -a

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.kind == "prime" else 1 / a

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def format_scalar(self, a: Scalar) -> str:
        if self.kind == "rational" and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __str__(self):
        return f"gf{self.p}" if self.kind == "prime" else "rational"

    def __repr__(self):
        return f"Field({str(self)})"


GF2 = Field.gf(2)
