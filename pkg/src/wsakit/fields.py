"""Exact scalars: the rationals and prime fields.

Rational arithmetic uses fractions.Fraction directly.  Prime field
elements are small wrapper objects so that the rest of the toolkit can
stay generic over the field: every scalar supports +, -, *, /, ==,
hashing and truthiness (nonzero test).
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FpElement:
    """Element of the prime field with p elements."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError("division by zero in prime field")
        inv = pow(other.value, self.p - 2, self.p)
        return FpElement(self.value * inv, self.p)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class Rationals:
    """The field of rational numbers."""

    name = "Q"
    char = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def scalar(self, n):
        """Coerce an int, Fraction or decimal-free string into the field."""
        if isinstance(n, Fraction):
            return n
        if isinstance(n, int):
            return Fraction(n)
        raise FieldError(f"cannot coerce {n!r} into Q")

    def parse(self, text):
        text = text.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {text!r}") from exc

    def format(self, x):
        return str(x)

    def random_nonzero(self, rng):
        choices = [1, -1, 2, -2, 3, Fraction(1, 2)]
        return Fraction(rng.choice(choices))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field with p elements, p prime."""

    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def scalar(self, n):
        if isinstance(n, FpElement):
            if n.p != self.p:
                raise FieldError("mixed prime fields")
            return n
        if isinstance(n, int):
            return FpElement(n, self.p)
        if isinstance(n, Fraction):
            if n.denominator % self.p == 0:
                raise FieldError(f"denominator divisible by {self.p}")
            return FpElement(n.numerator, self.p) / FpElement(n.denominator, self.p)
        raise FieldError(f"cannot coerce {n!r} into F{self.p}")

    def parse(self, text):
        text = text.strip()
        try:
            return self.scalar(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad scalar literal {text!r}") from exc

    def format(self, x):
        return str(x.value)

    def random_nonzero(self, rng):
        return FpElement(rng.randrange(1, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return self.name


def field_from_name(name):
    """Build a field from its short name: "Q" or "F<p>"."""
    name = name.strip()
    if name == "Q":
        return Rationals()
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise FieldError(f"unknown field {name!r} (expected Q or F<p>)")


QQ = Rationals()
