"""Univariate integer polynomials in rho = 1/(1-p)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError

Number = Union[int, Fraction]


class RhoPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    ``coeffs[j]`` is the coefficient of ``rho**j``.  Trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple.  Division is only
    defined by the units ``1`` and ``-1`` and by exact integer divisors.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RhoPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> RhoPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def coerce(cls, value) -> RhoPolynomial:
        if isinstance(value, RhoPolynomial):
            return value
        if isinstance(value, int):
            return cls([value])
        if isinstance(value, Fraction) and value.denominator == 1:
            return cls([value.numerator])
        raise TypeError(f"cannot coerce {value!r} to RhoPolynomial")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return self.coeffs in ((1,), (-1,))

    def __call__(self, rho: Number) -> Number:
        # Horner
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * rho + c
        return acc

    evaluate = __call__

    def __add__(self, other):
        try:
            other = RhoPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RhoPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return RhoPolynomial([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = RhoPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RhoPolynomial([c * other for c in self.coeffs])
        try:
            other = RhoPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RhoPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RhoPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative powers are not polynomials")
        result, base = RhoPolynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, d: int) -> RhoPolynomial:
        """Divide every coefficient by the integer ``d``; it must divide exactly."""
        if d == 0:
            raise ZeroDivisionError("division of RhoPolynomial by zero")
        out = []
        for c in self.coeffs:
            q, rem = divmod(c, d)
            if rem:
                raise DomainError(f"{d} does not divide {self}")
            out.append(q)
        return RhoPolynomial(out)

    def __truediv__(self, other):
        if isinstance(other, RhoPolynomial):
            if not other.is_unit():
                raise DomainError(f"RhoPolynomial division only by +-1, got {other}")
            other = other.coeffs[0]
        if isinstance(other, int):
            return self.exact_div(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, RhoPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            try:
                return self.coeffs == RhoPolynomial.coerce(other).coeffs
            except TypeError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(("RhoPolynomial", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"RhoPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return self.format("rho")

    def format(self, var: str = "rho") -> str:
        """Render highest power first with caret exponents, e.g. ``rho^3-6rho+6``."""
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                mono = var if j == 1 else f"{var}^{j}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    @classmethod
    def parse(cls, text: str, var: str = "rho") -> RhoPolynomial:
        """Inverse of :meth:`format` (accepts ``rho`` or the glyph)."""
        import re

        s = text.replace(" ", "").replace("ρ", var).replace("−", "-")
        if s == "0":
            return cls()
        term = re.compile(rf"([+-]?)(\d*)({re.escape(var)}(?:\^(\d+))?)?")
        pos, acc = 0, {}
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            deg = 0 if not m.group(3) else int(m.group(4) or 1)
            acc[deg] = acc.get(deg, 0) + sign * mag
            pos = m.end()
        top = max(acc) if acc else -1
        return cls([acc.get(j, 0) for j in range(top + 1)])
