"""Exact truncated formal power series.

Coefficients live either in the rationals (``fractions.Fraction``) or in the
integer polynomial ring of :class:`~connasym.polynomial.RhoPolynomial`.

A series is *ordinary* by default: ``coeffs[n]`` is the coefficient of ``z**n``.
A *labelled* series stores ``n! * [z^n]`` instead, and its products are
binomial convolutions.  Labelled storage keeps exponential generating
functions over ``Z[rho]`` integral, since ``Z[rho]`` has no division by ``n!``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from .errors import ConsistencyError, DomainError, UsageError
from .polynomial import RhoPolynomial

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_recip",
    "series_log",
    "series_exp",
    "egf_counts",
]


def _normalise(coeffs: Iterable) -> tuple:
    cs = list(coeffs)
    if any(isinstance(c, RhoPolynomial) for c in cs):
        return tuple(RhoPolynomial.coerce(c) for c in cs)
    out = []
    for c in cs:
        if isinstance(c, (int, Fraction)):
            out.append(Fraction(c))
        else:
            raise TypeError(f"unsupported coefficient type {type(c).__name__}")
    return tuple(out)


def _ring(coeffs: tuple) -> str:
    return "rho" if coeffs and isinstance(coeffs[0], RhoPolynomial) else "rational"


def _is_zero(x) -> bool:
    return not x


def _is_one(x) -> bool:
    return x == 1


def _unit_inverse(x):
    if isinstance(x, RhoPolynomial):
        if not x.is_unit():
            raise DomainError(f"constant term {x} is not a unit of Z[rho]")
        return x
    if x == 0:
        raise DomainError("constant term 0 is not invertible")
    return 1 / x


def _div_int(x, n: int):
    if isinstance(x, RhoPolynomial):
        try:
            return x.exact_div(n)
        except DomainError as exc:
            raise DomainError(
                f"ordinary series over Z[rho] needs division by {n}; use a labelled series"
            ) from exc
    return x / n


class TruncatedSeries:
    """Power series known up to and including ``z**order``.

    Instances are immutable.  Binary operations require the same order, the
    same coefficient ring and the same storage convention.
    """

    __slots__ = ("coeffs", "labelled")

    def __init__(self, coeffs: Iterable, labelled: bool = False):
        cs = _normalise(coeffs)
        if not cs:
            raise UsageError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "labelled", bool(labelled))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_list(cls, coeffs: Sequence, order: int | None = None, labelled: bool = False):
        """Pad ``coeffs`` with zeros (or cut it) to the given order."""
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise UsageError("order must be non-negative")
        zero = RhoPolynomial() if any(isinstance(c, RhoPolynomial) for c in cs) else 0
        cs = (cs + [zero] * (order + 1))[: order + 1]
        return cls(cs, labelled=labelled)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int, labelled: bool = False):
        return cls([f(n) for n in range(order + 1)], labelled=labelled)

    @classmethod
    def constant(cls, c, order: int, labelled: bool = False):
        return cls.from_list([c], order, labelled)

    @classmethod
    def one(cls, order: int, labelled: bool = False):
        return cls.constant(1, order, labelled)

    @classmethod
    def zero(cls, order: int, labelled: bool = False):
        return cls.constant(0, order, labelled)

    @classmethod
    def variable(cls, order: int, labelled: bool = False):
        """The series ``z``."""
        return cls.from_list([0, 1], order, labelled)

    # -- basic accessors --------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring(self) -> str:
        return _ring(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def coefficient(self, n: int):
        """The genuine coefficient of ``z**n`` (divides out ``n!`` when labelled)."""
        c = self.coeffs[n]
        if self.labelled:
            return _div_int(c, factorial(n))
        return c

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.labelled == other.labelled
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.labelled))

    def __repr__(self):
        tag = ", labelled=True" if self.labelled else ""
        return f"TruncatedSeries({list(self.coeffs)!r}{tag})"

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise UsageError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise UsageError(
                f"truncation orders differ ({self.order} vs {other.order}); "
                "truncate explicitly first"
            )
        if self.labelled != other.labelled:
            raise UsageError("cannot mix labelled and ordinary series")
        if self.ring != other.ring:
            raise UsageError(f"coefficient rings differ ({self.ring} vs {other.ring})")

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction, RhoPolynomial)):
            c = RhoPolynomial.coerce(other) if self.ring == "rho" else other
            return TruncatedSeries.constant(c, self.order, self.labelled)
        raise UsageError(f"cannot combine series with {type(other).__name__}")

    # -- transformations --------------------------------------------------

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise UsageError(f"cannot extend a series known to order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], self.labelled)

    def map(self, f: Callable) -> TruncatedSeries:
        """Apply ``f`` to every stored coefficient (keeps the storage convention)."""
        return TruncatedSeries([f(c) for c in self.coeffs], self.labelled)

    def evaluate_rho(self, rho) -> TruncatedSeries:
        """Specialise a Z[rho] series at a rational ``rho``; returns an ordinary series."""
        if self.ring != "rho":
            raise UsageError("evaluate_rho needs a series over Z[rho]")
        vals = [Fraction(c(rho)) for c in self.coeffs]
        if self.labelled:
            vals = [v / factorial(n) for n, v in enumerate(vals)]
        return TruncatedSeries(vals)

    def to_ordinary(self) -> TruncatedSeries:
        if not self.labelled:
            return self
        return TruncatedSeries([self.coefficient(n) for n in range(len(self))])

    def to_labelled(self) -> TruncatedSeries:
        if self.labelled:
            return self
        return TruncatedSeries([c * factorial(n) for n, c in enumerate(self.coeffs)], True)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.labelled)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.labelled)

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.labelled)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries([c * other for c in self.coeffs], self.labelled)
        other = self._coerce(other)
        self._check(other)
        a, b, N = self.coeffs, other.coeffs, self.order
        out = []
        if self.labelled:
            for n in range(N + 1):
                acc = a[0] * b[n]
                for k in range(1, n + 1):
                    if a[k]:
                        acc = acc + comb(n, k) * (a[k] * b[n - k])
                out.append(acc)
        else:
            for n in range(N + 1):
                acc = a[0] * b[n]
                for k in range(1, n + 1):
                    if a[k]:
                        acc = acc + a[k] * b[n - k]
                out.append(acc)
        return TruncatedSeries(out, self.labelled)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            return self.recip() ** (-m)
        result = TruncatedSeries.one(self.order, self.labelled)
        if self.ring == "rho":
            result = result.map(RhoPolynomial.coerce)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def recip(self) -> TruncatedSeries:
        """Multiplicative inverse; the constant term must be a unit."""
        a, N = self.coeffs, self.order
        inv0 = _unit_inverse(a[0])
        b = [inv0]
        for n in range(1, N + 1):
            acc = None
            for j in range(1, n + 1):
                if not a[j]:
                    continue
                term = a[j] * b[n - j]
                if self.labelled:
                    term = comb(n, j) * term
                acc = term if acc is None else acc + term
            if acc is None:
                acc = a[0] - a[0]
            b.append(-(acc * inv0))
        return TruncatedSeries(b, self.labelled)

    def log(self) -> TruncatedSeries:
        """Logarithm of a series with constant term 1, via ``b' = a'/a``."""
        a, N = self.coeffs, self.order
        if not _is_one(a[0]):
            raise DomainError(f"log needs constant term 1, got {a[0]}")
        zero = a[0] - a[0]
        b = [zero]
        if self.labelled:
            # b_{n} = a_{n} - sum_{k=1}^{n-1} C(n-1, k-1) b_k a_{n-k}
            for n in range(1, N + 1):
                acc = a[n]
                for k in range(1, n):
                    if a[n - k]:
                        acc = acc - comb(n - 1, k - 1) * (b[k] * a[n - k])
                b.append(acc)
        else:
            # n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
            for n in range(1, N + 1):
                acc = a[n] * n
                for k in range(1, n):
                    if a[n - k]:
                        acc = acc - k * (b[k] * a[n - k])
                b.append(_div_int(acc, n))
        return TruncatedSeries(b, self.labelled)

    def exp(self) -> TruncatedSeries:
        """Exponential of a series with constant term 0, via ``b' = a' b``."""
        a, N = self.coeffs, self.order
        if not _is_zero(a[0]):
            raise DomainError(f"exp needs constant term 0, got {a[0]}")
        one = a[0] + 1
        b = [one]
        if self.labelled:
            # b_{n} = sum_{k=1}^{n} C(n-1, k-1) a_k b_{n-k}
            for n in range(1, N + 1):
                acc = a[0]
                for k in range(1, n + 1):
                    if a[k]:
                        acc = acc + comb(n - 1, k - 1) * (a[k] * b[n - k])
                b.append(acc)
        else:
            # n b_n = sum_{k=1}^{n} k a_k b_{n-k}
            for n in range(1, N + 1):
                acc = a[0]
                for k in range(1, n + 1):
                    if a[k]:
                        acc = acc + k * (a[k] * b[n - k])
                b.append(_div_int(acc, n))
        return TruncatedSeries(b, self.labelled)

    def counts(self) -> list[int]:
        """``n! * [z^n]`` for every n, asserting each is an integer."""
        out = []
        for n, c in enumerate(self.coeffs):
            v = c if self.labelled else c * factorial(n)
            if isinstance(v, RhoPolynomial):
                raise UsageError("counts of a Z[rho] series are polynomials, not integers")
            if v.denominator != 1:
                raise ConsistencyError(f"n!*[z^{n}] = {v} is not an integer")
            out.append(int(v))
        return out


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    return a + b


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    return a - b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    return a * b


def series_recip(a: TruncatedSeries) -> TruncatedSeries:
    return a.recip()


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    return a.log()


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    return a.exp()


def egf_counts(a: TruncatedSeries, name: str = "egf"):
    """Wrap ``n! * [z^n] a`` in a :class:`~connasym.sequences.CountTable`."""
    from .sequences import CountTable

    return CountTable(name, a.counts(), provenance="egf_counts")
