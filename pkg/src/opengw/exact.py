"""Exact rationals and truncated formal power series in one variable ``t``.

Scalars are :class:`fractions.Fraction`. A :class:`PowerSeries` keeps the
powers ``t^0 .. t^order`` with a sparse exponent -> coefficient map; absent
exponents are exact zeros. Arithmetic never extends precision: results carry
the smaller of the operand orders.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Union

__all__ = [
    "Rational",
    "PowerSeries",
    "SeriesError",
    "ZeroConstantTerm",
    "BadConstantTerm",
    "rational",
    "format_rational",
    "parse_rational",
    "series_mul",
    "series_inv",
    "series_exp",
    "series_log",
    "sin_half_series",
    "bernoulli",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class SeriesError(ValueError):
    """Base class for power-series domain errors."""


class ZeroConstantTerm(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


def rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """``"p/q"`` in lowest terms, or ``"p"`` when ``q == 1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series ``sum_k c_k t^k`` for ``0 <= k <= order``.

    ``even`` asserts support on even exponents only; it is checked at
    construction. Zero coefficients are dropped so two series compare equal
    exactly when they agree as truncated series; the parity flag does not
    take part in comparison.
    """

    order: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)
    even: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        clean: dict[int, Fraction] = {}
        for k, c in self.coeffs.items():
            k = int(k)
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            if k > self.order:
                raise ValueError(f"exponent {k} exceeds truncation order {self.order}")
            c = rational(c)
            if c:
                if self.even and k % 2:
                    raise ValueError(f"odd exponent {k} in an even series")
                clean[k] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __hash__(self) -> int:
        return hash((self.order, tuple(self.coeffs.items())))

    # constructors

    @classmethod
    def constant(cls, c: RationalLike, order: int, even: bool = True) -> PowerSeries:
        return cls(order, {0: rational(c)}, even)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls.constant(1, order)

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls(order, {}, True)

    @classmethod
    def from_list(cls, coeffs: Iterable[RationalLike], order: int | None = None) -> PowerSeries:
        """Dense coefficients ``[c_0, c_1, ...]``; parity is inferred."""
        cs = [rational(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        d = {k: c for k, c in enumerate(cs) if c and k <= order}
        return cls(order, d, all(k % 2 == 0 for k in d))

    # access

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"t^{k} is beyond truncation order {self.order}")
        return self.coeffs.get(k, Fraction(0))

    def dense(self) -> list[Fraction]:
        return [self[k] for k in range(self.order + 1)]

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError("cannot extend precision by truncation")
        return PowerSeries(order, {k: c for k, c in self.coeffs.items() if k <= order}, self.even)

    # ring operations

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = min(self.order, other.order)
        out = {k: c for k, c in self.coeffs.items() if k <= n}
        for k, c in other.coeffs.items():
            if k <= n:
                out[k] = out.get(k, Fraction(0)) + c
        return PowerSeries(n, out, self.even and other.even)

    def __neg__(self) -> PowerSeries:
        return PowerSeries(self.order, {k: -c for k, c in self.coeffs.items()}, self.even)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return self + (-other)

    def __mul__(self, other: PowerSeries | RationalLike) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        c = rational(other)
        return PowerSeries(self.order, {k: c * v for k, v in self.coeffs.items()}, self.even)

    __rmul__ = __mul__

    # serialization

    def to_pairs(self) -> list[list]:
        return [[k, format_rational(c)] for k, c in self.coeffs.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())

    @classmethod
    def from_pairs(cls, pairs: Iterable, order: int) -> PowerSeries:
        d = {int(k): parse_rational(str(c)) for k, c in pairs}
        return cls(order, d, all(k % 2 == 0 for k, c in d.items() if c))

    def __str__(self) -> str:
        if not self.coeffs:
            return f"0 + O(t^{self.order + 1})"
        terms = []
        for k, c in self.coeffs.items():
            s = format_rational(c)
            terms.append(s if k == 0 else f"{s}*t^{k}")
        return " + ".join(terms) + f" + O(t^{self.order + 1})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    out: dict[int, Fraction] = {}
    for i, x in a.coeffs.items():
        if i > n:
            break
        for j, y in b.coeffs.items():
            if i + j > n:
                break
            out[i + j] = out.get(i + j, Fraction(0)) + x * y
    return PowerSeries(n, out, a.even and b.even)


def series_inv(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; requires ``a[0] != 0``.

    b_0 = 1/a_0,  b_n = -(1/a_0) * sum_{k=1}^{n} a_k b_{n-k}.
    """
    a0 = a[0]
    if a0 == 0:
        raise ZeroConstantTerm("series has zero constant term")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = 1 / a0
    tail = [(k, c) for k, c in a.coeffs.items() if k > 0]
    for m in range(1, n + 1):
        s = Fraction(0)
        for k, c in tail:
            if k > m:
                break
            s += c * b[m - k]
        b[m] = -s / a0
    return PowerSeries(n, dict(enumerate(b)), a.even)


def series_exp(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` for ``a[0] == 0`` via ``n b_n = sum_{k=1}^n k a_k b_{n-k}``."""
    if a[0] != 0:
        raise BadConstantTerm("exp needs a zero constant term")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    tail = list(a.coeffs.items())
    for m in range(1, n + 1):
        s = Fraction(0)
        for k, c in tail:
            if k > m:
                break
            s += k * c * b[m - k]
        b[m] = s / m
    return PowerSeries(n, dict(enumerate(b)), a.even)


def series_log(a: PowerSeries) -> PowerSeries:
    """``log(a)`` for ``a[0] == 1`` via ``n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}``."""
    if a[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    n = a.order
    b = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        s = m * a[m]
        for k in range(1, m):
            if b[k]:
                s -= k * b[k] * a[m - k]
        b[m] = s / m
    return PowerSeries(n, dict(enumerate(b)), a.even)


def sin_half_series(order: int) -> PowerSeries:
    """``sin(t/2)/(t/2)`` through ``t^order``.

    The ``t^{2k}`` coefficient is ``(-1)^k / (4^k (2k+1)!)``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = {
        2 * k: Fraction((-1) ** k, 4**k * factorial(2 * k + 1))
        for k in range(order // 2 + 1)
    }
    return PowerSeries(order, coeffs, True)


def bernoulli(n: int) -> Fraction:
    """B_n from ``sum_{k=0}^{n} C(n+1, k) B_k = 0``, ``B_0 = 1`` (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    B = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((comb(m + 1, k) * B[k] for k in range(m)), Fraction(0))
        B.append(-s / (m + 1))
    return B[n]
