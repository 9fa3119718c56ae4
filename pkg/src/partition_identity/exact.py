"""Exact arithmetic: rationals, dense polynomials in X, truncated series in Phi.

Scalars are :class:`fractions.Fraction`, which already keeps numerator and
denominator in lowest terms with a positive denominator.  ``PolyX`` is a dense
polynomial over Q in the formal variable X; ``SeriesPhi`` is a power series in
Phi with ``PolyX`` coefficients, truncated after ``Phi**order``.

All values are immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def render_rational(q: Scalar) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class PolyX:
    """Polynomial in X; ``coeffs[k]`` is the coefficient of ``X**k``.

    Trailing zeros are stripped so that the zero polynomial has no
    coefficients and ``degree`` is ``None`` for it.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> PolyX:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> PolyX:
        if k < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * k + [c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyX):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == PolyX.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"PolyX({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "X" if k == 1 else f"X^{k}"
                terms.append(mono if c == 1 else f"({c})*{mono}")
        return " + ".join(terms)

    def render(self) -> str:
        """Coefficient list, lowest degree first, each as ``num/den``."""
        return "[" + ", ".join(render_rational(c) for c in self._coeffs) + "]"

    def __neg__(self) -> PolyX:
        return PolyX(-c for c in self._coeffs)

    def __add__(self, other: PolyX | Scalar) -> PolyX:
        if isinstance(other, (int, Fraction)):
            other = PolyX.constant(other)
        if not isinstance(other, PolyX):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return PolyX(out)

    __radd__ = __add__

    def __sub__(self, other: PolyX | Scalar) -> PolyX:
        if isinstance(other, (int, Fraction)):
            other = PolyX.constant(other)
        if not isinstance(other, PolyX):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> PolyX:
        return PolyX.constant(other) - self

    def __mul__(self, other: PolyX | Scalar) -> PolyX:
        if isinstance(other, (int, Fraction)):
            return PolyX(c * other for c in self._coeffs)
        if not isinstance(other, PolyX):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return PolyX()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return PolyX(out)

    __rmul__ = __mul__

    def __truediv__(self, d: Scalar) -> PolyX:
        if not isinstance(d, (int, Fraction)):
            return NotImplemented
        if d == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return PolyX(c / d for c in self._coeffs)

    def __pow__(self, e: int) -> PolyX:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyX.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        # Horner
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c: Scalar) -> PolyX:
        """Substitute ``X := X + c``."""
        acc = PolyX()
        lin = PolyX((c, 1))
        for coef in reversed(self._coeffs):
            acc = acc * lin + coef
        return acc


X = PolyX.monomial(1)


def poly_binomial(shift: int, k: int) -> PolyX:
    """``binom(X + shift, k)`` as a polynomial of degree ``k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = PolyX.constant(1)
    for j in range(k):
        p = p * PolyX((shift - j, 1))
    return p / math.factorial(k)


class SeriesPhi:
    """Power series in Phi with ``PolyX`` coefficients, known through ``Phi**order``.

    Binary operations truncate to the smaller operand order, and the result
    records that order.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Sequence[PolyX | Scalar] = ()):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = [c if isinstance(c, PolyX) else PolyX.constant(c) for c in coeffs[: order + 1]]
        cs.extend(PolyX() for _ in range(order + 1 - len(cs)))
        self._order = order
        self._coeffs: tuple[PolyX, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[PolyX, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> PolyX:
        if k > self._order:
            raise IndexError(f"Phi^{k} is beyond truncation order {self._order}")
        return self._coeffs[k] if k >= 0 else PolyX()

    def truncate(self, order: int) -> SeriesPhi:
        if order > self._order:
            raise ValueError("cannot raise the truncation order")
        return SeriesPhi(order, self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesPhi):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"SeriesPhi(order={self._order}, {[c.render() for c in self._coeffs]})"

    def render(self) -> str:
        return "[" + ", ".join(c.render() for c in self._coeffs) + "]"

    def __neg__(self) -> SeriesPhi:
        return SeriesPhi(self._order, [-c for c in self._coeffs])

    def __add__(self, other: SeriesPhi | PolyX | Scalar) -> SeriesPhi:
        if isinstance(other, (int, Fraction, PolyX)):
            other = SeriesPhi(self._order, [other])
        if not isinstance(other, SeriesPhi):
            return NotImplemented
        n = min(self._order, other._order)
        return SeriesPhi(n, [self._coeffs[k] + other._coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __sub__(self, other: SeriesPhi | PolyX | Scalar) -> SeriesPhi:
        if isinstance(other, (int, Fraction, PolyX)):
            other = SeriesPhi(self._order, [other])
        if not isinstance(other, SeriesPhi):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyX | Scalar) -> SeriesPhi:
        return SeriesPhi(self._order, [other]) - self

    def __mul__(self, other: SeriesPhi | PolyX | Scalar) -> SeriesPhi:
        if isinstance(other, (int, Fraction, PolyX)):
            return SeriesPhi(self._order, [c * other for c in self._coeffs])
        if not isinstance(other, SeriesPhi):
            return NotImplemented
        n = min(self._order, other._order)
        out = [PolyX() for _ in range(n + 1)]
        a, b = self._coeffs, other._coeffs
        for i in range(n + 1):
            if a[i].is_zero():
                continue
            for j in range(n + 1 - i):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + a[i] * b[j]
        return SeriesPhi(n, out)

    __rmul__ = __mul__

    def __truediv__(self, d: Scalar) -> SeriesPhi:
        if not isinstance(d, (int, Fraction)):
            return NotImplemented
        return SeriesPhi(self._order, [c / d for c in self._coeffs])

    def __pow__(self, e: int) -> SeriesPhi:
        if e < 0:
            raise ValueError("negative power of a series")
        result = SeriesPhi(self._order, [1])
        for _ in range(e):
            result = result * self
        return result

    def first_difference(self, other: SeriesPhi) -> int | None:
        """Lowest Phi-power where the two series differ, compared up to the smaller order."""
        n = min(self._order, other._order)
        for k in range(n + 1):
            if self._coeffs[k] != other._coeffs[k]:
                return k
        return None


def series_log_inv(order: int) -> SeriesPhi:
    """``log(1/(1 - Phi)) = sum_{k>=1} Phi**k / k``."""
    return SeriesPhi(order, [0] + [Fraction(1, k) for k in range(1, order + 1)])


def series_exp(f: SeriesPhi) -> SeriesPhi:
    """``sum_m f**m / m!`` truncated at ``f.order``; ``f`` must have zero constant term."""
    if not f.coefficient(0).is_zero():
        raise ValueError("series_exp needs a series with zero constant term")
    total = SeriesPhi(f.order, [1])
    term = SeriesPhi(f.order, [1])
    for m in range(1, f.order + 1):
        term = term * f / m
        total = total + term
    return total


def binomial_power_int(s: int, order: int) -> SeriesPhi:
    """``(1 - Phi)**(-s)`` for a positive integer ``s``."""
    if s < 1:
        raise ValueError("s must be a positive integer")
    return SeriesPhi(order, [math.comb(s + k - 1, k) for k in range(order + 1)])


def binomial_power_sym(order: int) -> SeriesPhi:
    """``(1 - Phi)**(-X)``: the coefficient of ``Phi**k`` is ``binom(X + k - 1, k)``."""
    return SeriesPhi(order, [poly_binomial(k - 1, k) for k in range(order + 1)])
