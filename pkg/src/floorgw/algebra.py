"""Exact series arithmetic underlying refined curve counts.

Everything in this module (and in the whole package) is exact: arbitrary
precision integers, ``fractions.Fraction``, and two series types built on
them.  There is no floating point anywhere.

``LaurentPolyS`` is a Laurent polynomial with integer coefficients in a
variable ``s`` standing for q^(1/2), so the exponent of s^k encodes q^(k/2)
and s^2 = q.  Refined multiplicities of floor diagrams live here.

``USeries`` is a truncated Laurent series in a variable ``u`` with rational
coefficients and an explicit truncation order: the coefficient of u^k is
known for valuation <= k < truncation_order and *undefined* (not zero) at or
beyond the order.  Every operation propagates the narrowest reliable
truncation order of its inputs, so an equality of two USeries asserts all
coefficients that both sides actually know.

The bridge between the two worlds is the substitution q = e^(iu), performed
purely over the rationals:

* a palindromic Laurent polynomial (invariant under s -> 1/s) decomposes in
  the basis {1, s^a + s^(-a)} and maps through s^a + s^(-a) -> 2 cos(a*u/2)
  (``lp_substitute_exponential``);
* the antisymmetric combination (-i)(s^a - s^(-a)) maps to 2 sin(a*u/2),
  whose integer powers, including negative ones, are produced directly by
  ``sin_factor_series``.

Non-palindromic input to the substitution is rejected: its image would have
a non-cancelling imaginary part, and every refined count is palindromic, so
such input always signals a bug upstream.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable


class AlgebraError(ValueError):
    """Domain violation in exact-series arithmetic."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise AlgebraError(f"expected an exact rational, got {type(x).__name__}")


def rational_to_str(x: Fraction | int) -> str:
    """Serialize a rational as ``"num/den"``, or ``"num"`` when den = 1."""
    x = _as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


class Partition(tuple):
    """A partition: weakly decreasing tuple of positive integers.

    ``mult(l)`` is the number of parts equal to l, ``size`` the sum of the
    parts and ``len()`` the number of parts.  Construction sorts the parts,
    so ``Partition([1, 3, 1])`` and ``Partition([3, 1, 1])`` coincide.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        normalized = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in normalized):
            raise AlgebraError(f"partition parts must be positive, got {normalized}")
        return super().__new__(cls, normalized)

    @property
    def size(self) -> int:
        return sum(self)

    def mult(self, part: int) -> int:
        return sum(1 for p in self if p == part)

    def part_multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class LaurentPolyS:
    """Laurent polynomial in s = q^(1/2) with integer coefficients.

    Stored as a valuation plus a dense coefficient tuple indexed from the
    valuation upward; leading and trailing stored coefficients are nonzero
    unless the polynomial is zero (empty tuple, valuation 0).  Instances are
    immutable and hashable.
    """

    __slots__ = ("valuation", "coefficients")

    def __init__(self, valuation: int, coefficients: Iterable[int]):
        coeffs = [int(c) for c in coefficients]
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "valuation", 0)
            object.__setattr__(self, "coefficients", ())
        else:
            object.__setattr__(self, "valuation", valuation + lo)
            object.__setattr__(self, "coefficients", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):  # immutable after __init__
        raise AttributeError("LaurentPolyS is immutable")

    @classmethod
    def zero(cls) -> "LaurentPolyS":
        return cls(0, ())

    @classmethod
    def one(cls) -> "LaurentPolyS":
        return cls(0, (1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolyS":
        return cls(exponent, (coefficient,))

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        if self.is_zero():
            raise AlgebraError("the zero polynomial has no degree")
        return self.valuation + len(self.coefficients) - 1

    def coefficient(self, exponent: int) -> int:
        i = exponent - self.valuation
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def exponents(self) -> list[int]:
        return [self.valuation + i for i, c in enumerate(self.coefficients) if c]

    def is_palindromic(self) -> bool:
        """True when invariant under s -> 1/s."""
        if self.is_zero():
            return True
        return (
            self.coefficients == tuple(reversed(self.coefficients))
            and self.valuation == -self.degree
        )

    def __add__(self, other: "LaurentPolyS") -> "LaurentPolyS":
        if not isinstance(other, LaurentPolyS):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.valuation, other.valuation)
        hi = max(self.degree, other.degree)
        return LaurentPolyS(
            lo, [self.coefficient(k) + other.coefficient(k) for k in range(lo, hi + 1)]
        )

    def __neg__(self) -> "LaurentPolyS":
        return LaurentPolyS(self.valuation, [-c for c in self.coefficients])

    def __sub__(self, other: "LaurentPolyS") -> "LaurentPolyS":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolyS(self.valuation, [c * other for c in self.coefficients])
        if not isinstance(other, LaurentPolyS):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPolyS.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return LaurentPolyS(self.valuation + other.valuation, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolyS":
        if k < 0:
            raise AlgebraError("negative powers of Laurent polynomials are not defined here")
        result = LaurentPolyS.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPolyS)
            and self.valuation == other.valuation
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash(("LaurentPolyS", self.valuation, self.coefficients))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in self.exponents():
            c = self.coefficient(k)
            if k == 0:
                terms.append(str(c))
            else:
                var = "s" if k == 1 else f"s^{k}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPolyS({self.valuation}, {self.coefficients})"

    def to_json(self) -> dict:
        return {
            "valuation": self.valuation,
            "coefficients": [str(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPolyS":
        return cls(int(data["valuation"]), [int(c) for c in data["coefficients"]])


def q_integer(m: int) -> LaurentPolyS:
    """The q-integer [m]_q = s^-(m-1) + s^-(m-3) + ... + s^(m-1).

    Palindromic, with value m at s = 1.  Rejects m <= 0.
    """
    if m <= 0:
        raise AlgebraError(f"q_integer requires a positive integer, got {m}")
    coeffs = [0] * (2 * m - 1)
    for k in range(0, 2 * m - 1, 2):
        coeffs[k] = 1
    return LaurentPolyS(-(m - 1), coeffs)


def lp_eval_at_one(p: LaurentPolyS) -> int:
    """Value at s = 1, i.e. the plain coefficient sum (the q -> 1 limit)."""
    return sum(p.coefficients)


class USeries:
    """Truncated Laurent series in u with exact rational coefficients.

    ``coefficients[i]`` is the coefficient of u^(valuation + i); the window
    covers exactly [valuation, order).  Coefficients below the valuation are
    known to vanish; coefficients at or beyond ``order`` are *unknown* and
    requesting one raises.  The zero-to-its-order series is stored with an
    empty coefficient tuple and valuation == order.
    """

    __slots__ = ("valuation", "coefficients", "order")

    def __init__(self, valuation: int, coefficients: Iterable, order: int):
        coeffs = [_as_fraction(c) for c in coefficients]
        if valuation + len(coeffs) > order:
            raise AlgebraError(
                f"coefficient window [{valuation}, {valuation + len(coeffs)}) "
                f"exceeds truncation order {order}"
            )
        coeffs.extend([Fraction(0)] * (order - valuation - len(coeffs)))
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        object.__setattr__(self, "valuation", valuation + lo)
        object.__setattr__(self, "coefficients", tuple(coeffs[lo:]))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("USeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "USeries":
        return cls(order, (), order)

    @classmethod
    def one(cls, order: int) -> "USeries":
        if order < 1:
            raise AlgebraError("order must be >= 1 to represent the constant 1")
        return cls(0, (1,), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient=1) -> "USeries":
        if order <= exponent:
            raise AlgebraError("monomial exponent at or beyond truncation order")
        return cls(exponent, (coefficient,), order)

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, exponent: int) -> Fraction:
        if exponent >= self.order:
            raise AlgebraError(
                f"coefficient of u^{exponent} is beyond truncation order {self.order}"
            )
        i = exponent - self.valuation
        if i < 0:
            return Fraction(0)
        return self.coefficients[i]

    def nonzero_exponents(self) -> list[int]:
        return [self.valuation + i for i, c in enumerate(self.coefficients) if c]

    def truncate(self, new_order: int) -> "USeries":
        """Forget coefficients at or beyond ``new_order`` (never extends)."""
        if new_order > self.order:
            raise AlgebraError("truncate cannot increase the truncation order")
        if new_order <= self.valuation:
            return USeries.zero(new_order)
        return USeries(
            self.valuation, self.coefficients[: new_order - self.valuation], new_order
        )

    def __add__(self, other: "USeries") -> "USeries":
        if not isinstance(other, USeries):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation, order)
        vals = [
            (self.coefficient(k) if k < self.order else 0)
            + (other.coefficient(k) if k < other.order else 0)
            for k in range(lo, order)
        ]
        return USeries(lo, vals, order)

    def __neg__(self) -> "USeries":
        return USeries(self.valuation, [-c for c in self.coefficients], self.order)

    def __sub__(self, other: "USeries") -> "USeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return USeries.zero(self.order)
            return USeries(
                self.valuation, [c * other for c in self.coefficients], self.order
            )
        if not isinstance(other, USeries):
            return NotImplemented
        order = min(self.order + other.valuation, other.order + self.valuation)
        if self.is_zero() or other.is_zero():
            return USeries.zero(order)
        n = order - (self.valuation + other.valuation)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coefficients):
            if a and i < n:
                for j, b in enumerate(other.coefficients):
                    if i + j >= n:
                        break
                    if b:
                        out[i + j] += a * b
        return USeries(self.valuation + other.valuation, out, order)

    __rmul__ = __mul__

    def shift(self, k: int) -> "USeries":
        """Multiply by u^k."""
        if self.is_zero():
            return USeries.zero(self.order + k)
        return USeries(self.valuation + k, self.coefficients, self.order + k)

    def inverse(self) -> "USeries":
        """Multiplicative inverse; the unit part is inverted term by term.

        Input with window length L and valuation v yields valuation -v and
        window length L again, i.e. truncation order (order - 2v).
        """
        if self.is_zero():
            raise AlgebraError("inversion of the zero series is rejected")
        n = self.order - self.valuation
        c = self.coefficients
        inv = [Fraction(0)] * n
        inv[0] = Fraction(1) / c[0]
        for k in range(1, n):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if c[i]:
                    acc += c[i] * inv[k - i]
            inv[k] = -acc / c[0]
        return USeries(-self.valuation, inv, -self.valuation + n)

    def __pow__(self, k: int) -> "USeries":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            if self.is_zero():
                raise AlgebraError("0**0 of series is undefined")
            return USeries.one(self.order - self.valuation)
        if self.is_zero():
            return USeries.zero(k * self.order)
        unit = USeries(0, self.coefficients, self.order - self.valuation)
        result = USeries.one(unit.order)
        base = unit
        e = k
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result.shift(k * self.valuation)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, USeries)
            and self.order == other.order
            and self.valuation == other.valuation
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash(("USeries", self.valuation, self.coefficients, self.order))

    def __str__(self) -> str:
        terms = []
        for k in self.nonzero_exponents():
            c = self.coefficient(k)
            if k == 0:
                terms.append(rational_to_str(c))
            else:
                var = "u" if k == 1 else f"u^{k}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{rational_to_str(c)}*{var}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(u^{self.order})"

    def __repr__(self) -> str:
        return f"USeries({self.valuation}, {self.coefficients}, order={self.order})"

    def to_json(self) -> dict:
        return {
            "valuation": self.valuation,
            "order": self.order,
            "coefficients": [rational_to_str(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: dict) -> "USeries":
        return cls(
            int(data["valuation"]),
            [rational_from_str(c) for c in data["coefficients"]],
            int(data["order"]),
        )


def useries_mul(x: USeries, y: USeries) -> USeries:
    return x * y


def useries_pow(x: USeries, k: int) -> USeries:
    return x**k


def useries_shift(x: USeries, k: int) -> USeries:
    return x.shift(k)


def _two_cos_half(a: int, order: int) -> USeries:
    # 2 cos(a*u/2) = sum_j (-1)^j * 2 * a^(2j) / (4^j * (2j)!) * u^(2j)
    coeffs = []
    j = 0
    while 2 * j < order:
        coeffs.append(Fraction((-1) ** j * 2 * a ** (2 * j), 4**j * factorial(2 * j)))
        coeffs.append(Fraction(0))
        j += 1
    return USeries(0, coeffs[:order], order)


def lp_substitute_exponential(p: LaurentPolyS, order: int) -> USeries:
    """Substitute s = e^(iu/2) into a palindromic Laurent polynomial.

    The polynomial is decomposed in the basis {1, s^a + s^(-a)} and each
    symmetric pair becomes 2 cos(a*u/2), expanded to the requested
    truncation order.  The result is a real series of valuation >= 0.
    Non-palindromic input is rejected.
    """
    if order < 1:
        raise AlgebraError("substitution order must be >= 1")
    if not p.is_palindromic():
        raise AlgebraError(
            "substitution requires a palindromic polynomial (imaginary parts "
            "would not cancel)"
        )
    if p.is_zero():
        return USeries.zero(order)
    result = USeries(0, (p.coefficient(0),), order)
    for a in range(1, p.degree + 1):
        c = p.coefficient(a)
        if c:
            result = result + _two_cos_half(a, order) * c
    return result


def sin_factor_series(a: int, exponent: int, order: int) -> USeries:
    """(2 sin(a*u/2))^exponent as a truncated Laurent series in u.

    Each factor 2 sin(a*u/2) = a*u - (a^3/24) u^3 + ... has valuation 1, so
    the result has valuation = exponent; negative exponents invert the unit
    part.  Requires order > exponent so at least one coefficient exists.
    """
    if a < 1:
        raise AlgebraError(f"sine frequency must be a positive integer, got {a}")
    if order <= exponent:
        raise AlgebraError(
            f"order {order} leaves no coefficients for valuation {exponent}"
        )
    n = order - exponent
    if exponent == 0:
        return USeries.one(order)
    # unit part of 2 sin(a*u/2) / u: coefficient of u^(2j) is
    # (-1)^j * a^(2j+1) / (4^j * (2j+1)!)
    coeffs = []
    j = 0
    while 2 * j < n:
        coeffs.append(
            Fraction((-1) ** j * a ** (2 * j + 1), 4**j * factorial(2 * j + 1))
        )
        coeffs.append(Fraction(0))
        j += 1
    unit = USeries(0, coeffs[:n], n)
    return (unit**exponent).shift(exponent)
