"""Generating functions and weighted partial sums, in exact arithmetic.

A sequence with the order-n recurrence has the rational generating
function sum_{j>=0} W(j) x^j = N(x) / (1 - 2x + x^(n+1)) whose numerator
is determined by the terms W(-n-1..0); the built-in pair gets explicit
numerators.  The same denominator drives the closed forms for the
weighted partial sums sum_{j=0}^k x^j W(j), including the limit shape
at x = 1, the denominator's only rational root.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import Family, SequenceSpec, TermCache


class Polynomial:
    """Dense univariate polynomial over the rationals.

    Coefficients ascend by power and trailing zeros are stripped, so the
    zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        staged = [Fraction(c) for c in coeffs]
        while staged and staged[-1] == 0:
            staged.pop()
        self.coeffs = tuple(staged)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(merged)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quot = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs):
            shift = len(rem) - len(other.coeffs)
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            del rem[-1]
            while rem and rem[-1] == 0:
                del rem[-1]
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def text(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if power == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else (
                    str(mag) if mag.denominator == 1 else "(%s)" % mag)
                body = head + (var if power == 1 else "%s^%d" % (var, power))
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial(%s)" % (self.text(),)


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, divmod(a, b)[1]
    return a.monic()


class RationalFunction:
    """Quotient of two polynomials, normalized so den(0) = 1 when the
    denominator does not vanish at 0 (leading coefficient 1 otherwise)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        scale = den(0) if den(0) != 0 else den.coeffs[-1]
        self.num = num * (1 / scale)
        self.den = den * (1 / scale)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        reduced = self.reduce()
        return hash((reduced.num, reduced.den))

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        bottom = self.den(x)
        if bottom == 0:
            raise ValueError("pole at x = %s" % (x,))
        return self.num(x) / bottom

    def reduce(self) -> "RationalFunction":
        if self.num.is_zero:
            return RationalFunction(Polynomial(), Polynomial([1]))
        common = polynomial_gcd(self.num, self.den)
        if common.degree <= 0:
            return self
        return RationalFunction(self.num // common, self.den // common)

    def series(self, count: int) -> list:
        return series_coeffs(self, count)

    def text(self, var: str = "x") -> str:
        if self.den == Polynomial([1]):
            return self.num.text(var)
        return "(%s) / (%s)" % (self.num.text(var), self.den.text(var))

    def __repr__(self):
        return "RationalFunction(%s)" % (self.text(),)


def series_coeffs(rf: RationalFunction, count: int) -> list:
    """First `count` power-series coefficients of rf around 0.

    Long division against a denominator with den(0) = 1 keeps integer
    inputs integral; coefficients come back as int where exact.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    den = rf.den.coeffs
    if not den or den[0] == 0:
        raise ValueError("series needs a denominator nonzero at 0")
    num = rf.num.coeffs
    acc: list[Fraction] = []
    for m in range(count):
        c = Fraction(num[m]) if m < len(num) else Fraction(0)
        for i in range(1, min(m, len(den) - 1) + 1):
            c -= den[i] * acc[m - i]
        acc.append(c / den[0])
    return [int(c) if c.denominator == 1 else c for c in acc]


def _three_term_denominator(n: int) -> Polynomial:
    return Polynomial([1, -2] + [0] * (n - 1) + [1])


def generating_function(spec: SequenceSpec) -> RationalFunction:
    """Ordinary generating function of W(0), W(1), W(2), ..."""
    n = spec.n
    base = _three_term_denominator(n)
    if spec.family is Family.U:
        return RationalFunction(Polynomial([0, 1, -1]), base)
    if spec.family is Family.V:
        num = Polynomial([n, -(3 * n - 1), 2 * n] + [0] * (n - 2) + [-1])
        return RationalFunction(num, base * Polynomial([1, -1]))
    cache = TermCache(spec)
    coeffs = [2 * cache.term(-1) - cache.term(-n - 1)]
    coeffs += [-cache.term(m - n - 1) for m in range(1, n + 1)]
    return RationalFunction(Polynomial(coeffs), base)


def weighted_partial_sum(cache: TermCache, x, k: int) -> Fraction:
    """sum_{j=0..k} x^j W(j), summed term by term."""
    if k < 0:
        raise ValueError("k must be >= 0")
    x = Fraction(x)
    return sum((x**j * cache.term(j) for j in range(k + 1)), Fraction(0))


def sum_first(cache: TermCache, k: int) -> int:
    """sum_{j=0..k} W(j) by the x = 1 closed form.

    The form produces (n-1) times the sum (twice that for V), so the
    divisibility it implies is checked before dividing.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    spec, w = cache.spec, cache.term
    n = spec.n
    if spec.family is Family.U:
        scaled = -1 + 2 * (n - k) * w(k) + sum(
            j * w(j) for j in range(k - n, k + 1))
        parts = n - 1
    elif spec.family is Family.V:
        scaled = n * (n - 3) + 4 * (n - k) * w(k) + 2 * sum(
            j * w(j) for j in range(k - n, k + 1))
        parts = 2 * (n - 1)
    else:
        scaled = (2 * (n - k) * w(k) - 2 * (n + 1) * w(-1)
                  + sum(j * w(j) for j in range(k - n, k + 1))
                  + sum(j * w(-j) for j in range(1, n + 2)))
        parts = n - 1
    if parts > 1 and scaled % parts:
        raise ArithmeticError(
            "closed form for %s at k=%d is not divisible by %d"
            % (spec.label(), k, parts))
    return scaled // parts if parts > 1 else scaled


def partial_sum_closed(cache: TermCache, x, k: int) -> Fraction:
    """sum_{j=0..k} x^j W(j) by the closed form.

    Every weight except x = 1 goes through the three-term rearrangement;
    x = 1 is the denominator's only rational root and dispatches to the
    limit form in sum_first.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    x = Fraction(x)
    spec, w = cache.spec, cache.term
    n = spec.n
    bottom = 1 - 2 * x + x ** (n + 1)
    if bottom == 0:
        return Fraction(sum_first(cache, k))
    window = sum(x ** (n + 1 + j) * w(j) for j in range(k - n, k + 1))
    if spec.family is Family.U:
        top = x - x * x - 2 * x ** (k + 1) * w(k) + window
    else:
        top = (2 * w(-1) - 2 * x ** (k + 1) * w(k) + window
               - sum(x ** (n + 1 - j) * w(-j) for j in range(1, n + 2)))
    return top / bottom
