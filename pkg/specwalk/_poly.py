# encoding: utf-8

from fractions import Fraction
from functools import reduce
from math import gcd

from sympy import QQ, ZZ, Poly, Symbol
from sympy.polys.polyerrors import ExactQuotientFailed

from .error import ZeroDenominatorError, ZeroPolynomialError


T = Symbol("t")


def _strip(coeffs):
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()

    return tuple(coeffs)


def _long_division(num, den):
    """
    Integer long division of ascending coefficient sequences, stopping at the first
    leading coefficient that ``den[-1]`` does not divide.

    :return: ``(quotient, remainder, integral)``
    """

    remainder = list(num)
    lc = den[-1]
    top_shift = len(remainder) - len(den)
    quotient = [0] * max(top_shift + 1, 0)
    for shift in range(top_shift, -1, -1):
        top = remainder[shift + len(den) - 1]
        if top == 0:
            continue

        q, r = divmod(top, lc)
        if r:
            return (quotient, remainder, False)

        quotient[shift] = q
        for j, c in enumerate(den):
            remainder[shift + j] -= q * c

    return (quotient, remainder, True)


class IntPoly(object):
    """
    Polynomial in ``t`` with arbitrary-precision integer coefficients.
    ``coeffs`` are in ascending degree; the zero polynomial has no coefficients.
    """

    @property
    def coeffs(self):
        return self.__coeffs

    @property
    def degree(self):
        return len(self.__coeffs) - 1

    @property
    def leading_coefficient(self):
        return self.__coeffs[-1] if self.__coeffs else 0

    def __init__(self, coeffs):
        self.__coeffs = _strip(coeffs)

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented

        return self.__coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash(self.__coeffs)

    def __repr__(self):
        return "IntPoly({})".format(self.to_sympy().as_expr() if self.__coeffs else 0)

    def __add__(self, other):
        size = max(len(self.__coeffs), len(other.coeffs))
        padded = [0] * size
        for coeffs in (self.__coeffs, other.coeffs):
            for k, c in enumerate(coeffs):
                padded[k] += c

        return IntPoly(padded)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.__coeffs])

        if self.is_zero() or other.is_zero():
            return IntPoly([])

        product = [0] * (len(self.__coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.__coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    product[i + j] += x * y

        return IntPoly(product)

    __rmul__ = __mul__

    def __neg__(self):
        return IntPoly([-c for c in self.__coeffs])

    @classmethod
    def from_sympy(cls, poly):
        return cls(reversed(Poly(poly, T, domain=ZZ).all_coeffs()))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls([0] * degree + [coefficient])

    @classmethod
    def constant(cls, value):
        return cls([value])

    def to_sympy(self, domain=ZZ):
        return Poly(list(reversed(self.__coeffs)) or [0], T, domain=domain)

    def is_zero(self):
        return not self.__coeffs

    def exact_quotient(self, other):
        """
        Quotient of an exact division over the integers.

        :raises sympy.polys.polyerrors.ExactQuotientFailed: ``other`` does not divide.
        """

        if other.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")

        quotient, remainder, integral = _long_division(self.__coeffs, other.coeffs)
        if not integral or any(remainder):
            raise ExactQuotientFailed(self.to_sympy(), other.to_sympy())

        return IntPoly(quotient)

    def divides(self, other):
        """
        Return |True| if this polynomial divides ``other`` over the rationals.
        """

        if self.is_zero():
            return other.is_zero()

        if abs(self.leading_coefficient) == 1:
            _quotient, remainder, _integral = _long_division(other.coeffs, self.__coeffs)
            return not any(remainder)

        return other.to_sympy(QQ).rem(self.to_sympy(QQ)).is_zero

    def gcd(self, other):
        """
        Greatest common divisor, primitive with a positive leading coefficient.
        """

        divisor = IntPoly.from_sympy(self.to_sympy().gcd(other.to_sympy()))
        if divisor.leading_coefficient < 0:
            divisor = -divisor

        return divisor

    def derivative(self):
        return IntPoly(k * c for k, c in enumerate(self.__coeffs) if k > 0)

    def content(self):
        return reduce(gcd, self.__coeffs, 0)

    def primitive(self):
        """
        Primitive part with a positive leading coefficient.
        """

        if self.is_zero():
            return self

        content = self.content()
        if self.leading_coefficient < 0:
            content = -content

        return IntPoly(c // content for c in self.__coeffs)

    def evaluate(self, x):
        value = 0 * x
        for c in reversed(self.__coeffs):
            value = value * x + c

        return value

    def reversed(self, degree=None):
        """
        ``t**degree * p(1/t)``; ``degree`` defaults to the degree of the polynomial.
        """

        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError("reversal degree below the polynomial degree")

        padded = list(self.__coeffs) + [0] * (degree + 1 - len(self.__coeffs))

        return IntPoly(reversed(padded))

    def to_json(self):
        return [str(c) for c in self.__coeffs] or ["0"]


def _ensure_nonzero(p):
    if p.is_zero():
        raise ZeroPolynomialError("operation undefined for the zero polynomial")


def square_free_part(p):
    """
    ``p / gcd(p, p')`` as a primitive polynomial with a positive leading coefficient.

    :raises specwalk.ZeroPolynomialError: ``p`` is zero.
    """

    _ensure_nonzero(p)

    return p.exact_quotient(p.gcd(p.derivative())).primitive()


def is_square_free(p):
    _ensure_nonzero(p)

    return p.gcd(p.derivative()).degree == 0


def zero_multiplicity(p):
    """
    Multiplicity of zero as a root of ``p``.

    :raises specwalk.ZeroPolynomialError: ``p`` is zero.
    """

    _ensure_nonzero(p)

    return next(k for k, c in enumerate(p.coeffs) if c != 0)


def discriminant(p):
    """
    ``(-1)**(m(m-1)/2) * Res(p, p') / lc(p)`` for ``p`` of degree ``m``;
    polynomials of degree below two have discriminant one.
    """

    _ensure_nonzero(p)

    if p.degree < 2:
        return 1

    return int(p.to_sympy().discriminant())


def power_sums(p, count):
    """
    Power sums ``sum(x**k)`` over the roots of a monic ``p``, for ``k = 0..count-1``,
    by Newton's identities.
    """

    _ensure_nonzero(p)
    if p.leading_coefficient != 1:
        raise ValueError("power sums require a monic polynomial")

    m = p.degree
    # a[k] is the coefficient of t**(m-k)
    a = list(reversed(p.coeffs))
    sums = []
    for k in range(count):
        if k == 0:
            sums.append(m)
            continue

        total = sum(a[j] * sums[k - j] for j in range(1, min(k - 1, m) + 1))
        if k <= m:
            total += k * a[k]
        sums.append(-total)

    return sums


class RationalFn(object):
    """
    Reduced ratio ``num / den`` of integer polynomials: coprime over the rationals,
    ``den`` with a positive leading coefficient and no integer content shared by
    every coefficient of ``num`` and ``den``.
    """

    @property
    def num(self):
        return self.__num

    @property
    def den(self):
        return self.__den

    def __init__(self, num, den):
        if den.is_zero():
            raise ZeroDenominatorError("zero denominator")

        if num.is_zero():
            num, den = IntPoly([]), IntPoly([1])
        else:
            common = num.gcd(den)
            num = num.exact_quotient(common)
            den = den.exact_quotient(common)

        if den.leading_coefficient < 0:
            num, den = -num, -den

        content = reduce(gcd, num.coeffs + den.coeffs, 0)
        if content > 1:
            num = IntPoly(c // content for c in num.coeffs)
            den = IntPoly(c // content for c in den.coeffs)

        self.__num = num
        self.__den = den

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented

        return self.__num == other.num and self.__den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash((self.__num, self.__den))

    def __repr__(self):
        return "RationalFn(({}) / ({}))".format(
            self.__num.to_sympy().as_expr() if not self.__num.is_zero() else 0,
            self.__den.to_sympy().as_expr(),
        )

    def evaluate(self, x):
        x = Fraction(x)
        den = self.__den.evaluate(x)
        if den == 0:
            raise ZeroDenominatorError("{} is a pole".format(x))

        return self.__num.evaluate(x) / den

    def has_simple_poles(self):
        """
        Return |True| if the denominator is square-free, i.e. every pole is simple.
        """

        return is_square_free(self.__den)

    def series(self, count):
        """
        First ``count`` coefficients of the power series at zero.
        """

        den = [Fraction(c) for c in self.__den.coeffs]
        if not den or den[0] == 0:
            raise ZeroDenominatorError("rational function has a pole at zero")

        num = [Fraction(c) for c in self.__num.coeffs]
        coefficients = []
        for k in range(count):
            value = num[k] if k < len(num) else Fraction(0)
            value -= sum(den[j] * coefficients[k - j] for j in range(1, min(k, len(den) - 1) + 1))
            coefficients.append(value / den[0])

        return coefficients

    def to_json(self):
        return {"num": self.__num.to_json(), "den": self.__den.to_json()}


def reduce_rational_function(num, den):
    """
    :raises specwalk.ZeroDenominatorError: ``den`` is zero.
    """

    return RationalFn(num, den)
