"""Exact and floating-point scalar arithmetic.

The exact backend works in the field Q(i) of Gaussian rationals; values that
arise from quadratic Gauss sums live in the ring Z[zeta_8] and are represented
separately.  The floating-point backend uses builtin ``complex`` with a fixed
comparison tolerance.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

#: Comparison tolerance for the floating-point backend.  Two complex values
#: are considered equal when both the real and imaginary differences are
#: within this bound.
FLOAT_TOLERANCE = 1e-9

_RationalLike = Union[int, Fraction]


class GaussianRational:
    """An exact complex number re + im*i with rational re, im."""

    __slots__ = ("re", "im")

    def __init__(self, re: _RationalLike = 0, im: _RationalLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("GaussianRational is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot make a GaussianRational from {value!r}")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _as_qi(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_qi(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_qi(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_qi(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_qi(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _as_qi(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (QI_ONE / self) ** (-exponent)
        result = QI_ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        other = _as_qi(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)

    # -- structure -----------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


def _as_qi(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


QI = GaussianRational
QI_ZERO = GaussianRational(0)
QI_ONE = GaussianRational(1)
QI_I = GaussianRational(0, 1)

#: Either backend's scalar: exact Gaussian rational or builtin complex.
Scalar = Union[GaussianRational, complex]


# -- the scalar wire grammar ------------------------------------------------
#
#   scalar  :=  [sign] term [sign term]
#   term    :=  rational "i"? | "i"
#   rational:=  digits ["/" digits]
#
# The real term, when present, comes first.  Examples: "0", "3/2-1/2i", "i",
# "-2", "1+i", "-1/3i".

_TERM_RE = re.compile(r"(\d+(?:/\d+)?)(i?)|(i)")


class ScalarParseError(ValueError):
    """Raised when text does not match the scalar grammar."""


def parse_scalar(text: str) -> GaussianRational:
    """Parse the wire format for exact scalars."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ScalarParseError("empty scalar")
    pos = 0
    terms = []
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            if s[pos] == "-":
                sign = -1
            pos += 1
            if pos == len(s):
                raise ScalarParseError(f"dangling sign in {text!r}")
        m = _TERM_RE.match(s, pos)
        if not m or m.start() != pos:
            raise ScalarParseError(f"bad scalar syntax: {text!r}")
        if m.group(3) is not None:
            coeff, imag = Fraction(1), True
        else:
            num = m.group(1)
            if "/" in num:
                a, b = num.split("/")
                if int(b) == 0:
                    raise ScalarParseError(f"zero denominator in {text!r}")
                coeff = Fraction(int(a), int(b))
            else:
                coeff = Fraction(int(num))
            imag = m.group(2) == "i"
        terms.append((sign * coeff, imag))
        pos = m.end()
    if len(terms) > 2:
        raise ScalarParseError(f"too many terms in {text!r}")
    if len(terms) == 2:
        if terms[0][1] or not terms[1][1]:
            raise ScalarParseError(f"expected real then imaginary term: {text!r}")
        return GaussianRational(terms[0][0], terms[1][0])
    coeff, imag = terms[0]
    return GaussianRational(0, coeff) if imag else GaussianRational(coeff)


def format_scalar(value: Scalar) -> str:
    """Render a scalar in the wire format; round-trips through parse_scalar."""
    if isinstance(value, complex):
        return repr(value)
    value = GaussianRational.coerce(value)
    re_, im = value.re, value.im
    if im == 0:
        return str(re_)
    if im == 1:
        itxt = "i"
    elif im == -1:
        itxt = "-i"
    else:
        itxt = f"{im}i"
    if re_ == 0:
        return itxt
    if im > 0:
        return f"{re_}+{itxt}"
    return f"{re_}{itxt}"


# -- backend-generic helpers -------------------------------------------------


def to_complex(value: Scalar) -> complex:
    if isinstance(value, GaussianRational):
        return value.to_complex()
    return complex(value)


def conj(value: Scalar) -> Scalar:
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value.conjugate()


def norm_sq(value: Scalar):
    """|value|^2, exact for GaussianRational inputs."""
    if isinstance(value, GaussianRational):
        return value.norm_sq()
    c = complex(value)
    return c.real * c.real + c.imag * c.imag


def is_zero(value: Scalar, tol: float | None = None) -> bool:
    if isinstance(value, GaussianRational):
        return not value
    t = FLOAT_TOLERANCE if tol is None else tol
    c = complex(value)
    return abs(c.real) <= t and abs(c.imag) <= t


def scalars_equal(a: Scalar, b: Scalar, tol: float | None = None) -> bool:
    if isinstance(a, GaussianRational) and isinstance(b, GaussianRational):
        return a == b
    ca, cb = to_complex(a), to_complex(b)
    t = FLOAT_TOLERANCE if tol is None else tol
    return abs(ca.real - cb.real) <= t and abs(ca.imag - cb.imag) <= t


_GAUSSIAN_UNITS = {
    GaussianRational(1): 1,
    GaussianRational(-1): 2,
    GaussianRational(0, 1): 4,
    GaussianRational(0, -1): 4,
}


def is_gaussian_root_of_unity(value: Scalar, tol: float | None = None):
    """Return the multiplicative order if value is a root of unity in Q(i).

    The only roots of unity in Q(i) are 1, -1, i, -i (orders 1, 2, 4).
    Returns None otherwise.  Floating inputs are matched within tolerance.
    """
    if isinstance(value, GaussianRational):
        return _GAUSSIAN_UNITS.get(value)
    c = complex(value)
    for unit, order in ((1 + 0j, 1), (-1 + 0j, 2), (1j, 4), (-1j, 4)):
        if scalars_equal(c, unit, tol):
            return order
    return None


# -- the ring Z[zeta_8] ------------------------------------------------------


class Zeta8:
    """Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(zeta_8), with z^4 = -1.

    zeta_8^2 = i, so Q(i) embeds via re + im*zeta_8^2.
    """

    __slots__ = ("coeffs",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(
            self, "coeffs", (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))
        )

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Zeta8 is immutable")

    @classmethod
    def from_qi(cls, value: GaussianRational) -> "Zeta8":
        return cls(value.re, 0, value.im, 0)

    def to_qi(self) -> GaussianRational:
        """Convert back to Q(i); fails if zeta or zeta^3 components remain."""
        c0, c1, c2, c3 = self.coeffs
        if c1 != 0 or c3 != 0:
            raise ValueError(f"{self!r} is not in Q(i)")
        return GaussianRational(c0, c2)

    def __add__(self, other):
        if not isinstance(other, Zeta8):
            return NotImplemented
        return Zeta8(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, Zeta8):
            return NotImplemented
        return Zeta8(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Zeta8(*(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Zeta8(*(a * other for a in self.coeffs))
        if not isinstance(other, Zeta8):
            return NotImplemented
        acc = [Fraction(0)] * 4
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                k = i + j
                if k < 4:
                    acc[k] += a * b
                else:
                    acc[k - 4] -= a * b
        return Zeta8(*acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ZETA8_ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Zeta8):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(0.25j * cmath.pi)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Zeta8{self.coeffs}"


ZETA8_ZERO = Zeta8()
ZETA8_ONE = Zeta8(1)
ZETA8 = Zeta8(0, 1)

#: i as a power of zeta_8, handy for Gauss sums over Z_4 exponents.
ZETA8_I = Zeta8(0, 0, 1, 0)


def i_power(exponent: int) -> GaussianRational:
    """i**exponent as an exact scalar, for any integer exponent."""
    table = (QI_ONE, QI_I, GaussianRational(-1), GaussianRational(0, -1))
    return table[exponent % 4]


def parse_signature_values(text: str) -> tuple[GaussianRational, ...]:
    """Parse a comma-separated list of exact scalars, e.g. "1,2,3,4"."""
    parts = [p for p in text.split(",")]
    if not parts or any(not p.strip() for p in parts):
        raise ScalarParseError(f"bad scalar list: {text!r}")
    return tuple(parse_scalar(p) for p in parts)


def product(values: Iterable[Scalar], one=QI_ONE):
    acc = one
    for v in values:
        acc = acc * v
    return acc
