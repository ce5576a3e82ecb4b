"""Complex scalars in two backends: exact Gaussian rationals and doubles.

The exact backend is :class:`GaussianRational`, a complex number whose real
and imaginary parts are arbitrary-precision :class:`fractions.Fraction`
values.  It is closed under addition, subtraction, multiplication, division
and conjugation, and its squared modulus is a nonnegative rational, so
equality with zero is decidable.  The approximate backend is the built-in
``complex``.

The two backends never mix silently.  Arithmetic between a
``GaussianRational`` and a float or complex is rejected, and conversion is
one-way via :meth:`GaussianRational.to_complex`.
"""

from __future__ import annotations

from fractions import Fraction

#: Default zero threshold for squared moduli of normalized double-precision
#: quantities.  Determinant-like values of unit-norm states carry roughly
#: 1e-15 relative error; 1e-10 leaves a wide margin.
DEFAULT_EPS = 1e-10

_EXACT_INPUTS = (int, Fraction)


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if not isinstance(re, _EXACT_INPUTS) or not isinstance(im, _EXACT_INPUTS):
            raise TypeError(
                f"exact scalar parts must be int or Fraction, got "
                f"({type(re).__name__}, {type(im).__name__})"
            )
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic (exact operands only; floats/complex are rejected) ----

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, _EXACT_INPUTS):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- comparisons / hashing --------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    # -- conversion and display -------------------------------------------

    def to_complex(self) -> complex:
        """Explicit one-way conversion to the double backend."""
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def as_exact(value) -> GaussianRational:
    """Coerce an int, Fraction, (re, im) pair or GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, _EXACT_INPUTS):
        return GaussianRational(value)
    if isinstance(value, tuple) and len(value) == 2:
        return GaussianRational(value[0], value[1])
    raise TypeError(f"cannot build an exact scalar from {value!r}")


def as_approx(value) -> complex:
    """Coerce a number (or GaussianRational) to the double backend."""
    if isinstance(value, GaussianRational):
        return value.to_complex()
    if isinstance(value, tuple) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    return complex(value)


def is_exact_scalar(value) -> bool:
    return isinstance(value, GaussianRational)


def abs2(value):
    """Squared modulus in the value's own backend."""
    if isinstance(value, GaussianRational):
        return value.abs2()
    z = complex(value)
    return z.real * z.real + z.imag * z.imag


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction (used by JSON and CLI input)."""
    return Fraction(text.strip())
