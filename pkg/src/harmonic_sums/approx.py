"""Fixed-point decimal values carrying rigorous absolute error bounds.

An :class:`ApproxReal` stores an integer mantissa at a decimal scale (the
represented value is ``mantissa * 10**-scale``) together with an error bound
counted in units in the last place.  The contract every operation preserves:
if the operands enclose their true quantities, the result encloses the true
result.  Concretely

* addition and subtraction are exact at a common scale and simply add bounds,
* multiplication rounds once and inflates by
  |a| eb + |b| ea + ea eb  plus one rounding ulp,
* scaling by an exact rational rounds once and scales the bound,
* rescaling to fewer digits rounds once and carries the bound over
  conservatively.

No directed rounding is needed: a single nearest-rounding per operation plus
one extra ulp in the bound keeps the enclosure sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["ApproxReal"]


def _div_nearest(a: int, b: int) -> int:
    """Round a/b to the nearest integer (ties toward +infinity); b > 0."""
    return (2 * a + b) // (2 * b)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _ceil_fraction(x: Fraction) -> int:
    return _ceil_div(x.numerator, x.denominator)


@dataclass(frozen=True)
class ApproxReal:
    mantissa: int
    scale: int
    err_ulps: int = 0

    def __post_init__(self) -> None:
        if self.scale < 0:
            raise ValueError("scale must be nonnegative")
        if self.err_ulps < 0:
            raise ValueError("error bound must be nonnegative")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_int(cls, value: int, scale: int) -> ApproxReal:
        return cls(value * 10**scale, scale, 0)

    @classmethod
    def from_fraction(cls, value: Fraction | int, scale: int) -> ApproxReal:
        """Exact if the denominator divides 10**scale, else one ulp off."""
        value = Fraction(value)
        num = value.numerator * 10**scale
        den = value.denominator
        mantissa = _div_nearest(num, den)
        return cls(mantissa, scale, 0 if num % den == 0 else 1)

    # -- views -------------------------------------------------------------

    @property
    def value_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    @property
    def error_fraction(self) -> Fraction:
        return Fraction(self.err_ulps, 10**self.scale)

    @property
    def lower(self) -> Fraction:
        return Fraction(self.mantissa - self.err_ulps, 10**self.scale)

    @property
    def upper(self) -> Fraction:
        return Fraction(self.mantissa + self.err_ulps, 10**self.scale)

    def abs_upper(self) -> Fraction:
        """Rigorous upper bound on |true value|."""
        return Fraction(abs(self.mantissa) + self.err_ulps, 10**self.scale)

    def contains(self, x: Fraction | int) -> bool:
        return self.lower <= Fraction(x) <= self.upper

    def agrees_with(self, other: ApproxReal) -> bool:
        """Whether the two enclosures are mutually consistent:
        |difference of values| <= sum of bounds (exact rational test)."""
        diff = abs(self.value_fraction - other.value_fraction)
        return diff <= self.error_fraction + other.error_fraction

    # -- rescaling ---------------------------------------------------------

    def with_scale(self, scale: int) -> ApproxReal:
        if scale < 0:
            raise ValueError("scale must be nonnegative")
        shift = scale - self.scale
        if shift == 0:
            return self
        if shift > 0:
            f = 10**shift
            return ApproxReal(self.mantissa * f, scale, self.err_ulps * f)
        f = 10**(-shift)
        mantissa = _div_nearest(self.mantissa, f)
        err = _ceil_div(self.err_ulps, f) + 1
        return ApproxReal(mantissa, scale, err)

    def add_error(self, extra: Fraction) -> ApproxReal:
        """Widen the bound by an exact nonnegative amount (e.g. a series tail)."""
        extra = Fraction(extra)
        if extra < 0:
            raise ValueError("extra error must be nonnegative")
        return ApproxReal(
            self.mantissa,
            self.scale,
            self.err_ulps + _ceil_fraction(extra * 10**self.scale),
        )

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> ApproxReal:
        return ApproxReal(-self.mantissa, self.scale, self.err_ulps)

    def __add__(self, other: ApproxReal) -> ApproxReal:
        if not isinstance(other, ApproxReal):
            return NotImplemented
        scale = max(self.scale, other.scale)
        a, b = self.with_scale(scale), other.with_scale(scale)
        return ApproxReal(a.mantissa + b.mantissa, scale, a.err_ulps + b.err_ulps)

    def __sub__(self, other: ApproxReal) -> ApproxReal:
        if not isinstance(other, ApproxReal):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: ApproxReal) -> ApproxReal:
        if not isinstance(other, ApproxReal):
            return NotImplemented
        scale = max(self.scale, other.scale)
        a, b = self.with_scale(scale), other.with_scale(scale)
        unit = 10**scale
        mantissa = _div_nearest(a.mantissa * b.mantissa, unit)
        err = (
            _ceil_div(
                abs(a.mantissa) * b.err_ulps
                + abs(b.mantissa) * a.err_ulps
                + a.err_ulps * b.err_ulps,
                unit,
            )
            + 1
        )
        return ApproxReal(mantissa, scale, err)

    def mul_rational(self, q: Fraction | int) -> ApproxReal:
        """Scale by an exact rational (one rounding when inexact)."""
        q = Fraction(q)
        num = self.mantissa * q.numerator
        den = q.denominator
        mantissa = _div_nearest(num, den)
        err = _ceil_div(self.err_ulps * abs(q.numerator), den)
        if num % den != 0:
            err += 1
        return ApproxReal(mantissa, self.scale, err)

    def pow_int(self, exponent: int) -> ApproxReal:
        """Small nonnegative integer powers by repeated multiplication."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = ApproxReal.from_int(1, self.scale)
        for _ in range(exponent):
            result = result * self
        return result

    # -- formatting --------------------------------------------------------

    def decimal_digits(self, digits: int) -> str:
        """Sign, integer part, point, exactly ``digits`` fractional digits."""
        if digits < 1:
            raise ValueError("digits must be at least 1")
        r = self.with_scale(digits)
        mag = abs(r.mantissa)
        unit = 10**digits
        int_part, frac_part = divmod(mag, unit)
        sign = "-" if r.mantissa < 0 else ""
        return f"{sign}{int_part}.{frac_part:0{digits}d}"

    def bound_scientific(self, digits: int) -> str:
        """Bound at the display scale, rounded up to two significant digits."""
        if digits < 1:
            raise ValueError("digits must be at least 1")
        ulps = self.with_scale(digits).err_ulps
        if ulps == 0:
            return "0"
        s = str(ulps)
        exp = len(s) - 1 - digits
        if len(s) == 1:
            return f"{s}e{exp}"
        head = int(s[:2])
        if any(ch != "0" for ch in s[2:]):
            head += 1
        if head == 100:
            head = 10
            exp += 1
        return f"{head // 10}.{head % 10}e{exp}"

    def to_decimal_string(self, digits: int) -> str:
        return f"{self.decimal_digits(digits)} ± {self.bound_scientific(digits)}"
