"""Exact p-adic valuation arithmetic at an odd prime.

Everything downstream (characteristic polynomials, homotopy group orders,
graded averages) reduces to a handful of valuation facts collected here:

* ``valuation(p, x)`` is the exponent of p in a nonzero rational x whose
  denominator is prime to p.  Valuations are natural numbers together with
  one extra element ``INFINITE``, which serves both as nu_p(0) and as the
  "order exponent" of a pro-p summand such as Zp-hat.  INFINITE absorbs
  addition and positive scaling.
* the special-value identity nu_p((1+p)^n - 1) = 1 + nu_p(n) for n != 0,
  which is symmetric in n <-> -n.  The closed form is what the rest of the
  package uses; the direct big-integer expansion stays exposed as an oracle
  so the two routes can be checked against each other.
* truncated (modular) arithmetic: a p-adic integer known modulo p**N.  The
  modular route exists only as a cross-check on the exact routes, and it
  refuses to report a valuation when the residue is 0 mod p**N, since the
  truncation cannot distinguish "valuation >= N" from "is zero".

No floating point is used anywhere in this module except the single inf
sentinel inside PadicValuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRECISION = 64  # p-adic digits carried by the modular cross-check path


class NotAnOddPrime(ValueError):
    """p failed the odd-prime validation."""


class ZeroInput(ValueError):
    """0 has no finite valuation; use extended_valuation for the convention."""


class NegativeValuation(ValueError):
    """The denominator is divisible by p, so the value is not p-integral."""


class NotAUnit(ValueError):
    """Inversion mod p**N asked for an element divisible by p."""


class PrecisionExhausted(ArithmeticError):
    """A residue is 0 mod p**N; its valuation is not determined by the data."""


def is_odd_prime(n) -> bool:
    """Trial division. Desk-scale inputs only, which is all we ever validate."""
    if not isinstance(n, int) or isinstance(n, bool):
        return False
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class OddPrime(int):
    """An int that has been checked to be an odd prime."""

    def __new__(cls, p):
        if isinstance(p, OddPrime):
            return p
        if not is_odd_prime(p):
            raise NotAnOddPrime(f"p must be an odd prime, got {p!r}")
        return super().__new__(cls, p)


@dataclass(frozen=True)
class PadicValuation:
    """A natural number or INFINITE.  Addition and scaling never leave the set."""

    value: int | float  # nonnegative int, or math.inf

    def __post_init__(self):
        ok = (isinstance(self.value, int) and not isinstance(self.value, bool)
              and self.value >= 0) or self.value == math.inf
        if not ok:
            raise ValueError(f"valuation must be a natural number or infinity, got {self.value!r}")

    @property
    def is_finite(self) -> bool:
        return self.value != math.inf

    def __add__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = PadicValuation(other)
        if not isinstance(other, PadicValuation):
            return NotImplemented
        if self.is_finite and other.is_finite:
            return PadicValuation(self.value + other.value)
        return INFINITE

    __radd__ = __add__

    def __mul__(self, k):
        # k copies of a factor: multiplicity in a polynomial, rank of a cell
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        if k < 1:
            raise ValueError(f"scaling a valuation needs k >= 1, got {k}")
        if not self.is_finite:
            return INFINITE
        return PadicValuation(self.value * k)

    __rmul__ = __mul__

    def __str__(self):
        return "inf" if not self.is_finite else str(self.value)


INFINITE = PadicValuation(math.inf)

ZERO = PadicValuation(0)


def _int_valuation(p: int, n: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(p, x) -> PadicValuation:
    """nu_p(x) for nonzero p-integral rational x (int or Fraction).

    Raises ZeroInput on x == 0 and NegativeValuation when p divides the
    denominator of x.
    """
    p = OddPrime(p)
    if isinstance(x, Fraction):
        num, den = x.numerator, x.denominator
    elif isinstance(x, int) and not isinstance(x, bool):
        num, den = x, 1
    else:
        raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")
    if num == 0:
        raise ZeroInput("nu_p(0) is infinite; use extended_valuation for that convention")
    if den % p == 0:
        raise NegativeValuation(f"{x} is not p-integral at p={p}")
    return PadicValuation(_int_valuation(p, num))


def extended_valuation(p, x) -> PadicValuation:
    """valuation extended by nu_p(0) = INFINITE; math.inf is the marker for
    an infinite order (the |Zp-hat| convention)."""
    if x == math.inf:
        return INFINITE
    if (isinstance(x, int) or isinstance(x, Fraction)) and x == 0:
        OddPrime(p)
        return INFINITE
    return valuation(p, x)


def same_valuation(p, a, b) -> bool:
    """Whether a and b generate the same ideal measured p-adically, i.e.
    nu_p(a) = nu_p(b) under the extended convention."""
    return extended_valuation(p, a) == extended_valuation(p, b)


def one_plus_p_pow_minus_one_valuation(p, n) -> PadicValuation:
    """nu_p((1+p)^n - 1) = 1 + nu_p(n) for n != 0, by the closed form.

    Symmetric under n <-> -n.  This identity is what makes every
    characteristic-polynomial evaluation in the package a one-liner.
    """
    p = OddPrime(p)
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"exponent must be an int, got {type(n).__name__}")
    if n == 0:
        raise ZeroInput("(1+p)^0 - 1 = 0 has no finite valuation")
    return PadicValuation(1 + _int_valuation(p, n))


def one_plus_p_pow_minus_one_valuation_by_expansion(p, n) -> PadicValuation:
    """Oracle route for the identity above: expand (1+p)^n - 1 exactly
    (a big integer, or a Fraction when n < 0) and take its valuation."""
    p = OddPrime(p)
    if n == 0:
        raise ZeroInput("(1+p)^0 - 1 = 0 has no finite valuation")
    return valuation(p, Fraction(1 + p) ** n - 1)


@dataclass(frozen=True)
class PadicApprox:
    """A p-adic integer truncated to its residue mod p**precision."""

    p: int
    precision: int
    residue: int

    def __post_init__(self):
        object.__setattr__(self, "p", OddPrime(self.p))
        if not isinstance(self.precision, int) or self.precision < 1:
            raise ValueError(f"precision must be a positive int, got {self.precision!r}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    def __mul__(self, other):
        if not isinstance(other, PadicApprox):
            return NotImplemented
        if (self.p, self.precision) != (other.p, other.precision):
            raise ValueError("cannot multiply approximations at different (p, precision)")
        return PadicApprox(self.p, self.precision, self.residue * other.residue)

    def valuation(self) -> PadicValuation:
        """Valuation read off the residue.  Only trustworthy below the
        precision; a zero residue is refused rather than reported as >= N."""
        if self.residue == 0:
            raise PrecisionExhausted(
                f"residue is 0 mod {self.p}**{self.precision}; raise the precision")
        return PadicValuation(_int_valuation(self.p, self.residue))


def pow_mod(base, exp, p, precision: int = DEFAULT_PRECISION) -> PadicApprox:
    """base**exp as a truncated p-adic integer.  Negative exponents invert
    mod p**precision and require base to be a p-adic unit."""
    p = OddPrime(p)
    if not isinstance(precision, int) or precision < 1:
        raise ValueError(f"precision must be a positive int, got {precision!r}")
    if exp < 0 and base % p == 0:
        raise NotAUnit(f"{base} is divisible by {p}, so it has no inverse mod {p}**{precision}")
    return PadicApprox(p, precision, pow(base, exp, p ** precision))
