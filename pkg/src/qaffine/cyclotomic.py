"""Exact arithmetic in cyclotomic fields Q(omega_N).

An element is stored as a polynomial in a fixed primitive N-th root of
unity omega, reduced modulo the N-th cyclotomic polynomial Phi_N, with
rational coefficients.  This is enough for the root-of-unity bookkeeping
done elsewhere in the package (character sums, Fourier matrices); the
heavy polynomial arithmetic lives in :mod:`qaffine.scalars`.
"""
from __future__ import annotations

import cmath
import functools
from fractions import Fraction

import sympy


@functools.lru_cache(maxsize=None)
def cyclotomic_coeffs(N: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_N, constant term first."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(N, x), x)
    return tuple(Fraction(int(c)) for c in reversed(poly.all_coeffs()))


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _reduce(coeffs: list[Fraction], N: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in omega modulo Phi_N (division remainder)."""
    phi = cyclotomic_coeffs(N)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c == 0:
            continue
        # subtract c * omega^(i-deg) * Phi_N  (Phi_N is monic)
        for j, p in enumerate(phi):
            work[i - deg + j] -= c * p
    return _trim(work[:deg])


class Cyclotomic:
    """An element of Q(omega_N) with omega_N = exp(2*pi*i/N)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs=()):
        if N < 1:
            raise ValueError("cyclotomic order must be positive")
        self.N = N
        self.coeffs = _reduce([Fraction(c) for c in coeffs], N)

    @classmethod
    def from_rational(cls, N: int, value) -> "Cyclotomic":
        return cls(N, [Fraction(value)])

    @classmethod
    def root(cls, N: int, power: int = 1) -> "Cyclotomic":
        """omega_N ** power, exactly."""
        power %= N
        coeffs = [Fraction(0)] * power + [Fraction(1)]
        return cls(N, coeffs)

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.N != self.N:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.N, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return Cyclotomic(self.N, a)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Cyclotomic(self.N)
        prod = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        return Cyclotomic(self.N, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self.coeffs:
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        phi = list(cyclotomic_coeffs(self.N))

        def polydivmod(a, b):
            a = list(a)
            lead = b[-1]
            q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
            for i in range(len(a) - 1, len(b) - 2, -1):
                c = a[i] / lead
                q[i - len(b) + 1] = c
                for j, p in enumerate(b):
                    a[i - len(b) + 1 + j] -= c * p
            return q, list(_trim(a))

        # extended gcd of self and Phi_N over Q
        r0, r1 = phi, list(self.coeffs)
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while r1:
            q, r = polydivmod(r0, r1)
            # t = t0 - q*t1
            prod = [Fraction(0)] * (len(q) + len(t1) - 1 if q and t1 else 0)
            for i, qa in enumerate(q):
                for j, tb in enumerate(t1):
                    prod[i + j] += qa * tb
            n = max(len(t0), len(prod))
            t = [Fraction(0)] * n
            for i, c in enumerate(t0):
                t[i] += c
            for i, c in enumerate(prod):
                t[i] -= c
            r0, r1 = r1, r
            t0, t1 = t1, list(_trim(t))
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (not a field?)")
        inv = [c / r0[0] for c in t0]
        return Cyclotomic(self.N, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.from_rational(self.N, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and conversions ---------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def rational_value(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        raise ValueError("not a rational element")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.N, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def to_complex(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.N)
        return sum((complex(c) * w**i for i, c in enumerate(self.coeffs)), 0j)

    def __repr__(self):
        if not self.coeffs:
            return "Cyclotomic(%d, 0)" % self.N
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*om" % c)
            else:
                parts.append("%s*om^%d" % (c, i))
        return "Cyclotomic(%d, %s)" % (self.N, " + ".join(parts))


def cyclotomic_root(N: int) -> Cyclotomic:
    """The distinguished primitive N-th root of unity omega_N."""
    return Cyclotomic.root(N)
