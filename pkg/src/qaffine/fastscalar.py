"""Fast exact coefficients for the word-combinatorics modules.

The half-algebra and triangular-form computations spend almost all of
their time on coefficient arithmetic in Q(s, a).  Their coefficients are
Laurent polynomials in s and a divided by products of q-integers, so a
general rational-function type (with a gcd cancellation on every
operation) is overkill.  This module provides a small fraction type over
the Laurent ring Q[s^{+-1}, a^{+-1}]:

* monomial denominators are folded into the numerator immediately, so
  the common case (unit twists by the bicharacter) never builds a
  denominator at all;
* equal denominators add without expansion;
* no gcd is ever computed, except as a rare fallback through sympy when
  a denominator grows past a size threshold.

Values convert losslessly to :class:`qaffine.scalars.Scalar` at module
boundaries.
"""
from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is optional
    _Q = Fraction

from .scalars import Scalar, ScalarContext


class L2:
    """Laurent polynomial in (s, a) over Q: dict (e_s, e_a) -> Fraction."""

    __slots__ = ("d",)

    def __init__(self, d: dict[tuple[int, int], Fraction]):
        self.d = d

    @classmethod
    def const(cls, c) -> "L2":
        c = _Q(c)
        return cls({} if c == 0 else {(0, 0): c})

    @classmethod
    def mono(cls, es: int, ea: int, c=1) -> "L2":
        c = _Q(c)
        return cls({} if c == 0 else {(es, ea): c})

    def is_zero(self) -> bool:
        return not self.d

    def is_mono(self) -> bool:
        return len(self.d) == 1

    def __add__(self, other: "L2") -> "L2":
        d = dict(self.d)
        for k, v in other.d.items():
            acc = d.get(k)
            acc = v if acc is None else acc + v
            if acc == 0:
                d.pop(k, None)
            else:
                d[k] = acc
        return L2(d)

    def __neg__(self) -> "L2":
        return L2({k: -v for k, v in self.d.items()})

    def __sub__(self, other: "L2") -> "L2":
        return self + (-other)

    def __mul__(self, other: "L2") -> "L2":
        if not self.d or not other.d:
            return L2({})
        if len(other.d) < len(self.d):
            self, other = other, self
        if len(self.d) == 1:
            ((es, ea), c), = self.d.items()
            return other.scale_mono(es, ea, c)
        d: dict[tuple[int, int], Fraction] = {}
        for (s1, a1), c1 in self.d.items():
            for (s2, a2), c2 in other.d.items():
                k = (s1 + s2, a1 + a2)
                acc = d.get(k)
                acc = c1 * c2 if acc is None else acc + c1 * c2
                if acc == 0:
                    d.pop(k, None)
                else:
                    d[k] = acc
        return L2(d)

    def scale_mono(self, es: int, ea: int, c: Fraction) -> "L2":
        return L2({(k[0] + es, k[1] + ea): v * c for k, v in self.d.items()})

    def __eq__(self, other):
        return isinstance(other, L2) and self.d == other.d

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __pow__(self, n: int) -> "L2":
        result = L2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


_ONE = L2.const(1)
_DEN_LIMIT = 40


class FScalar:
    """A fraction of Laurent polynomials, lazily reduced."""

    __slots__ = ("num", "den", "_red")

    def __init__(self, num: L2, den: L2 = _ONE):
        self._red = None
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_mono() and den is not _ONE:
            ((es, ea), c), = den.d.items()
            num = num.scale_mono(-es, -ea, _Q(1) / c)
            den = _ONE
        self.num = num
        self.den = den

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, FScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return FScalar(L2.const(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den is other.den or self.den == other.den:
            return FScalar(self.num + other.num, self.den)
        return FScalar(self.num * other.den + other.num * self.den, self.den * other.den)._shrink()

    __radd__ = __add__

    def __neg__(self):
        return FScalar(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FScalar(self.num * other.num, self.den * other.den)._shrink()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FScalar(self.num * other.den, self.den * other.num)._shrink()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return FScalar(self.den, self.num)._shrink() ** (-n)
        return FScalar(self.num**n, self.den**n)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        red = self.reduced()
        return hash((red.num, red.den))

    def _shrink(self) -> "FScalar":
        if len(self.den.d) > _DEN_LIMIT:
            return self.reduced()
        return self

    # -- conversions -------------------------------------------------------

    def reduced(self) -> "FScalar":
        """Cancel the fraction via sympy (used sparingly, memoized)."""
        if self._red is not None:
            return self._red
        if self.den == _ONE or self.num.is_zero():
            red = FScalar(self.num) if not self.num.is_zero() else FScalar(L2({}))
        else:
            ctx = _sympy_ctx()
            red = _from_scalar(_to_scalar(self, ctx), ctx)
        red._red = red
        self._red = red
        return red

    def to_scalar(self, ctx: ScalarContext | None = None) -> Scalar:
        return _to_scalar(self, ctx or _sympy_ctx())

    def to_string(self) -> str:
        return self.to_scalar().to_string()

    def eval_numeric(self, assign: dict) -> complex:
        return self.to_scalar().eval_numeric(assign)

    def __repr__(self):
        return "FScalar(%r / %r)" % (self.num.d, self.den.d)


class LaurentContext:
    """Duck-typed stand-in for ScalarContext over Q(s, a)."""

    def __init__(self):
        self.zero = FScalar(L2({}))
        self.one = FScalar(_ONE)
        self.s = FScalar(L2.mono(1, 0))
        self.a = FScalar(L2.mono(0, 1))
        self.q = FScalar(L2.mono(2, 0))

    @staticmethod
    def scalar(value) -> FScalar:
        if isinstance(value, FScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return FScalar(L2.const(value))
        if isinstance(value, Scalar):
            return _from_scalar(value, value.ctx)
        raise TypeError("cannot embed %r" % (value,))


def _l2_to_scalar(p: L2, ctx: ScalarContext) -> Scalar:
    s, a = ctx.gen("s"), ctx.gen("a")
    total = ctx.zero
    for (es, ea), c in p.d.items():
        frac = Fraction(int(c.numerator), int(c.denominator))
        total = total + ctx.scalar(frac) * s**es * a**ea
    return total


def _to_scalar(x: FScalar, ctx: ScalarContext) -> Scalar:
    return _l2_to_scalar(x.num, ctx) / _l2_to_scalar(x.den, ctx)


def _from_scalar(x: Scalar, ctx: ScalarContext) -> FScalar:
    i_s = ctx.names.index("s")
    i_a = ctx.names.index("a")

    def conv(poly):
        d = {}
        for monom, coeff in poly.terms():
            if any(e and k not in (i_s, i_a) for k, e in enumerate(monom)):
                raise ValueError("not a polynomial in s, a only")
            d[(monom[i_s], monom[i_a])] = _Q(int(coeff.numerator), int(coeff.denominator))
        return L2(d)

    return FScalar(conv(x.rep.numer), conv(x.rep.denom))


_SYMPY_CTX = None


def _sympy_ctx() -> ScalarContext:
    global _SYMPY_CTX
    if _SYMPY_CTX is None:
        from .scalars import default_context

        _SYMPY_CTX = default_context(1)
    return _SYMPY_CTX
