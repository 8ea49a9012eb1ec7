"""Exact scalar arithmetic: multivariate rational functions over Q(omega_N).

Every coefficient appearing in the algebra lives in the field
Q(omega_N)(s, a, z, w, u, v, b1, c1, b2, c2, b3, c3), where

* ``s``       -- a square root of the quantum parameter, q = s^2;
* ``a``       -- the second deformation parameter;
* ``z``, ``w``-- spectral parameters;
* ``u``, ``v``-- representation twisting scalars;
* ``b*``/``c*`` -- stand-ins for the two transcendental series values
  entering the spectral R-matrix.

A :class:`Scalar` wraps a sympy sparse fraction-field element and adds a
canonical, order-stable serialization that round-trips through
:func:`ScalarContext.parse` bit-exactly.
"""
from __future__ import annotations

import functools
from fractions import Fraction

import sympy
from sympy.polys.domains import QQ
from sympy.polys.fields import FracField

from .cyclotomic import Cyclotomic

VARS = ("s", "a", "z", "w", "u", "v", "b1", "c1", "b2", "c2", "b3", "c3")


def _anp_list(coeff):
    """Coefficients of an algebraic number, constant term first."""
    rep = coeff.rep
    if hasattr(rep, "to_list"):
        rep = rep.to_list()
    return list(reversed(rep))


class ScalarContext:
    """A fixed coefficient field Q(omega_N)(s, a, ...)."""

    def __init__(self, N: int = 1, names: tuple[str, ...] = VARS):
        self.N = N
        self.names = tuple(names)
        if N == 1:
            self.domain = QQ
            self._omega_dom = QQ.one
        elif N == 2:
            self.domain = QQ
            self._omega_dom = -QQ.one
        else:
            ext = sympy.exp(2 * sympy.pi * sympy.I / N)
            self.domain = QQ.algebraic_field(ext)
            self._omega_dom = self.domain.from_sympy(ext)
        self.field = FracField(self.names, self.domain)
        self._gens = {name: Scalar(self, g) for name, g in zip(self.names, self.field.gens)}
        self.zero = Scalar(self, self.field.zero)
        self.one = Scalar(self, self.field.one)
        self.omega = Scalar(self, self.field.ground_new(self._omega_dom))

    def gen(self, name: str) -> "Scalar":
        return self._gens[name]

    def __getattr__(self, name):
        gens = self.__dict__.get("_gens")
        if gens and name in gens:
            return gens[name]
        raise AttributeError(name)

    @property
    def q(self) -> "Scalar":
        return self.gen("s") ** 2

    def scalar(self, value) -> "Scalar":
        """Embed an int, Fraction or Cyclotomic into the field."""
        if isinstance(value, Scalar):
            if value.ctx is not self:
                raise ValueError("scalar belongs to a different context")
            return value
        if isinstance(value, Cyclotomic):
            if value.N != self.N:
                raise ValueError("cyclotomic order mismatch")
            acc = self.zero
            for i, c in enumerate(value.coeffs):
                acc = acc + self._rational(c) * self.omega**i
            return acc
        if isinstance(value, (int, Fraction)):
            return self._rational(Fraction(value))
        raise TypeError("cannot embed %r" % (value,))

    def _rational(self, value: Fraction) -> "Scalar":
        value = Fraction(value)
        dom = QQ(value.numerator, value.denominator)
        if self.domain is not QQ:
            dom = self.domain.convert(dom, QQ)
        return Scalar(self, self.field.ground_new(dom))

    def omega_power(self, k: int) -> "Scalar":
        return self.omega ** (k % self.N)

    # -- serialization ----------------------------------------------------

    def parse(self, text: str) -> "Scalar":
        """Parse the output of :meth:`Scalar.to_string` (and more)."""
        return _Parser(self, text).parse()

    def __repr__(self):
        return "ScalarContext(N=%d, names=%r)" % (self.N, self.names)


class Scalar:
    """An element of a :class:`ScalarContext` field."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: ScalarContext, rep):
        self.ctx = ctx
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ctx is not self.ctx:
                raise ValueError("mixed scalar contexts")
            return other.rep
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.ctx.scalar(other).rep
        return None

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Scalar(self.ctx, self.rep + rep)

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Scalar(self.ctx, self.rep - rep)

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Scalar(self.ctx, rep - self.rep)

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Scalar(self.ctx, self.rep * rep)

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Scalar(self.ctx, self.rep / rep)

    def __rtruediv__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return Scalar(self.ctx, rep / self.rep)

    def __pow__(self, n: int):
        return Scalar(self.ctx, self.rep ** n)

    def __neg__(self):
        return Scalar(self.ctx, -self.rep)

    def __eq__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return self.rep == rep

    def __hash__(self):
        return hash(self.rep)

    def __bool__(self):
        return bool(self.rep)

    def is_zero(self) -> bool:
        return not self.rep

    def is_one(self) -> bool:
        return self.rep == self.ctx.field.one

    # -- canonical serialization ------------------------------------------

    def _term_key(self, monom):
        return (sum(monom), monom)

    def _coeff_str(self, coeff):
        """Render a ground coefficient; returns (sign, magnitude string)."""
        dom = self.ctx.domain
        if dom is QQ:
            c = Fraction(int(coeff.numerator), int(coeff.denominator))
            sign = "-" if c < 0 else "+"
            c = abs(c)
            return sign, (str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator))
        coeffs = _anp_list(coeff)
        parts = []
        for i, c in enumerate(coeffs):
            c = Fraction(int(c.numerator), int(c.denominator))
            if c == 0:
                continue
            mag = str(abs(c).numerator) if abs(c).denominator == 1 else "%d/%d" % (abs(c).numerator, abs(c).denominator)
            if i == 0:
                body = mag
            else:
                om = "om" if i == 1 else "om^%d" % i
                body = om if abs(c) == 1 else "%s*%s" % (mag, om)
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "+", "0"
        if len(parts) == 1:
            return parts[0]
        text = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sgn, body in parts[1:]:
            text += " %s %s" % (sgn, body)
        return "+", "(%s)" % text

    def _poly_str(self, poly) -> str:
        terms = sorted(poly.terms(), key=lambda t: self._term_key(t[0]), reverse=True)
        if not terms:
            return "0"
        rendered = []
        for monom, coeff in terms:
            sign, cs = self._coeff_str(coeff)
            factors = []
            for name, e in zip(self.ctx.names, monom):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            else:
                body = "*".join([cs] + factors)
            rendered.append((sign, body))
        text = rendered[0][1] if rendered[0][0] == "+" else "-" + rendered[0][1]
        for sign, body in rendered[1:]:
            text += " %s %s" % (sign, body)
        return text

    def to_string(self) -> str:
        """Canonical form ``(numerator)/(denominator)``, denominator monic."""
        num, den = self.rep.numer, self.rep.denom
        if den != self.ctx.field.ring.one and not num == self.ctx.field.ring.zero:
            terms = sorted(den.terms(), key=lambda t: self._term_key(t[0]), reverse=True)
            lead = terms[0][1]
            if lead != self.ctx.domain.one:
                inv = self.ctx.domain.quo(self.ctx.domain.one, lead)
                num = num.mul_ground(inv)
                den = den.mul_ground(inv)
        return "(%s)/(%s)" % (self._poly_str(num), self._poly_str(den))

    def __repr__(self):
        return "Scalar[%s]" % self.to_string()

    # -- evaluation and morphisms -------------------------------------------

    def _coeff_complex(self, coeff) -> complex:
        if self.ctx.domain is QQ:
            return complex(Fraction(int(coeff.numerator), int(coeff.denominator)))
        import cmath

        w = cmath.exp(2j * cmath.pi / self.ctx.N)
        return sum(
            complex(Fraction(int(c.numerator), int(c.denominator))) * w**i
            for i, c in enumerate(_anp_list(coeff))
        )

    def eval_numeric(self, assign: dict[str, complex] | None = None) -> complex:
        """Evaluate at complex values of the variables (omega is fixed)."""
        assign = assign or {}
        values = [complex(assign.get(name, 0.0)) for name in self.ctx.names]

        def poly_val(poly):
            total = 0j
            for monom, coeff in poly.terms():
                term = self._coeff_complex(coeff)
                for val, e in zip(values, monom):
                    if e:
                        term *= val**e
                total += term
            return total

        den = poly_val(self.rep.denom)
        return poly_val(self.rep.numer) / den

    def map_to(self, dst: ScalarContext, images: dict[str, "Scalar"]) -> "Scalar":
        """Apply the field morphism sending each variable to ``images[name]``.

        Rational coefficients pass through; cyclotomic coefficients require
        the same root order on both sides.
        """

        def conv_coeff(coeff):
            if self.ctx.domain is QQ:
                return dst.scalar(Fraction(int(coeff.numerator), int(coeff.denominator)))
            if dst.N != self.ctx.N:
                raise ValueError("cyclotomic order mismatch in morphism")
            acc = dst.zero
            for i, c in enumerate(_anp_list(coeff)):
                acc = acc + dst.scalar(Fraction(int(c.numerator), int(c.denominator))) * dst.omega**i
            return acc

        def poly_map(poly):
            total = dst.zero
            for monom, coeff in poly.terms():
                term = conv_coeff(coeff)
                for name, e in zip(self.ctx.names, monom):
                    if e:
                        term = term * images[name] ** e
                total = total + term
            return total

        return poly_map(self.rep.numer) / poly_map(self.rep.denom)


class _Parser:
    """Recursive-descent parser for the canonical scalar syntax."""

    def __init__(self, ctx: ScalarContext, text: str):
        self.ctx = ctx
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str):
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("name", text[i:j]))
                i = j
            elif text[i : i + 2] == "**":
                tokens.append(("op", "^"))
                i += 2
            elif ch in "+-*/^()":
                tokens.append(("op", ch))
                i += 1
            else:
                raise ValueError("unexpected character %r" % ch)
        tokens.append(("end", None))
        return tokens

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Scalar:
        value = self._expr()
        if self._peek()[0] != "end":
            raise ValueError("trailing input at token %d" % self.pos)
        return value

    def _expr(self) -> Scalar:
        kind, val = self._peek()
        negate = False
        if (kind, val) == ("op", "-"):
            self._next()
            negate = True
        elif (kind, val) == ("op", "+"):
            self._next()
        total = self._term()
        if negate:
            total = -total
        while self._peek() == ("op", "+") or self._peek() == ("op", "-"):
            _, op = self._next()
            term = self._term()
            total = total + term if op == "+" else total - term
        return total

    def _term(self) -> Scalar:
        total = self._factor()
        while self._peek() == ("op", "*") or self._peek() == ("op", "/"):
            _, op = self._next()
            rhs = self._factor()
            total = total * rhs if op == "*" else total / rhs
        return total

    def _factor(self) -> Scalar:
        if self._peek() == ("op", "-"):
            self._next()
            return -self._factor()
        base = self._atom()
        if self._peek() == ("op", "^"):
            self._next()
            sign = 1
            if self._peek() == ("op", "-"):
                self._next()
                sign = -1
            kind, val = self._next()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            return base ** (sign * val)
        return base

    def _atom(self) -> Scalar:
        kind, val = self._next()
        if kind == "int":
            return self.ctx.scalar(val)
        if kind == "name":
            if val == "om":
                return self.ctx.omega
            if val in self.ctx.names:
                return self.ctx.gen(val)
            raise ValueError("unknown symbol %r" % val)
        if (kind, val) == ("op", "("):
            inner = self._expr()
            if self._next() != ("op", ")"):
                raise ValueError("missing closing parenthesis")
            return inner
        raise ValueError("unexpected token %r" % ((kind, val),))


@functools.lru_cache(maxsize=None)
def default_context(N: int = 1) -> ScalarContext:
    """Shared context with the full variable list."""
    return ScalarContext(N=N)
