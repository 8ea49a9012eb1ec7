"""Free halves of the algebra: graded words in E_0, E_1 (or F_0, F_1).

Elements are linear combinations of words over the two-letter alphabet
{0, 1}, graded by letter counts over Z*alpha_0 + Z*alpha_1, modulo the
cubic (Serre) relations

    X_i^3 X_j = t_ij (3)_{q^2} X_i^2 X_j X_i
              - q^2 t_ij^2 (3)_{q^2} X_i X_j X_i^2
              + q^6 t_ij^3 X_j X_i^3          (i != j),

with t_ij = q_ij on the plus side and t_ij = q_ji on the minus side.

Two mechanisms cooperate:

* a terminating rewriting system keeps stored words short.  Under the
  degree-then-leftmost-letter order with letter 0 ranked above letter 1,
  the true leading words of the two relations are 0001 and 0111, and
  rewriting those strictly decreases every word.  (Orienting *both*
  relations at X_i^3 X_j admits no compatible word order: the two rules
  then shift the minority letter in opposite directions and reduction
  cycles; see the tests for an explicit length-8 cycle.)

* equality and zero tests go through the quantum shuffle model.  Each
  word maps to its twisted-shuffle product of letters; the map is an
  algebra homomorphism onto the sub-bialgebra generated by the letters,
  and over the transcendental field Q(s, a) its kernel is exactly the
  ideal of the cubic relations.  Rewriting alone could not decide
  equality: the two-rule system is not confluent (irreducible words
  outnumber the graded dimension from weight (3,3) on), and completing
  it would require infinitely many rules.

On top of this the module provides the twisted brackets, the root
vectors E_{n*delta+alpha_i} and E_{n*delta} (F analogues use
abar = a^{-1} q^{-4}), their logarithmic modifications, and a verifier
for the bracket identities EQ1-EQ10 / FQ1-FQ10.
"""
from __future__ import annotations

import functools
from typing import NamedTuple

from .fastscalar import LaurentContext
from .scalars import Scalar, ScalarContext

PLUS, MINUS = +1, -1


class Weight(NamedTuple):
    """An element x*alpha_0 + y*alpha_1 of the root lattice."""

    x: int
    y: int

    def __add__(self, other):
        return Weight(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Weight(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Weight(-self.x, -self.y)

    def scale(self, k: int) -> "Weight":
        return Weight(k * self.x, k * self.y)

    @property
    def height(self) -> int:
        return self.x + self.y


ALPHA0 = Weight(1, 0)
ALPHA1 = Weight(0, 1)
DELTA = Weight(1, 1)


def alpha(i: int) -> Weight:
    return ALPHA0 if i == 0 else ALPHA1


class Bicharacter:
    """chi on the root lattice, determined by chi(alpha_i, alpha_j) = q_ij."""

    def __init__(self, ctx: ScalarContext):
        self.ctx = ctx
        q = ctx.q
        a = ctx.a
        self.q_matrix = ((q**2, a), (a**-1 * q**-4, q**2))
        self._cache: dict[tuple[Weight, Weight], Scalar] = {}

    def q_ij(self, i: int, j: int) -> Scalar:
        return self.q_matrix[i][j]

    def chi(self, lam: Weight, mu: Weight) -> Scalar:
        key = (lam, mu)
        val = self._cache.get(key)
        if val is None:
            m = self.q_matrix
            val = (
                m[0][0] ** (lam.x * mu.x)
                * m[0][1] ** (lam.x * mu.y)
                * m[1][0] ** (lam.y * mu.x)
                * m[1][1] ** (lam.y * mu.y)
            )
            self._cache[key] = val
        return val


def word_weight(word: tuple[int, ...]) -> Weight:
    n1 = sum(word)
    return Weight(len(word) - n1, n1)


def qint(ctx: ScalarContext, n: int) -> Scalar:
    """[n]_q = (q^n - q^{-n}) / (q - q^{-1})."""
    q = ctx.q
    return (q**n - q**-n) / (q - q**-1)


_LEADS = ((0, 0, 0, 1), (0, 1, 1, 1))


class FreeAlgebra:
    """Rewriting and shuffle context shared over one scalar field."""

    def __init__(self, ctx: ScalarContext):
        self.ctx = ctx
        self.bichar = Bicharacter(ctx)
        q = ctx.q
        three = 1 + q**2 + q**4
        self._rules: dict[tuple[int, tuple[int, ...]], tuple] = {}
        for side in (PLUS, MINUS):
            t01 = self.bichar.q_ij(0, 1) if side == PLUS else self.bichar.q_ij(1, 0)
            t10 = self.bichar.q_ij(1, 0) if side == PLUS else self.bichar.q_ij(0, 1)
            self._rules[(side, (0, 0, 0, 1))] = (
                ((0, 0, 1, 0), t01 * three),
                ((0, 1, 0, 0), -(q**2) * t01**2 * three),
                ((1, 0, 0, 0), q**6 * t01**3),
            )
            # the relation with i=1, j=0, solved for its leading word 0111
            self._rules[(side, (0, 1, 1, 1))] = (
                ((1, 1, 1, 0), q**-6 * t10**-3),
                ((1, 1, 0, 1), -(q**-6) * t10**-2 * three),
                ((1, 0, 1, 1), q**-4 * t10**-1 * three),
            )
        self._nf_cache: dict[tuple[int, tuple[int, ...]], dict] = {}
        self._img_cache: dict[tuple[int, tuple[int, ...]], dict] = {
            (PLUS, ()): {(): ctx.one},
            (MINUS, ()): {(): ctx.one},
        }
        self._root_cache: dict = {}
        self._tilde_cache: dict = {}

    # -- rewriting -----------------------------------------------------------

    @staticmethod
    def _find_redex(word: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
        for k in range(len(word) - 3):
            quad = word[k : k + 4]
            if quad in _LEADS:
                return k, quad
        return None

    def normal_form_word(self, side: int, word: tuple[int, ...]) -> dict[tuple[int, ...], Scalar]:
        """Rewrite a word until no leading factor remains (memoized)."""
        cache = self._nf_cache
        stack = [word]
        while stack:
            w = stack[-1]
            key = (side, w)
            if key in cache:
                stack.pop()
                continue
            redex = self._find_redex(w)
            if redex is None:
                cache[key] = {w: self.ctx.one}
                stack.pop()
                continue
            k, quad = redex
            pre, post = w[:k], w[k + 4 :]
            parts = [(pre + body + post, coeff) for body, coeff in self._rules[(side, quad)]]
            missing = [p for p, _ in parts if (side, p) not in cache]
            if missing:
                stack.extend(missing)
                continue
            result: dict[tuple[int, ...], Scalar] = {}
            for part, coeff in parts:
                for ww, c in cache[(side, part)].items():
                    acc = result.get(ww)
                    acc = coeff * c if acc is None else acc + coeff * c
                    if acc.is_zero():
                        result.pop(ww, None)
                    else:
                        result[ww] = acc
            cache[key] = result
            stack.pop()
        return cache[(side, word)]

    # -- shuffle model ---------------------------------------------------------

    def _tau(self, side: int, y: int, l: int) -> Scalar:
        # factor for a right-hand letter y jumping over a left-hand letter l
        return self.bichar.q_ij(l, y) if side == PLUS else self.bichar.q_ij(y, l)

    def shuffle_image(self, side: int, word: tuple[int, ...]) -> dict[tuple[int, ...], Scalar]:
        """Image of a word in the twisted shuffle model (memoized)."""
        key = (side, word)
        cached = self._img_cache.get(key)
        if cached is not None:
            return cached
        base = self.shuffle_image(side, word[:-1])
        y = word[-1]
        tau0 = self._tau(side, y, 0)
        tau1 = self._tau(side, y, 1)
        result: dict[tuple[int, ...], Scalar] = {}
        for t, c in base.items():
            # insert y at every position; crossing factor over the skipped suffix
            factor = c
            for pos in range(len(t), -1, -1):
                w = t[:pos] + (y,) + t[pos:]
                acc = result.get(w)
                acc = factor if acc is None else acc + factor
                if acc.is_zero():
                    result.pop(w, None)
                else:
                    result[w] = acc
                if pos:
                    factor = factor * (tau1 if t[pos - 1] else tau0)
        self._img_cache[key] = result
        return result

    def is_zero_terms(self, side: int, terms: dict[tuple[int, ...], Scalar]) -> bool:
        if not terms:
            return True
        # accumulate numerators grouped by coefficient denominator; mixing
        # denominators inside the running sums would cross-multiply the
        # (large) accumulated polynomials on every addition
        if len({c.den for c in terms.values()}) > 1:
            # unreduced denominators proliferate (products of products);
            # putting the input coefficients in lowest terms collapses
            # most groups and keeps the cross-multiplications small
            terms = {w: c.reduced() for w, c in terms.items()}
        groups = self._image_groups(side, terms)
        if len(groups) == 1:
            return not next(iter(groups.values()))
        words = set()
        for bucket in groups.values():
            words.update(bucket)
        for w in words:
            num = den = None
            for d, bucket in groups.items():
                c = bucket.get(w)
                if c is None:
                    continue
                if num is None:
                    num, den = c, d
                else:
                    num, den = num * d + c * den, den * d
            if not num.is_zero():
                return False
        return True

    def _image_groups(self, side: int, terms: dict) -> dict:
        groups: dict = {}
        for word, coeff in terms.items():
            num, den = coeff.num, coeff.den
            bucket = groups.get(den)
            if bucket is None:
                bucket = groups[den] = {}
            for w, c in self.shuffle_image(side, word).items():
                contrib = num * c.num
                acc = bucket.get(w)
                acc = contrib if acc is None else acc + contrib
                if acc.is_zero():
                    bucket.pop(w, None)
                else:
                    bucket[w] = acc
        return groups

    # -- constructors ----------------------------------------------------------

    def elem(self, side: int, terms: dict[tuple[int, ...], Scalar] | None = None) -> "FreeElem":
        return FreeElem(self, side, terms or {})

    def generator(self, side: int, i: int) -> "FreeElem":
        return self.elem(side, {(i,): self.ctx.one})

    def unit(self, side: int) -> "FreeElem":
        return self.elem(side, {(): self.ctx.one})

    # -- root vectors ------------------------------------------------------------

    def root_vector(self, side: int, kind: str, n: int) -> "FreeElem":
        """Root vectors: kind is ``real1`` (n*delta+alpha_1), ``real0``
        (n*delta+alpha_0) or ``imaginary`` (n*delta, n >= 1)."""
        key = (side, kind, n)
        cached = self._root_cache.get(key)
        if cached is not None:
            return cached
        if n < 0 or (kind == "imaginary" and n < 1):
            raise ValueError("invalid root vector index (%s, %d)" % (kind, n))
        two = qint(self.ctx, 2)
        if kind == "real1":
            if n == 0:
                result = self.generator(side, 1)
            else:
                result = qbracket(
                    self.root_vector(side, "imaginary", 1),
                    self.root_vector(side, "real1", n - 1),
                ).scaled(1 / two)
        elif kind == "real0":
            if n == 0:
                result = self.generator(side, 0)
            else:
                result = qbracket(
                    self.root_vector(side, "real0", n - 1),
                    self.root_vector(side, "imaginary", 1),
                ).scaled(1 / two)
        elif kind == "imaginary":
            result = qbracket(
                self.generator(side, 0),
                self.root_vector(side, "real1", n - 1),
            )
        else:
            raise ValueError("unknown root vector kind %r" % kind)
        self._root_cache[key] = result
        return result

    def tilde_root(self, side: int, k: int) -> "FreeElem":
        """Logarithmic imaginary root vector, solved from the triangular
        recursion k*tilde_k = (q^2 a)^{-(k-1)} k E_{k delta} - (q-q^{-1})
        sum_r r (q^2 a)^{-(k-r-1)} tilde_r E_{(k-r) delta} (abar on the
        minus side)."""
        if k < 1:
            raise ValueError("tilde root vectors start at k=1")
        key = (side, k)
        cached = self._tilde_cache.get(key)
        if cached is not None:
            return cached
        q, a = self.ctx.q, self.ctx.a
        base = q**2 * a if side == PLUS else q**2 * (a**-1 * q**-4)
        acc = self.root_vector(side, "imaginary", k).scaled(base ** (-(k - 1)))
        qq = q - q**-1
        for r in range(1, k):
            prod = self.tilde_root(side, r) * self.root_vector(side, "imaginary", k - r)
            acc = acc - prod.scaled(qq * base ** (-(k - r - 1)) * self.ctx.scalar(r) / self.ctx.scalar(k))
        self._tilde_cache[key] = acc
        return acc

    def dotted_tilde_root(self, k: int) -> "FreeElem":
        """Fdot_{k delta} = q^{2k} (q - q^{-1})^{-(2k-1)} Ftilde_{k delta}."""
        q = self.ctx.q
        return self.tilde_root(MINUS, k).scaled(q ** (2 * k) / (q - q**-1) ** (2 * k - 1))

    def dotted_imaginary_root(self, k: int) -> "FreeElem":
        """The real-normalized q^{6k-3} a^{k-1} (q^2-1)^{-(2k-1)} F_{k delta}."""
        q, a = self.ctx.q, self.ctx.a
        return self.root_vector(MINUS, "imaginary", k).scaled(
            q ** (6 * k - 3) * a ** (k - 1) / (q**2 - 1) ** (2 * k - 1)
        )


class FreeElem:
    """A linear combination of rewriting-reduced words on one side."""

    __slots__ = ("alg", "side", "terms")

    def __init__(self, alg: FreeAlgebra, side: int, terms: dict[tuple[int, ...], Scalar]):
        self.alg = alg
        self.side = side
        self.terms = terms

    # -- structure ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.alg.is_zero_terms(self.side, self.terms)

    def weight(self) -> Weight:
        """Letter-count weight; the minus side carries minus this weight."""
        if not self.terms:
            raise ValueError("the zero element has no weight")
        weights = {word_weight(w) for w in self.terms}
        if len(weights) != 1:
            raise ValueError("element is not homogeneous")
        return weights.pop()

    def _check_compatible(self, other: "FreeElem"):
        if self.alg is not other.alg or self.side != other.side:
            raise ValueError("elements from different algebras or sides")

    # -- linear operations ----------------------------------------------------------

    def __add__(self, other: "FreeElem") -> "FreeElem":
        self._check_compatible(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = acc
        return FreeElem(self.alg, self.side, terms)

    def __neg__(self) -> "FreeElem":
        return FreeElem(self.alg, self.side, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeElem") -> "FreeElem":
        return self + (-other)

    def scaled(self, c) -> "FreeElem":
        c = self.alg.ctx.scalar(c)
        if c.is_zero():
            return FreeElem(self.alg, self.side, {})
        return FreeElem(self.alg, self.side, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: "FreeElem") -> "FreeElem":
        self._check_compatible(other)
        result: dict[tuple[int, ...], Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c12 = c1 * c2
                for w, c in self.alg.normal_form_word(self.side, w1 + w2).items():
                    acc = result.get(w)
                    acc = c12 * c if acc is None else acc + c12 * c
                    if acc.is_zero():
                        result.pop(w, None)
                    else:
                        result[w] = acc
        return FreeElem(self.alg, self.side, result)

    def __eq__(self, other):
        if not isinstance(other, FreeElem):
            return NotImplemented
        if self.side != other.side:
            return False
        if self.terms == other.terms:
            return True
        return (self - other).is_zero()

    def __str__(self):
        letter = "E" if self.side == PLUS else "F"
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            mono = ".".join("%s%d" % (letter, i) for i in w) or "1"
            parts.append("%s * %s" % (self.terms[w].to_string(), mono))
        return " + ".join(parts)

    __repr__ = __str__


def serre_normal_form(elem: FreeElem) -> FreeElem:
    """Re-reduce an element (identity on elements built by this module)."""
    result: dict[tuple[int, ...], Scalar] = {}
    for word, coeff in elem.terms.items():
        for w, c in elem.alg.normal_form_word(elem.side, word).items():
            acc = result.get(w)
            acc = coeff * c if acc is None else acc + coeff * c
            if acc.is_zero():
                result.pop(w, None)
            else:
                result[w] = acc
    return FreeElem(elem.alg, elem.side, result)


def qbracket(x: FreeElem, y: FreeElem, side: int | None = None) -> FreeElem:
    """Twisted commutator.

    Plus side:   [[X, Y]]  = XY - chi(wt X, wt Y) YX
    Minus side:  [[X, Y]]~ = XY - chi(wt Y, wt X) YX
    (on the minus side actual weights are the negated letter counts, so
    the twist is chi evaluated on the counts in reversed order).
    """
    x._check_compatible(y)
    if side is not None and side != x.side:
        raise ValueError("side marker does not match the elements")
    lam, mu = x.weight(), y.weight()
    chi = x.alg.bichar.chi
    twist = chi(lam, mu) if x.side == PLUS else chi(mu, lam)
    return x * y - (y * x).scaled(twist)


def apply_psi(elem: FreeElem) -> FreeElem:
    """The anti-isomorphism of the plus side swapping the two generators."""
    if elem.side != PLUS:
        raise ValueError("psi is defined on the positive side")
    terms = {}
    for word, coeff in elem.terms.items():
        flipped = tuple(1 - i for i in reversed(word))
        acc = terms.get(flipped)
        terms[flipped] = coeff if acc is None else acc + coeff
    return serre_normal_form(FreeElem(elem.alg, elem.side, terms))


@functools.lru_cache(maxsize=None)
def default_algebra(N: int = 1) -> FreeAlgebra:
    # coefficients live in Q(s, a) independently of the root-of-unity
    # order N; the parameter only keys separately cached instances
    return FreeAlgebra(LaurentContext())


# -- relation verification ----------------------------------------------------------


def verify_relation(name: str, alg: FreeAlgebra, **params) -> tuple[bool, FreeElem]:
    """Check one of the bracket identities EQ1..EQ10 / FQ1..FQ10.

    Returns (holds, residual); the residual is LHS - RHS, zero exactly
    when the identity holds.
    """
    side = PLUS if name.startswith("E") else MINUS
    num = name[2:]
    ctx = alg.ctx
    q, a = ctx.q, ctx.a
    if side == MINUS:
        a = a**-1 * q**-4
    two = qint(ctx, 2)
    rv = lambda kind, n: alg.root_vector(side, kind, n)

    if num == "1":
        n = params["n"]
        res = qbracket(rv("real1", n + 1), rv("real1", n))
    elif num == "2":
        n, r = params["n"], params["r"]
        res = qbracket(rv("real1", n + r), rv("real1", n)) + qbracket(
            rv("real1", n + 1), rv("real1", n + r - 1)
        ).scaled(a ** (r - 1) * q ** (2 * (r - 1)))
    elif num == "3":
        n = params["n"]
        res = qbracket(rv("real0", n), rv("real0", n + 1))
    elif num == "4":
        n, r = params["n"], params["r"]
        res = qbracket(rv("real0", n), rv("real0", n + r)) + qbracket(
            rv("real0", n + r - 1), rv("real0", n + 1)
        ).scaled(a ** (r - 1) * q ** (2 * (r - 1)))
    elif num == "5":
        n, r = params["n"], params["r"]
        res = qbracket(rv("imaginary", r), rv("real1", n)) - rv("real1", n + r).scaled(a ** (r - 1) * two)
        for k in range(1, r):
            res = res - (rv("imaginary", r - k) * rv("real1", n + k)).scaled(a**k * (q**4 - 1))
    elif num == "6":
        n, r = params["n"], params["r"]
        res = qbracket(rv("real0", n), rv("imaginary", r)) - rv("real0", n + r).scaled(a ** (r - 1) * two)
        for k in range(1, r):
            res = res - (rv("real0", n + k) * rv("imaginary", r - k)).scaled(a**k * (q**4 - 1))
    elif num == "7":
        x, y = params["x"], params["y"]
        res = qbracket(rv("imaginary", x), rv("imaginary", y))
    elif num == "8":
        x, y = params["x"], params["y"]
        res = qbracket(rv("real0", x), rv("real1", y)) - rv("imaginary", x + y + 1)
    elif num == "9":
        n, k = params["n"], params["k"]
        res = qbracket(alg.tilde_root(side, k), rv("real1", n)) - rv("real1", n + k).scaled(
            qint(ctx, 2 * k) / ctx.scalar(k)
        )
    elif num == "10":
        n, k = params["n"], params["k"]
        res = qbracket(rv("real0", n), alg.tilde_root(side, k)) - rv("real0", n + k).scaled(
            qint(ctx, 2 * k) / ctx.scalar(k)
        )
    else:
        raise ValueError("unknown relation %r" % name)
    return res.is_zero(), res
