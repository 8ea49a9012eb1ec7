"""The 2N-dimensional vector representation, as exact sparse matrices.

The module realizes the algebra at a = q^{-2} omega (omega a primitive
N-th root of unity) on C^2 (x) C^N.  The N-leg carries the cyclic shift
C and the diagonal D = diag(1, omega, ..., omega^{N-1}); the discrete
Fourier matrix P conjugates C into D.  Generator images keep u, v (and
the spectral twist y) symbolic, and every root vector has a closed-form
image which is verified against an independent matrix-level evaluation.
"""
from __future__ import annotations

from fractions import Fraction

from .freealg import MINUS, PLUS, FreeElem, Weight, qbracket, qint, word_weight
from .matrices import SparseMat, kron
from .scalars import Scalar, ScalarContext, default_context

GENERATORS = (
    "K0", "K0inv", "K1", "K1inv",
    "L0", "L0inv", "L1", "L1inv",
    "E0", "E1", "F0", "F1",
)


class RepConfig:
    """Parameters of the vector representation: the order N (which pins
    a = q^{-2} omega), the scalars u, v, and the spectral twist y."""

    def __init__(self, N: int, u: Scalar | None = None, v: Scalar | None = None,
                 y: Scalar | None = None, ctx: ScalarContext | None = None):
        if N < 1:
            raise ValueError("N must be a positive integer")
        self.N = N
        self.ctx = ctx if ctx is not None else default_context(N)
        if self.ctx.N != N:
            raise ValueError("scalar context has the wrong root-of-unity order")
        self.u = self.ctx.u if u is None else self.ctx.scalar(u)
        self.v = self.ctx.v if v is None else self.ctx.scalar(v)
        self.y = self.ctx.one if y is None else self.ctx.scalar(y)
        self.omega = self.ctx.omega
        # a = q^{-2} omega is forced in this realization
        self.a = self.ctx.q**-2 * self.omega

    @property
    def dim(self) -> int:
        return 2 * self.N

    def with_params(self, u=None, v=None, y=None) -> "RepConfig":
        return RepConfig(self.N,
                         self.u if u is None else u,
                         self.v if v is None else v,
                         self.y if y is None else y,
                         self.ctx)

    def chi(self, lam: Weight, mu: Weight) -> Scalar:
        """The bicharacter twist with a pinned to q^{-2} omega."""
        q, a = self.ctx.q, self.a
        m = ((q**2, a), (a**-1 * q**-4, q**2))
        return (m[0][0] ** (lam.x * mu.x) * m[0][1] ** (lam.x * mu.y)
                * m[1][0] ** (lam.y * mu.x) * m[1][1] ** (lam.y * mu.y))

    def __repr__(self):
        return "RepConfig(N=%d)" % self.N


# -- the N-leg matrices ----------------------------------------------------


def cyclic_shift(cfg: RepConfig) -> SparseMat:
    """C: e_{t+1} -> e_t cyclically (ones on the superdiagonal and at (N-1, 0))."""
    one, N = cfg.ctx.one, cfg.N
    entries = [(t, t + 1, one) for t in range(N - 1)] + [(N - 1, 0, one)]
    return SparseMat.from_entries(N, N, entries)


def omega_diag(cfg: RepConfig, power: int = 1) -> SparseMat:
    """D^power = diag(omega^{power*t})."""
    return SparseMat.diagonal(cfg.ctx.omega_power(power * t) for t in range(cfg.N))


def fourier(cfg: RepConfig) -> SparseMat:
    """P with P[s, t] = omega^{st}; satisfies P^{-1} C P = D."""
    N = cfg.N
    return SparseMat.from_entries(
        N, N, ((s, t, cfg.ctx.omega_power(s * t)) for s in range(N) for t in range(N)))


def fourier_inverse(cfg: RepConfig) -> SparseMat:
    N = cfg.N
    inv_n = cfg.ctx.scalar(Fraction(1, N))
    return SparseMat.from_entries(
        N, N, ((s, t, inv_n * cfg.ctx.omega_power(-s * t)) for s in range(N) for t in range(N)))


def cyclic_power(cfg: RepConfig, n: int) -> SparseMat:
    """C^n for any integer n (C^{-1} = C^{N-1})."""
    one, N = cfg.ctx.one, cfg.N
    n %= N
    return SparseMat.from_entries(N, N, ((t, (t + n) % N, one) for t in range(N)))


def _e2(cfg: RepConfig, i: int, j: int) -> SparseMat:
    return SparseMat.unit(2, 2, i, j, cfg.ctx.one)


def _diag2(cfg: RepConfig, top: Scalar, bottom: Scalar) -> SparseMat:
    return SparseMat.diagonal([top, bottom])


# -- generator images --------------------------------------------------------


def rho(g: str, cfg: RepConfig) -> SparseMat:
    """Image of a generator (the spectral twist y scales E0 and 1/y scales F0)."""
    ctx = cfg.ctx
    q, u, v, w = ctx.q, cfg.u, cfg.v, cfg.omega
    if g == "K1":
        return _diag2(cfg, u * q**2, u).kron(omega_diag(cfg))
    if g == "L1":
        return _diag2(cfg, u, u * q**2).kron(omega_diag(cfg))
    if g == "K0":
        return _diag2(cfg, v * w, v * q**2).kron(omega_diag(cfg, -1))
    if g == "L0":
        return _diag2(cfg, v * w * q**2, v).kron(omega_diag(cfg, -1))
    if g in ("K1inv", "L1inv", "K0inv", "L0inv"):
        base = rho(g[:2], cfg)
        return base.map_entries(lambda c: 1 / c)
    if g == "E1":
        return _e2(cfg, 0, 1).kron(omega_diag(cfg)).scaled(-u * (q**2 - 1))
    if g == "F1":
        return _e2(cfg, 1, 0).kron(SparseMat.identity(cfg.N, ctx.one))
    if g == "E0":
        mat = _e2(cfg, 1, 0).kron(omega_diag(cfg, -1) * cyclic_shift(cfg))
        return mat.scaled(-cfg.y * v * (q**2 - 1))
    if g == "F0":
        return _e2(cfg, 0, 1).kron(cyclic_power(cfg, -1)).scaled(1 / cfg.y)
    raise ValueError("unknown generator %r" % (g,))


def cartan_image(cfg: RepConfig, k0: int, k1: int, l0: int, l1: int) -> SparseMat:
    """rho(K_0^{k0} K_1^{k1} L_0^{l0} L_1^{l1}) for arbitrary integer exponents."""
    ctx = cfg.ctx
    q, u, v, w = ctx.q, cfg.u, cfg.v, cfg.omega
    # all four generators are diagonal in the same basis
    scale = u ** (k1 + l1) * v ** (k0 + l0)
    top = scale * q ** (2 * (k1 + l0)) * w ** (k0 + l0)
    bottom = scale * q ** (2 * (k0 + l1))
    dpow = k1 + l1 - k0 - l0
    return _diag2(cfg, top, bottom).kron(omega_diag(cfg, dpow))


# -- homomorphic evaluation ---------------------------------------------------


def scalar_of_coeff(coeff, ctx: ScalarContext) -> Scalar:
    """Convert a lazy Laurent fraction in (s, a) into a Scalar with
    a evaluated at q^{-2} omega."""
    s = ctx.gen("s")
    a_img = s**-4 * ctx.omega

    def convert(l2):
        acc = ctx.zero
        for (es, ea), c in l2.d.items():
            frac = ctx.scalar(Fraction(int(c.numerator), int(c.denominator)))
            acc = acc + frac * s**es * a_img**ea
        return acc

    return convert(coeff.num) / convert(coeff.den)


def _word_image(cfg: RepConfig, side: int, word: tuple[int, ...]) -> SparseMat:
    letters = ("E0", "E1") if side == PLUS else ("F0", "F1")
    result = SparseMat.identity(cfg.dim, cfg.ctx.one)
    for i in word:
        result = result * rho(letters[i], cfg)
    return result


def rho_eval(e, cfg: RepConfig) -> SparseMat:
    """Homomorphic extension of rho to free-half elements and to
    triangular elements (F-word, Cartan monomial, E-word)."""
    ctx = cfg.ctx
    zero = SparseMat(cfg.dim, cfg.dim)
    if isinstance(e, FreeElem):
        acc = zero
        for word, coeff in e.terms.items():
            c = scalar_of_coeff(coeff, ctx)
            acc = acc + _word_image(cfg, e.side, word).scaled(c)
        return acc
    terms = getattr(e, "terms", None)
    if terms is None:
        raise TypeError("cannot evaluate %r in the representation" % (e,))
    acc = zero
    for (fword, cart, eword), coeff in terms.items():
        c = scalar_of_coeff(coeff, ctx)
        mat = _word_image(cfg, MINUS, fword) * cartan_image(cfg, *cart) * _word_image(cfg, PLUS, eword)
        acc = acc + mat.scaled(c)
    return acc


# -- root vector images via the bracket recursion ------------------------------


def _mat_bracket(cfg: RepConfig, side: int, x: SparseMat, wx: Weight,
                 y: SparseMat, wy: Weight) -> SparseMat:
    twist = cfg.chi(wx, wy) if side == PLUS else cfg.chi(wy, wx)
    return x * y - (y * x).scaled(twist)


def root_image(side: int, kind: str, n: int, cfg: RepConfig) -> SparseMat:
    """rho of a root vector, computed by running the defining bracket
    recursion directly on generator images (independent of the free-
    algebra expansion and of the closed forms)."""
    if n < 0 or (kind in ("imaginary", "tilde") and n < 1):
        raise ValueError("invalid root vector index (%s, %d)" % (kind, n))
    q = cfg.ctx.q
    two = qint(cfg.ctx, 2)
    delta = Weight(1, 1)
    sign = 1 if side == PLUS else -1

    def wt(kind, n):
        base = {"real1": Weight(n, n + 1), "real0": Weight(n + 1, n),
                "imaginary": Weight(n, n), "tilde": Weight(n, n)}[kind]
        return Weight(sign * base.x, sign * base.y)

    def rec(kind, n):
        if kind == "real1":
            if n == 0:
                return rho("E1" if side == PLUS else "F1", cfg)
            return _mat_bracket(cfg, side, rec("imaginary", 1), wt("imaginary", 1),
                                rec("real1", n - 1), wt("real1", n - 1)).scaled(1 / two)
        if kind == "real0":
            if n == 0:
                return rho("E0" if side == PLUS else "F0", cfg)
            return _mat_bracket(cfg, side, rec("real0", n - 1), wt("real0", n - 1),
                                rec("imaginary", 1), wt("imaginary", 1)).scaled(1 / two)
        if kind == "imaginary":
            return _mat_bracket(cfg, side, rec("real0", 0), wt("real0", 0),
                                rec("real1", n - 1), wt("real1", n - 1))
        raise ValueError(kind)

    if kind != "tilde":
        return rec(kind, n)
    # the logarithmic modification solves a triangular recursion in the
    # plain imaginary vectors; run it at the matrix level
    a = cfg.a if side == PLUS else cfg.a**-1 * q**-4
    base = q**2 * a
    qq = q - q**-1
    imag = {m: rec("imaginary", m) for m in range(1, n + 1)}
    tilde: dict[int, SparseMat] = {}
    for k in range(1, n + 1):
        acc = imag[k].scaled(base ** (-(k - 1)))
        for r in range(1, k):
            coeff = qq * base ** (-(k - r - 1)) * cfg.ctx.scalar(Fraction(r, k))
            acc = acc - (tilde[r] * imag[k - r]).scaled(coeff)
        tilde[k] = acc
    return tilde[n]


# -- closed-form images ---------------------------------------------------------


CLOSED_FORM_KINDS = ("Ereal1", "Ereal0", "Eimag", "EimagTilde",
                     "Freal1", "Freal0", "Fimag", "FimagTilde")


def closed_form_image(kind: str, n: int, cfg: RepConfig) -> SparseMat:
    """The displayed closed form of a root vector image."""
    ctx = cfg.ctx
    q, u, v = ctx.q, cfg.u, cfg.v
    w = lambda k: ctx.omega_power(k)
    sgn = lambda m: ctx.scalar((-1) ** m)
    if kind in ("Eimag", "EimagTilde", "Fimag", "FimagTilde") and n < 1:
        raise ValueError("imaginary closed forms start at n = 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "Ereal1":
        coeff = sgn(n + 1) * w(2 * n) * u ** (n + 1) * v**n * (q**2 - 1) ** (2 * n + 1) / q**n
        return _e2(cfg, 0, 1).kron(omega_diag(cfg) * cyclic_power(cfg, n)).scaled(coeff)
    if kind == "Ereal0":
        coeff = sgn(n + 1) * w(n) * u**n * v ** (n + 1) * (q**2 - 1) ** (2 * n + 1) / q**n
        return _e2(cfg, 1, 0).kron(omega_diag(cfg, -1) * cyclic_power(cfg, n + 1)).scaled(coeff)
    if kind == "Eimag":
        coeff = sgn(n) * w(2 * n - 1) * u**n * v**n * (q**2 - 1) ** (2 * n) / q ** (n + 1)
        return _diag2(cfg, ctx.one, -(q**2)).kron(cyclic_power(cfg, n)).scaled(coeff)
    if kind == "EimagTilde":
        coeff = (sgn(n) * w(n) * u**n * v**n * (q**2 - 1) ** (2 * n - 1)
                 * (q ** (2 * n) - 1) / q ** (n - 1) * ctx.scalar(Fraction(1, n)))
        return _diag2(cfg, q ** (-2 * n), -ctx.one).kron(cyclic_power(cfg, n)).scaled(coeff)
    if kind == "Freal1":
        coeff = sgn(n) * w(-n) / q**n
        return _e2(cfg, 1, 0).kron(cyclic_power(cfg, -n)).scaled(coeff)
    if kind == "Freal0":
        coeff = sgn(n) * w(-n) / q**n
        return _e2(cfg, 0, 1).kron(cyclic_power(cfg, -(n + 1))).scaled(coeff)
    if kind == "Fimag":
        coeff = sgn(n - 1) * w(-n + 1) / q ** (n + 1)
        return _diag2(cfg, q**2, -w(-n)).kron(cyclic_power(cfg, -n)).scaled(coeff)
    if kind == "FimagTilde":
        coeff = (sgn(n - 1) * (q ** (2 * n) - 1) / (q ** (n - 1) * (q**2 - 1))
                 * ctx.scalar(Fraction(1, n)))
        return _diag2(cfg, ctx.one, -w(-n) * q ** (-2 * n)).kron(cyclic_power(cfg, -n)).scaled(coeff)
    raise ValueError("unknown closed form kind %r" % (kind,))


_KIND_MAP = {
    "Ereal1": (PLUS, "real1"), "Ereal0": (PLUS, "real0"),
    "Eimag": (PLUS, "imaginary"), "EimagTilde": (PLUS, "tilde"),
    "Freal1": (MINUS, "real1"), "Freal0": (MINUS, "real0"),
    "Fimag": (MINUS, "imaginary"), "FimagTilde": (MINUS, "tilde"),
}


# -- verification ----------------------------------------------------------------


def _check(report: list, name: str, params: str, lhs: SparseMat, rhs: SparseMat):
    residual = lhs - rhs
    report.append((name, params, residual.is_zero(), residual))


def defining_relation_checks(cfg: RepConfig) -> list:
    """All defining relations of the algebra transported through rho."""
    ctx = cfg.ctx
    q = ctx.q
    a = cfg.a
    qmat = ((q**2, a), (a**-1 * q**-4, q**2))
    report: list = []
    carts = ["K0", "K1", "L0", "L1"]
    images = {g: rho(g, cfg) for g in GENERATORS}
    ident = SparseMat.identity(cfg.dim, ctx.one)
    zero = SparseMat(cfg.dim, cfg.dim)
    for g in carts:
        _check(report, "cartan-inverse", g, images[g] * images[g + "inv"], ident)
    for g1 in carts:
        for g2 in carts:
            _check(report, "cartan-commute", "%s,%s" % (g1, g2),
                   images[g1] * images[g2], images[g2] * images[g1])
    for i in (0, 1):
        for j in (0, 1):
            Ki, Li = images["K%d" % i], images["L%d" % i]
            Ej, Fj = images["E%d" % j], images["F%d" % j]
            _check(report, "K-E-twist", "i=%d,j=%d" % (i, j),
                   Ki * Ej, (Ej * Ki).scaled(qmat[i][j]))
            _check(report, "K-F-twist", "i=%d,j=%d" % (i, j),
                   Ki * Fj, (Fj * Ki).scaled(1 / qmat[i][j]))
            _check(report, "L-E-twist", "i=%d,j=%d" % (i, j),
                   Li * Ej, (Ej * Li).scaled(1 / qmat[j][i]))
            _check(report, "L-F-twist", "i=%d,j=%d" % (i, j),
                   Li * Fj, (Fj * Li).scaled(qmat[j][i]))
            rhs = (-images["K%d" % i] + images["L%d" % i]) if i == j else zero
            _check(report, "E-F-commutator", "i=%d,j=%d" % (i, j),
                   images["E%d" % i] * Fj - Fj * images["E%d" % i], rhs)
    three = 1 + q**2 + q**4
    for i in (0, 1):
        j = 1 - i
        for letter, tij in (("E", qmat[i][j]), ("F", qmat[j][i])):
            Xi, Xj = images["%s%d" % (letter, i)], images["%s%d" % (letter, j)]
            serre = (Xi**3 * Xj - (Xi**2 * Xj * Xi).scaled(tij * three)
                     + (Xi * Xj * Xi**2).scaled(q**2 * tij**2 * three)
                     - (Xj * Xi**3).scaled(q**6 * tij**3))
            _check(report, "serre", "%s,i=%d" % (letter, i), serre, zero)
    return report


def closed_form_checks(cfg: RepConfig, max_n: int | None = None) -> list:
    """Closed forms against the independent bracket-recursion evaluation."""
    if max_n is None:
        max_n = 2 * cfg.N
    report: list = []
    for kind in CLOSED_FORM_KINDS:
        side, rkind = _KIND_MAP[kind]
        start = 1 if rkind in ("imaginary", "tilde") else 0
        for n in range(start, max_n + 1):
            _check(report, "closed-form-%s" % kind, "n=%d" % n,
                   root_image(side, rkind, n, cfg), closed_form_image(kind, n, cfg))
    return report


def structural_checks(cfg: RepConfig) -> list:
    """The displayed matrix identities on the N-leg and the grading."""
    ctx = cfg.ctx
    report: list = []
    P, Pinv = fourier(cfg), fourier_inverse(cfg)
    C, D = cyclic_shift(cfg), omega_diag(cfg)
    ident = SparseMat.identity(cfg.N, ctx.one)
    _check(report, "dft-inverse", "N=%d" % cfg.N, P * Pinv, ident)
    _check(report, "dft-diagonalizes-shift", "N=%d" % cfg.N, Pinv * C * P, D)
    _check(report, "shift-diag-braid", "N=%d" % cfg.N, (D * C).scaled(ctx.omega), C * D)
    # conjugation by rho(K_i) scales a weight-mu element by chi(alpha_i, mu)
    samples = [(PLUS, "real1", 1, Weight(1, 2)), (PLUS, "imaginary", 1, Weight(1, 1)),
               (MINUS, "real0", 1, Weight(-2, -1))]
    for side, rkind, n, mu in samples:
        X = root_image(side, rkind, n, cfg)
        for i in (0, 1):
            K, Kinv = rho("K%d" % i, cfg), rho("K%dinv" % i, cfg)
            lam = Weight(1 - i, i)
            _check(report, "grading", "%s%d,K%d" % (rkind, n, i),
                   K * X * Kinv, X.scaled(cfg.chi(lam, mu)))
    return report


def verify_rep(cfg: RepConfig, max_n: int | None = None) -> list:
    """Run every representation check; returns (name, params, ok, residual) rows."""
    report = defining_relation_checks(cfg)
    report.extend(structural_checks(cfg))
    report.extend(closed_form_checks(cfg, max_n))
    return report


def rep_report_ok(report: list) -> bool:
    return all(ok for _, _, ok, _ in report)
