"""Hyperelliptic models y^2 = f(x) over Q: places, divisors, Riemann-Roch.

Closed points (Galois orbits) on the affine part sit over monic irreducible
x-polynomials p and are classified by how y^2 = f behaves modulo p:

* Split: f is a nonzero square mod p; two places, residue y = +-q mod p,
  keyed by the lexicographically least of the two square roots.
* Ramified: p divides f; one place, y a uniformizer.
* Inert: f is a non-square unit mod p; one place of degree 2 deg p.

Models of even degree 2g+2 carry two rational places at infinity (the
leading coefficient must be a rational square, which all shipped fixtures
satisfy); odd-degree models carry a single ramified place.  Valuations at
infinity come from exact truncated expansions of y in t = 1/x for even
models and from a parity argument for odd ones.

Riemann-Roch spaces are cut out of the candidate span {x^i} + {x^j y} by
exact linear algebra on expansion coefficients (pole conditions at
infinity) and congruence conditions modulo powers of defining polynomials
(pole permissions at affine points).  Every returned basis element is
re-checked against its divisor conditions before the space is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import numfield
from .arith import (
    UniPoly,
    factor_over_Q,
    hensel_sqrt,
    poly_gcd,
    rational_sqrt,
    squarefree_part,
)
from .errors import (
    DegreeTooSmall,
    InfinitePlace,
    IrrationalInfinitePlaces,
    NotInLinearSeries,
    NotSquarefree,
    UnsupportedDivisorShape,
    ZeroFunction,
)
from .linalg import kernel_basis

ODD, EVEN = "odd", "even"
OO_PLUS, OO_MINUS, OO = "oo+", "oo-", "oo"


@dataclass(frozen=True)
class HyperCurve:
    f: UniPoly
    genus: int
    parity: str
    sqrt_lc: Fraction  # positive square root of lc(f) for even models, else lc

    @property
    def infinite_places(self):
        return (OO_PLUS, OO_MINUS) if self.parity == EVEN else (OO,)


def curve_new(f: UniPoly) -> HyperCurve:
    """Validate a model y^2 = f(x) and compute genus and infinite places."""
    if f.is_zero or f.degree < 5:
        raise DegreeTooSmall("need deg f >= 5 for a genus >= 2 model")
    if squarefree_part(f) != f.monic():
        raise NotSquarefree("model polynomial has repeated roots")
    n = f.degree
    genus = (n + 1) // 2 - 1
    parity = ODD if n % 2 else EVEN
    if parity == EVEN:
        s = rational_sqrt(f.lc)
        if s is None:
            raise IrrationalInfinitePlaces(
                "even-degree model needs a square leading coefficient"
            )
    else:
        s = f.lc
    return HyperCurve(f, genus, parity, s)


# ---------------------------------------------------------------------------
# Closed points and divisors

SPLIT, RAM, INERT = "split", "ram", "inert"
_BRANCH_RANK = {SPLIT: 0, RAM: 1, INERT: 2}


@dataclass(frozen=True)
class ClosedPoint:
    kind: str  # 'affine' | 'inf'
    p: UniPoly = None
    branch: str = None  # split | ram | inert
    q: UniPoly = None  # split branch residue, canonical representative
    place: str = None  # oo+ | oo- | oo

    @staticmethod
    def affine(p: UniPoly, branch: str, q: UniPoly = None) -> "ClosedPoint":
        return ClosedPoint("affine", p=p.monic(), branch=branch, q=q)

    @staticmethod
    def infinite(place: str) -> "ClosedPoint":
        return ClosedPoint("inf", place=place)

    @property
    def degree(self) -> int:
        if self.kind == "inf":
            return 1
        return 2 * self.p.degree if self.branch == INERT else self.p.degree

    def conjugate(self) -> "ClosedPoint":
        if self.kind == "inf":
            flip = {OO_PLUS: OO_MINUS, OO_MINUS: OO_PLUS, OO: OO}
            return ClosedPoint.infinite(flip[self.place])
        if self.branch != SPLIT:
            return self
        return ClosedPoint.affine(self.p, SPLIT, (-self.q) % self.p)

    def sort_key(self):
        if self.kind == "inf":
            return (1, 0, {OO_PLUS: 0, OO_MINUS: 1, OO: 2}[self.place], (), ())
        qkey = self.q.sort_key() if self.q is not None else ()
        return (0, self.p.degree, _BRANCH_RANK[self.branch], self.p.sort_key(), qkey)

    def literal(self) -> str:
        if self.kind == "inf":
            return self.place
        if self.branch == SPLIT:
            return f"({self.p.literal()}; split; {self.q.literal()})"
        return f"({self.p.literal()}; {self.branch})"


def canonical_sqrt_rep(q: UniPoly, p: UniPoly) -> UniPoly:
    """Deterministic representative among the two square roots +-q mod p."""
    q = q % p
    neg = (-q) % p
    return q if q.sort_key() <= neg.sort_key() else neg


@dataclass(frozen=True)
class Divisor:
    terms: tuple  # sorted tuple of (ClosedPoint, nonzero int)

    @staticmethod
    def make(pairs) -> "Divisor":
        acc = {}
        for pt, mult in pairs:
            if mult:
                acc[pt] = acc.get(pt, 0) + mult
        items = [(pt, m) for pt, m in acc.items() if m]
        items.sort(key=lambda im: im[0].sort_key())
        return Divisor(tuple(items))

    @staticmethod
    def zero() -> "Divisor":
        return Divisor(())

    def __add__(self, other):
        return Divisor.make(list(self.terms) + list(other.terms))

    def __neg__(self):
        return Divisor(tuple((pt, -m) for pt, m in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "Divisor":
        if k == 0:
            return Divisor.zero()
        return Divisor(tuple((pt, k * m) for pt, m in self.terms))

    @property
    def degree(self) -> int:
        return sum(m * pt.degree for pt, m in self.terms)

    @property
    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def multiplicity(self, pt: ClosedPoint) -> int:
        for cand, m in self.terms:
            if cand == pt:
                return m
        return 0

    def infinite_coefficient(self, place: str) -> int:
        return self.multiplicity(ClosedPoint.infinite(place))

    def affine_terms(self):
        return [(pt, m) for pt, m in self.terms if pt.kind == "affine"]

    def is_infinity_supported(self) -> bool:
        return all(pt.kind == "inf" for pt, _ in self.terms)

    def positive_part(self) -> "Divisor":
        return Divisor(tuple((pt, m) for pt, m in self.terms if m > 0))

    def negative_part(self) -> "Divisor":
        """The poles, as an effective divisor."""
        return Divisor(tuple((pt, -m) for pt, m in self.terms if m < 0))

    def literal(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{pt.literal()}" for pt, m in self.terms)


@dataclass(frozen=True)
class CurveFunction:
    """(u(x) + v(x)*y) / den(x) with den monic and gcd(u, v, den) = 1."""

    u: UniPoly
    v: UniPoly
    den: UniPoly

    @staticmethod
    def make(u: UniPoly, v: UniPoly, den: UniPoly = None) -> "CurveFunction":
        den = UniPoly.one() if den is None else den
        if den.is_zero:
            raise ZeroFunction("zero denominator")
        u = u.scale(1 / den.lc)
        v = v.scale(1 / den.lc)
        den = den.monic()
        g = poly_gcd(poly_gcd(u, v), den)
        if g.degree and g.degree > 0:
            u, v, den = u // g, v // g, den // g
        return CurveFunction(u, v, den)

    @staticmethod
    def constant(c) -> "CurveFunction":
        return CurveFunction.make(UniPoly.const(c), UniPoly.zero())

    @staticmethod
    def from_x_poly(p: UniPoly) -> "CurveFunction":
        return CurveFunction.make(p, UniPoly.zero())

    @property
    def is_zero(self) -> bool:
        return self.u.is_zero and self.v.is_zero

    @property
    def is_constant(self) -> bool:
        deg_u = self.u.degree if not self.u.is_zero else -1
        return self.v.is_zero and deg_u <= 0 and self.den.degree == 0

    def __add__(self, other):
        den = self.den * other.den
        u = self.u * other.den + other.u * self.den
        v = self.v * other.den + other.v * self.den
        return CurveFunction.make(u, v, den)

    def __sub__(self, other):
        return self + CurveFunction(-other.u, -other.v, other.den)

    def scale(self, c) -> "CurveFunction":
        return CurveFunction(self.u.scale(c), self.v.scale(c), self.den)

    def invert(self, curve: HyperCurve) -> "CurveFunction":
        """1 / self, using the conjugate: den*(u - v*y) / (u^2 - v^2 f)."""
        if self.is_zero:
            raise ZeroFunction("cannot invert the zero function")
        norm = self.u * self.u - self.v * self.v * curve.f
        return CurveFunction.make(self.den * self.u, -(self.den * self.v), norm)

    def literal(self) -> str:
        num = []
        if not self.u.is_zero:
            num.append(f"({self.u.literal()})")
        if not self.v.is_zero:
            num.append(f"({self.v.literal()})*y")
        body = " + ".join(num) if num else "0"
        if self.den.degree == 0:
            return body
        return f"[{body}] / ({self.den.literal()})"


# ---------------------------------------------------------------------------
# Expansions at infinity


def _series_sqrt(coeffs, nterms, s0):
    """Power series sqrt of sum coeffs[i] t^i with constant term s0^2."""
    out = [Fraction(s0)]
    inv2s = 1 / (2 * Fraction(s0))
    for n in range(1, nterms):
        acc = coeffs[n] if n < len(coeffs) else Fraction(0)
        for i in range(1, n):
            acc -= out[i] * out[n - i]
        out.append(acc * inv2s)
    return out


@lru_cache(maxsize=64)
def _y_series_exact(curve: HyperCurve, nterms: int):
    assert curve.parity == EVEN
    n = curve.f.degree
    reversed_f = [curve.f.coeff(n - i) for i in range(n + 1)]
    return tuple(_series_sqrt(reversed_f, nterms, curve.sqrt_lc))


def _y_series(curve: HyperCurve, nterms: int):
    """Coefficients S with y = +- t^{-(g+1)} * sum S[i] t^i at oo+-, even models.

    Requests are rounded up so repeated valuations share one cached series.
    """
    return _y_series_exact(curve, ((max(nterms, 1) + 63) // 64) * 64)


@lru_cache(maxsize=64)
def _y_series_odd(curve: HyperCurve, nterms: int):
    """Coefficients S with y = c^{g+1} tau^{-(2g+1)} sum S[i] tau^i, x = c/tau^2."""
    assert curve.parity == ODD
    n = curve.f.degree
    c = curve.f.lc
    coeffs = [Fraction(0)] * (2 * n + 1)
    for i in range(n + 1):
        coeffs[2 * (n - i)] = curve.f.coeff(i) * c ** (i - (n + 1))
    return tuple(_series_sqrt(coeffs, nterms, Fraction(1)))


@dataclass(frozen=True)
class InfinityExpansion:
    """Truncated expansion y = sum coeffs[i] * t^(lead_exponent + i)."""

    place: str
    lead_exponent: int
    coeffs: tuple


def expansion_at_infinity(curve: HyperCurve, place: str, precision: int) -> InfinityExpansion:
    if precision < 1:
        raise ZeroFunction("precision must be positive")
    if curve.parity == EVEN:
        if place not in (OO_PLUS, OO_MINUS):
            raise InfinitePlace(f"even model has places {OO_PLUS}, {OO_MINUS}")
        sign = 1 if place == OO_PLUS else -1
        series = _y_series(curve, precision)[:precision]
        return InfinityExpansion(
            place, -(curve.genus + 1), tuple(sign * c for c in series)
        )
    if place != OO:
        raise InfinitePlace("odd model has the single place oo")
    series = _y_series_odd(curve, precision)
    scale = curve.f.lc ** (curve.genus + 1)
    return InfinityExpansion(
        place, -(2 * curve.genus + 1), tuple(scale * c for c in series)
    )


def _even_infinity_valuation(curve, u, v, place) -> int:
    """ord at oo+/oo- of u(x) + v(x) y on an even model (den excluded)."""
    sign = 1 if place == OO_PLUS else -1
    du = u.degree if not u.is_zero else None
    dv = v.degree if not v.is_zero else None
    if du is None and dv is None:
        raise ZeroFunction("valuation of the zero function")
    g = curve.genus
    M = max(du if du is not None else -(10 ** 9), (dv + g + 1) if dv is not None else -(10 ** 9))
    nterms = 2 * M + 2 + (dv + g + 2 if dv is not None else 0)
    series = _y_series(curve, max(nterms, 2)) if dv is not None else ()
    for e in range(-M, M + 1):
        coeff = u.coeff(-e) if e <= 0 else Fraction(0)
        if dv is not None:
            for j in range(dv + 1):
                idx = e + j + g + 1
                if idx >= 0:
                    coeff += sign * v.coeff(j) * series[idx]
        if coeff:
            return e
    raise AssertionError("valuation window exhausted; function unexpectedly zero")


def _odd_infinity_valuation(u, v, genus) -> int:
    """ord at oo of u + v y on an odd model: parities never cancel."""
    vals = []
    if not u.is_zero:
        vals.append(-2 * u.degree)
    if not v.is_zero:
        vals.append(-2 * v.degree - (2 * genus + 1))
    if not vals:
        raise ZeroFunction("valuation of the zero function")
    return min(vals)


# ---------------------------------------------------------------------------
# Branch classification and principal divisors


@lru_cache(maxsize=4096)
def classify_place(curve: HyperCurve, p: UniPoly):
    """Branch behaviour of y^2 = f over the monic irreducible p.

    Returns (SPLIT, q) with q the canonical square root of f mod p,
    (RAM, None), or (INERT, None).
    """
    p = p.monic()
    if (curve.f % p).is_zero:
        return (RAM, None)
    if p.degree == 1:
        val = curve.f(-p.coeff(0))
        root = rational_sqrt(val)
        if root is None:
            return (INERT, None)
        return (SPLIT, canonical_sqrt_rep(UniPoly.const(root), p))
    K = numfield.nf_new(p)
    fbar = K.element(curve.f)
    zsq = numfield.NfPoly.make(K, [-fbar, K.zero(), K.one()])
    _, factors = numfield.factor_over_nf(K, zsq)
    roots = [(-h.coeff(0)).repr for h, _ in factors if h.degree == 1]
    if not roots:
        return (INERT, None)
    return (SPLIT, canonical_sqrt_rep(roots[0], p))


def _valuation_at(p: UniPoly, a: UniPoly) -> int:
    """Exponent of p in a; a nonzero."""
    count = 0
    while True:
        q, r = divmod(a, p)
        if not r.is_zero:
            return count
        a = q
        count += 1
        if a.is_zero:
            return count


def _split_valuations(curve, p, q, u, v, mult_norm):
    """ord of u + v y at the two split places (q-branch first)."""
    if v.is_zero:
        val = _valuation_at(p, u)
        assert 2 * val == mult_norm
        return val, val
    if u.is_zero:
        val = _valuation_at(p, v)
        assert 2 * val == mult_norm
        return val, val
    k = mult_norm + 1
    qk = hensel_sqrt(curve.f, p, q, k)
    plus = u + v * qk
    minus = u - v * qk
    val_plus = _valuation_at(p, plus) if not plus.is_zero else k
    val_minus = _valuation_at(p, minus) if not minus.is_zero else k
    if val_plus >= k:
        val_plus = mult_norm - min(val_minus, mult_norm)
    elif val_minus >= k:
        val_minus = mult_norm - val_plus
    assert val_plus + val_minus == mult_norm, "split valuations lost mass"
    return val_plus, val_minus


def divisor_of_function(curve: HyperCurve, w: CurveFunction) -> Divisor:
    """The full principal divisor of w; total degree always 0."""
    if w.is_zero:
        raise ZeroFunction("divisor of the zero function")
    u, v, den = w.u, w.v, w.den
    terms = {}

    def bump(pt, mult):
        if mult:
            terms[pt] = terms.get(pt, 0) + mult

    # numerator part: zeros of u + v y via the norm u^2 - v^2 f
    norm = u * u - v * v * curve.f
    assert not norm.is_zero, "u + v y vanished identically on the curve"
    if norm.degree > 0:
        for p, mult in factor_over_Q(norm).factors:
            branch, q = classify_place(curve, p)
            if branch == RAM:
                vals = []
                if not u.is_zero:
                    vals.append(2 * _valuation_at(p, u))
                if not v.is_zero:
                    vals.append(2 * _valuation_at(p, v) + 1)
                bump(ClosedPoint.affine(p, RAM), min(vals))
            elif branch == INERT:
                assert mult % 2 == 0, "inert norm valuation must be even"
                bump(ClosedPoint.affine(p, INERT), mult // 2)
            else:
                vp, vm = _split_valuations(curve, p, q, u, v, mult)
                bump(ClosedPoint.affine(p, SPLIT, q), vp)
                bump(ClosedPoint.affine(p, SPLIT, (-q) % p), vm)

    # denominator part: poles along den(x)
    if den.degree > 0:
        for p, mult in factor_over_Q(den).factors:
            branch, q = classify_place(curve, p)
            if branch == RAM:
                bump(ClosedPoint.affine(p, RAM), -2 * mult)
            elif branch == INERT:
                bump(ClosedPoint.affine(p, INERT), -mult)
            else:
                bump(ClosedPoint.affine(p, SPLIT, q), -mult)
                bump(ClosedPoint.affine(p, SPLIT, (-q) % p), -mult)

    # infinite places
    dden = den.degree
    if curve.parity == EVEN:
        for place in (OO_PLUS, OO_MINUS):
            val = _even_infinity_valuation(curve, u, v, place) + dden
            bump(ClosedPoint.infinite(place), val)
    else:
        val = _odd_infinity_valuation(u, v, curve.genus) + 2 * dden
        bump(ClosedPoint.infinite(OO), val)

    out = Divisor.make(terms.items())
    assert out.degree == 0, f"principal divisor degree {out.degree} != 0"
    return out


def canonical_divisor(curve: HyperCurve) -> Divisor:
    """Divisor of dx/y: degree 2g - 2, supported at infinity."""
    g = curve.genus
    if curve.parity == EVEN:
        return Divisor.make(
            [
                (ClosedPoint.infinite(OO_PLUS), g - 1),
                (ClosedPoint.infinite(OO_MINUS), g - 1),
            ]
        )
    return Divisor.make([(ClosedPoint.infinite(OO), 2 * g - 2)])


# ---------------------------------------------------------------------------
# Riemann-Roch spaces


@dataclass(frozen=True)
class RRSpace:
    divisor: Divisor
    basis: tuple  # of CurveFunction
    dim: int


def rr_space_infty(curve: HyperCurve, n_plus: int, n_minus: int = None) -> RRSpace:
    """L(n+ * oo+ + n- * oo-) for even models, L(n * oo) for odd models.

    Negative bounds demand vanishing to that order at the place.
    """
    if curve.parity == ODD:
        assert n_minus is None, "odd models take a single bound"
        return _rr_odd_infty(curve, n_plus)
    assert n_minus is not None, "even models need bounds at both places"
    divisor = Divisor.make(
        [
            (ClosedPoint.infinite(OO_PLUS), n_plus),
            (ClosedPoint.infinite(OO_MINUS), n_minus),
        ]
    )
    basis = _even_infinity_kernel(curve, n_plus, n_minus, extra_den=UniPoly.one())
    return RRSpace(divisor, tuple(basis), len(basis))


def _rr_odd_infty(curve: HyperCurve, n: int) -> RRSpace:
    g = curve.genus
    basis = []
    i = 0
    while 2 * i <= n:
        basis.append(CurveFunction.from_x_poly(UniPoly.x() ** i))
        i += 1
    j = 0
    while 2 * j + 2 * g + 1 <= n:
        basis.append(CurveFunction.make(UniPoly.zero(), UniPoly.x() ** j))
        j += 1
    divisor = Divisor.make([(ClosedPoint.infinite(OO), n)])
    return RRSpace(divisor, tuple(basis), len(basis))


def _even_infinity_kernel(curve, n_plus, n_minus, extra_den):
    """Basis of {(U + V y)/extra_den bounded by n+/n- at infinity}.

    Candidate span is {x^i} + {x^j y} with i, j <= B; the linear system
    forbids every Laurent coefficient below the allowed pole order at each
    place.  With h = extra_den the returned functions are (U + V y)/h and
    the bounds apply to the quotient.
    """
    g = curve.genus
    dh = extra_den.degree
    bound_plus = n_plus + dh
    bound_minus = n_minus + dh
    B = max(bound_plus, bound_minus) + g + 2
    if B < 0:
        return []
    ncols = 2 * (B + 1)
    low = -(B + g + 1)
    nterms = B + g + 2 + max(0, -bound_plus, -bound_minus) + 2
    series = _y_series(curve, nterms)
    rows = []
    for sign, bound in ((1, bound_plus), (-1, bound_minus)):
        for e in range(low, -bound):
            row = [Fraction(0)] * ncols
            if e <= 0 and -e <= B:
                row[-e] = Fraction(1)
            for j in range(B + 1):
                idx = e + j + g + 1
                if 0 <= idx < len(series):
                    row[B + 1 + j] = Fraction(sign) * series[idx]
            rows.append(row)
    kernel = kernel_basis(rows, ncols) if rows else [
        [Fraction(1 if i == k else 0) for i in range(ncols)] for k in range(ncols)
    ]
    basis = []
    for vec in kernel:
        U = UniPoly.make(vec[: B + 1])
        V = UniPoly.make(vec[B + 1 :])
        w = CurveFunction.make(U, V, extra_den)
        basis.append(w)
    for w in basis:
        _assert_infinity_bounds(curve, w, n_plus, n_minus)
    return basis


def _assert_infinity_bounds(curve, w, n_plus, n_minus):
    """Exact recheck that w honours the pole bounds at infinity."""
    dden = w.den.degree
    vp = _even_infinity_valuation(curve, w.u, w.v, OO_PLUS) + dden
    vm = _even_infinity_valuation(curve, w.u, w.v, OO_MINUS) + dden
    assert vp >= -n_plus and vm >= -n_minus, "basis element violates pole bounds"


def rr_space(curve: HyperCurve, D: Divisor) -> RRSpace:
    """L(D) for divisors whose negative part is supported at infinity.

    The effective affine part grants pole permissions, realized by a
    denominator h built from the defining polynomials and linear
    conditions modulo their powers; a negative affine part raises
    UnsupportedDivisorShape.
    """
    affine = D.affine_terms()
    if any(m < 0 for _, m in affine):
        raise UnsupportedDivisorShape("negative affine divisor part")
    if curve.parity == EVEN:
        n_plus = D.infinite_coefficient(OO_PLUS)
        n_minus = D.infinite_coefficient(OO_MINUS)
    else:
        n_odd = D.infinite_coefficient(OO)
    if not affine:
        if curve.parity == EVEN:
            space = rr_space_infty(curve, n_plus, n_minus)
        else:
            space = rr_space_infty(curve, n_odd)
        return RRSpace(D, space.basis, space.dim)

    # group pole permissions by defining polynomial
    by_p = {}
    for pt, mult in affine:
        by_p.setdefault(pt.p, []).append((pt, mult))
    h = UniPoly.one()
    congruences = []  # (modulus power of p, residue rows builder data)
    for p, pts in sorted(by_p.items(), key=lambda kv: kv[0].sort_key()):
        branch, q = classify_place(curve, p)
        if branch == SPLIT:
            a_plus = a_minus = 0
            for pt, mult in pts:
                if pt.q == q:
                    a_plus = mult
                else:
                    a_minus = mult
            c = max(a_plus, a_minus)
            h = h * p**c
            r_plus, r_minus = c - a_plus, c - a_minus
            lift = max(r_plus, r_minus)
            if lift > 0:
                qk = hensel_sqrt(curve.f, p, q, lift)
                if r_plus > 0:
                    congruences.append(("pm", p**r_plus, qk, 1))
                if r_minus > 0:
                    congruences.append(("pm", p**r_minus, qk, -1))
        elif branch == INERT:
            (pt, a) = pts[0]
            c = a
            h = h * p**c
            # pole permission is exact here: no residual condition
        else:  # ramified
            (pt, a) = pts[0]
            c = (a + 1) // 2
            h = h * p**c
            r = 2 * c - a
            if r > 0:
                ru = (r + 1) // 2
                rv = r // 2
                if ru > 0:
                    congruences.append(("u", p**ru, None, 0))
                if rv > 0:
                    congruences.append(("v", p**rv, None, 0))

    dh = h.degree
    if curve.parity == EVEN:
        rows, ncols, B = _even_rows_with_congruences(
            curve, n_plus + dh, n_minus + dh, congruences
        )
        kernel = kernel_basis(rows, ncols) if rows else []
        basis = []
        for vec in kernel:
            U = UniPoly.make(vec[: B + 1])
            V = UniPoly.make(vec[B + 1 :])
            basis.append(CurveFunction.make(U, V, h))
        for w in basis:
            _assert_infinity_bounds(curve, w, n_plus, n_minus)
            _assert_affine_membership(curve, w, D)
        return RRSpace(D, tuple(basis), len(basis))

    # odd model: infinity bounds are pure degree caps
    n_eff = n_odd + 2 * dh
    du_max = n_eff // 2
    dv_max = (n_eff - (2 * curve.genus + 1)) // 2
    Bu = max(du_max, -1)
    Bv = max(dv_max, -1)
    ncols = (Bu + 1) + (Bv + 1)
    if ncols == 0:
        return RRSpace(D, (), 0)
    rows = _congruence_rows(congruences, Bu, Bv)
    kernel = (
        kernel_basis(rows, ncols)
        if rows
        else [[Fraction(1 if i == k else 0) for i in range(ncols)] for k in range(ncols)]
    )
    basis = []
    for vec in kernel:
        U = UniPoly.make(vec[: Bu + 1])
        V = UniPoly.make(vec[Bu + 1 :])
        basis.append(CurveFunction.make(U, V, h))
    for w in basis:
        _assert_affine_membership(curve, w, D)
    return RRSpace(D, tuple(basis), len(basis))


def _even_rows_with_congruences(curve, bound_plus, bound_minus, congruences):
    g = curve.genus
    B = max(bound_plus, bound_minus) + g + 2
    if B < 0:
        return [], 0, -1
    ncols = 2 * (B + 1)
    low = -(B + g + 1)
    nterms = B + g + 2 + max(0, -bound_plus, -bound_minus) + 2
    series = _y_series(curve, nterms)
    rows = []
    for sign, bound in ((1, bound_plus), (-1, bound_minus)):
        for e in range(low, -bound):
            row = [Fraction(0)] * ncols
            if e <= 0 and -e <= B:
                row[-e] = Fraction(1)
            for j in range(B + 1):
                idx = e + j + g + 1
                if 0 <= idx < len(series):
                    row[B + 1 + j] = Fraction(sign) * series[idx]
            rows.append(row)
    rows.extend(_congruence_rows(congruences, B, B))
    return rows, ncols, B


def _congruence_rows(congruences, Bu, Bv):
    """Rows forcing U (columns 0..Bu) and V (columns Bu+1..) congruences."""
    rows = []
    ncols = (Bu + 1) + (Bv + 1)
    for kind, modulus, qk, sign in congruences:
        deg_m = modulus.degree
        if kind in ("pm",):
            # (U + sign * V * qk) = 0 mod modulus
            for r in range(deg_m):
                row = [Fraction(0)] * ncols
                for i in range(Bu + 1):
                    row[i] = (UniPoly.x() ** i % modulus).coeff(r)
                for j in range(Bv + 1):
                    red = (UniPoly.x() ** j * qk) % modulus
                    row[Bu + 1 + j] = Fraction(sign) * red.coeff(r)
                rows.append(row)
        elif kind == "u":
            for r in range(deg_m):
                row = [Fraction(0)] * ncols
                for i in range(Bu + 1):
                    row[i] = (UniPoly.x() ** i % modulus).coeff(r)
                rows.append(row)
        else:  # kind == "v"
            for r in range(deg_m):
                row = [Fraction(0)] * ncols
                for j in range(Bv + 1):
                    row[Bu + 1 + j] = (UniPoly.x() ** j % modulus).coeff(r)
                rows.append(row)
    return rows


def _assert_affine_membership(curve, w, D):
    """Exact recheck of div(w) + D >= 0 at the affine support of D and w.den."""
    div = divisor_of_function(curve, w)
    for pt, mult in (div + D).terms:
        assert pt.kind == "inf" or mult >= 0, "affine membership recheck failed"


def decompose_effective(curve: HyperCurve, w: CurveFunction, base: Divisor) -> Divisor:
    """base + div(w), which must be effective (w in L(base))."""
    out = divisor_of_function(curve, w) + base
    if not out.is_effective:
        raise NotInLinearSeries("div(w) + base is not effective")
    return out


def point_field(curve: HyperCurve, pt: ClosedPoint) -> UniPoly:
    """Monic minimal polynomial of a generator of the residue field Q(P)."""
    if pt.kind == "inf":
        raise InfinitePlace("infinite places are rational points")
    if pt.branch in (SPLIT, RAM):
        return pt.p
    return numfield.absolute_minpoly(pt.p, curve.f, 0)
