"""Number fields K = Q[t]/(m), factorization over K, and primitivity.

Factorization over K uses Trager's norm method: push a squarefree
polynomial down to Q by the norm of a generic shift, factor over Q, and
pull the factors back with gcds over K.  Primitivity of K is decided from
the principal subfields attached to the irreducible factors of m over K:
a proper nontrivial subfield exists iff some principal subfield has degree
strictly between 1 and [K:Q], because every maximal subfield is principal.

Norms and characteristic polynomials are computed by exact evaluation /
interpolation instead of symbolic bivariate resultants; with m monic the
two agree pointwise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .arith import (
    UniPoly,
    factor_over_Q,
    lagrange_interpolate,
    poly_gcd,
    resultant,
    squarefree_part,
)
from .errors import Degenerate, NotInert, ReduciblePolynomial, ZeroPolynomial


@dataclass(frozen=True)
class NumberField:
    """K = Q[t]/(min_poly), min_poly monic irreducible."""

    min_poly: UniPoly

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    def element(self, p: UniPoly) -> "NfElement":
        return NfElement(self, p % self.min_poly)

    def const(self, c) -> "NfElement":
        return NfElement(self, UniPoly.const(c) if c else UniPoly.zero())

    def gen(self) -> "NfElement":
        return self.element(UniPoly.x())

    def zero(self) -> "NfElement":
        return NfElement(self, UniPoly.zero())

    def one(self) -> "NfElement":
        return NfElement(self, UniPoly.one())


@dataclass(frozen=True)
class NfElement:
    """Element of a NumberField, represented by a polynomial of degree < d."""

    parent: NumberField
    repr: UniPoly

    @property
    def is_zero(self) -> bool:
        return self.repr.is_zero

    def __add__(self, other):
        return NfElement(self.parent, self.repr + other.repr)

    def __sub__(self, other):
        return NfElement(self.parent, self.repr - other.repr)

    def __neg__(self):
        return NfElement(self.parent, -self.repr)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NfElement(self.parent, self.repr.scale(other))
        return NfElement(self.parent, (self.repr * other.repr) % self.parent.min_poly)

    __rmul__ = __mul__

    def inverse(self) -> "NfElement":
        from .arith import _poly_inverse_mod

        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        return NfElement(self.parent, _poly_inverse_mod(self.repr, self.parent.min_poly))

    def __pow__(self, n: int):
        result = self.parent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def coords(self) -> list:
        """Coordinates in the power basis 1, t, ..., t^(d-1)."""
        d = self.parent.degree
        return [self.repr.coeff(i) for i in range(d)]

    def norm(self) -> Fraction:
        """Product of the conjugates, as a resultant against min_poly."""
        if self.is_zero:
            return Fraction(0)
        return resultant(self.parent.min_poly, self.repr)


def nf_new(m: UniPoly) -> NumberField:
    """Build Q[t]/(m) after monic normalization; rejects reducible m."""
    if m.is_zero:
        raise ZeroPolynomial("number field needs a nonzero defining polynomial")
    m = m.monic()
    if m.degree < 1:
        raise ReduciblePolynomial("constant polynomial defines no field")
    fact = factor_over_Q(m)
    if not fact.is_irreducible():
        raise ReduciblePolynomial(
            f"defining polynomial factors as {[str(f) for f, _ in fact.factors]}",
            factors=fact,
        )
    return NumberField(m)


def nf_minpoly(e: NfElement) -> UniPoly:
    """Monic minimal polynomial of e over Q.

    Characteristic polynomial of multiplication-by-e (degree d), then the
    squarefree part; the characteristic polynomial is a power of the
    irreducible minimal polynomial, so this extracts it exactly.
    """
    d = e.parent.degree
    theta_pows = [e.parent.one()]
    gen = e.parent.gen()
    for _ in range(d - 1):
        theta_pows.append(theta_pows[-1] * gen)
    columns = [(e * basis).coords() for basis in theta_pows]
    # char(x) = det(x*I - M) with M the multiplication matrix; interpolate
    # from d+1 exact evaluations.
    points = []
    for k in range(d + 1):
        x0 = Fraction(k)
        mat = [
            [(x0 if i == j else Fraction(0)) - columns[j][i] for j in range(d)]
            for i in range(d)
        ]
        points.append((x0, linalg.det(mat)))
    char = lagrange_interpolate(points)
    assert char.degree == d and char.lc == 1
    return squarefree_part(char)


# ---------------------------------------------------------------------------
# Polynomials over K


@dataclass(frozen=True)
class NfPoly:
    """Dense polynomial with NfElement coefficients, lowest degree first."""

    parent: NumberField
    coeffs: tuple  # of NfElement, no trailing zeros

    @staticmethod
    def make(parent: NumberField, coeffs) -> "NfPoly":
        out = list(coeffs)
        while out and out[-1].is_zero:
            out.pop()
        return NfPoly(parent, tuple(out))

    @staticmethod
    def from_rational(parent: NumberField, p: UniPoly) -> "NfPoly":
        return NfPoly.make(parent, [parent.const(c) for c in p.coeffs])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> NfElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial over K")
        return self.coeffs[-1]

    def coeff(self, i: int) -> NfElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.parent.zero()

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return NfPoly.make(self.parent, out)

    def __neg__(self):
        return NfPoly(self.parent, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NfElement):
            return NfPoly.make(self.parent, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return NfPoly(self.parent, ())
        out = [self.parent.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ca in enumerate(self.coeffs):
            if not ca.is_zero:
                for j, cb in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + ca * cb
        return NfPoly.make(self.parent, out)

    def __divmod__(self, divisor):
        if divisor.is_zero:
            raise ZeroPolynomial("division by zero over K")
        inv = divisor.lc.inverse()
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return NfPoly(self.parent, ()), self
        quot = [self.parent.zero()] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.is_zero:
                continue
            q = c * inv
            quot[i - dd] = q
            for j, dc in enumerate(divisor.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - q * dc
        return NfPoly.make(self.parent, quot), NfPoly.make(self.parent, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "NfPoly":
        if self.is_zero:
            return self
        return self * self.lc.inverse()

    def derivative(self) -> "NfPoly":
        return NfPoly.make(
            self.parent,
            [c * i for i, c in enumerate(self.coeffs) if i],
        )

    def evaluate(self, value: NfElement) -> NfElement:
        result = self.parent.zero()
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def shift_by(self, s: int) -> "NfPoly":
        """Substitute x -> x - s*theta."""
        theta = self.parent.gen()
        shift = NfPoly.make(self.parent, [theta * Fraction(-s), self.parent.one()])
        result = NfPoly(self.parent, ())
        for c in reversed(self.coeffs):
            result = result * shift + NfPoly.make(self.parent, [c])
        return result


def nfp_gcd(a: NfPoly, b: NfPoly) -> NfPoly:
    """Monic gcd over K by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def _nf_norm_poly(a: NfPoly) -> UniPoly:
    """Norm of a down to Q[x]: the product of the conjugates of a.

    Computed by evaluation at deg(a)*d + 1 rational points followed by
    interpolation; each value is Norm(a(x0)) = Res(min_poly, a(x0)-repr).
    """
    K = a.parent
    n = a.degree * K.degree
    points = []
    x0 = 0
    while len(points) < n + 1:
        value = a.evaluate(K.const(x0))
        points.append((Fraction(x0), value.norm()))
        x0 = -x0 if x0 > 0 else -x0 + 1
    return lagrange_interpolate(points)


def factor_over_nf(K: NumberField, a: NfPoly):
    """Complete factorization over K: (unit, [(monic irreducible, mult)]).

    Verified by exact re-multiplication before returning.
    """
    if a.is_zero:
        raise ZeroPolynomial("factorization of the zero polynomial over K")
    unit = a.lc
    work = a.monic()
    if work.degree == 0:
        return unit, []
    factors = []
    # squarefree split first so Trager always sees separable input
    deriv = work.derivative()
    if deriv.is_zero:
        sqfree = work
    else:
        g = nfp_gcd(work, deriv)
        sqfree = (work // g).monic() if g.degree and g.degree > 0 else work
    for irr in _trager_squarefree(K, sqfree):
        mult = 0
        while True:
            q, r = divmod(work, irr)
            if r.is_zero:
                work = q
                mult += 1
            else:
                break
        assert mult >= 1
        factors.append((irr, mult))
    assert work.degree == 0
    factors.sort(key=lambda fm: (fm[0].degree, [c.repr.sort_key() for c in fm[0].coeffs]))
    check = NfPoly.make(K, [unit])
    for f, m in factors:
        for _ in range(m):
            check = check * f
    assert _nfp_eq(check, a), "factorization over K failed re-multiplication"
    return unit, factors


def _nfp_eq(a: NfPoly, b: NfPoly) -> bool:
    if len(a.coeffs) != len(b.coeffs):
        return False
    return all(x.repr == y.repr for x, y in zip(a.coeffs, b.coeffs))


def _trager_squarefree(K: NumberField, a: NfPoly):
    """Irreducible monic factors over K of a monic squarefree polynomial."""
    if a.degree == 1:
        return [a]
    shifts = [0]
    for k in range(1, 26):
        shifts.extend([k, -k])
    for s in shifts:
        shifted = a.shift_by(s)
        norm = _nf_norm_poly(shifted)
        if poly_gcd(norm, norm.derivative()).degree != 0:
            continue
        out = []
        fact = factor_over_Q(norm)
        for h, mult in fact.factors:
            assert mult == 1
            h_shift_back = NfPoly.from_rational(K, h).shift_by(-s)
            g = nfp_gcd(a, h_shift_back)
            if g.degree and g.degree > 0:
                out.append(g)
        assert sum(g.degree for g in out) == a.degree
        return out
    raise Degenerate("no squarefree Trager shift found within the search cap")


# ---------------------------------------------------------------------------
# Principal subfields and primitivity


@dataclass(frozen=True)
class SubfieldReport:
    """Degrees of the principal subfields and the primitivity verdict."""

    principal_subfield_degrees: tuple
    is_primitive: bool


def principal_subfields(K: NumberField) -> SubfieldReport:
    """Principal subfield degrees of K, one per factor of min_poly over K.

    The subfield attached to a factor h is the kernel of the Q-linear map
    g(theta) -> (g(x) mod h) - g(theta); its Q-dimension is the subfield
    degree.  K is primitive iff every kernel has dimension 1 or d.
    """
    d = K.degree
    m_over_K = NfPoly.from_rational(K, K.min_poly)
    _, factors = factor_over_nf(K, m_over_K)
    degrees = []
    for h, mult in factors:
        assert mult == 1
        dh = h.degree
        # residues x^i mod h, as NfPoly of degree < dh
        x_pow = NfPoly.make(K, [K.one()])
        x_poly = NfPoly.make(K, [K.zero(), K.one()])
        theta_pow = K.one()
        theta = K.gen()
        rows_per_basis = []
        for i in range(d):
            rem = x_pow % h
            diff = rem - NfPoly.make(K, [theta_pow])
            vec = []
            for j in range(dh):
                vec.extend(diff.coeff(j).coords())
            rows_per_basis.append(vec)
            x_pow = x_pow * x_poly
            theta_pow = theta_pow * theta
        # columns of the map are rows_per_basis; kernel dim = d - rank
        matrix = [
            [rows_per_basis[i][r] for i in range(d)]
            for r in range(d * dh)
        ]
        degrees.append(d - linalg.rank(matrix))
    degrees.sort()
    return SubfieldReport(tuple(degrees), all(k in (1, d) for k in degrees))


def is_primitive_field(m: UniPoly) -> bool:
    """True iff Q[t]/(m) has no subfield strictly between Q and itself.

    Degree 1 returns False with a warning (the notion presupposes a
    nontrivial extension); prime degree returns True without factoring.
    """
    if m.is_zero:
        raise ZeroPolynomial("empty defining polynomial")
    d = m.degree
    if d == 0:
        raise ReduciblePolynomial("constant polynomial defines no field")
    if d == 1:
        warnings.warn("degree-1 field treated as not primitive by convention")
        return False
    if _is_prime(d):
        # validate irreducibility, then no proper nontrivial subfield can exist
        nf_new(m)
        return True
    return principal_subfields(nf_new(m)).is_primitive


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


# ---------------------------------------------------------------------------
# Absolute field of a point (x, y) with p(x) = 0, y^2 = f(x), inert case


def absolute_minpoly(p: UniPoly, f: UniPoly, shift_seed: int) -> UniPoly:
    """Minimal polynomial over Q of y + c*x for the first good shift c.

    Requires f to be a non-square modulo p (the inert case); the result is
    monic irreducible of degree 2*deg(p).  The candidate for a given c is
    the product of (z - c*x_i - y_i) over all conjugates, computed by
    evaluation/interpolation; c is accepted once that candidate is
    squarefree.
    """
    p = p.monic()
    K = nf_new(p)
    fbar = K.element(f)
    if fbar.is_zero:
        raise NotInert("f vanishes modulo p: ramified, use p itself")
    zsq = NfPoly.make(K, [-fbar, K.zero(), K.one()])
    _, sq_factors = factor_over_nf(K, zsq)
    if any(h.degree == 1 for h, _ in sq_factors):
        raise NotInert("f is a square modulo p: split case, use p itself")
    dp = p.degree
    target = 2 * dp
    for c in range(shift_seed, shift_seed + 50):
        points = []
        z0 = 0
        ok = True
        while len(points) < target + 1:
            gz = UniPoly.make([z0, -c]) ** 2 - f
            if gz.is_zero:
                ok = False
                break
            points.append((Fraction(z0), resultant(p, gz)))
            z0 = -z0 if z0 > 0 else -z0 + 1
        if not ok:
            continue
        cand = lagrange_interpolate(points)
        if cand.degree != target or cand.lc != 1:
            continue
        if poly_gcd(cand, cand.derivative()).degree != 0:
            continue
        assert factor_over_Q(cand).is_irreducible(), (
            "inert point field candidate unexpectedly reducible"
        )
        return cand
    raise Degenerate("no admissible shift c below the search cap")
