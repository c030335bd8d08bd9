"""Exact rational scalars and dense univariate polynomial algebra.

Coefficients are `fractions.Fraction` throughout; nothing in this module
(or the package) touches floating point.  Polynomials are dense lists of
coefficients, lowest degree first, with no trailing zeros.  The zero
polynomial has an empty coefficient list and its degree is the sentinel
``None``, never a number.

Factorization over Q takes the classical modular route: reduce a primitive
integer model modulo a few small primes avoiding the leading coefficient
and the discriminant, factor mod p (Cantor-Zassenhaus with a deterministic
generator sequence), Hensel-lift the factorization to a Landau-Mignotte
style coefficient bound, and recombine subsets.  Degrees in scope stay
small enough (norms of degree-6 fields give degree 36) that subset
recombination needs no lattice reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt

from .errors import BadInput, RamifiedBranch, ZeroPolynomial

# Exact rational scalar used everywhere: stored reduced, denominator > 0.
Rational = Fraction


def rat(value) -> Fraction:
    """Coerce ints, strings like '3/2', and Fractions to Rational."""
    return Fraction(value)


def rational_sqrt(a: Fraction):
    """Exact square root of a rational, or None if it is not a square."""
    if a < 0:
        return None
    n, d = a.numerator, a.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Q


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial over Q, lowest degree first, no trailing zeros."""

    coeffs: tuple

    @staticmethod
    def make(coeffs) -> "UniPoly":
        return UniPoly(tuple(Fraction(c) for c in _strip(coeffs)))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((Fraction(1),))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((Fraction(0), Fraction(1)))

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly.make([c])

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(tuple(_strip(out)))

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(tuple(_strip(out)))

    __rmul__ = __mul__

    def scale(self, c) -> "UniPoly":
        c = Fraction(c)
        if c == 0:
            return UniPoly.zero()
        return UniPoly(tuple(co * c for co in self.coeffs))

    def __divmod__(self, divisor):
        if divisor.is_zero:
            raise ZeroPolynomial("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        dl = divisor.lc
        if len(rem) - 1 < dd:
            return UniPoly.zero(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / dl
            quot[i - dd] = q
            for j, dc in enumerate(divisor.coeffs):
                rem[i - dd + j] -= q * dc
        return UniPoly(tuple(_strip(quot))), UniPoly(tuple(_strip(rem)))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(_strip(i * c for i, c in enumerate(self.coeffs) if i)))

    def __call__(self, value):
        """Evaluate by Horner; accepts anything with +,* against Fractions."""
        result = None
        for c in reversed(self.coeffs):
            result = c if result is None else result * value + c
        if result is None:
            return Fraction(0) if isinstance(value, (int, Fraction)) else value * 0
        return result

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(x)), by Horner over UniPoly."""
        result = UniPoly.zero()
        for c in reversed(self.coeffs):
            result = result * inner + UniPoly.const(c)
        return result

    def shift_x(self, a) -> "UniPoly":
        """self(x + a)."""
        return self.compose(UniPoly.make([a, 1]))

    def reversed_coeffs(self, length=None) -> "UniPoly":
        """x^n * self(1/x), padded to the given nominal degree n."""
        n = (self.degree if self.degree is not None else 0) if length is None else length
        out = [Fraction(0)] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return UniPoly(tuple(_strip(out)))

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def to_int_primitive(self):
        """Return (scale, P) with self = scale * P, P primitive in Z[x], lc(P) > 0."""
        if self.is_zero:
            return Fraction(0), []
        den = reduce(lambda a, c: a * c.denominator // gcd(a, c.denominator),
                     self.coeffs, 1)
        ints = [int(c * den) for c in self.coeffs]
        content = reduce(gcd, (abs(v) for v in ints))
        sign = -1 if ints[-1] < 0 else 1
        ints = [v // (sign * content) for v in ints]
        return Fraction(sign * content, den), ints

    def sort_key(self):
        deg = self.degree if self.degree is not None else -1
        return (deg, tuple((c.numerator, c.denominator) for c in self.coeffs))

    def literal(self) -> str:
        """Render as a literal like 'x^3-2x+1/2', highest degree first."""
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if mag == 1:
                    body = xs
                elif mag.denominator == 1:
                    body = f"{mag}{xs}"
                else:
                    body = f"{mag}*{xs}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __str__(self):
        return self.literal()


def poly(*coeffs) -> UniPoly:
    """Shorthand constructor, lowest degree first: poly(-1, 0, 1) is x^2 - 1."""
    return UniPoly.make(coeffs)


# ---------------------------------------------------------------------------
# GCD, squarefree structure, resultants


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q; gcd(0, 0) = 0.

    Runs a primitive remainder sequence over Z to keep the coefficient
    growth of the Euclidean algorithm in check.
    """
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    _, fa = a.to_int_primitive()
    _, fb = b.to_int_primitive()
    while fb:
        fa, fb = fb, _int_prem(fa, fb)
        if fb:
            content = reduce(gcd, (abs(v) for v in fb))
            fb = [v // content for v in fb]
    return UniPoly.make(fa).monic()


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists (lc(b)^k * a mod b)."""
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        rem = [lb * v for v in rem]
        shift = len(rem) - 1 - db
        for j, bv in enumerate(b):
            rem[shift + j] -= c * bv
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def squarefree_part(a: UniPoly) -> UniPoly:
    """Monic a / gcd(a, a'); the result has no repeated roots."""
    if a.is_zero:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(a, a.derivative())
    return (a // g).monic()


def is_squarefree(a: UniPoly) -> bool:
    if a.is_zero:
        return False
    if a.degree == 0:
        return True
    return poly_gcd(a, a.derivative()).degree == 0


def squarefree_decomposition(a: UniPoly):
    """Yun's algorithm: list of (monic squarefree g_i, i) with a = lc * prod g_i^i."""
    a = a.monic()
    out = []
    g = poly_gcd(a, a.derivative())
    if g.degree == 0:
        return [(a, 1)]
    w = a // g
    i = 1
    while w.degree and w.degree > 0:
        y = poly_gcd(w, g)
        factor = w // y
        if factor.degree and factor.degree > 0:
            out.append((factor.monic(), i))
        w, g = y, g // y
        i += 1
    return out


def resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Sylvester resultant via the Euclidean recursion.

    Convention: Res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over the roots
    of a, so Res(x-2, x-3) = -1.
    """
    if a.is_zero or b.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    acc = Fraction(1)
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return acc * b.lc ** da
        r = a % b
        if r.is_zero:
            return Fraction(0)
        acc *= Fraction(-1) ** (da * db) * b.lc ** (da - r.degree)
        a, b = b, r


def lagrange_interpolate(points) -> UniPoly:
    """Exact polynomial through the given (x, y) pairs with distinct x."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    result = UniPoly.zero()
    basis = UniPoly.one()
    # Newton form: incremental divided differences.
    coefs = list(ys)
    for j in range(1, len(xs)):
        for i in range(len(xs) - 1, j - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - j])
    for j, c in enumerate(coefs):
        result = result + basis.scale(c)
        if j < len(xs) - 1:
            basis = basis * UniPoly.make([-xs[j], 1])
    return result


# ---------------------------------------------------------------------------
# Polynomials over prime fields (machine-word modulus)


@dataclass(frozen=True)
class PrimePoly:
    """Dense polynomial over F_p; residues in [0, p), no leading zeros."""

    modulus: int
    coeffs: tuple

    @staticmethod
    def make(modulus: int, coeffs) -> "PrimePoly":
        return PrimePoly(modulus, tuple(_fp_trim([c % modulus for c in coeffs])))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def __mul__(self, other):
        assert self.modulus == other.modulus
        return PrimePoly.make(self.modulus,
                              _fp_mul(list(self.coeffs), list(other.coeffs), self.modulus))

    def __mod__(self, other):
        assert self.modulus == other.modulus
        _, r = _fp_divmod(list(self.coeffs), list(other.coeffs), self.modulus)
        return PrimePoly.make(self.modulus, r)


def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _fp_trim(out)


def _fp_sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _fp_trim(out)


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        if va:
            for j, vb in enumerate(b):
                out[i + j] = (out[i + j] + va * vb) % p
    return _fp_trim(out)


def _fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    rem = list(a)
    db, inv = len(b) - 1, pow(b[-1], -1, p)
    if len(rem) - 1 < db:
        return [], _fp_trim(rem)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            q = c * inv % p
            quot[i - db] = q
            for j, bv in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - q * bv) % p
    return _fp_trim(quot), _fp_trim(rem)


def _fp_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    return _fp_monic(a, p)


def _fp_powmod(base, e, mod, p):
    result = [1]
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


class _DetRng:
    """Tiny deterministic LCG so factorization is reproducible everywhere."""

    def __init__(self, seed: int):
        self.state = (seed * 6364136223846793005 + 1442695040888963407) % (1 << 63)

    def next_below(self, n: int) -> int:
        self.state = (self.state * 6364136223846793005 + 1442695040888963407) % (1 << 63)
        return self.state % n


def _fp_factor_squarefree(f, p, rng) -> list:
    """Monic irreducible factors of a monic squarefree f over F_p."""
    factors = []
    # distinct-degree stage
    dd_parts = []
    h = [0, 1]
    d = 0
    rem = list(f)
    while rem and len(rem) - 1 >= 2 * (d + 1):
        d += 1
        h = _fp_powmod(h, p, rem, p)
        g = _fp_gcd(_fp_sub(h, [0, 1], p), rem, p)
        if len(g) > 1:
            dd_parts.append((g, d))
            rem = _fp_divmod(rem, g, p)[0]
            if len(rem) > 1:
                h = _fp_divmod(h, rem, p)[1]
    if len(rem) > 1:
        dd_parts.append((rem, len(rem) - 1))
    # equal-degree stage (Cantor-Zassenhaus, p odd)
    for g, d in dd_parts:
        work = [g]
        while work:
            cur = work.pop()
            if len(cur) - 1 == d:
                factors.append(_fp_monic(cur, p))
                continue
            e = (pow(p, d) - 1) // 2
            while True:
                r = [rng.next_below(p) for _ in range(len(cur) - 1)] + [1]
                s = _fp_powmod(r, e, cur, p)
                s = _fp_sub(s, [1], p)
                if not s:
                    continue
                split = _fp_gcd(s, cur, p)
                if 0 < len(split) - 1 < len(cur) - 1:
                    work.append(split)
                    work.append(_fp_divmod(cur, split, p)[0])
                    break
    factors.sort(key=lambda c: (len(c), c))
    return factors


# ---------------------------------------------------------------------------
# Hensel lifting (integer coefficients modulo p^k)


def _im_trimmed(a, m):
    return _fp_trim([v % m for v in a])


def _im_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        if va:
            for j, vb in enumerate(b):
                out[i + j] = (out[i + j] + va * vb) % m
    return _fp_trim(out)


def _im_divmod_monic(a, b, m):
    """Division by a monic polynomial; valid over Z/m."""
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _fp_trim(rem)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % m
        if c:
            quot[i - db] = c
            for j, bv in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - c * bv) % m
    return _fp_trim(quot), _fp_trim(rem)


def _im_sub(a, b, m):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % m
    return _fp_trim(out)


def _im_add(a, b, m):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % m
    return _fp_trim(out)


def _fp_bezout(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, p), p)
        t0, t1 = t1, _fp_sub(t0, _fp_mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return [v * inv % p for v in s0], [v * inv % p for v in t0]


def _hensel_pair(f, g, h, s, t, p, target_exp):
    """Lift f = g*h (mod p), s*g + t*h = 1 (mod p) to modulus p^target_exp.

    Quadratic lifting with both g and h monic, so every division below is
    by a monic polynomial and stays valid over Z/p^k.
    """
    k = 1
    while k < target_exp:
        k = min(2 * k, target_exp)
        m = p ** k
        fm = _im_trimmed(f, m)
        e = _im_sub(fm, _im_mul(g, h, m), m)
        _, corr = _im_divmod_monic(_im_mul(t, e, m), g, m)
        g = _im_add(g, corr, m)
        h, rem = _im_divmod_monic(fm, g, m)
        assert not rem, "hensel pair step lost exact divisibility"
        b = _im_sub(_im_add(_im_mul(s, g, m), _im_mul(t, h, m), m), [1], m)
        c, d = _im_divmod_monic(_im_mul(s, b, m), h, m)
        s = _im_sub(s, d, m)
        t = _im_sub(_im_sub(t, _im_mul(t, b, m), m), _im_mul(c, g, m), m)
    return g, h


def _hensel_tree(f, factors, p, target_exp):
    """Lift the monic factorization of monic f mod p to modulus p^target_exp."""
    if len(factors) == 1:
        return [_im_trimmed(f, p ** target_exp)]
    mid = len(factors) // 2
    left, right = factors[:mid], factors[mid:]
    g = [1]
    for fac in left:
        g = _fp_mul(g, fac, p)
    h = [1]
    for fac in right:
        h = _fp_mul(h, fac, p)
    s, t = _fp_bezout(g, h, p)
    G, H = _hensel_pair(f, g, h, s, t, p, target_exp)
    return _hensel_tree(G, left, p, target_exp) + _hensel_tree(H, right, p, target_exp)


def _symmetric(v, m):
    v %= m
    return v - m if v > m // 2 else v


# ---------------------------------------------------------------------------
# Factorization over Q


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor_i ^ mult_i), factors monic irreducible over Q."""

    unit: Fraction
    factors: tuple  # of (UniPoly, int)

    def expand(self) -> UniPoly:
        out = UniPoly.const(self.unit)
        for f, mult in self.factors:
            out = out * f ** mult
        return out

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


_SMALL_PRIMES = None


def _primes_above(limit_start):
    """Infinite-ish generator of primes greater than limit_start."""
    n = limit_start
    while True:
        n += 1
        if n < 2:
            continue
        if all(n % q for q in range(2, isqrt(n) + 1)):
            yield n


def _good_primes(int_coeffs, count=3):
    """Smallest primes > 20 keeping the model squarefree with full degree."""
    found = []
    lc = int_coeffs[-1]
    deriv = [i * c for i, c in enumerate(int_coeffs)][1:]
    for p in _primes_above(20):
        if lc % p == 0:
            continue
        fp = _fp_trim([c % p for c in int_coeffs])
        dp = _fp_trim([c % p for c in deriv])
        if not dp or len(_fp_gcd(fp, dp, p)) != 1:
            continue
        found.append(p)
        if len(found) == count:
            return found
    return found


def _zassenhaus_irreducibles(s: UniPoly) -> list:
    """Monic irreducible factors over Q of a monic squarefree polynomial."""
    if s.degree <= 1:
        return [s]
    _, P = s.to_int_primitive()
    n = len(P) - 1
    seed = reduce(lambda a, c: (a * 1000003 + c) % (1 << 61), P, n)

    best = None
    for p in _good_primes(P):
        fp = _fp_monic(_fp_trim([c % p for c in P]), p)
        facs = _fp_factor_squarefree(fp, p, _DetRng(seed + p))
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
    if best is None:
        raise BadInput("no usable factorization prime found")
    p, modular = best
    if len(modular) == 1:
        return [s]

    height = max(abs(c) for c in P)
    lc = P[-1]
    bound = 2 * (n + 1) * (1 << n) * height * abs(lc) + 1
    target_exp = 1
    while p ** target_exp < bound:
        target_exp += 1
    modulus = p ** target_exp

    fhat = [c * pow(lc, -1, modulus) % modulus for c in P]
    lifted = _hensel_tree(fhat, modular, p, target_exp)

    result = []
    pool = list(range(len(lifted)))
    current = list(P)

    def try_subsets():
        nonlocal current, pool
        lc_cur = current[-1]
        for size in range(1, len(pool) // 2 + 1):
            for combo in itertools.combinations(pool, size):
                cand = [lc_cur % modulus]
                for idx in combo:
                    cand = _im_mul(cand, lifted[idx], modulus)
                cand = [_symmetric(v, modulus) for v in cand]
                content = reduce(gcd, (abs(v) for v in cand if v), 0)
                if content == 0:
                    continue
                cand = [v // content for v in cand]
                q, r = divmod(UniPoly.make(current), UniPoly.make(cand))
                if r.is_zero:
                    result.append(UniPoly.make(cand).monic())
                    _, current_int = q.to_int_primitive()
                    current = current_int
                    pool = [i for i in pool if i not in combo]
                    return True
        return False

    while pool and len(current) - 1 > 0:
        if not try_subsets():
            break
    if len(current) - 1 > 0:
        result.append(UniPoly.make(current).monic())
    result.sort(key=UniPoly.sort_key)
    return result


def factor_over_Q(a: UniPoly) -> Factorization:
    """Complete factorization into monic irreducibles over Q.

    Deterministic: factors ordered by degree, then by coefficient sequence.
    The expanded product reproduces the input exactly.
    """
    if a.is_zero:
        raise ZeroPolynomial("factorization of the zero polynomial")
    unit = a.lc
    if a.degree == 0:
        return Factorization(unit, ())
    out = []
    for part, mult in squarefree_decomposition(a):
        for irr in _zassenhaus_irreducibles(part):
            out.append((irr, mult))
    merged = {}
    for f, m in out:
        merged[f] = merged.get(f, 0) + m
    factors = tuple(sorted(merged.items(), key=lambda fm: fm[0].sort_key()))
    fact = Factorization(unit, factors)
    assert fact.expand() == a, "factorization failed exact re-multiplication"
    return fact


def rational_roots(a: UniPoly) -> list:
    """All rational roots with multiplicity, via the linear factors."""
    if a.is_zero:
        raise ZeroPolynomial("roots of the zero polynomial")
    roots = []
    for f, mult in factor_over_Q(a).factors:
        if f.degree == 1:
            roots.extend([-f.coeffs[0]] * mult)
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# Hensel square-root lifting modulo powers of an irreducible polynomial


def hensel_sqrt(f: UniPoly, p: UniPoly, q0: UniPoly, k: int) -> UniPoly:
    """Lift q0 with q0^2 = f (mod p) to q with q^2 = f (mod p^k).

    p must be monic irreducible and the branch unramified: gcd(2*q0, p) = 1.
    The result satisfies q = q0 (mod p) and deg q < k * deg p.
    """
    if k < 1:
        raise BadInput("precision must be at least 1")
    q0 = q0 % p
    if poly_gcd(q0.scale(2), p).degree != 0:
        raise RamifiedBranch("branch is ramified: 2*q0 = 0 mod p")
    if not ((q0 * q0 - f) % p).is_zero:
        raise BadInput("q0^2 != f mod p")
    prec = 1
    q = q0
    while prec < k:
        prec = min(2 * prec, k)
        modulus = p ** prec
        inv = _poly_inverse_mod(q, modulus)
        q = ((q + (f % modulus) * inv).scale(Fraction(1, 2))) % modulus
    return q % p ** k


def _poly_inverse_mod(a: UniPoly, modulus: UniPoly) -> UniPoly:
    """Inverse of a modulo a polynomial it is coprime to."""
    r0, r1 = modulus, a % modulus
    t0, t1 = UniPoly.zero(), UniPoly.one()
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    if r0.degree != 0:
        raise BadInput("element not invertible modulo the given polynomial")
    return (t0.scale(1 / r0.lc)) % modulus
