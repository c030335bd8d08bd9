"""Top-level procedures: finiteness classification and point enumeration.

The finiteness classifier applies genus inequalities for a curve carrying
a low-degree cover (gonal map to the line, or a relative cover of positive
genus) together with arithmetic side conditions (finite Mordell-Weil
group, simple Jacobian, coprime or prime degree) and returns a structured
verdict per degree.

The point pipeline enumerates one divisor-class representative per element
of a user-supplied finite Mordell-Weil group, computes the dimension of
each complete linear series, and classifies the unique effective divisor
of every rigid (dimension 1) class as reducible, imprimitive, or
primitive.  Classes of positive dimension contain no primitive divisors
under the gonality hypotheses and are skipped with a recorded tag.

Mordell-Weil data is always an input, never computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from . import hyperell, numfield
from .arith import UniPoly, rational_sqrt
from .errors import (
    ConstantFunction,
    NotPrimitive,
    NotSeparable,
    UnsupportedDivisorShape,
)
from .hyperell import (
    OO,
    OO_PLUS,
    ClosedPoint,
    CurveFunction,
    Divisor,
    HyperCurve,
    curve_new,
    decompose_effective,
    divisor_of_function,
    point_field,
    rr_space,
)
from .numfield import is_primitive_field, nf_minpoly, nf_new, principal_subfields

# ---------------------------------------------------------------------------
# Finiteness classification


@dataclass(frozen=True)
class Cover:
    kind: str  # 'gonal' | 'relative'
    m: int
    gprime: int = None


@dataclass(frozen=True)
class FinitenessInput:
    g: int
    cover: Cover
    d: int
    jq_finite: bool
    j_simple: bool

    def __post_init__(self):
        assert self.cover.m >= 2 and self.d >= 2
        if self.cover.kind == "relative":
            assert self.cover.gprime >= 1


YES, PRIMITIVE_ONLY, UNKNOWN = "Yes", "PrimitiveOnly", "Unknown"


@dataclass(frozen=True)
class FinitenessVerdict:
    degree_d_finite: str
    reason: tuple  # structured trace of the hypotheses that fired


def classify_finiteness(inp: FinitenessInput) -> FinitenessVerdict:
    """Verdict for one (curve, degree) pair from the cover inequalities."""
    m, d, g = inp.cover.m, inp.d, inp.g
    trace = []
    if inp.cover.kind == "gonal":
        if d == m:
            return FinitenessVerdict(UNKNOWN, ("degree equals gonality",))
        bound = (m - 1) * (d - 1)
        if g <= bound:
            return FinitenessVerdict(
                UNKNOWN, (f"genus bound fails: {g} <= {bound}",)
            )
        trace.append(f"gonality bound holds: {g} > {bound}")
        if inp.jq_finite:
            trace.append("mordell-weil group finite")
        elif d <= g - 1 and inp.j_simple:
            trace.append(f"jacobian simple and d <= g-1 ({d} <= {g - 1})")
        else:
            return FinitenessVerdict(
                UNKNOWN, tuple(trace + ["no arithmetic hypothesis applies"])
            )
    else:
        gp = inp.cover.gprime
        bound = m * gp + (m - 1) * (d - 1)
        if g <= bound:
            return FinitenessVerdict(
                UNKNOWN, (f"genus bound fails: {g} <= {bound}",)
            )
        trace.append(f"relative cover bound holds: {g} > {bound}")
        if not inp.jq_finite:
            return FinitenessVerdict(
                UNKNOWN, tuple(trace + ["needs finite mordell-weil group"])
            )
        trace.append("mordell-weil group finite")
    if gcd(d, m) == 1:
        trace.append(f"gcd({d},{m}) = 1")
        return FinitenessVerdict(YES, tuple(trace))
    if _is_prime(d):
        trace.append(f"degree {d} prime")
        return FinitenessVerdict(YES, tuple(trace))
    trace.append(f"gcd({d},{m}) > 1 and {d} composite")
    return FinitenessVerdict(PRIMITIVE_ONLY, tuple(trace))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def cs_bound(gX: int, gY: int, gZ: int, m: int, n: int) -> bool:
    """True iff gX > m*gY + n*gZ + (m-1)(n-1), forcing a common factorization
    of any pair of independent covers of those degrees."""
    assert m >= 1 and n >= 1 and min(gX, gY, gZ) >= 0
    return gX > m * gY + n * gZ + (m - 1) * (n - 1)


@dataclass(frozen=True)
class CoverRow:
    """One row of the cover-table driver (CSV interface)."""

    label: str
    g: int
    cover: Cover
    jq_finite: bool
    j_simple: bool
    d_range: tuple  # inclusive (lo, hi)


def classify_row(row: CoverRow):
    """(finite degrees, primitive-only degrees) over the row's d range."""
    finite, primitive_only = [], []
    for d in range(row.d_range[0], row.d_range[1] + 1):
        verdict = classify_finiteness(
            FinitenessInput(row.g, row.cover, d, row.jq_finite, row.j_simple)
        )
        if verdict.degree_d_finite == YES:
            finite.append(d)
        elif verdict.degree_d_finite == PRIMITIVE_ONLY:
            primitive_only.append(d)
    return finite, primitive_only


# ---------------------------------------------------------------------------
# Mordell-Weil input and class enumeration


@dataclass(frozen=True)
class MWSpec:
    """Finite Mordell-Weil description: cyclic factors plus a base divisor.

    Each factor is (order, generator) with the generator a degree-0 divisor
    supported at the infinite places; the base divisor shifts classes into
    degree d.
    """

    cyclic_factors: tuple  # of (order, Divisor)
    base: Divisor

    def __post_init__(self):
        for order, gen in self.cyclic_factors:
            assert order >= 1
            assert gen.degree == 0, "generators must have degree 0"

    @property
    def order(self) -> int:
        total = 1
        for order, _ in self.cyclic_factors:
            total *= order
        return total


def _coefficient_range(order: int):
    """Symmetric range centered at 0 covering Z/order exactly once."""
    half = order // 2
    return range(-((order - 1) // 2), half + 1)


def _shift_divisor(curve: HyperCurve, mw: MWSpec, d: int) -> Divisor:
    """Degree-d effective shift divisor at infinity.

    Uses floor(d / deg base) copies of the base plus a remainder at oo+
    (or oo for odd models), so odd degrees work on even models too.
    """
    base_deg = mw.base.degree
    if base_deg <= 0 or not mw.base.is_effective:
        raise UnsupportedDivisorShape("base divisor must be effective of degree >= 1")
    if not mw.base.is_infinity_supported():
        raise UnsupportedDivisorShape("base divisor must live at infinity")
    q, r = divmod(d, base_deg)
    shift = mw.base.scale(q)
    if r:
        place = OO_PLUS if curve.parity == hyperell.EVEN else OO
        shift = shift + Divisor.make([(ClosedPoint.infinite(place), r)])
    assert shift.degree == d
    return shift


@dataclass(frozen=True)
class ClassEntry:
    label: tuple  # coefficient vector, one per cyclic factor
    divisor: Divisor
    ell: int
    basis: tuple  # basis of L(divisor)


def enumerate_classes(curve: HyperCurve, mw: MWSpec, d: int):
    """One representative divisor per group element, with its dimension.

    Classes are ordered lexicographically by coefficient vector over
    symmetric ranges centered at 0.
    """
    if d < 2:
        raise UnsupportedDivisorShape("degree must be at least 2")
    for _, gen in mw.cyclic_factors:
        if not gen.is_infinity_supported():
            raise UnsupportedDivisorShape("generators must live at infinity")
    shift = _shift_divisor(curve, mw, d)
    ranges = [_coefficient_range(order) for order, _ in mw.cyclic_factors]
    entries = []
    for label in _lex_product(ranges):
        D = shift
        for coeff, (_, gen) in zip(label, mw.cyclic_factors):
            if coeff:
                D = D + gen.scale(coeff)
        space = rr_space(curve, D)
        entries.append(ClassEntry(tuple(label), D, space.dim, space.basis))
    return entries


def _lex_product(ranges):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _lex_product(ranges[1:]):
            yield (head,) + tail


# ---------------------------------------------------------------------------
# Orbit classification


SKIPPED, REDUCIBLE, IMPRIMITIVE, PRIMITIVE, NO_EFFECTIVE = (
    "SkippedPositiveDim",
    "Reducible",
    "Imprimitive",
    "Primitive",
    "NoEffective",
)


@dataclass(frozen=True)
class OrbitVerdict:
    label: tuple
    ell: int
    outcome: str
    subfield_degree: int = None  # for Imprimitive
    witness_divisor: Divisor = None
    witness_minpoly: UniPoly = None
    skip_reason: str = None


def _classify_entry(curve: HyperCurve, entry: ClassEntry, d: int) -> OrbitVerdict:
    if entry.ell >= 2:
        return OrbitVerdict(
            entry.label,
            entry.ell,
            SKIPPED,
            skip_reason="positive-dimensional series on a gonal cover (m=2)",
        )
    if entry.ell == 0:
        return OrbitVerdict(entry.label, 0, NO_EFFECTIVE)
    w = entry.basis[0]
    eff = decompose_effective(curve, w, entry.divisor)
    assert eff.degree == d
    terms = eff.terms
    irreducible = (
        len(terms) == 1 and terms[0][1] == 1 and terms[0][0].degree == d
        and terms[0][0].kind == "affine"
    )
    if not irreducible:
        return OrbitVerdict(entry.label, 1, REDUCIBLE, witness_divisor=eff)
    pt = terms[0][0]
    minpoly = point_field(curve, pt)
    assert minpoly.degree == d
    if _is_prime(d):
        return OrbitVerdict(
            entry.label, 1, PRIMITIVE, witness_divisor=eff, witness_minpoly=minpoly
        )
    report = principal_subfields(nf_new(minpoly))
    if report.is_primitive:
        return OrbitVerdict(
            entry.label, 1, PRIMITIVE, witness_divisor=eff, witness_minpoly=minpoly
        )
    proper = sorted(k for k in report.principal_subfield_degrees if 1 < k < d)
    return OrbitVerdict(
        entry.label,
        1,
        IMPRIMITIVE,
        subfield_degree=proper[0],
        witness_divisor=eff,
        witness_minpoly=minpoly,
    )


@dataclass(frozen=True)
class ClassificationReport:
    degree: int
    group_order: int
    verdicts: tuple
    counts: dict = field(compare=False, default=None)

    def summary(self) -> dict:
        out = {
            SKIPPED: 0,
            REDUCIBLE: 0,
            IMPRIMITIVE: 0,
            PRIMITIVE: 0,
            NO_EFFECTIVE: 0,
        }
        for v in self.verdicts:
            out[v.outcome] += 1
        return out


def classify_points(curve: HyperCurve, mw: MWSpec, d: int, jobs: int = 1):
    """Classify every divisor class of degree d over the finite group.

    With jobs > 1 the per-class work runs in a process pool; results are
    reassembled in canonical label order either way.
    """
    entries = enumerate_classes(curve, mw, d)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(
                pool.map(_classify_entry_star, [(curve, e, d) for e in entries])
            )
    else:
        verdicts = [_classify_entry(curve, e, d) for e in entries]
    verdicts.sort(key=lambda v: v.label)
    report = ClassificationReport(d, len(entries), tuple(verdicts))
    counts = report.summary()
    assert sum(counts.values()) == len(entries)
    return report


def _classify_entry_star(args):
    return _classify_entry(*args)


# ---------------------------------------------------------------------------
# Curves with a prescribed primitive point (genus d-1 construction)


def construct_primitive_curve(m: UniPoly, alpha_seed=0):
    """Build y^2 = h(x) of genus d-1 with a ramified degree-d point.

    Given a primitive degree-d field Q[t]/(m), picks the first rational
    shift a >= alpha_seed (integer steps) such that 2a avoids every sum of
    two roots of m, sets phi = theta - a, and returns the curve with model
    h(X) = minpoly(phi^2)(X^2) together with the ramified witness point
    over minpoly(phi).
    """
    d = m.degree
    if d is None or d < 3:
        raise NotPrimitive("need an irreducible polynomial of degree >= 3")
    if not is_primitive_field(m):
        raise NotPrimitive("defining polynomial generates an imprimitive field")
    m = m.monic()
    # polynomial with roots theta_i + theta_j (all ordered pairs)
    pair_sums = _root_pair_sums(m)
    alpha = Fraction(alpha_seed)
    for _ in range(d * d + 2):
        if pair_sums(2 * alpha) != 0:
            break
        alpha += 1
    else:
        raise NotSeparable("no admissible shift found")
    K = nf_new(m)
    phi = K.gen() - K.const(alpha)
    fsq = nf_minpoly(phi * phi)
    assert fsq.degree == d, "phi^2 must generate the primitive field"
    h = fsq.compose(UniPoly.make([0, 0, 1]))
    from .arith import is_squarefree

    if not is_squarefree(h):
        raise NotSeparable("curve model unexpectedly inseparable")
    curve = curve_new(h)
    assert curve.genus == d - 1
    p_phi = m.shift_x(alpha)  # minimal polynomial of phi = theta - alpha
    assert (h % p_phi).is_zero
    witness = ClosedPoint.affine(p_phi, hyperell.RAM)
    return curve, witness, alpha


def _root_pair_sums(m: UniPoly):
    """Evaluator for the polynomial whose roots are all sums of two roots.

    R(z) = prod_i m(z - theta_i); R(z0) = Res(m, m(z0 - x)) pointwise, so a
    direct evaluation avoids building the full degree-d^2 polynomial.
    """
    from .arith import resultant

    def evaluate(z0):
        inner = m.compose(UniPoly.make([z0, -1]))
        return resultant(m, inner)

    return evaluate


# ---------------------------------------------------------------------------
# Fiber specialization


IRRED_PRIMITIVE, IRRED_IMPRIMITIVE, FIBER_REDUCIBLE, DEGENERATE = (
    "irreducible-primitive",
    "irreducible-imprimitive",
    "reducible",
    "degenerate",
)


def specialize_fiber(curve: HyperCurve, w: CurveFunction, beta) -> str:
    """Classify the fiber of the map w over the rational value beta.

    The fiber divisor is div(w - beta) plus the pole divisor of w; a fiber
    with a repeated place (branch value) reports 'degenerate'.
    """
    if w.is_constant or w.is_zero:
        raise ConstantFunction("fiber of a constant map")
    beta = Fraction(beta)
    poles = divisor_of_function(curve, w).negative_part()
    d = poles.degree
    shifted = w - CurveFunction.constant(beta)
    fiber = divisor_of_function(curve, shifted) + poles
    assert fiber.is_effective and fiber.degree == d
    if any(mult >= 2 for _, mult in fiber.terms):
        return DEGENERATE
    terms = fiber.terms
    if len(terms) == 1 and terms[0][0].kind == "affine" and terms[0][0].degree == d:
        minpoly = point_field(curve, terms[0][0])
        return IRRED_PRIMITIVE if is_primitive_field(minpoly) else IRRED_IMPRIMITIVE
    return FIBER_REDUCIBLE


def fiber_sample_report(curve: HyperCurve, w: CurveFunction, betas):
    """Outcome of specialize_fiber over a list of sample values."""
    outcomes = []
    for beta in betas:
        outcomes.append((Fraction(beta), specialize_fiber(curve, w, beta)))
    total = len(outcomes)
    primitive = sum(1 for _, o in outcomes if o == IRRED_PRIMITIVE)
    return {
        "outcomes": outcomes,
        "total": total,
        "primitive": primitive,
        "primitive_fraction": Fraction(primitive, total) if total else Fraction(0),
    }


# ---------------------------------------------------------------------------
# Quadratic twist census


@dataclass(frozen=True)
class TwistHit:
    r: int
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class TwistCensusResult:
    M: int
    height_bound: int
    hits: tuple  # of TwistHit, ordered by (|r|, r)


def _squarefree_ints(M: int):
    out = []
    for a in range(1, M + 1):
        sf = True
        k = 2
        while k * k <= a:
            if a % (k * k) == 0:
                sf = False
                break
            k += 1
        if sf:
            out.extend([a, -a])
    out.sort(key=lambda r: (abs(r), r))
    return out


def twist_census(f: UniPoly, M: int, height_bound: int) -> TwistCensusResult:
    """Search r*y^2 = f(x) for non-Weierstrass rational points.

    Scans squarefree r with |r| <= M and x = p/q with |p|, |q| bounded by
    the height bound; a hit records an exactly verified witness with
    y != 0.  Points at infinity on odd models are Weierstrass and never
    found by the affine scan.
    """
    assert M >= 1 and height_bound >= 1
    from .arith import is_squarefree

    assert not f.is_zero and f.degree >= 6 and is_squarefree(f)
    xs = []
    for q in range(1, height_bound + 1):
        for p in range(-height_bound, height_bound + 1):
            if gcd(abs(p), q) == 1:
                xs.append(Fraction(p, q))
    values = [(x, f(x)) for x in xs]
    hits = []
    for r in _squarefree_ints(M):
        for x, val in values:
            if val == 0 or (val > 0) != (r > 0):
                continue
            ratio = val / r
            root = rational_sqrt(ratio)
            if root is not None and root != 0:
                assert Fraction(r) * root * root == val
                hits.append(TwistHit(r, x, root))
                break
    return TwistCensusResult(M, height_bound, tuple(hits))
