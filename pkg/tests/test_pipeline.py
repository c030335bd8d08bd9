from fractions import Fraction

import pytest

from primpoints.arith import UniPoly, is_squarefree, poly
from primpoints.errors import (
    ConstantFunction,
    NotPrimitive,
    UnsupportedDivisorShape,
)
from primpoints.hyperell import (
    OO_MINUS,
    OO_PLUS,
    RAM,
    ClosedPoint,
    CurveFunction,
    Divisor,
    curve_new,
    divisor_of_function,
    point_field,
    rr_space,
)
from primpoints.numfield import is_primitive_field
from primpoints.pipeline import (
    DEGENERATE,
    IRRED_PRIMITIVE,
    PRIMITIVE_ONLY,
    UNKNOWN,
    YES,
    Cover,
    CoverRow,
    FinitenessInput,
    MWSpec,
    classify_finiteness,
    classify_points,
    classify_row,
    construct_primitive_curve,
    cs_bound,
    enumerate_classes,
    fiber_sample_report,
    specialize_fiber,
    twist_census,
)


def x1_45(d):
    return FinitenessInput(41, Cover("relative", 3, 9), d, True, False)


def test_classify_finiteness_x1_45():
    assert classify_finiteness(x1_45(6)).degree_d_finite == PRIMITIVE_ONLY
    assert classify_finiteness(x1_45(5)).degree_d_finite == YES
    assert classify_finiteness(x1_45(8)).degree_d_finite == UNKNOWN
    for d in (2, 3, 4, 7):
        assert classify_finiteness(x1_45(d)).degree_d_finite == YES


def test_classify_finiteness_gonal():
    # hyperelliptic genus 6 (gonality 2): primitive-finite for even 4 <= d <= 6
    inp = FinitenessInput(6, Cover("gonal", 2), 4, True, False)
    assert classify_finiteness(inp).degree_d_finite == PRIMITIVE_ONLY
    inp3 = FinitenessInput(6, Cover("gonal", 2), 3, True, False)
    assert classify_finiteness(inp3).degree_d_finite == YES
    # d = m is excluded for gonal covers
    inp2 = FinitenessInput(6, Cover("gonal", 2), 2, True, False)
    assert classify_finiteness(inp2).degree_d_finite == UNKNOWN
    # simple-Jacobian route needs d <= g-1
    inp_b = FinitenessInput(6, Cover("gonal", 2), 5, False, True)
    assert classify_finiteness(inp_b).degree_d_finite == YES
    inp_b2 = FinitenessInput(6, Cover("gonal", 2), 6, False, True)
    assert classify_finiteness(inp_b2).degree_d_finite == UNKNOWN


def test_classify_finiteness_monotone_in_genus():
    for g in range(7, 20):
        inp = FinitenessInput(g, Cover("gonal", 2), 4, True, False)
        assert classify_finiteness(inp).degree_d_finite == PRIMITIVE_ONLY


def test_cs_bound_examples():
    assert cs_bound(4, 0, 1, 2, 2)  # genus-4 hyperelliptic cannot be bielliptic
    assert not cs_bound(3, 0, 1, 2, 2)  # genus 2, 3 exceptions exist
    assert cs_bound(1, 0, 0, 1, 1)


def test_classify_row_x1_45():
    row = CoverRow("45", 41, Cover("relative", 3, 9), True, False, (2, 19))
    finite, prim = classify_row(row)
    assert finite == [2, 3, 4, 5, 7]
    assert prim == [6]


X0_71 = curve_new(
    UniPoly.make([-11, 4, 40, 30, -70, -122, 1, 148, 111, -26, -77, -38, -2, 4, 1])
)
D0 = Divisor.make(
    [(ClosedPoint.infinite(OO_PLUS), 1), (ClosedPoint.infinite(OO_MINUS), -1)]
)
D_INF = Divisor.make(
    [(ClosedPoint.infinite(OO_PLUS), 1), (ClosedPoint.infinite(OO_MINUS), 1)]
)
MW_71 = MWSpec(((35, D0),), D_INF)


def test_enumerate_classes_trivial_group():
    curve = curve_new(poly(1, 0, 0, 0, 0, 0, 1))
    mw = MWSpec(((1, Divisor.zero()),), D_INF)
    entries = enumerate_classes(curve, mw, 2)
    assert len(entries) == 1
    assert entries[0].ell == 2  # the hyperelliptic pencil


def test_enumerate_classes_x0_71_degree2():
    entries = enumerate_classes(X0_71, MW_71, 2)
    assert len(entries) == 35
    ells = {e.label[0]: e.ell for e in entries}
    assert ells[0] == 2
    assert all(v <= 1 for a, v in ells.items() if a != 0)
    assert sum(1 for v in ells.values() if v == 2) == 1
    labels = [e.label[0] for e in entries]
    assert labels == sorted(labels) and labels[0] == -17 and labels[-1] == 17


def test_enumerate_classes_rejects_bad_shapes():
    with pytest.raises(UnsupportedDivisorShape):
        enumerate_classes(X0_71, MW_71, 1)
    bad_gen = Divisor.make(
        [
            (ClosedPoint.affine(poly(0, 1), RAM), 1),
            (ClosedPoint.infinite(OO_PLUS), -1),
        ]
    )
    with pytest.raises(UnsupportedDivisorShape):
        enumerate_classes(X0_71, MWSpec(((2, bad_gen),), D_INF), 2)


def test_classify_points_x0_71_degree4_head():
    report = classify_points(X0_71, MW_71, 4)
    counts = report.summary()
    assert counts["Primitive"] == 0
    assert sum(counts.values()) == 35


def test_mwspec_validation():
    with pytest.raises(AssertionError):
        MWSpec(((35, D_INF),), D_INF)  # generator must have degree 0


# ---------------------------------------------------------------------------
# construction of curves with a prescribed primitive point


def test_construct_primitive_curve_cubic():
    curve, witness, alpha = construct_primitive_curve(poly(-2, 0, 0, 1))
    assert alpha == 0
    assert curve.genus == 2 and curve.f.degree == 6
    assert is_squarefree(curve.f)
    assert witness.branch == RAM and witness.degree == 3
    assert (curve.f % witness.p).is_zero
    assert is_primitive_field(point_field(curve, witness))


def test_construct_primitive_curve_quintic():
    curve, witness, _ = construct_primitive_curve(poly(-1, -1, 0, 0, 0, 1))
    assert curve.genus == 4 and curve.f.degree == 10
    assert witness.degree == 5
    assert is_primitive_field(point_field(curve, witness))


def test_construct_primitive_curve_rejects_imprimitive():
    with pytest.raises(NotPrimitive):
        construct_primitive_curve(poly(-2, 0, 0, 0, 1))  # x^4 - 2


# ---------------------------------------------------------------------------
# fiber specialization


def build_fiber_map():
    curve, witness, _ = construct_primitive_curve(poly(-2, 0, 0, 1))
    D = Divisor.make([(witness, 1)])
    space = rr_space(curve, D)
    assert space.dim == 2
    w = next(b for b in space.basis if not b.is_constant)
    return curve, witness, w


def test_specialize_fiber_pole_anchor():
    curve, witness, w = build_fiber_map()
    # the inverted map has the witness divisor as its zero fiber
    w_inv = w.invert(curve)
    poles = divisor_of_function(curve, w_inv).negative_part()
    fiber = divisor_of_function(curve, w_inv) + poles
    assert fiber == Divisor.make([(witness, 1)])
    assert specialize_fiber(curve, w_inv, 0) == IRRED_PRIMITIVE


def test_specialize_fiber_sampling():
    curve, _, w = build_fiber_map()
    report = fiber_sample_report(curve, w, range(1, 21))
    assert report["total"] == 20
    # cubic fibers are primitive whenever irreducible; most sample values are
    assert report["primitive_fraction"] >= Fraction(1, 2)
    for _, outcome in report["outcomes"]:
        assert outcome in (IRRED_PRIMITIVE, "irreducible-imprimitive", "reducible", DEGENERATE)


def test_specialize_fiber_constant_rejected():
    curve, _, _ = build_fiber_map()
    with pytest.raises(ConstantFunction):
        specialize_fiber(curve, CurveFunction.constant(3), 0)


# ---------------------------------------------------------------------------
# quadratic twist census


def test_twist_census_x6_plus_1():
    f = poly(1, 0, 0, 0, 0, 0, 1)
    result = twist_census(f, 3, 3)
    rs = [hit.r for hit in result.hits]
    assert 2 in rs  # f(+-1) = 2
    assert 1 in rs  # f(0) = 1
    for hit in result.hits:
        assert Fraction(hit.r) * hit.y * hit.y == f(hit.x)
        assert hit.y != 0
    assert rs == sorted(rs, key=lambda r: (abs(r), r))


def test_twist_census_monotone_in_height():
    f = poly(1, 0, 0, 0, 0, 0, 1)
    small = twist_census(f, 20, 2)
    large = twist_census(f, 20, 6)
    assert len(small.hits) <= len(large.hits)
    assert {h.r for h in small.hits} <= {h.r for h in large.hits}


def test_twist_census_sign_obstruction():
    # f(x) = -(x^6 + 1) is negative everywhere: no positive twists can hit
    f = poly(-1, 0, 0, 0, 0, 0, -1)
    result = twist_census(f, 5, 4)
    assert all(hit.r < 0 for hit in result.hits)
