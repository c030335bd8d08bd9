import itertools
from fractions import Fraction

import pytest

from primpoints.arith import UniPoly, factor_over_Q, poly
from primpoints.errors import NotInert, ReduciblePolynomial, ZeroPolynomial
from primpoints.numfield import (
    NfPoly,
    absolute_minpoly,
    factor_over_nf,
    is_primitive_field,
    nf_minpoly,
    nf_new,
    principal_subfields,
)


def test_nf_new():
    K = nf_new(poly(-2, 0, 1))
    assert K.degree == 2
    with pytest.raises(ReduciblePolynomial):
        nf_new(poly(-1, 0, 1))
    with pytest.raises(ZeroPolynomial):
        nf_new(UniPoly.zero())
    assert nf_new(poly(-2, 0, 0, 0, 1)).degree == 4
    # non-monic input is normalized
    assert nf_new(poly(-4, 0, 2)).min_poly == poly(-2, 0, 1)


def test_nf_element_arithmetic():
    K = nf_new(poly(-2, 0, 1))  # Q(sqrt 2)
    t = K.gen()
    assert (t * t).repr == poly(2)
    inv = t.inverse()
    assert (t * inv).repr == poly(1)
    assert (t + K.one()).coords() == [1, 1]
    assert t.norm() == -2  # Norm(sqrt2) = -2


def test_nf_minpoly_examples():
    K = nf_new(poly(-2, 0, 1))
    assert nf_minpoly(K.gen()) == poly(-2, 0, 1)
    K4 = nf_new(poly(-2, 0, 0, 0, 1))
    theta2 = K4.gen() * K4.gen()
    assert nf_minpoly(theta2) == poly(-2, 0, 1)  # (theta^2)^2 = 2
    assert nf_minpoly(K4.const(3)) == poly(-3, 1)


def test_factor_over_nf_quadratic_field():
    K = nf_new(poly(-2, 0, 1))
    t = K.gen()
    a = NfPoly.from_rational(K, poly(-2, 0, 1))
    unit, factors = factor_over_nf(K, a)
    assert unit.repr == poly(1)
    assert [f.degree for f, _ in factors] == [1, 1]
    roots = sorted(str((-f.coeff(0)).repr) for f, _ in factors)
    assert roots == sorted([str(t.repr), str((-t).repr)])

    b = NfPoly.from_rational(K, poly(-3, 0, 1))
    _, factors_b = factor_over_nf(K, b)
    assert [f.degree for f, _ in factors_b] == [2]  # x^2-3 stays irreducible


def test_factor_over_nf_cubic_field():
    K = nf_new(poly(-2, 0, 0, 1))
    a = NfPoly.from_rational(K, poly(-2, 0, 0, 1))
    _, factors = factor_over_nf(K, a)
    assert sorted(f.degree for f, _ in factors) == [1, 2]
    # the quadratic factor has no root in K: else x^3-2 would split completely
    quad = next(f for f, _ in factors if f.degree == 2)
    lin = next(f for f, _ in factors if f.degree == 1)
    assert (-lin.coeff(0)).repr == UniPoly.x()  # root is theta itself


def test_factor_over_nf_with_multiplicity():
    K = nf_new(poly(-2, 0, 1))
    base = NfPoly.from_rational(K, poly(-2, 0, 1))
    sq = base * base
    _, factors = factor_over_nf(K, sq)
    assert sorted(m for _, m in factors) == [2, 2]


# ---------------------------------------------------------------------------
# brute-force subfield oracle: enumerate small power combinations of theta,
# take minimal polynomials, and record any proper intermediate degree


def brute_force_proper_subfield_degrees(K, coeff_range=(-2, 3), max_support=2):
    d = K.degree
    found = set()
    gen = K.gen()
    powers = [gen**i for i in range(1, d)]
    indices = range(len(powers))
    for support in range(1, max_support + 1):
        for combo in itertools.combinations(indices, support):
            for coefs in itertools.product(
                range(coeff_range[0], coeff_range[1]), repeat=support
            ):
                if all(c == 0 for c in coefs):
                    continue
                e = K.zero()
                for idx, c in zip(combo, coefs):
                    if c:
                        e = e + powers[idx] * Fraction(c)
                if e.is_zero:
                    continue
                k = nf_minpoly(e).degree
                if 1 < k < d:
                    found.add(k)
    return found


CORPUS = [
    # (defining polynomial, expected primitive?)
    (poly(-2, 0, 1), True),  # quadratic: no intermediate field possible
    (poly(-2, 0, 0, 1), True),  # prime degree 3
    (poly(-2, 0, 0, 0, 1), False),  # Q(2^(1/4)) contains Q(sqrt2)
    (poly(1, 0, 0, 0, 1), False),  # 8th cyclotomic: three quadratic subfields
    (poly(1, 1, 0, 0, 1), True),  # x^4+x+1, Galois group S4
    (poly(1, -1, 0, 0, 1), True),  # x^4-x+1
    (poly(1, 0, 1, 0, 1), False),  # x^4+x^2+1 = (x^2+x+1)(x^2-x+1): reducible guard
    (poly(-2, 0, 0, 0, 0, 0, 1), False),  # x^6-2: subfields of degree 2 and 3
    (poly(-1, -1, 0, 0, 0, 1), True),  # x^5-x-1 prime degree
    (poly(-1, -1, 0, 0, 0, 0, 1), True),  # x^6-x-1: Galois group S6
]


def test_principal_subfields_examples():
    report = principal_subfields(nf_new(poly(-2, 0, 0, 0, 1)))
    assert not report.is_primitive
    assert 2 in report.principal_subfield_degrees
    assert all(k in (1, 2, 4) for k in report.principal_subfield_degrees)

    report3 = principal_subfields(nf_new(poly(-2, 0, 0, 1)))
    assert report3.is_primitive

    report41 = principal_subfields(nf_new(poly(1, 1, 0, 0, 1)))
    assert report41.is_primitive


def test_is_primitive_field_examples():
    assert is_primitive_field(poly(-1, -1, 0, 0, 0, 1))  # x^5-x-1
    assert not is_primitive_field(poly(-2, 0, 0, 0, 1))  # x^4-2
    assert not is_primitive_field(poly(-2, 0, 0, 0, 0, 0, 1))  # x^6-2
    with pytest.raises(ReduciblePolynomial):
        is_primitive_field(poly(-1, 0, 0, 0, 1))  # x^4-1 reducible
    with pytest.warns(UserWarning):
        assert not is_primitive_field(poly(-5, 1))


def test_primitivity_matches_brute_force_oracle():
    for m, expected in CORPUS:
        if not factor_over_Q(m).is_irreducible():
            continue
        assert is_primitive_field(m) == expected, str(m)
        if m.degree in (4, 6):
            K = nf_new(m)
            oracle = brute_force_proper_subfield_degrees(K)
            assert (not oracle) == expected, str(m)
            report = principal_subfields(K)
            for k in oracle:
                assert k in report.principal_subfield_degrees


def test_x6_subfield_degrees():
    report = principal_subfields(nf_new(poly(-2, 0, 0, 0, 0, 0, 1)))
    ks = set(report.principal_subfield_degrees)
    assert 2 in ks and 3 in ks


# ---------------------------------------------------------------------------
# absolute minimal polynomial of (x, y) with p(x)=0, y^2=f(x)


def test_absolute_minpoly_quadratic_point():
    # p = x-2, f = x+1: y^2 = 3
    out = absolute_minpoly(poly(-2, 1), poly(1, 1), 0)
    assert out == poly(-3, 0, 1)


def test_absolute_minpoly_degree4():
    # p = x^2-2, f = x: y^2 = sqrt(2), so y^4 = 2
    out = absolute_minpoly(poly(-2, 0, 1), poly(0, 1), 0)
    assert out == poly(-2, 0, 0, 0, 1)


def test_absolute_minpoly_not_inert():
    with pytest.raises(NotInert):
        absolute_minpoly(poly(-1, 1), poly(0, 1), 0)  # y^2 = 1 splits
    with pytest.raises(NotInert):
        absolute_minpoly(poly(0, 1), poly(0, 1), 0)  # f = 0 mod p: ramified


def test_absolute_minpoly_degree_and_irreducibility():
    # cubic point: p = x^3-2, f = x+3 (f(2^(1/3)) is not a square in the field)
    out = absolute_minpoly(poly(-2, 0, 0, 1), poly(3, 1), 0)
    assert out.degree == 6
    assert factor_over_Q(out).is_irreducible()
