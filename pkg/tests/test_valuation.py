import random
from fractions import Fraction

import pytest

from conftest import W, load
from tropval.poly import Polynomial, Presentation, RingContext
from tropval.textio import parse_poly, poly_to_str
from tropval.trop import BOTTOM, trop
from tropval.valuation import (
    NonfiniteGeneratorValueError,
    NotAHomomorphismError,
    check_axioms,
    check_trop_membership,
    cross_presentation_consistency,
    make_weight_valuation,
    pullback,
    random_polynomial,
    tropicalize,
)

T_RING = RingContext(("t",))
FREE_T = Presentation(T_RING, ())


def test_univariate_degree_valuation():
    v = make_weight_valuation(FREE_T, W(2))
    assert v.evaluate(parse_poly(T_RING, "3*t^4 + t")) == trop(8)
    assert v.evaluate(parse_poly(T_RING, "5")) == trop(0)
    assert v.evaluate(Polynomial.zero(T_RING)) == BOTTOM
    rng = random.Random(20)
    for _ in range(60):
        p = random_polynomial(rng, T_RING, 12)
        assert v.evaluate(p) == trop(2 * p.total_degree())
    assert check_axioms(v, seed=1, n_pairs=120, degree_bound=8).verdict == "valuation"


def test_zero_weights_give_trivial_valuation(line):
    v = make_weight_valuation(line, W(0, 0))
    assert v.evaluate(parse_poly(line.ring, "x^3 - 7*y")) == trop(0)
    member = parse_poly(line.ring, "x + y + 1") * parse_poly(line.ring, "x - y")
    assert v.evaluate(member) == BOTTOM
    assert check_axioms(v, seed=2, n_pairs=100).verdict == "valuation"


def test_cancellation_in_the_quotient(line):
    v = make_weight_valuation(line, W(1, 1))
    f = parse_poly(line.ring, "x + y")
    assert poly_to_str(v.normal_form_of(f)) == "-1"
    assert v.evaluate(f) == trop(0)
    assert tropicalize(v) == W(1, 1)


def test_weight_outside_the_tropical_set_collapses(line):
    # The top-weight reduction at (1, 0) rewrites x to -y - 1, so every
    # nonzero class gets value 0: the candidate degenerates to the trivial
    # valuation, which is genuinely multiplicative, and its tropicalization
    # lands at the origin rather than at the requested weights.
    v = make_weight_valuation(line, W(1, 0))
    assert v.evaluate(parse_poly(line.ring, "x")) == trop(0)
    report = check_axioms(v, seed=7, n_pairs=300)
    assert report.verdict == "valuation"
    assert tropicalize(v) == W(0, 0)
    assert check_trop_membership(line, tropicalize(v), "certified").ok


def test_hyperbola_bad_weight_is_refuted(hyperbola):
    v = make_weight_valuation(hyperbola, W(1, 0))
    report = check_axioms(v, seed=7, n_pairs=200)
    assert report.verdict == "quasi_valuation_only"
    assert report.multiplicativity_failures
    a, b, got, expected = report.multiplicativity_failures[0]
    assert got < expected  # submultiplicative, never the other way


def test_hyperbola_balanced_weight_is_a_valuation(hyperbola):
    v = make_weight_valuation(hyperbola, W(1, -1))
    x = parse_poly(hyperbola.ring, "x")
    y = parse_poly(hyperbola.ring, "y")
    assert v.evaluate(x) == trop(1)
    assert v.evaluate(y) == trop(-1)
    assert v.evaluate(x * y) == trop(0)
    assert check_axioms(v, seed=7, n_pairs=200).verdict == "valuation"


def test_subadditivity_and_submultiplicativity_always_hold(cubic, hyperbola):
    # the floor holds for genuine valuations and for quasi-valuations alike
    candidates = [
        make_weight_valuation(cubic, W(1, 2, 3)),
        make_weight_valuation(hyperbola, W(1, 0)),  # fails multiplicativity
    ]
    for v in candidates:
        ring = v.presentation.ring
        rng = random.Random(3)
        for _ in range(120):
            a = random_polynomial(rng, ring, 3)
            b = random_polynomial(rng, ring, 3)
            va, vb = v.evaluate(a), v.evaluate(b)
            assert v.evaluate(a + b) <= max(va, vb)
            prod_cap = BOTTOM if (va.is_bottom or vb.is_bottom) \
                else trop(va.value + vb.value)
            assert v.evaluate(a * b) <= prod_cap


def test_strict_drop_forces_equal_values(cubic):
    v = make_weight_valuation(cubic, W(1, 2, 3))
    rng = random.Random(4)
    drops = 0
    for _ in range(400):
        a = random_polynomial(rng, cubic.ring, 3)
        b = random_polynomial(rng, cubic.ring, 3)
        va, vb = v.evaluate(a), v.evaluate(b)
        if v.evaluate(a + b) != max(va, vb):
            drops += 1
            assert va == vb
    assert drops > 0  # the sampler does exercise cancellations


def test_tropicalize_requires_finite_generators():
    ring = RingContext(("x", "y"))
    killed = Presentation(ring, (parse_poly(ring, "x"),))
    v = make_weight_valuation(killed, W(0, 0))
    with pytest.raises(NonfiniteGeneratorValueError):
        tropicalize(v)


def test_membership_modes(line):
    assert check_trop_membership(line, W(0, 0), "certified").ok
    res = check_trop_membership(line, W(1, 0), "prevariety")
    assert not res.ok
    assert poly_to_str(res.witness) == "x + y + 1"
    assert check_trop_membership(line, W(2, 2), "certified").ok
    res = check_trop_membership(line, W(1, 0), "certified")
    assert not res.ok and res.witness.is_monomial()


def test_membership_with_uniformizer():
    P = load("tadic.ideal")  # t*x = 1 with t pinned at weight -1
    assert check_trop_membership(P, W(-1, 1), "certified").ok
    # the pinned component makes the t-entry of the request irrelevant
    assert check_trop_membership(P, W(99, 1), "certified").ok
    assert not check_trop_membership(P, W(0, 2), "prevariety").ok


def test_pullback_identity_and_localization(hyperbola):
    v = make_weight_valuation(hyperbola, W(2, -2))
    # identity injection
    same = pullback([parse_poly(hyperbola.ring, "x"),
                     parse_poly(hyperbola.ring, "y")], v, hyperbola)
    rng = random.Random(5)
    for _ in range(40):
        f = random_polynomial(rng, hyperbola.ring, 3)
        assert same.evaluate(f) == v.evaluate(f)
    # chart inclusion determined together with v(y) = -v(x)
    axis = Presentation(RingContext(("x",)), ())
    vx = pullback([parse_poly(hyperbola.ring, "x")], v, axis)
    assert vx.evaluate(parse_poly(axis.ring, "x^3 + x")) == trop(6)
    assert v.evaluate(parse_poly(hyperbola.ring, "y")) == trop(-2)
    # tropicalizing the pullback reads values through the generator images
    assert tropicalize(vx) == W(2)


def test_pullback_composition_law():
    ambient = Presentation(T_RING, ())
    v = make_weight_valuation(ambient, W(3))
    mid_ring = RingContext(("u",))
    top_ring = RingContext(("s",))
    mid = Presentation(mid_ring, ())
    top = Presentation(top_ring, ())
    f_star = pullback([parse_poly(T_RING, "t^2")], v, mid)
    g_then_f = pullback([parse_poly(mid_ring, "u^3")], f_star, top)
    composite = pullback([parse_poly(T_RING, "t^6")], v, top)
    rng = random.Random(6)
    for _ in range(40):
        p = random_polynomial(rng, top_ring, 4)
        assert g_then_f.evaluate(p) == composite.evaluate(p)


def test_pullback_rejects_non_homomorphisms(hyperbola):
    v = make_weight_valuation(hyperbola, W(1, -1))
    bad = Presentation(RingContext(("w",)),
                       (parse_poly(RingContext(("w",)), "w^2 - 1"),))
    with pytest.raises(NotAHomomorphismError):
        pullback([parse_poly(hyperbola.ring, "x")], v, bad)


def test_cross_presentation_redundant_generator():
    square_ring = RingContext(("a", "b"))
    ambient = Presentation(T_RING, ())
    v = make_weight_valuation(ambient, W(Fraction(3, 2)))
    redundant = Presentation(
        square_ring, (parse_poly(square_ring, "b - a^2"),))
    plain = Presentation(RingContext(("a",)), ())
    res = cross_presentation_consistency(
        [(plain, [parse_poly(T_RING, "t")]),
         (redundant, [parse_poly(T_RING, "t"), parse_poly(T_RING, "t^2")])],
        v)
    assert res.ok
    assert res.tuples[1][1].value == 2 * res.tuples[1][0].value


def test_cross_presentation_single_presentation_is_vacuous():
    ambient = Presentation(T_RING, ())
    v = make_weight_valuation(ambient, W(1))
    res = cross_presentation_consistency(
        [(Presentation(RingContext(("g",)), ()), [parse_poly(T_RING, "t")])], v)
    assert res.ok


def test_cross_presentation_dictionary_mismatch():
    ambient = Presentation(T_RING, ())
    v = make_weight_valuation(ambient, W(1))
    with pytest.raises(ValueError):
        cross_presentation_consistency(
            [(Presentation(RingContext(("g", "h")), ()), [parse_poly(T_RING, "t")])],
            v)
