"""
Weight-induced valuations and the tropicalization map
=====================================================

A weight vector induces a candidate valuation on the quotient algebra: the
value of an element is the top weight of its normal form.  Sampling probes
whether the candidate is multiplicative; the tuple of generator values is
then a certified tropical point of the presenting ideal whenever the
candidate is a genuine valuation.
"""

from fractions import Fraction

from tropval import (
    WeightVector,
    check_axioms,
    check_trop_membership,
    make_weight_valuation,
    parse_poly,
    parse_presentation,
    poly_to_str,
    pullback,
    tropicalize,
)
from tropval.poly import Presentation, RingContext

W = lambda *a: WeightVector(tuple(Fraction(v) for v in a))

# --- the univariate picture: value = slope * degree -------------------------
t_ring = RingContext(("t",))
v = make_weight_valuation(Presentation(t_ring, ()), W(Fraction(7, 3)))
p = parse_poly(t_ring, "3*t^4 + t")
print("slope 7/3:  v(3t^4 + t) =", v.evaluate(p).to_str())

# --- cancellation in a quotient ---------------------------------------------
line = parse_presentation("ring x y;\nideal x + y + 1;\n").presentation
v11 = make_weight_valuation(line, W(1, 1))
f = parse_poly(line.ring, "x + y")
print("\non Q[x,y]/(x+y+1) with weights (1,1):")
print("  normal form of x+y:", poly_to_str(v11.normal_form_of(f)))
print("  v(x+y) =", v11.evaluate(f).to_str(), " (the top terms cancel)")
print("  generator values:", tropicalize(v11))
print("  certified tropical point:",
      check_trop_membership(line, tropicalize(v11)).ok)

# --- a weight that is NOT multiplicative -------------------------------------
hyp = parse_presentation("ring x y;\nideal x*y - 1;\n").presentation
bad = make_weight_valuation(hyp, W(1, 0))
report = check_axioms(bad, seed=7, n_pairs=200)
print("\non Q[x,y]/(xy-1) with weights (1,0):", report.verdict)
a, b, got, expected = report.multiplicativity_failures[0]
print(f"  witness: v(({poly_to_str(a)}) * ({poly_to_str(b)})) = {got.to_str()}"
      f" but v(a)+v(b) = {expected.to_str()}")

# --- pullback along a subalgebra ---------------------------------------------
good = make_weight_valuation(hyp, W(2, -2))
axis = Presentation(RingContext(("x",)), ())
restricted = pullback([parse_poly(hyp.ring, "x")], good, axis)
q = parse_poly(axis.ring, "x^3 + x")
print("\npullback to Q[x]:  v(x^3 + x) =", restricted.evaluate(q).to_str())
print("inverted variable: v(y) =",
      good.evaluate(parse_poly(hyp.ring, "y")).to_str(), "= -v(x)")
