"""
Order relations between valuations and the cone structure
=========================================================

v implies w when every inequality v(a) <= v(b) forces the matching
w-inequality.  On a free polynomial algebra this is decided exactly (it is
a half-space containment of weight vectors); elsewhere the verdict is a
certificate or an honest "no counterexample in n samples".  Sums of
valuations under a common hypothesis stay valuations, and positive
rescaling never changes the facet (the initial ideal).
"""

from fractions import Fraction

from tropval import (
    WeightVector,
    arrow_check,
    cone_sum,
    facet_classes,
    implies_check,
    make_weight_valuation,
    parse_presentation,
    poly_to_str,
    scale,
)
from tropval.poly import Presentation, RingContext

W = lambda *a: WeightVector(tuple(Fraction(v) for v in a))
free = Presentation(RingContext(("x", "y")), ())

v = make_weight_valuation(free, W(2, 1))
w = make_weight_valuation(free, W(1, 0))
verdict = implies_check(v, w, exact_mode=True)
a, b = verdict.witness
print("does (2,1) imply (1,0) on Q[x,y]?", verdict.status)
print(f"  witness pair: v({poly_to_str(a)}) = v({poly_to_str(b)})"
      f" but w({poly_to_str(a)}) > w({poly_to_str(b)})")

u = make_weight_valuation(free, W(4, 2))
print("does (2,1) imply (4,2)?",
      implies_check(v, u, exact_mode=True).status, "(positive rescaling)")

line = parse_presentation("ring x y;\nideal x + y + 1;\n").presentation
s = cone_sum(make_weight_valuation(line, W(1, 1)),
             make_weight_valuation(line, W(1, 1)),
             make_weight_valuation(line, W(2, 2)),
             seed=0, n_samples=150)
print("\ncone sum on the line quotient: weights", s.valuation.weights,
      "| axioms:", s.axiom_report.verdict,
      "| implication:", s.implies_verdict.status)

tripled = scale(make_weight_valuation(line, W(1, 1)), 3)
part = facet_classes(line, [W(1, 1), tripled.weights, W(1, 0)])
print("facet classes of {(1,1), (3,3), (1,0)}:",
      [str(c.representative) for c in part.classes])

print("\niterated initial ideals on the line:")
for v_w, w_w in ((W(2, 2), W(1, 1)), (W(0, -1), W(1, 0))):
    res = arrow_check(line, v_w, w_w)
    print(f"  in_({v_w})(in_({w_w})(I)) == in_({v_w})(I)?  {res.status}")
