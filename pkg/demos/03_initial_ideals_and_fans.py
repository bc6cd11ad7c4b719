"""
Initial ideals, monomial freeness, and the weight grid
======================================================

The initial ideal at a weight vector keeps the top-weight forms of a
weight-refined basis.  Weights may be negative: the computation
homogenizes, saturates, and recomputes behind the scenes.  A weight vector
is a certified tropical point when its initial ideal contains no monomial,
which is decided by saturating at the product of the variables.
"""

from fractions import Fraction

from tropval import (
    WeightVector,
    contains_monomial,
    enumerate_fan,
    initial_ideal,
    parse_presentation,
    poly_to_str,
)

P = parse_presentation("ring x y;\nideal x + y + 1;\n").presentation
W = lambda *a: WeightVector(tuple(Fraction(v) for v in a))

for w in (W(0, 0), W(1, 1), W(1, 0), W(-1, 0), W(0, -1)):
    gens = initial_ideal(P, w)
    free, witness = contains_monomial(gens, P.ring)
    tag = "monomial: " + (poly_to_str(witness) if free else "none")
    print(f"w = ({w})   in_w = {[poly_to_str(g) for g in gens]}   {tag}")

print("\nwhole grid [-1, 1]^2 grouped by initial ideal:")
for i, cls in enumerate(enumerate_fan(P, 1, 1)):
    mark = "tropical" if cls.monomial_free else "monomial"
    print(f"  class {i}: repr ({cls.representative}) size {len(cls.members)}"
          f"  [{mark}]  gens {[poly_to_str(g) for g in cls.initial_gens]}")

# the three rays of the tropical line and its vertex are exactly the
# monomial-free classes above
