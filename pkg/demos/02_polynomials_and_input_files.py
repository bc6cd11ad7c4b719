"""
Polynomials, rings, and the input grammar
=========================================

Everything is exact: coefficients are rationals, printing is deterministic
(descending graded-lex), and the printer output parses back to the same
polynomial.  Presentation files bundle a ring, ideal generators, optional
weight lines, and the coefficient valuation.
"""

from tropval import parse_poly, parse_presentation, parse_ring, poly_to_str

ring = parse_ring("ring x y z;")
print("variables:", ring.variables)

f = parse_poly(ring, "x^2*y - 3*y + 1")
g = parse_poly(ring, "(x + y)^2 - x^2 - y^2")
print("f          =", poly_to_str(f))
print("g          =", poly_to_str(g), "   (parentheses expand and cancel)")
print("f * g      =", poly_to_str(f * g))

# round trip: print then parse
assert parse_poly(ring, poly_to_str(f * g)) == f * g
print("print/parse round trip holds")

source = """
# a hyperbola over Q with a uniformizer variable
ring t x;
ideal t*x - 1;
weight -1 1;
coeffval tadic t -1;
"""
parsed = parse_presentation(source)
print("\npresentation file parsed:")
print("  ring:", parsed.ring.variables)
print("  generators:", [poly_to_str(p) for p in parsed.ideal_gens])
print("  weight lines:", [str(w) for w in parsed.weights])
print("  coefficient valuation:", parsed.coeff_valuation.kind,
      "(t pinned at weight -1)")
