"""
Exact max-plus arithmetic
=========================

The scalar type of the whole workbench: rationals together with a bottom
element that plays the role of minus infinity.  Addition is max and
multiplication is ordinary +, so "multiplying" monomials adds their
weights and "adding" picks the dominant one.
"""

from fractions import Fraction

from tropval import BOTTOM, monomial_weight, trop, trop_add, trop_mul

a, b = trop(3), trop(Fraction(7, 2))
print("3 (+) 7/2      =", trop_add(a, b).to_str())
print("3 (x) 7/2      =", trop_mul(a, b).to_str())

# bottom is the additive identity and absorbs products
print("bottom (+) 3   =", trop_add(BOTTOM, a).to_str())
print("bottom (x) 3   =", trop_mul(BOTTOM, a).to_str())

# idempotency: adding a value to itself changes nothing
print("3 (+) 3        =", trop_add(a, a).to_str())

# the weight of a scaled monomial: coefficient value (x) sum of w_i * e_i
w = (Fraction(1), Fraction(-2))
print("weight of x*y^2 under (1, -2):",
      monomial_weight(w, (1, 2), trop(0)).to_str())
print("same monomial, zero coefficient:",
      monomial_weight(w, (1, 2), BOTTOM).to_str())
