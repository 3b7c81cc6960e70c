"""
The free graded Lie algebra and its multilinear components
==========================================================

Lie elements are compared through the expansion [a, b] -> ab - ba into
the free associative algebra, with all signs carried by field
arithmetic. A multilinear component on n distinct variables has
dimension (n-1)!, with a basis of left-normed monomials that start with
the highest-indexed variable; coordinates over that basis are read off
the associative words that start with the leading variable and every
conversion is certified against the full expansion.
"""

from wittid import (
    Field,
    MultilinearSpace,
    Pair,
    Var,
    expand_to_associative,
    format_monomial,
    leftnormed_basis,
    leftnormed_coordinates,
    multilinearize,
    parse_polynomial,
)
from wittid.freealg import LiePoly

gf2 = Field.gf(2)
rationals = Field.rationals()

print("Expansion of [x1, x2] over GF(2) (sign collapse) and over the rationals:")
bracket = (Var(1, 0), Var(2, 0))
print(f"  gf2:      {expand_to_associative(bracket, gf2)!r}")
print(f"  rational: {expand_to_associative(bracket, rationals)!r}")

print("\n[x2, x1] and -[x1, x2] are the same Lie element (stored differently):")
a = LiePoly.monomial(rationals, (Var(2, 1), Var(1, 2)))
b = LiePoly.monomial(rationals, (Var(1, 2), Var(2, 1)), rationals.from_int(-1))
print(f"  same stored terms: {a.same_terms(b)}, equal as Lie elements: {a == b}")

print("\nThe component on x1^2, x2^4, x3^1 has dimension 2 with basis:")
space = MultilinearSpace.for_degrees([2, 4, 1], gf2)
for mono in leftnormed_basis(space):
    print(f"  {format_monomial(mono)}")

tree = Pair(Var(3, 1), Pair(Var(1, 2), Var(2, 4)))
coords = leftnormed_coordinates(tree, space)
print(f"\n[x3, [x1, x2]] has coordinates {coords} over that basis")
print("(both basis monomials appear: that is the Jacobi identity mod 2)")

print("\nFull polarization of [x1^0, x2^2, x1^0] in its repeated variable:")
f = parse_polynomial("[x1^0, x2^2, x1^0]", gf2)
h = multilinearize(f, Var(1, 0))
print(f"  {h!r}")
