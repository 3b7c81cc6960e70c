"""
Structure constants of the Witt-type algebras
==============================================

The models u1 (derivations of Laurent polynomials) and w1 (derivations of
the polynomial ring) have one-dimensional graded components spanned by
e_i, with bracket [e_i, e_j] = (j - i) e_{i+j}. Over a field of
characteristic two the coefficient survives exactly when i and j have
opposite parity, which is what drives everything else in this package.
"""

from wittid import Field, u1_model, w1_model

gf2 = Field.gf(2)
gf3 = Field.gf(3)

print("Brackets in u1 over GF(2):")
m = u1_model(gf2)
for i, j in [(1, 2), (1, 3), (-1, 0), (-1, 1), (2, 4)]:
    value = m.bracket(m.basis_element(i), m.basis_element(j))
    print(f"  [e{i}, e{j}] = {m.format_element(value)}")

print("\nThe same brackets over GF(3) keep their integer coefficients mod 3:")
m3 = u1_model(gf3)
for i, j in [(1, 2), (1, 3), (-1, 1), (2, 4)]:
    value = m3.bracket(m3.basis_element(i), m3.basis_element(j))
    print(f"  [e{i}, e{j}] = {m3.format_element(value)}")

print("\nw1 truncates the support at degree -1:")
w = w1_model(gf2)
print(f"  dim of the component at degree -2: {w.dim(-2)}")
value = w.bracket(w.basis_element(-1), w.basis_element(0))
print(f"  [e-1, e0] = {w.format_element(value)}")
value = w.bracket(w.basis_element(-1), w.basis_element(-1))
print(f"  [e-1, e-1] = {w.format_element(value)} (the coefficient vanishes in any field)")
