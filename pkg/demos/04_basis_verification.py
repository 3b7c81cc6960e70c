"""
Verifying the identity bases by exhaustive linear algebra
=========================================================

For every multilinear component in range, the sweep computes the kernel
of the evaluation map (the identities) and the span of all substitution
instances of the generating family (the consequences), then checks the
two subspaces are equal. Over GF(2) both families pass everywhere; over
GF(3) the characteristic-two family is not even sound, and the report
carries an explicit witness polynomial for the failure.
"""

from wittid import SweepConfig, verify_basis_theorem

print("u1 family (equal-parity brackets) over GF(2), n <= 4, |degree| <= 3:")
report = verify_basis_theorem(SweepConfig(model="u1", nmax=4, dmax=3))
print(f"  components: {len(report.spaces)}, summary: {report.summary}")

print("\nw1 family (brackets with degrees >= -1 plus x^c, c <= -2), same range:")
report = verify_basis_theorem(
    SweepConfig(model="w1", family_range="wide", nmax=4, dmax=3)
)
print(f"  components: {len(report.spaces)}, summary: {report.summary}")
entry = report.entry_for([-1, -1])
print(
    f"  degrees (-1, -1): identity dim {entry['dimIdentity']}, "
    f"consequence dim {entry['dimConsequence']} "
    "(covered through the degree -2 variable)"
)

print("\nThe same u1 family over GF(3) fails soundness:")
report = verify_basis_theorem(SweepConfig(model="u1", nmax=2, dmax=3, field="gf3"))
print(f"  summary: {report.summary}")
entry = report.entry_for([1, 3])
print(
    f"  degrees (1, 3): sound={entry['sound']}, witness {entry['witness']!r} "
    "(the bracket of e1 and e3 is 2*e4, nonzero mod 3)"
)
