"""Exact subspaces: the arithmetic layer everything else stands on.

Every subspace is stored as the reduced row echelon basis of its span, so
equal subspaces are equal Python objects — no tolerances, no "almost".
Run:  python3 demos/01_exact_subspaces.py
"""

from fractions import Fraction

from sphlie import canonical_basis, complement_in, subspace_intersect, subspace_sum
from sphlie.linalg import mat_apply, residual_operator


def fr(*entries):
    return tuple(Fraction(e) for e in entries)


def show(label, s):
    print(f"{label}: dim {s.dim}, basis {[tuple(map(str, v)) for v in s.basis]}")


# Two different spanning sets for the same plane in Q^3.
plane_a = canonical_basis([fr(1, 1, 0), fr(0, "1/3", 1)], 3)
plane_b = canonical_basis([fr(3, 3, 0), fr(1, 2, 3), fr(2, 3, 3)], 3)
show("plane (spanning set 1)", plane_a)
show("plane (spanning set 2)", plane_b)
print("equal as objects:", plane_a == plane_b)
print()

# Thirds stay thirds: no rounding anywhere.
line = canonical_basis([fr("1/3", "1/3", 0)], 3)
show("a line with fractional data (inside plane 1)", line)
print()

# Sum, intersection, and a deterministic complement.
other = canonical_basis([fr(0, 0, 1), fr(0, 1, 0)], 3)
show("second plane", other)
show("sum", subspace_sum(plane_a, other))
show("intersection", subspace_intersect(plane_a, other))
show("complement of the line inside plane 1", complement_in(line, plane_a))
print()

# The residual operator R of a subspace s: R v = 0 exactly when v lies in s.
r = residual_operator(plane_a)
inside = fr(1, 1, 0)
outside = fr(1, 0, 0)
print("residual of a vector in the plane:    ",
      tuple(map(str, mat_apply(r, inside))))
print("residual of a vector off the plane:   ",
      tuple(map(str, mat_apply(r, outside))))
