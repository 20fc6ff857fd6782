"""Normalizers split into h plus a torus-like complement; compactness shows.

For a spherical subalgebra h, the normalizer n(h) decomposes as h plus a
complement c sitting inside the distinguished reductive part of the Levi;
c splits further into a split part (visible as extra rank directions) and
a compact factor (negative definite for the invariant form).  A sampling
check over exact group elements separates compact stabilizers from split
ones by hunting for a witness where h + Ad(g)p stops filling g.
Run:  python3 demos/06_normalizers_and_transitivity.py
"""

from fractions import Fraction

from sphlie import (
    LieAlgebra,
    canonical_basis,
    cartan_data,
    compact_transitivity_check,
    conjugate_search,
    normalizer_report,
    spherical_pair,
    structure_report,
)
from sphlie.builders import gl_basis, sl_basis


def fr(*entries):
    return tuple(Fraction(e) for e in entries)


def describe(name, report):
    print(f"{name}:")
    print(f"  normalizer dim {report.normalizer.dim} = h "
          f"+ complement dim {report.complement.dim} "
          f"(split {report.split_part.dim}, compact {report.compact_factor.dim})")
    print(f"  split_ok {report.split_ok}, elementary_ok {report.elementary_ok}, "
          f"self_normalizing_ok {report.self_normalizing_ok}, "
          f"same_adapted_ok {report.same_adapted_ok}")


# gl(2,R) acting on the projective line: the stabilizer of a point contains
# a projection; its normalizer gains the scalar line — a *split* direction.
gl2 = LieAlgebra(gl_basis(2), name="gl2")
cdg = cartan_data(gl2)
proj = gl2.span_of_matrices(((fr(1, 0), fr(1, 0)),))
pair = spherical_pair(cdg, proj, label="gl2 / line")
found = conjugate_search(pair, budget=5)
moved = spherical_pair(cdg, found.conjugated, label="gl2 / line (moved)")
describe("gl2 projective line", normalizer_report(structure_report(moved)))

# sl(2,R) and the rotation subalgebra so(2): the stabilizer is self-
# normalizing, and transitivity sampling stays consistent with compactness.
sl2 = LieAlgebra(sl_basis(2), name="sl2")
cd = cartan_data(sl2)
so2 = canonical_basis([fr(0, 1, -1)], 3)
so2_pair = spherical_pair(cd, so2, label="sl2 / so2")
describe("\nsl2 rotations", normalizer_report(structure_report(so2_pair)))
verdict = compact_transitivity_check(so2_pair, samples=100, seed=0)
print(f"  transitivity sampling: {verdict.verdict} "
      f"({verdict.samples_run} samples)")

# The opposite Borel direction a + nbar is split: a witness appears fast.
a_nbar = canonical_basis([fr(1, 0, 0), fr(0, 0, 1)], 3)
an_pair = spherical_pair(cd, a_nbar, label="sl2 / a+nbar")
verdict = compact_transitivity_check(an_pair, samples=100, seed=0)
print(f"\nsl2 opposite Borel directions: {verdict.verdict} "
      f"at sample {verdict.samples_run}, witness {verdict.witness_description}")
