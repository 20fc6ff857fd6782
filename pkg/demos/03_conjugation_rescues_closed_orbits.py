"""Openness depends on the base point; conjugation can rescue it.

The line h = R·E in sl(2,R) is the stabilizer direction of a *closed* orbit:
p + h stops at dimension 2.  Conjugating h by an exact group element (here a
Weyl-type representative, a signed permutation matrix) flips it onto R·F,
and the orbit becomes open.  The search only ever uses exponentials of
nilpotent matrices and such representatives, so every entry stays rational.
Run:  python3 demos/03_conjugation_rescues_closed_orbits.py
"""

from fractions import Fraction

from sphlie import (
    LieAlgebra,
    canonical_basis,
    cartan_data,
    conjugate_search,
    is_spherical,
    spherical_pair,
    structure_report,
)
from sphlie.builders import sl_basis

g = LieAlgebra(sl_basis(2), name="sl2")
cd = cartan_data(g)

h = canonical_basis([(Fraction(0), Fraction(1), Fraction(0))], 3)  # R·E
pair = spherical_pair(cd, h, label="sl2 / n")

ok, defect = is_spherical(pair)
print(f"at the base point: p + h = g?  {ok} (defect {defect})")

found = conjugate_search(pair, budget=5)
print(f"search: found after {found.attempts} attempts, element {found.description}")
print("conjugating matrix:")
for row in found.element:
    print("   ", tuple(map(str, row)))

moved = spherical_pair(cd, found.conjugated, label="sl2 / Ad(w)n")
print(f"after conjugation: p + h = g?  {is_spherical(moved)[0]}")
report = structure_report(moved)
print(f"adapted subset {report.adapted_subset}, rank {report.rank}")

# An honestly hopeless case: h = 0 can never become spherical by
# conjugation (Ad(g)·0 = 0), and the search says "inconclusive" — never
# "non-spherical" — because sampling cannot prove a negative.
zero_pair = spherical_pair(cd, g.zero_space(), label="sl2 / 0")
print(f"\nh = 0: search result over budget 30:",
      conjugate_search(zero_pair, budget=30))
