"""Standard parabolics form a lattice; a spherical pair picks out one node.

For sl(3,R) the two simple restricted roots give four standard parabolic
subalgebras, ordered exactly like the subsets of the simple roots.  Among
them exactly one is *adapted* to a spherical subalgebra h: its nilradical
complements n ∩ h inside n.  For h = so(3) that unique subset is empty.
Run:  python3 demos/04_adapted_parabolic_lattice.py
"""

import itertools

from sphlie import (
    LieAlgebra,
    adapted_parabolic,
    cartan_data,
    containment_check,
    spherical_pair,
    standard_parabolic,
)
from sphlie.builders import sl_basis, so_basis

g = LieAlgebra(sl_basis(3), name="sl3")
cd = cartan_data(g)
simple = list(range(len(cd.simple_roots)))
print(f"sl3: {len(cd.simple_roots)} simple roots, "
      f"{2 ** len(simple)} standard parabolics\n")

subsets = [tuple(c) for k in range(len(simple) + 1)
           for c in itertools.combinations(simple, k)]
parabolics = {f: standard_parabolic(cd, f) for f in subsets}
for f, pd in parabolics.items():
    print(f"  F = {str(f) if f else '()':<8} q dim {pd.q.dim:>2}  "
          f"levi dim {pd.levi.dim}  nilradical dim {pd.nilradical.dim}")

print("\ncontainment mirrors the subset order:")
for f, fp in itertools.product(subsets, repeat=2):
    if f != fp and set(f) <= set(fp):
        contained = parabolics[f].q.is_contained_in(parabolics[fp].q)
        lemma = containment_check(parabolics[f], parabolics[fp])
        print(f"  {f or '()'} <= {fp}: q contained {contained}, "
              f"levi-meets-nilradical-trivially lemma {lemma}")

h = g.span_of_matrices(tuple(so_basis(3)))
pair = spherical_pair(cd, h, label="sl3 / so3")
adapted = adapted_parabolic(pair)
print(f"\nfor h = so(3): the unique adapted subset is {adapted.subset_indices}")
print(f"nilradical dim {adapted.nilradical.dim} complements "
      f"n ∩ h (dim {cd.n.dim - adapted.nilradical.dim}) inside n (dim {cd.n.dim})")
