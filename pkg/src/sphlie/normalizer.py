"""Exact normalizers of spherical subalgebras and their structure.

For a spherical pair the normalizer of h in g splits as h plus a complement
drawn from the compact-reductive part z(l) + (compact ideals) of the adapted
Levi; the complement itself splits into a split-abelian part inside the
noncompact center and a compact-type part.  All of this is verified here by
exact subspace identities and reported as flags.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificationError, NotClosed, SpectrumError
from .liealg import LieAlgebra
from .linalg import (
    Subspace,
    complement_in,
    identity_matrix,
    image_subspace,
    is_zero_vector,
    kernel,
    mat_apply,
    project_along,
    residual_operator,
    restrict_bilinear_form,
    subspace_intersect,
    subspace_sum,
    symmetric_signature,
    unit_vector,
)
from .spectral import eigen_split
from .spherical import StructureReport


def normalizer_in(g: LieAlgebra, h: Subspace) -> Subspace:
    """The normalizer of a subalgebra: all x with [x, h] contained in h.

    Solved as one exact kernel computation; the result is certified to be a
    subalgebra containing h as an ideal.
    """
    if not g.is_subalgebra(h):
        raise NotClosed("can only normalize a subalgebra")
    res = residual_operator(h)
    rows = []
    for u in h.basis:
        cols = [mat_apply(res, g.bracket(unit_vector(g.dim, j), u))
                for j in range(g.dim)]
        for r in range(g.dim):
            rows.append([cols[j][r] for j in range(g.dim)])
    out = kernel(rows, g.dim) if rows else g.full_space()
    if not h.is_contained_in(out) or not g.is_subalgebra(out):
        raise CertificationError(
            "normalizer certification failed (library bug)")
    return out


def _normalizes(g: LieAlgebra, part: Subspace, target: Subspace) -> bool:
    return all(target.contains(g.bracket(x, u))
               for x in part.basis for u in target.basis)


@dataclass(frozen=True, eq=False)
class NormalizerReport:
    """Normalizer of h together with its verified splitting.

    When all flags hold: ``normalizer`` = h ⊕ ``complement`` with the
    complement inside z(l) + (compact ideals) of the adjusted Levi;
    ``complement`` = ``split_part`` ⊕ ``compact_factor``; the whole
    normalizer is self-normalizing; and the adapted subset for h also works
    for the normalizer.  ``elementary_ok`` certifies the quotient shape: the
    split part is abelian and acts diagonalizably with rational spectrum,
    the compact factor carries a negative semidefinite invariant form whose
    radical is central, and the two commute.
    """

    normalizer: Subspace
    complement: Subspace
    split_part: Subspace
    compact_factor: Subspace
    split_ok: bool
    elementary_ok: bool
    self_normalizing_ok: bool
    same_adapted_ok: bool

    @property
    def all_ok(self) -> bool:
        return (self.split_ok and self.elementary_ok
                and self.self_normalizing_ok and self.same_adapted_ok)


def normalizer_report(sr: StructureReport) -> NormalizerReport:
    pair = sr.pair
    cd = pair.cartan
    g = cd.algebra
    fs = sr.levi_structure
    phi = sr.levi_adjustment

    ntilde = normalizer_in(g, pair.h)
    if phi == identity_matrix(g.dim):
        h_std = pair.h
        n_std = ntilde
    else:
        h_std = sr.standard_form_h
        n_std = normalizer_in(g, h_std)
        if image_subspace(phi, n_std) != ntilde:
            raise CertificationError(
                "normalizer is not conjugation-equivariant (library bug)")

    compactish = subspace_sum(fs.z_cp, fs.compact_ideals)
    dsub = fs.reductive_complement
    c_std = complement_in(subspace_intersect(h_std, dsub),
                          subspace_intersect(n_std, dsub))
    a_std = project_along(c_std, fs.z_np, compactish)
    m_std = project_along(c_std, compactish, fs.z_np)

    split_ok = (
        subspace_intersect(c_std, h_std).dim == 0
        and subspace_sum(h_std, c_std) == n_std
        and c_std.is_contained_in(dsub)
        and a_std.dim + m_std.dim == c_std.dim
        and subspace_sum(a_std, m_std) == c_std
        and _normalizes(g, a_std, h_std)
        and _normalizes(g, m_std, h_std)
    )

    def _elementary() -> bool:
        for i, x in enumerate(a_std.basis):
            for y in a_std.basis[i:]:
                if not is_zero_vector(g.bracket(x, y)):
                    return False
        for x in a_std.basis:
            try:
                eigen_split(g.ad(x), g.full_space())
            except SpectrumError:
                return False
        gram = restrict_bilinear_form(g.invariant_form(), m_std)
        npos, _, nzero = symmetric_signature(gram)
        if npos:
            return False
        if nzero:
            centre = g.center()
            radical = kernel([list(row) for row in gram], m_std.dim)
            for coords in radical.basis:
                if not centre.contains(m_std.from_coordinates(coords)):
                    return False
        for x in a_std.basis:
            for y in m_std.basis:
                if not is_zero_vector(g.bracket(x, y)):
                    return False
        return True

    elementary_ok = _elementary()
    self_normalizing_ok = normalizer_in(g, ntilde) == ntilde
    n_meet = subspace_intersect(cd.n, ntilde)
    u = sr.adapted.nilradical
    same_adapted_ok = (u.dim + n_meet.dim == cd.n.dim
                       and subspace_sum(u, n_meet) == cd.n)

    return NormalizerReport(
        normalizer=ntilde,
        complement=image_subspace(phi, c_std),
        split_part=image_subspace(phi, a_std),
        compact_factor=image_subspace(phi, m_std),
        split_ok=split_ok,
        elementary_ok=elementary_ok,
        self_normalizing_ok=self_normalizing_ok,
        same_adapted_ok=same_adapted_ok,
    )
