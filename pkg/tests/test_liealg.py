from fractions import Fraction

import pytest

from sphlie.builders import (
    add,
    block_embed,
    direct_sum_basis,
    elementary,
    gl,
    regular_diagonal_positivity,
    scale,
    sl,
    sl2_E,
    sl2_F,
    sl2_H,
    sl_basis,
    so,
    so_basis,
)
from sphlie.errors import (
    CertificationError,
    DimensionMismatch,
    NotClosed,
    NotReductive,
    SpectrumError,
)
from sphlie.liealg import (
    LieAlgebra,
    cartan_data,
    cartan_decompose,
    centralizer_in,
    default_involution,
    maximal_abelian,
    restricted_root_decomposition,
    simple_ideal_split,
    subalgebra,
)
from sphlie.linalg import (
    as_vector,
    canonical_basis,
    is_zero_vector,
    mat_apply,
    membership,
    subspace_intersect,
    subspace_sum,
    symmetric_signature,
    unit_vector,
)

F = Fraction


# -- independent oracle: Killing form of sl2 from hand-written ad matrices --
# basis order (H, E, F); brackets [H,E]=2E, [H,F]=-2F, [E,F]=H written out
# directly, no library calls.

AD_H = ((0, 0, 0), (0, 2, 0), (0, 0, -2))
AD_E = ((0, 0, 1), (-2, 0, 0), (0, 0, 0))
AD_F = ((0, -1, 0), (0, 0, 0), (2, 0, 0))


def trace_of_product(a, b):
    n = len(a)
    return sum(a[i][j] * b[j][i] for i in range(n) for j in range(n))


def test_sl2_killing_matches_ad_trace_oracle():
    g = sl(2)
    b = g.killing_form()
    # oracle values
    assert trace_of_product(AD_H, AD_H) == 8
    assert trace_of_product(AD_E, AD_F) == 4
    assert trace_of_product(AD_E, AD_E) == 0
    # library values in the same basis order (H, E, F)
    assert b[0][0] == F(8)
    assert b[1][2] == F(4)
    assert b[1][1] == F(0)
    # full cross-check of the 3x3 Gram matrix against the oracle
    ads = [AD_H, AD_E, AD_F]
    for i in range(3):
        for j in range(3):
            assert b[i][j] == trace_of_product(ads[i], ads[j])


def test_structure_constants_sl2():
    g = sl(2)
    h, e, f = (unit_vector(3, i) for i in range(3))
    assert g.bracket(h, e) == as_vector((0, 2, 0))
    assert g.bracket(h, f) == as_vector((0, 0, -2))
    assert g.bracket(e, f) == as_vector((1, 0, 0))


def test_jacobi_and_antisymmetry_on_basis_triples():
    for g in (sl(2), so(3), gl(2), sl(3)):
        d = g.dim
        basis = [unit_vector(d, i) for i in range(d)]
        for x in basis:
            for y in basis:
                assert g.bracket(x, y) == tuple(-c for c in g.bracket(y, x))
                for z in basis:
                    lhs = g.bracket(x, g.bracket(y, z))
                    mid = g.bracket(y, g.bracket(z, x))
                    rhs = g.bracket(z, g.bracket(x, y))
                    assert is_zero_vector(as_vector(
                        [a + b + c for a, b, c in zip(lhs, mid, rhs)]))


def test_killing_form_ad_invariance():
    g = sl(3)
    b = g.killing_form()
    d = g.dim

    def bv(u, v):
        return sum(u[i] * b[i][j] * v[j] for i in range(d) for j in range(d))

    basis = [unit_vector(d, i) for i in range(d)]
    for x in basis[:4]:
        for y in basis:
            for z in basis:
                assert bv(g.bracket(x, y), z) + bv(y, g.bracket(x, z)) == 0


def test_dependent_basis_rejected():
    with pytest.raises(DimensionMismatch):
        LieAlgebra([sl2_H(), sl2_H()])


def test_not_closed_reports_pair():
    with pytest.raises(NotClosed) as exc:
        LieAlgebra([sl2_H(), add(sl2_E(), sl2_F())])
    assert "0 and 1" in str(exc.value)


def test_so3_killing_negative_definite():
    g = so(3)
    assert symmetric_signature(g.killing_form()) == (0, 3, 0)


def test_invariant_form_gl2():
    g = gl(2)
    kappa = g.invariant_form()
    # the identity matrix spans the center; kappa(I, I) = tr(I^2) = 2
    iden = g.from_matrix(add(elementary(2, 0, 0), elementary(2, 1, 1)))
    val = sum(iden[i] * kappa[i][j] * iden[j]
              for i in range(4) for j in range(4))
    assert val == F(2)
    # nondegenerate on all of gl2
    assert symmetric_signature(kappa)[2] == 0


def test_invariant_form_requires_reductive():
    # 2-dim solvable: span(H, E) is closed but not reductive
    g = LieAlgebra([sl2_H(), sl2_E()])
    with pytest.raises(NotReductive):
        g.invariant_form()


def test_cartan_decompose_sl2():
    g = sl(2)
    theta, k, s = cartan_decompose(g)
    assert k == canonical_basis([(0, 1, -1)], 3)
    assert s == canonical_basis([(1, 0, 0), (0, 1, 1)], 3)
    # theta holds E <-> -F
    assert mat_apply(theta, unit_vector(3, 1)) == as_vector((0, 0, -1))


def test_default_involution_needs_transpose_closure():
    g = LieAlgebra([sl2_H(), sl2_E()])  # upper triangular, not theta-stable
    with pytest.raises(NotClosed):
        default_involution(g)


def test_maximal_abelian_sl2_default_and_seeded():
    g = sl(2)
    _, _, s = cartan_decompose(g)
    a = maximal_abelian(g, s)
    assert a == canonical_basis([(1, 0, 0)], 3)
    seed = canonical_basis([(0, 1, 1)], 3)  # span(E + F)
    a2 = maximal_abelian(g, s, seed=seed)
    assert a2 == seed
    # certificate: z_s(a) = a
    assert centralizer_in(g, a2, within=s) == a2


def test_restricted_roots_sl2():
    cd = cartan_data(sl(2))
    assert cd.roots == ((F(-2),), (F(2),))
    assert cd.positive_roots == ((F(2),),)
    assert cd.simple_roots == ((F(2),),)
    assert cd.root_space((F(2),)) == canonical_basis([(0, 1, 0)], 3)
    assert cd.n == canonical_basis([(0, 1, 0)], 3)
    assert cd.p == canonical_basis([(1, 0, 0), (0, 1, 0)], 3)
    assert cd.m.dim == 0
    assert cd.root_value((F(2),), (1, 0, 0)) == F(2)


def test_restricted_roots_gl2():
    g = gl(2)
    cd = cartan_data(g)
    # a = diagonal matrices; one positive root; g0 = a; m = 0
    assert cd.a.dim == 2
    assert len(cd.roots) == 2
    assert len(cd.positive_roots) == 1
    assert cd.zero_space == cd.a
    assert cd.m.dim == 0
    # center of gl2 sits inside g0
    z = g.center()
    assert z.is_contained_in(cd.zero_space)
    assert z.dim == 1


def test_restricted_roots_sl3_upper_triangular_positivity():
    g = sl(3)
    reg = g.from_matrix(regular_diagonal_positivity(3))
    h1 = unit_vector(8, 0)
    cd = cartan_data(g, positivity_basis=[reg, h1])
    assert len(cd.roots) == 6
    assert len(cd.positive_roots) == 3
    assert len(cd.simple_roots) == 2
    # n is spanned by the strictly upper triangular part
    exp = g.span_of_matrices([elementary(3, 0, 1), elementary(3, 0, 2),
                              elementary(3, 1, 2)])
    assert cd.n == exp
    assert cd.zero_space == cd.a
    # root space brackets satisfy [g_a, g_b] <= g_(a+b)
    rootset = set(cd.roots)
    for alpha in cd.roots:
        for beta in cd.roots:
            target = tuple(x + y for x, y in zip(alpha, beta))
            ga, gb = cd.root_space(alpha), cd.root_space(beta)
            for u in ga.basis:
                for v in gb.basis:
                    w = g.bracket(u, v)
                    if is_zero_vector(w):
                        continue
                    if target in rootset:
                        assert cd.root_space(target).contains(w)
                    elif all(t == 0 for t in target):
                        assert cd.zero_space.contains(w)
                    else:
                        raise AssertionError("bracket escaped the grading")


def test_theta_flips_root_spaces():
    from sphlie.linalg import image_subspace

    cd = cartan_data(sl(3))
    for alpha in cd.roots:
        neg = tuple(-x for x in alpha)
        assert image_subspace(cd.theta, cd.root_space(alpha)) == cd.root_space(neg)


def test_root_decomposition_dimension_formula():
    for g, kwargs in ((sl(2), {}), (sl(3), {}), (gl(2), {}), (so(3), {})):
        cd = cartan_data(g, **kwargs)
        total = cd.zero_space.dim + sum(cd.root_space(r).dim for r in cd.roots)
        assert total == g.dim
        assert subspace_sum(cd.m, cd.a) == cd.zero_space
        assert subspace_intersect(cd.m, cd.a).dim == 0


def test_so3_has_no_roots():
    cd = cartan_data(so(3))
    assert cd.a.dim == 0
    assert cd.roots == ()
    assert cd.p.dim == 3 and cd.p == cd.algebra.full_space()
    assert cd.n.dim == 0
    assert cd.m == cd.k


def test_nonsemisimple_ad_spectrum_raises():
    # euclidean motion algebra: J rotates the translation plane (X, Y);
    # custom theta fixes J and flips X, Y, so a = span(X, Y) and ad X is a
    # nonzero nilpotent -> exact spectrum error, no float fallback
    J = ((0, -1, 0), (1, 0, 0), (0, 0, 0))
    X = elementary(3, 0, 2)
    Y = elementary(3, 1, 2)
    g = LieAlgebra([J, X, Y], name="euclid(2)")
    theta = ((1, 0, 0), (0, -1, 0), (0, 0, -1))
    th, k, s = cartan_decompose(g, theta)
    a = maximal_abelian(g, s)
    assert a.dim == 2
    with pytest.raises(SpectrumError):
        restricted_root_decomposition(g, a, theta=theta)


def test_maximality_certificate_enforced():
    g = sl(3)
    th, k, s = cartan_decompose(g)
    small = canonical_basis([unit_vector(8, 0)], 8)  # span(H1) only
    with pytest.raises(CertificationError):
        restricted_root_decomposition(g, small)


def test_simple_ideal_split_sl2_so3():
    sp = simple_ideal_split(sl(2))
    assert sp.center.dim == 0
    assert len(sp.ideals) == 1
    assert sp.ideals[0][0].dim == 3 and sp.ideals[0][1] is False

    sp = simple_ideal_split(so(3))
    assert sp.center.dim == 0
    assert len(sp.ideals) == 1 and sp.ideals[0][1] is True


def test_simple_ideal_split_center_plus_compact():
    # so(3) + R*I inside 3x3 matrices
    iden = tuple(tuple(F(1) if i == j else F(0) for j in range(3)) for i in range(3))
    g = LieAlgebra(so_basis(3) + [iden], name="so3+center")
    sp = simple_ideal_split(g)
    assert sp.center.dim == 1
    assert len(sp.ideals) == 1 and sp.ideals[0][1] is True


def test_simple_ideal_split_mixed_product():
    basis = direct_sum_basis([sl_basis(2), so_basis(3)])
    g = LieAlgebra(basis, name="sl2+so3")
    sp = simple_ideal_split(g)
    assert sp.center.dim == 0
    flags = sorted(c for _, c in sp.ideals)
    assert flags == [False, True]
    assert sum(sp_.dim for sp_, _ in sp.ideals) == 6
    # the pieces really are ideals of g
    for ideal, _ in sp.ideals:
        for u in ideal.basis:
            for j in range(g.dim):
                assert ideal.contains(g.bracket(unit_vector(g.dim, j), u))


def test_simple_ideal_split_two_noncompact():
    basis = direct_sum_basis([sl_basis(2), sl_basis(2)])
    g = LieAlgebra(basis, name="sl2+sl2")
    sp = simple_ideal_split(g)
    assert [c for _, c in sp.ideals] == [False, False]
    assert len(sp.ideals) == 2


def test_simple_ideal_split_rejects_nonreductive():
    g = LieAlgebra([sl2_H(), sl2_E()])
    with pytest.raises(NotReductive):
        simple_ideal_split(g)


def test_subalgebra_roundtrip():
    g = sl(3)
    block = g.span_of_matrices([
        add(elementary(3, 0, 0), scale(-1, elementary(3, 1, 1))),
        elementary(3, 0, 1), elementary(3, 1, 0)])
    sub = subalgebra(g, block)
    assert sub.dim == 3
    assert symmetric_signature(sub.killing_form()) == (2, 1, 0)  # sl2-type
