"""Problem-file format: parsing, positioned errors, serialization, assembly."""

from fractions import Fraction

import pytest

from sphlie.builders import sl_basis, so_basis
from sphlie.errors import NotClosed, ProblemFormatError
from sphlie.liealg import LieAlgebra
from sphlie.problem import (
    Problem,
    build_pair,
    format_rational,
    parse_problem,
    parse_problem_dict,
    parse_problem_text,
    parse_rational,
    positivity_from_hint,
    problem_to_json,
)

H = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1)))
E = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))
F = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
J = ((Fraction(0), Fraction(1)), (Fraction(-1), Fraction(0)))


def sl2_problem(sub, **extra):
    return Problem(name="sl2", matrix_size=2, basis=(H, E, F),
                   subalgebra_basis=tuple(sub), **extra)


def embed(m, offset, total):
    rows = [[Fraction(0)] * total for _ in range(total)]
    for i, row in enumerate(m):
        for j, e in enumerate(row):
            rows[offset + i][offset + j] = e
    return tuple(tuple(r) for r in rows)


# -- scalar parsing -----------------------------------------------------------


def test_parse_rational_accepts_ints_and_fraction_strings():
    assert parse_rational(7, "x") == Fraction(7)
    assert parse_rational(-2, "x") == Fraction(-2)
    assert parse_rational("3/4", "x") == Fraction(3, 4)
    assert parse_rational("-5/2", "x") == Fraction(-5, 2)
    assert parse_rational("6", "x") == Fraction(6)


def test_parse_rational_rejects_bool_zero_denominator_and_garbage():
    with pytest.raises(ProblemFormatError, match="x: expected a number"):
        parse_rational(True, "x")
    with pytest.raises(ProblemFormatError,
                       match=r"basis\[0\]\[0\]\[1\]: malformed rational '1/0'"):
        parse_rational("1/0", "basis[0][0][1]")
    with pytest.raises(ProblemFormatError, match="malformed rational 'zz'"):
        parse_rational("zz", "x")
    with pytest.raises(ProblemFormatError, match="got NoneType"):
        parse_rational(None, "x")


def test_format_rational_round_trips_exactly():
    assert format_rational(Fraction(3)) == 3
    assert format_rational(Fraction(-4)) == -4
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(-5, 3)) == "-5/3"
    for f in (Fraction(3), Fraction(1, 2), Fraction(-7, 11)):
        assert parse_rational(format_rational(f), "x") == f


# -- document-level parsing ---------------------------------------------------


def good_doc():
    return {
        "schema_version": 1,
        "name": "sl2",
        "matrix_size": 2,
        "basis": [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]],
        "subalgebra_basis": [[[0, 1], [-1, 0]]],
    }


def test_parse_problem_dict_happy_path():
    p = parse_problem_dict(good_doc())
    assert p.name == "sl2"
    assert p.matrix_size == 2
    assert p.basis == (H, E, F)
    assert p.subalgebra_basis == (J,)
    assert p.theta is None and p.a_seed is None
    assert p.positivity_basis is None and p.minimal_parabolic_hint is None


def test_rational_strings_inside_matrices():
    doc = good_doc()
    doc["basis"][0] = [["1/2", 0], [0, "-1/2"]]
    p = parse_problem_dict(doc)
    assert p.basis[0] == ((Fraction(1, 2), Fraction(0)),
                          (Fraction(0), Fraction(-1, 2)))


def test_float_literals_are_rejected_with_guidance():
    text = '{"schema_version": 1, "matrix_size": 2, "basis": [[[0.5, 0], [0, -0.5]]], "subalgebra_basis": []}'
    with pytest.raises(ProblemFormatError,
                       match="floating point literal '0.5' is not accepted"):
        parse_problem_text(text)


def test_invalid_json_is_a_format_error():
    with pytest.raises(ProblemFormatError, match="invalid JSON"):
        parse_problem_text("{not json")


def test_unknown_keys_are_listed():
    doc = good_doc()
    doc["extra"] = 1
    doc["also_bad"] = 2
    with pytest.raises(ProblemFormatError,
                       match="unknown keys: also_bad, extra"):
        parse_problem_dict(doc)


def test_schema_version_mismatch():
    doc = good_doc()
    doc["schema_version"] = 2
    with pytest.raises(ProblemFormatError,
                       match="schema_version: expected 1, got 2"):
        parse_problem_dict(doc)


def test_missing_required_keys():
    doc = good_doc()
    del doc["basis"]
    with pytest.raises(ProblemFormatError, match="basis: missing"):
        parse_problem_dict(doc)
    doc = good_doc()
    del doc["subalgebra_basis"]
    with pytest.raises(ProblemFormatError,
                       match="subalgebra_basis: missing"):
        parse_problem_dict(doc)


def test_matrix_size_must_be_a_positive_integer():
    for bad in (0, -1, "2", True, None):
        doc = good_doc()
        doc["matrix_size"] = bad
        with pytest.raises(ProblemFormatError,
                           match="matrix_size: expected a positive integer"):
            parse_problem_dict(doc)


def test_positioned_error_for_wrong_row_length():
    doc = good_doc()
    doc["basis"][2] = [[0, 0], [1, 0, 9]]
    with pytest.raises(ProblemFormatError,
                       match=r"basis\[2\]\[1\]: expected 2 entries, got 3"):
        parse_problem_dict(doc)


def test_positioned_error_for_wrong_row_count_and_non_list_rows():
    doc = good_doc()
    doc["basis"][1] = [[0, 1]]
    with pytest.raises(ProblemFormatError,
                       match=r"basis\[1\]: expected 2 rows, got 1"):
        parse_problem_dict(doc)
    doc = good_doc()
    doc["subalgebra_basis"][0] = [42, [0, 0]]
    with pytest.raises(ProblemFormatError,
                       match=r"subalgebra_basis\[0\]\[0\]: expected 2 entries, "
                             "got int"):
        parse_problem_dict(doc)


def test_empty_basis_rejected_but_empty_subalgebra_allowed():
    doc = good_doc()
    doc["basis"] = []
    with pytest.raises(ProblemFormatError, match="basis: must not be empty"):
        parse_problem_dict(doc)
    doc = good_doc()
    doc["subalgebra_basis"] = []
    assert parse_problem_dict(doc).subalgebra_basis == ()


def test_theta_shape_is_checked_against_algebra_dimension():
    doc = good_doc()
    doc["theta"] = [[1, 0], [0, 1]]
    with pytest.raises(ProblemFormatError,
                       match="theta: expected a 3x3 coordinate matrix"):
        parse_problem_dict(doc)
    doc["theta"] = [[1, 0, 0], [0, 1, 0], [0, 1]]
    with pytest.raises(ProblemFormatError,
                       match="theta: expected a 3x3 coordinate matrix"):
        parse_problem_dict(doc)


def test_hint_must_be_signs_and_excludes_positivity_basis():
    doc = good_doc()
    doc["minimal_parabolic_hint"] = [1, 0]
    with pytest.raises(ProblemFormatError, match="list of 1/-1 signs"):
        parse_problem_dict(doc)
    doc["minimal_parabolic_hint"] = [1, True]
    with pytest.raises(ProblemFormatError, match="list of 1/-1 signs"):
        parse_problem_dict(doc)
    doc["minimal_parabolic_hint"] = [1]
    doc["positivity_basis"] = [[[1, 0], [0, -1]]]
    with pytest.raises(ProblemFormatError, match="mutually exclusive"):
        parse_problem_dict(doc)


def test_parse_problem_reports_unreadable_files(tmp_path):
    with pytest.raises(ProblemFormatError, match="cannot read"):
        parse_problem(tmp_path / "missing.json")


def test_parse_problem_reads_files(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(problem_to_json(sl2_problem([J])), encoding="utf-8")
    assert parse_problem(path) == sl2_problem([J])


# -- serialization round trips ------------------------------------------------


def test_json_round_trip_preserves_every_field():
    p = Problem(
        name="half", matrix_size=2,
        basis=(((Fraction(1, 2), Fraction(0)),
                (Fraction(0), Fraction(-1, 2))), E, F),
        subalgebra_basis=(J,),
        theta=((Fraction(1), Fraction(0), Fraction(0)),
               (Fraction(0), Fraction(0), Fraction(1)),
               (Fraction(0), Fraction(1), Fraction(0))),
        a_seed=(H,),
    )
    assert parse_problem_text(problem_to_json(p)) == p
    q = sl2_problem([J], minimal_parabolic_hint=(1,))
    assert parse_problem_text(problem_to_json(q)) == q
    r = sl2_problem([], positivity_basis=(H,))
    assert parse_problem_text(problem_to_json(r)) == r


def test_serialized_text_is_deterministic_and_float_free():
    text = problem_to_json(sl2_problem([J]))
    assert text == problem_to_json(sl2_problem([J]))
    assert "e-" not in text and "E-" not in text
    assert "." not in text


# -- assembly: positivity, seeds, theta ---------------------------------------


def sl2_times_sl2():
    basis = [embed(m, off, 4) for off in (0, 2) for m in (H, E, F)]
    return LieAlgebra(tuple(basis), name="sl2+sl2")


def test_positivity_from_hint_flips_the_marked_factor():
    g = sl2_times_sl2()
    seed, positivity = positivity_from_hint(g, None, (1, -1))
    h1 = g.from_matrix(embed(H, 0, 4))
    h2 = g.from_matrix(embed(H, 2, 4))
    assert seed.contains(h1) and seed.contains(h2) and seed.dim == 2
    assert positivity == [h1, tuple(-c for c in h2)]


def test_positivity_from_hint_sign_count_must_match_ideals():
    g = sl2_times_sl2()
    with pytest.raises(ProblemFormatError,
                       match="expected 2 signs .*got 1"):
        positivity_from_hint(g, None, (1,))
    so3 = LieAlgebra(so_basis(3), name="so3")
    seed, positivity = positivity_from_hint(so3, None, ())
    assert seed.dim == 0 and positivity == []
    with pytest.raises(ProblemFormatError, match="expected 0 signs"):
        positivity_from_hint(so3, None, (1,))


def test_build_pair_hint_controls_which_root_spaces_are_positive():
    basis = [embed(m, off, 4) for off in (0, 2) for m in (H, E, F)]
    flipped = Problem(name="opp", matrix_size=4, basis=tuple(basis),
                      subalgebra_basis=(), minimal_parabolic_hint=(1, -1))
    pair = build_pair(flipped)
    g = pair.cartan.algebra
    assert pair.cartan.n.contains(g.from_matrix(embed(E, 0, 4)))
    assert pair.cartan.n.contains(g.from_matrix(embed(F, 2, 4)))
    assert not pair.cartan.n.contains(g.from_matrix(embed(E, 2, 4)))


def test_build_pair_explicit_positivity_basis_flips_sl2():
    neg_h = tuple(tuple(-e for e in row) for row in H)
    p = sl2_problem([], positivity_basis=(neg_h,))
    pair = build_pair(p)
    g = pair.cartan.algebra
    assert pair.cartan.n.contains(g.from_matrix(F))
    assert not pair.cartan.n.contains(g.from_matrix(E))


def test_build_pair_a_seed_path_and_membership_errors():
    pair = build_pair(sl2_problem([J], a_seed=(H,)))
    assert pair.cartan.a.contains(pair.cartan.algebra.from_matrix(H))
    e11 = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0)))
    with pytest.raises(ProblemFormatError,
                       match=r"a_seed\[0\]: not an element of the algebra"):
        build_pair(sl2_problem([J], a_seed=(e11,)))
    with pytest.raises(ProblemFormatError,
                       match=r"positivity_basis\[0\]: not an element"):
        build_pair(sl2_problem([J], positivity_basis=(e11,)))


def test_build_pair_theta_override_matches_default_for_so3():
    base = Problem(name="so3", matrix_size=3, basis=so_basis(3),
                   subalgebra_basis=(so_basis(3)[0],))
    identity = tuple(tuple(Fraction(1 if i == j else 0) for j in range(3))
                     for i in range(3))
    with_theta = Problem(name="so3", matrix_size=3, basis=so_basis(3),
                         subalgebra_basis=(so_basis(3)[0],), theta=identity)
    assert build_pair(base).cartan.k.dim == 3
    assert build_pair(with_theta).cartan.k == build_pair(base).cartan.k


def test_build_pair_rejects_non_closed_subalgebras():
    with pytest.raises(NotClosed):
        build_pair(sl2_problem([E, F]))


def test_build_pair_full_sl3_smoke():
    p = Problem(name="sl3", matrix_size=3, basis=sl_basis(3),
                subalgebra_basis=(so_basis(3)[0], so_basis(3)[1],
                                  so_basis(3)[2]),
                minimal_parabolic_hint=(1,))
    pair = build_pair(p)
    assert pair.cartan.algebra.dim == 8
    assert pair.h.dim == 3
    assert len(pair.cartan.simple_roots) == 2
