"""Problem files: an exact, JSON-compatible input format for pairs (g, h).

Every numeric entry is an integer or a string "p/q"; floating point
literals are rejected outright, because exactness is the contract of the
whole package.  Parse errors carry the position of the offending entry,
e.g. ``basis[2][0][1]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ProblemFormatError
from .liealg import (
    LieAlgebra,
    cartan_data,
    cartan_decompose,
    maximal_abelian,
    simple_ideal_split,
)
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    canonical_basis,
    subspace_intersect,
    subspace_sum,
    vec_scale,
)
from .spherical import SphericalPair, spherical_pair

SCHEMA_VERSION = 1

_KNOWN_KEYS = frozenset({
    "schema_version", "name", "matrix_size", "basis", "subalgebra_basis",
    "theta", "a_seed", "positivity_basis", "minimal_parabolic_hint",
})


@dataclass(frozen=True)
class Problem:
    """A parsed problem: ambient matrices for g, a spanning set for h, and
    optional Cartan/positivity data."""

    name: str
    matrix_size: int
    basis: tuple[Matrix, ...]
    subalgebra_basis: tuple[Matrix, ...]
    theta: Optional[Matrix] = None
    a_seed: Optional[tuple[Matrix, ...]] = None
    positivity_basis: Optional[tuple[Matrix, ...]] = None
    minimal_parabolic_hint: Optional[tuple[int, ...]] = None


# -- rational / matrix parsing ------------------------------------------------


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ProblemFormatError(f"{where}: expected a number, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ProblemFormatError(
                f"{where}: malformed rational {value!r}") from None
    raise ProblemFormatError(
        f"{where}: expected an integer or a 'p/q' string, "
        f"got {type(value).__name__}")


def parse_matrix(value, size: int, where: str) -> Matrix:
    if not isinstance(value, list) or len(value) != size:
        raise ProblemFormatError(
            f"{where}: expected {size} rows, got "
            + (str(len(value)) if isinstance(value, list) else
               type(value).__name__))
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != size:
            raise ProblemFormatError(
                f"{where}[{i}]: expected {size} entries, got "
                + (str(len(row)) if isinstance(row, list) else
                   type(row).__name__))
        rows.append(tuple(parse_rational(e, f"{where}[{i}][{j}]")
                          for j, e in enumerate(row)))
    return tuple(rows)


def parse_matrix_list(value, size: int, where: str,
                      allow_empty: bool = True) -> tuple[Matrix, ...]:
    if not isinstance(value, list):
        raise ProblemFormatError(f"{where}: expected a list of matrices")
    if not value and not allow_empty:
        raise ProblemFormatError(f"{where}: must not be empty")
    return tuple(parse_matrix(m, size, f"{where}[{k}]")
                 for k, m in enumerate(value))


def _reject_float(text: str) -> Fraction:
    raise ProblemFormatError(
        f"floating point literal {text!r} is not accepted; "
        "write rationals as integers or 'p/q' strings")


def parse_problem_dict(data) -> Problem:
    if not isinstance(data, dict):
        raise ProblemFormatError("top level: expected an object")
    unknown = sorted(set(data) - _KNOWN_KEYS)
    if unknown:
        raise ProblemFormatError(f"unknown keys: {', '.join(unknown)}")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ProblemFormatError(
            f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ProblemFormatError("name: expected a string")
    size = data.get("matrix_size")
    if not isinstance(size, int) or isinstance(size, bool) or size <= 0:
        raise ProblemFormatError("matrix_size: expected a positive integer")
    if "basis" not in data:
        raise ProblemFormatError("basis: missing")
    basis = parse_matrix_list(data["basis"], size, "basis", allow_empty=False)
    if "subalgebra_basis" not in data:
        raise ProblemFormatError("subalgebra_basis: missing")
    sub = parse_matrix_list(data["subalgebra_basis"], size,
                            "subalgebra_basis")
    theta = None
    if data.get("theta") is not None:
        dim = len(basis)
        if (not isinstance(data["theta"], list)
                or len(data["theta"]) != dim):
            raise ProblemFormatError(
                f"theta: expected a {dim}x{dim} coordinate matrix")
        theta = tuple(
            tuple(parse_rational(e, f"theta[{i}][{j}]")
                  for j, e in enumerate(row))
            for i, row in enumerate(data["theta"]))
        if any(len(row) != dim for row in theta):
            raise ProblemFormatError(
                f"theta: expected a {dim}x{dim} coordinate matrix")
    a_seed = None
    if data.get("a_seed") is not None:
        a_seed = parse_matrix_list(data["a_seed"], size, "a_seed")
    positivity = None
    if data.get("positivity_basis") is not None:
        positivity = parse_matrix_list(data["positivity_basis"], size,
                                       "positivity_basis")
    hint = None
    if data.get("minimal_parabolic_hint") is not None:
        raw = data["minimal_parabolic_hint"]
        if (not isinstance(raw, list)
                or any(not isinstance(s, int) or isinstance(s, bool)
                       or s not in (1, -1) for s in raw)):
            raise ProblemFormatError(
                "minimal_parabolic_hint: expected a list of 1/-1 signs")
        hint = tuple(raw)
    if positivity is not None and hint is not None:
        raise ProblemFormatError(
            "positivity_basis and minimal_parabolic_hint are mutually "
            "exclusive")
    return Problem(name=name, matrix_size=size, basis=basis,
                   subalgebra_basis=sub, theta=theta, a_seed=a_seed,
                   positivity_basis=positivity,
                   minimal_parabolic_hint=hint)


def parse_problem_text(text: str) -> Problem:
    try:
        data = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"invalid JSON: {exc}") from None
    return parse_problem_dict(data)


def parse_problem(path) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemFormatError(f"cannot read {path}: {exc}") from None
    return parse_problem_text(text)


# -- serialization ------------------------------------------------------------


def format_rational(f: Fraction):
    """Exact JSON value: plain int when integral, 'p/q' string otherwise."""
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def matrix_to_json(m: Matrix) -> list:
    return [[format_rational(e) for e in row] for row in m]


def problem_to_dict(problem: Problem) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "name": problem.name,
        "matrix_size": problem.matrix_size,
        "basis": [matrix_to_json(m) for m in problem.basis],
        "subalgebra_basis": [matrix_to_json(m)
                             for m in problem.subalgebra_basis],
    }
    if problem.theta is not None:
        out["theta"] = matrix_to_json(problem.theta)
    if problem.a_seed is not None:
        out["a_seed"] = [matrix_to_json(m) for m in problem.a_seed]
    if problem.positivity_basis is not None:
        out["positivity_basis"] = [matrix_to_json(m)
                                   for m in problem.positivity_basis]
    if problem.minimal_parabolic_hint is not None:
        out["minimal_parabolic_hint"] = list(problem.minimal_parabolic_hint)
    return out


def problem_to_json(problem: Problem) -> str:
    return json.dumps(problem_to_dict(problem), indent=2, sort_keys=True) + "\n"


# -- assembly -----------------------------------------------------------------


def positivity_from_hint(g: LieAlgebra, theta: Optional[Matrix],
                         signs: Sequence[int]
                         ) -> tuple[Subspace, list[Vector]]:
    """Split torus and positivity from one sign per noncompact simple ideal.

    Ideals are ordered by the pivots of their echelon bases (for a
    block-diagonal construction this is block order).  A +1 keeps the
    factor's split torus orientation as found, a -1 reverses it, flipping
    which root spaces count as positive in that factor.  The center's split
    part is appended last with positive orientation.
    """
    _, _, s = cartan_decompose(g, theta)
    split = simple_ideal_split(g)
    noncompact = sorted(split.noncompact_part, key=lambda sp: sp.pivots)
    if len(signs) != len(noncompact):
        raise ProblemFormatError(
            f"minimal_parabolic_hint: expected {len(noncompact)} signs "
            f"(one per noncompact simple ideal), got {len(signs)}")
    seed = g.zero_space()
    positivity: list[Vector] = []
    for sign, ideal in zip(signs, noncompact):
        part = maximal_abelian(g, subspace_intersect(ideal, s))
        seed = subspace_sum(seed, part)
        positivity.extend(vec_scale(sign, v) for v in part.basis)
    center_split = subspace_intersect(g.center(), s)
    seed = subspace_sum(seed, center_split)
    positivity.extend(center_split.basis)
    return seed, positivity


def build_pair(problem: Problem) -> SphericalPair:
    """Assemble the spherical pair a problem describes.

    Algebra-closure and dimension failures from the underlying modules pass
    through unchanged; they are input errors in the same sense as parse
    errors.
    """
    g = LieAlgebra(problem.basis, name=problem.name or "g")
    h = g.span_of_matrices(problem.subalgebra_basis)
    a_seed = None
    positivity = None
    if problem.minimal_parabolic_hint is not None:
        a_seed, positivity = positivity_from_hint(
            g, problem.theta, problem.minimal_parabolic_hint)
    else:
        if problem.a_seed is not None:
            vectors = [g.from_matrix(m) for m in problem.a_seed]
            missing = [i for i, v in enumerate(vectors) if v is None]
            if missing:
                raise ProblemFormatError(
                    f"a_seed[{missing[0]}]: not an element of the algebra")
            a_seed = canonical_basis(vectors, g.dim)
        if problem.positivity_basis is not None:
            positivity = []
            for i, m in enumerate(problem.positivity_basis):
                v = g.from_matrix(m)
                if v is None:
                    raise ProblemFormatError(
                        f"positivity_basis[{i}]: not an element of the "
                        "algebra")
                positivity.append(v)
    cd = cartan_data(g, theta=problem.theta, a_seed=a_seed,
                     positivity_basis=positivity)
    return spherical_pair(cd, h, label=problem.name)
