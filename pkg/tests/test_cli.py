"""Command-line interface: exit codes, text/JSON output, byte stability."""

import json

import pytest

from sphlie.cli import main
from sphlie.catalog import get_entry
from sphlie.problem import problem_to_json


def no_floats(text: str) -> dict:
    """Parse JSON while proving no float literal appears anywhere."""
    def boom(tok):
        raise AssertionError(f"float literal {tok!r} in CLI output")
    return json.loads(text, parse_float=boom)


@pytest.fixture
def sl2_so2(tmp_path):
    path = tmp_path / "sl2_so2.json"
    path.write_text(problem_to_json(get_entry("sl2_so2").problem),
                    encoding="utf-8")
    return str(path)


@pytest.fixture
def sl2_n(tmp_path):
    path = tmp_path / "sl2_n.json"
    path.write_text(problem_to_json(get_entry("sl2_n").problem),
                    encoding="utf-8")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- analyze ------------------------------------------------------------------


def test_analyze_passing_pair_text(capsys, sl2_so2):
    code, out, err = run(capsys, ["analyze", sl2_so2])
    assert code == 0 and err == ""
    assert "spherical at base point: yes (defect 0)" in out
    assert "rank: 1" in out
    assert "orbit identity: ok (100 samples)" in out
    assert out.rstrip().endswith("result: PASS")


def test_analyze_failing_pair_without_search(capsys, sl2_n):
    code, out, _ = run(capsys, ["analyze", sl2_n])
    assert code == 1
    assert "spherical at base point: no (defect 1)" in out
    assert out.rstrip().endswith("result: FAIL")


def test_analyze_conjugate_search_recovers_the_pair(capsys, sl2_n):
    code, out, _ = run(capsys, ["analyze", sl2_n, "--conjugate-search", "5"])
    assert code == 0
    assert "conjugation: found after 2 attempts: weyl[(2)#0]" in out
    assert out.rstrip().endswith("result: PASS")


def test_analyze_json_document_shape(capsys, sl2_n):
    code, out, _ = run(capsys, ["analyze", sl2_n, "--conjugate-search", "5",
                                "--format", "json"])
    assert code == 0
    doc = no_floats(out)
    assert doc["schema_version"] == 1
    assert doc["command"] == "analyze"
    assert doc["pass"] is True
    assert doc["spherical_at_base"] is False
    assert doc["conjugation"]["attempts"] == 2
    assert doc["conjugation"]["description"] == "weyl[(2)#0]"
    assert doc["adapted"]["subset_indices"] == []
    assert set(doc["checks"]) == {
        "q_plus_h_is_g", "q_meets_h_inside_levi",
        "noncompact_levi_ideals_in_h", "levi_split_by_p_and_h",
        "nilradical_complement"}
    assert all(doc["checks"].values())
    assert doc["rank"]["value"] == 1
    assert all(doc["normalizer"][k] for k in
               ("split_ok", "elementary_ok", "self_normalizing_ok",
                "same_adapted_ok"))
    assert doc["orbit"]["ok"] is True


def test_json_output_is_byte_identical_across_runs(capsys, sl2_n):
    argv = ["analyze", sl2_n, "--conjugate-search", "5", "--seed", "3",
            "--format", "json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
    assert first.endswith("\n")


def test_analyze_failure_in_json_reports_null_blocks(capsys, sl2_n):
    code, out, _ = run(capsys, ["analyze", sl2_n, "--format", "json"])
    assert code == 1
    doc = no_floats(out)
    assert doc["pass"] is False
    assert doc["spherical"] is False
    assert doc["adapted"] is None and doc["rank"] is None
    assert doc["normalizer"] is None and doc["orbit"] is None


# -- focused subcommands ------------------------------------------------------


def test_adapted_lists_exactly_one_candidate(capsys, sl2_so2):
    code, out, _ = run(capsys, ["adapted", sl2_so2, "--list-candidates"])
    assert code == 0
    assert "(1 passing candidate)" in out
    assert "passing candidate subsets:" in out
    assert out.count("indices []") >= 1


def test_rank_subcommand_json(capsys, sl2_so2):
    code, out, _ = run(capsys, ["rank", sl2_so2, "--format", "json"])
    assert code == 0
    doc = no_floats(out)
    assert doc["command"] == "rank"
    assert doc["rank"]["value"] == 1
    assert doc["rank"]["rank_torus"] == [[1, 0, 0]]
    assert "normalizer" not in doc and "orbit" not in doc


def test_normalizer_subcommand(capsys, sl2_so2):
    code, out, _ = run(capsys, ["normalizer", sl2_so2, "--format", "json"])
    assert code == 0
    doc = no_floats(out)
    assert doc["normalizer"]["dim"] == 1
    assert doc["normalizer"]["complement_dim"] == 0
    assert all(doc["normalizer"][k] for k in
               ("split_ok", "elementary_ok", "self_normalizing_ok",
                "same_adapted_ok"))


def test_orbit_check_sample_count_is_respected(capsys, sl2_so2):
    code, out, _ = run(capsys, ["orbit-check", sl2_so2, "--samples", "7",
                                "--format", "json"])
    assert code == 0
    doc = no_floats(out)
    assert doc["orbit"]["ok"] is True
    assert doc["orbit"]["samples_run"] == 7
    assert doc["orbit"]["characteristic_element"] == ["-1/2", 0, 0]


# -- catalog subcommands ------------------------------------------------------


def test_catalog_list_names_all_entries(capsys):
    code, out, _ = run(capsys, ["catalog", "list"])
    assert code == 0
    for name in ("sl2_so2", "sl3_so3", "sl2_zero", "gl2_projective_line"):
        assert name in out


def test_catalog_run_single_and_all(capsys):
    code, out, _ = run(capsys, ["catalog", "run", "sl2_so2"])
    assert code == 0
    assert "sl2_so2" in out and "PASS" in out
    code, out, _ = run(capsys, ["catalog", "run", "sl2_full", "--samples",
                                "5", "--format", "json"])
    assert code == 0
    doc = no_floats(out)
    assert doc["results"][0]["name"] == "sl2_full"
    assert doc["results"][0]["passed"] is True


def test_catalog_run_unknown_name_is_an_input_error(capsys):
    code, out, err = run(capsys, ["catalog", "run", "nope"])
    assert code == 2
    assert "nope" in err


def test_catalog_export_round_trips_through_analyze(capsys, tmp_path):
    code, out, _ = run(capsys, ["catalog", "export", "sl3_so3"])
    assert code == 0
    path = tmp_path / "sl3.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, ["analyze", str(path), "--format", "json"])
    assert code == 0
    assert no_floats(out)["rank"]["value"] == 2


# -- error handling -----------------------------------------------------------


def test_unreadable_and_malformed_inputs_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, ["analyze", str(tmp_path / "missing.json")])
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": 1, "matrix_size": 2, '
                   '"basis": [[[0.25, 0], [0, 0]]], "subalgebra_basis": []}',
                   encoding="utf-8")
    code, _, err = run(capsys, ["analyze", str(bad)])
    assert code == 2 and "floating point literal '0.25'" in err
    malformed = tmp_path / "malformed.json"
    malformed.write_text('{"basis": [[["1/0"]]]}', encoding="utf-8")
    code, _, err = run(capsys, ["analyze", str(malformed)])
    assert code == 2


def test_non_reductive_input_exits_2(capsys, tmp_path):
    # span(E11, E12) in gl(2): solvable, non-reductive, closed under bracket.
    doc = {"schema_version": 1, "name": "borel", "matrix_size": 2,
           "basis": [[[1, 0], [0, 0]], [[0, 1], [0, 0]]],
           "subalgebra_basis": []}
    path = tmp_path / "nonred.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, ["analyze", str(path)])
    assert code == 2 and err != ""


def test_usage_errors_raise_system_exit(capsys):
    with pytest.raises(SystemExit):
        main(["analyze"])          # missing the problem-file argument
    with pytest.raises(SystemExit):
        main(["no-such-command"])
