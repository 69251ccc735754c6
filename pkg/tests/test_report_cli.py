import json

import pytest
from click.testing import CliRunner

from pbci import parse_algebra, validate
from pbci.cli import main
from pbci.report import build_report, render_json, render_text, spec_from_report

from conftest import FIXTURE_DIR, FIXTURE_NAMES, fixture_text


@pytest.fixture()
def runner():
    return CliRunner()


def fixture_path(name: str) -> str:
    return str(FIXTURE_DIR / f"{name}.pbci")


# --- report ---------------------------------------------------------------


def test_report_json_deterministic(proper5):
    first = render_json(build_report(proper5))
    second = render_json(build_report(proper5))
    assert first == second


def test_report_round_trips_algebra_block(proper5):
    report = json.loads(render_json(build_report(proper5)))
    assert spec_from_report(report) == proper5.to_spec()


def test_report_derivations_canonical_order(proper5):
    report = build_report(proper5)
    block = next(b for b in report["derivations"] if b["class"] == "implicative-I")
    images = [entry["images"] for entry in block["maps"]]
    assert images == [
        ["a", "b", "c", "d", "1"],
        ["d", "d", "d", "1", "d"],
        ["1", "1", "1", "d", "1"],
    ]


def test_report_includes_types_three_four_only_for_bck(proper5, bck5):
    classes5 = [b["class"] for b in build_report(proper5)["derivations"]]
    assert classes5 == ["implicative-I", "implicative-II",
                        "symmetric-I", "symmetric-II"]
    classes_bck = [b["class"] for b in build_report(bck5)["derivations"]]
    assert classes_bck == ["implicative-I", "implicative-II", "implicative-III",
                           "implicative-IV", "symmetric-I", "symmetric-II"]


def test_text_report_marks_irregular_map(proper5):
    text = render_text(build_report(proper5))
    assert "d d d 1 d  not regular" in text
    assert "atoms: d 1" in text
    assert "BCK part: a b c 1" in text


def test_report_theorems_deterministic_and_green(group6):
    report = build_report(group6)
    assert all(r["passed"] for r in report["theorems"] if r["applicable"])


# --- cli ------------------------------------------------------------------


def test_cli_check_ok(runner):
    result = runner.invoke(main, ["check", fixture_path("proper5")])
    assert result.exit_code == 0
    assert "valid pseudo-BCI algebra" in result.output
    assert "p-semisimple: no" in result.output


def test_cli_check_violations_exit_1(runner, tmp_path):
    bad = fixture_text("proper5").replace("a b c d 1\nsquig:", "b b c d 1\nsquig:")
    path = tmp_path / "bad.pbci"
    path.write_text(bad)
    result = runner.invoke(main, ["check", str(path)])
    assert result.exit_code == 1
    assert "psBCI3" in result.output


def test_cli_parse_error_exit_2(runner, tmp_path):
    path = tmp_path / "broken.pbci"
    path.write_text("pbci 9\n")
    result = runner.invoke(main, ["check", str(path)])
    assert result.exit_code == 2


def test_cli_missing_file_exit_2(runner):
    result = runner.invoke(main, ["check", "no-such-file.pbci"])
    assert result.exit_code == 2


def test_cli_derivations_golden(runner):
    result = runner.invoke(main, [
        "derivations", fixture_path("proper5"), "--kind", "implicative",
        "--type", "ii", "--regular"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0].startswith("# implicative-II regular: 2")
    assert lines[1:] == ["a b c d 1", "1 1 1 d 1"]


def test_cli_derivations_type3_needs_force(runner):
    args = ["derivations", fixture_path("proper5"), "--kind", "implicative",
            "--type", "iii"]
    assert runner.invoke(main, args).exit_code == 2
    forced = runner.invoke(main, args + ["--force"])
    assert forced.exit_code == 0
    assert "outside the defined scope" in forced.output


def test_cli_derivations_symmetric_iii_rejected(runner):
    result = runner.invoke(main, [
        "derivations", fixture_path("proper5"), "--kind", "symmetric",
        "--type", "iii"])
    assert result.exit_code == 2


def test_cli_ds(runner):
    result = runner.invoke(main, ["ds", fixture_path("proper5")])
    assert result.exit_code == 0
    assert "{c 1}  not-compatible closed" in result.output
    assert "# 4 deductive system(s)" in result.output


def test_cli_quotient_by_k(runner):
    result = runner.invoke(main, ["quotient", fixture_path("proper5"), "--by", "K"])
    assert result.exit_code == 0
    body = result.output.split("\n", 1)[1]
    quotient_spec = parse_algebra(body)
    algebra = validate(quotient_spec)
    assert algebra.size == 2


def test_cli_quotient_by_file(runner, tmp_path):
    subset = tmp_path / "subset.txt"
    subset.write_text("a b c 1\n")
    result = runner.invoke(main, [
        "quotient", fixture_path("proper5"), "--by-file", str(subset)])
    assert result.exit_code == 0

    subset.write_text("c, 1\n")
    result = runner.invoke(main, [
        "quotient", fixture_path("proper5"), "--by-file", str(subset)])
    assert result.exit_code == 1      # {c,1} is not compatible

    subset.write_text("b 1\n")
    result = runner.invoke(main, [
        "quotient", fixture_path("proper5"), "--by-file", str(subset)])
    assert result.exit_code == 1      # not even a deductive system

    result = runner.invoke(main, ["quotient", fixture_path("proper5")])
    assert result.exit_code == 2      # neither --by nor --by-file


def test_cli_map(runner):
    result = runner.invoke(main, [
        "map", fixture_path("proper5"), "--map", "d d d 1 d"])
    assert result.exit_code == 0
    assert "regular: no" in result.output
    assert "symmetric-II: yes" in result.output
    bad = runner.invoke(main, ["map", fixture_path("proper5"), "--map", "d d"])
    assert bad.exit_code == 2


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_cli_verify_fixtures_pass(runner, name):
    result = runner.invoke(main, ["verify", fixture_path(name)])
    assert result.exit_code == 0, result.output
    assert "0 failed" in result.output
    assert "FAIL" not in result.output


def test_cli_analyze_json_byte_identical(runner):
    args = ["analyze", fixture_path("mixed6"), "--json"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0
    assert first.output == second.output
    payload = json.loads(first.output)
    assert payload["summary"]["size"] == 6


def test_cli_analyze_text(runner):
    result = runner.invoke(main, ["analyze", fixture_path("proper5")])
    assert result.exit_code == 0
    assert "algebra: 5 elements" in result.output
    assert "not regular" in result.output


def test_cli_search(runner):
    result = runner.invoke(main, [
        "search", "--size", "2", "--modulo-iso"])
    assert result.exit_code == 0
    assert "# 2 algebra(s)" in result.output
    parts = [chunk for chunk in result.output.split("# model")[1:]]
    for chunk in parts:
        spec = parse_algebra(chunk.split("\n", 1)[1])
        validate(spec)


def test_cli_search_with_predicate(runner):
    result = runner.invoke(main, [
        "search", "--size", "3", "--pred", "p_semisimple", "--modulo-iso"])
    assert result.exit_code == 0
    assert "# 1 algebra(s)" in result.output
    bad = runner.invoke(main, ["search", "--size", "3", "--pred", "shiny"])
    assert bad.exit_code == 2
    bad_value = runner.invoke(main, [
        "search", "--size", "3", "--pred", "bci=maybe"])
    assert bad_value.exit_code == 2


def test_cli_search_cap(runner):
    result = runner.invoke(main, ["search", "--size", "9"])
    assert result.exit_code == 2


def test_cli_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "pbci" in result.output
