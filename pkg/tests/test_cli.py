"""CLI surface: subcommand coverage, output stability, exit codes."""

import json

import pytest

from artin import cli

SUBCOMMANDS = [
    "classify", "taxonomy", "sf", "form", "signature", "rep-check",
    "cox-nf", "enumerate", "longest", "reflections", "tmin",
    "coxeter-elements", "mon-nf", "mon-equal", "divides", "gcd", "lcm",
    "delta", "sigma", "garside-nf", "axioms", "grp-nf", "grp-equal",
    "fraction", "section", "project", "salvetti", "davis", "deligne-fd",
    "homology", "quotient-cells", "abelianization", "shelling-check",
    "is-shelling",
]

# every library operation is reachable from exactly one subcommand
OPERATION_MAP = {
    "diagram.parse_diagram": "classify",  # via --file on every subcommand
    "diagram.is_finite_type": "classify",
    "diagram.classify_taxonomy": "taxonomy",
    "diagram.finite_type_subsets": "sf",
    "tits.bilinear_form": "form",
    "tits.signature": "signature",
    "tits.reflection_matrices": "rep-check",
    "tits.pair_order": "rep-check",
    "coxeter.normalize": "cox-nf",
    "coxeter.enumerate_elements": "enumerate",
    "coxeter.longest_element": "longest",
    "coxeter.reflections": "reflections",
    "coxeter.t_minimal_representative": "tmin",
    "coxeter.coxeter_elements": "coxeter-elements",
    "monoid.canonicalize": "mon-nf",
    "monoid.monoid_equal": "mon-equal",
    "monoid.divides": "divides",
    "monoid.gcd": "gcd",
    "monoid.lcm": "lcm",
    "monoid.garside_element": "delta",
    "monoid.garside_permutation": "sigma",
    "monoid.garside_normal_form": "garside-nf",
    "monoid.verify_garside_axioms": "axioms",
    "group.from_letters": "grp-nf",
    "group.equal": "grp-equal",
    "group.fraction_decomposition": "fraction",
    "group.canonical_section": "section",
    "group.project": "project",
    "group.is_pure": "project",
    "complexes.salvetti_poset": "salvetti",
    "complexes.davis_poset": "davis",
    "complexes.deligne_fundamental_domain": "deligne-fd",
    "complexes.homology": "homology",
    "complexes.salvetti_quotient_cells": "quotient-cells",
    "complexes.abelianization": "abelianization",
    "shelling.verify_claims": "shelling-check",
    "shelling.is_shelling": "is-shelling",
}


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_all_subcommands_exist():
    parser = cli.build_parser()
    actions = [a for a in parser._actions if a.dest == "command"]
    assert actions
    registered = set(actions[0].choices)
    assert registered == set(SUBCOMMANDS)


def test_operation_coverage():
    assert set(OPERATION_MAP.values()) <= set(SUBCOMMANDS)
    # every subcommand backs at least one operation
    assert set(SUBCOMMANDS) <= set(OPERATION_MAP.values())


def test_classify_example(capsys):
    code, out, _ = run(["classify", "--preset", "Atilde2"], capsys)
    assert code == 0
    assert json.loads(out) == {"finite_type": False}


def test_grp_equal_example(capsys):
    code, out, _ = run(
        ["grp-equal", "--preset", "A2", "--left", "s t s", "--right", "t s t"],
        capsys,
    )
    assert code == 0
    assert out.strip() == "true"


def test_homology_example(capsys):
    code, out, _ = run(
        ["homology", "--preset", "A1", "--complex", "salvetti",
         "--format", "text"],
        capsys,
    )
    assert code == 0
    assert out.strip() == "H_0 = Z, H_1 = Z"


def test_version(capsys):
    code, out, _ = run(["--version"], capsys)
    assert code == 0
    assert out.startswith("artin ")
    assert "format" in out


def test_deterministic_output(capsys):
    argv = ["salvetti", "--preset", "B2", "--format", "json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    argv2 = ["axioms", "--preset", "A2"]
    _, a1, _ = run(argv2, capsys)
    _, a2, _ = run(argv2, capsys)
    assert a1 == a2


def test_exit_codes(capsys):
    code, _, err = run(["classify", "--preset", "NoSuch"], capsys)
    assert code == 1
    assert "error" in err
    code2, _, _ = run(["classify"], capsys)
    assert code2 == 2
    code3, _, _ = run(["cox-nf", "--preset", "A2", "--word", "s x"], capsys)
    assert code3 == 1
    code4, _, _ = run(
        ["classify", "--preset", "A2", "--file", "/tmp/nope.json"], capsys
    )
    assert code4 == 2
    code5, _, _ = run(["delta", "--preset", "Atilde2"], capsys)
    assert code5 == 1  # FiniteTypeRequiredError is a domain error


def test_file_source(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text('{"vertices":["x","y"],"edges":[{"a":"x","b":"y","m":5}]}')
    code, out, _ = run(["classify", "--file", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["components"] == ["I2(5)"]


def test_missing_file_is_domain_error(capsys):
    code, _, err = run(["classify", "--file", "/tmp/does-not-exist-77.json"], capsys)
    assert code == 1
    assert "error" in err


def test_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ARTIN_CAP", "2")
    code, _, err = run(
        ["mon-nf", "--preset", "A3", "--word", "s t u s t u"], capsys
    )
    assert code == 1
    assert "cap" in err
    monkeypatch.setenv("ARTIN_CAP", "notanint")
    code2, _, _ = run(["mon-nf", "--preset", "A3", "--word", "s"], capsys)
    assert code2 == 1
    # explicit --cap flag wins over the environment
    monkeypatch.setenv("ARTIN_CAP", "2")
    code3, _, _ = run(
        ["mon-nf", "--preset", "A3", "--word", "s t u s t u", "--cap", "100000"],
        capsys,
    )
    assert code3 == 0


def test_dot_output_for_posets(capsys):
    code, out, _ = run(["salvetti", "--preset", "A1", "--format", "dot"], capsys)
    assert code == 0
    assert out.startswith("digraph")
    # dot is rejected by the parser for non-poset subcommands
    code2, _, _ = run(["classify", "--preset", "A2", "--format", "dot"], capsys)
    assert code2 == 2


def test_enumerate_counts_json(capsys):
    code, out, _ = run(["enumerate", "--preset", "I2(4)"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["counts"] == {"0": 1, "1": 2, "2": 2, "3": 2, "4": 1}
    assert obj["total"] == 8


def test_shelling_check_from_diagram(capsys):
    code, out, _ = run(
        ["shelling-check", "--preset", "I2(3)", "--format", "text"], capsys
    )
    assert code == 0
    assert "0-connected" in out


def test_shelling_check_from_file(tmp_path, capsys):
    path = tmp_path / "cc.json"
    path.write_text(json.dumps({
        "n": 1,
        "chambers": [["a", "b"], ["b", "c"], ["c", "d"]],
        "index": [0, 1, 2],
    }))
    code, out, _ = run(["shelling-check", "--chambers", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["conclusion"] == "contractible"
    # index from the flag overrides the file
    code2, out2, _ = run(
        ["shelling-check", "--chambers", str(path), "--index", "0,2,1"], capsys
    )
    assert code2 == 0
    assert json.loads(out2)["passed"] is False


def test_is_shelling_cli(capsys, tmp_path):
    code, out, _ = run(
        ["is-shelling", "--preset", "I2(4)", "--format", "text"], capsys
    )
    assert code == 0
    assert out.strip() == "true"
    path = tmp_path / "cc.json"
    path.write_text(json.dumps({
        "n": 1, "chambers": [["a", "b"], ["b", "c"], ["c", "d"]],
    }))
    code2, out2, _ = run(
        ["is-shelling", "--chambers", str(path), "--order", "0,2,1"], capsys
    )
    assert code2 == 0
    assert json.loads(out2)["ok"] is False


def test_chambers_and_preset_conflict(capsys, tmp_path):
    path = tmp_path / "cc.json"
    path.write_text(json.dumps({"n": 1, "chambers": [["a", "b"]]}))
    code, _, _ = run(
        ["is-shelling", "--chambers", str(path), "--preset", "A2"], capsys
    )
    assert code == 2


def test_json_matches_text_content(capsys):
    _, out, _ = run(["longest", "--preset", "A3"], capsys)
    word = json.loads(out)["word"]
    _, text, _ = run(["longest", "--preset", "A3", "--format", "text"], capsys)
    assert "".join(word) == text.strip()
