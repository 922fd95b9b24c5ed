import json

import pytest

from hurwitzlab.cli import (
    EXIT_FAILED, EXIT_OK, EXIT_TRUNCATED, EXIT_USAGE, build_parser, config_from_args, main, run,
)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("argv", [
    ["rootsys", "build", "--type", "Q7"],
    ["rootsys", "draw"],
    ["paint"],
    [],
    ["weyl", "length"],
    ["poset", "gen", "--type", "A3"],
    ["verify", "roots", "--emit", "dot"],
    ["weyl", "length", "--type", "A2", "--threads", "0"],
])
def test_usage_errors_exit_64(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert "usage error" in capsys.readouterr().err


def test_verify_roots_text_output(capsys):
    assert main(["verify", "roots"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("verify roots: passed\n")
    assert "  passed: True\n" in out


def test_json_report_has_schema_and_no_timing(capsys):
    assert main(["rootsys", "build", "--type", "E8", "--emit", "json"]) == EXIT_OK
    data = _json(capsys)
    assert data["schema"] == "hurwitz-lab/1"
    assert data["passed"] is True
    assert data["results"]["roots"] == 240
    assert data["results"]["highest_root"] == [2, 3, 4, 6, 5, 4, 3, 2]
    assert "elapsed" not in data


def test_timing_adds_elapsed(capsys):
    assert main(["weyl", "length", "--type", "A2", "--emit", "json", "--timing"]) == EXIT_OK
    assert "elapsed" in _json(capsys)


def test_elliptic_rootsys_build(capsys):
    assert main(["rootsys", "build", "--type", "D4.1.1", "--emit", "json"]) == EXIT_OK
    results = _json(capsys)["results"]
    assert results["type"] == "D4(1,1)"
    assert results["ell"] == 2
    assert results["signature"] == [4, 2, 0]
    assert results["diagram_signature"] == [4, 2, 0]
    assert results["coxeter_order"] == 2
    assert results["mark_obstruction"] is True


def test_weyl_fac(capsys):
    assert main(["weyl", "fac", "--type", "A3", "--emit", "json"]) == EXIT_OK
    results = _json(capsys)["results"]
    assert results["length"] == 3
    assert results["factorizations"] == 16
    assert results["generating"] == 16


def test_weyl_target_out_of_range():
    assert main(["weyl", "length", "--type", "A2", "--target", "6"]) == EXIT_USAGE


def test_hurwitz_orbit_truncation_exits_2(capsys):
    argv = ["hurwitz", "orbit", "--type", "A3", "--cap", "5", "--emit", "json"]
    assert main(argv) == EXIT_TRUNCATED
    data = _json(capsys)
    assert data["truncated"] is True
    assert data["results"]["orbit_size"] == 5


def test_hurwitz_orbit_from_seed_file(tmp_path, capsys):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps([[1, 0], [0, 1]]))
    argv = ["hurwitz", "orbit", "--type", "A2", "--seed-file", str(seed), "--emit", "json"]
    assert main(argv) == EXIT_OK
    assert _json(capsys)["results"]["orbit_size"] == 3


def test_hurwitz_seed_file_with_non_roots(tmp_path):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps([[1, -1], [0, 1]]))
    assert main(["hurwitz", "orbit", "--type", "A2", "--seed-file", str(seed)]) == EXIT_USAGE


def test_hurwitz_classify(capsys):
    assert main(["hurwitz", "classify", "--type", "A2", "--m", "2", "--emit", "json"]) == EXIT_OK
    results = _json(capsys)["results"]
    assert results["factorizations"] == 3
    assert len(results["orbits"]) == 1


def test_poset_dot_to_file(tmp_path):
    out = tmp_path / "a2.dot"
    argv = ["poset", "interval", "--type", "A2", "--emit", "dot", "--out", str(out)]
    assert main(argv) == EXIT_OK
    assert out.read_text().startswith("digraph interval {")


def test_elliptic_splitting(capsys):
    assert main(["elliptic", "splitting", "--type", "D4", "--emit", "json"]) == EXIT_OK
    results = _json(capsys)["results"]
    assert results["c_b_bourbaki"] == ["1/2", "1/2", "0", "0"]
    assert results["block_diagonal"] is True


def test_verify_appendix_for_d4(capsys):
    assert main(["elliptic", "verify-appendix", "--type", "D4", "--emit", "json"]) == EXIT_FAILED
    results = _json(capsys)["results"]
    assert results["mismatches"] == ["D4-2"]
    assert results["surjectivity"] == "printed-only"


def test_failed_check_exits_1(mocker, capsys):
    mocker.patch.dict("hurwitzlab.verify.CHECKS", {"roots": lambda **kwargs: {"passed": False}})
    assert main(["verify", "roots"]) == EXIT_FAILED
    assert "verify roots: FAILED" in capsys.readouterr().out


def test_run_returns_a_validated_report():
    args = build_parser().parse_args(["weyl", "length", "--type", "A2"])
    report, artifact = run(config_from_args(args))
    assert artifact is None
    assert report.to_dict()["results"]["length"] == 2
    assert report.to_dict()["command"]["type"] == "A2"


def test_verify_length_certifies_d4(capsys):
    assert main(["verify", "length", "--type", "D4", "--window", "1", "--emit", "json"]) == EXIT_OK
    assert _json(capsys)["results"]["no_short_factorization"] is True
