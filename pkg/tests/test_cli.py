# Copyright (c) 2026, The lie-orbit-python Authors
#
# Permission to use, copy, modify, and/or distribute this software for any
# purpose with or without fee is hereby granted, provided that the above
# copyright notice and this permission notice appear in all copies.
#
# THE SOFTWARE IS PROVIDED "AS IS" AND THE AUTHOR DISCLAIMS ALL WARRANTIES
# WITH REGARD TO THIS SOFTWARE INCLUDING ALL IMPLIED WARRANTIES OF
# MERCHANTABILITY AND FITNESS. IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR
# ANY SPECIAL, DIRECT, INDIRECT, OR CONSEQUENTIAL DAMAGES OR ANY DAMAGES
# WHATSOEVER RESULTING FROM LOSS OF USE, DATA OR PROFITS, WHETHER IN AN
# ACTION OF CONTRACT, NEGLIGENCE OR OTHER TORTIOUS ACTION, ARISING OUT OF
# OR IN CONNECTION WITH THE USE OR PERFORMANCE OF THIS SOFTWARE.

import json
import os
from fractions import Fraction

import pytest

import lieorbit
import lieorbit.cli as Cli
from lieorbit.base import HOLDS, NOT_EVALUATED

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")
SCHEMA = os.path.join(
    os.path.dirname(os.path.abspath(lieorbit.__file__)), "schemas", "report.v1.json"
)


def fixture_path(name):
    return os.path.join(FIXTURES, "{0}.lie".format(name))


def run(capsys, *argv):
    code = Cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *(argv + ("--json",)))
    return code, json.loads(out)


def checks_by_name(report):
    return dict((c["name"], c) for c in report["checks"])


def test_analyze_file(capsys):
    code, report = run_json(
        capsys,
        "analyze",
        fixture_path("galilei"),
        "--point",
        "massless_spin",
        "--samples",
        "5",
    )

    assert code == Cli.EXIT_OK
    assert report["schema"] == "report.v1"
    assert report["command"] == "analyze"
    assert report["values"]["orbit_dim"] == 6
    assert report["values"]["point"] == "massless_spin"
    assert len(report["input_digest"]) == 64
    assert report["holds"] is True


def test_json_is_reproducible(capsys):
    argv = ("examples", "se3", "--samples", "5", "--seed", "7", "--json")

    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)

    assert first == second


def test_seed_is_recorded(capsys):
    _, report = run_json(capsys, "analyze", "se3", "--seed", "11", "--samples", "2")

    assert report["settings"]["seed"] == 11
    assert report["settings"]["samples"] == 2


def test_sampling_disabled(capsys):
    code, report = run_json(capsys, "induce", "se3", "--samples", "0")

    checks = checks_by_name(report)
    assert checks["induction.zero-level-set"]["verdict"] == NOT_EVALUATED
    assert checks["induction.regular-value"]["verdict"] == HOLDS
    assert code == Cli.EXIT_OK


def test_validate_reports_jacobi_failure(capsys):
    code, out, err = run(capsys, "validate", fixture_path("bad_jacobi"))

    assert code == Cli.EXIT_INPUT
    assert out == ""
    assert "bad_jacobi.lie:5:5: error: Jacobi identity fails" in err
    assert "note: bracket [e1,e3] declared here" in err


def test_validate_json_diagnostics(capsys):
    code, report = run_json(capsys, "validate", fixture_path("bad_jacobi"))

    assert code == Cli.EXIT_INPUT
    assert report["holds"] is False
    assert report["target"] is None
    diagnostic = report["diagnostics"][0]
    assert diagnostic["location"]["line"] == 5
    assert diagnostic["location"]["col"] == 5
    assert diagnostic["notes"][0]["location"]["line"] == 6


def test_validate_fixture_file(capsys):
    code, report = run_json(capsys, "validate", fixture_path("se3"))

    assert code == Cli.EXIT_OK
    assert report["values"]["points"] == ["axial"]
    assert report["values"]["polarizations"] == ["trivial"]
    assert report["values"]["products"] == {"se3": {"dim": 6, "k_dim": 3, "v_dim": 3}}


def test_validate_needs_a_file(capsys):
    code, _, err = run(capsys, "validate", "se3")

    assert code == Cli.EXIT_INPUT
    assert "error: No such file: se3" in err


def test_examples_all(capsys):
    code, report = run_json(capsys, "examples", "se3", "--all", "--samples", "10")

    checks = checks_by_name(report)
    assert code == Cli.EXIT_OK
    assert checks["expected.se3.axial.orbit_dim"]["verdict"] == HOLDS
    assert checks["axial.orbit.dimension-law"]["verdict"] == HOLDS
    assert "axial.trivial.connection.equivariance" in checks
    assert report["values"]["axial"]["orbit_dim"] == 4


@pytest.mark.parametrize("name", ["galilei", "bargmann"])
def test_examples_all_sampled(capsys, name):
    code, report = run_json(capsys, "examples", name, "--all", "--samples", "100")

    failed = [c["name"] for c in report["checks"] if c["verdict"] == "fails"]
    assert failed == []
    assert code == Cli.EXIT_OK
    sampled = [c for c in report["checks"] if "sampled-only" in c["caveats"]]
    assert sampled
    assert all(c["verdict"] == HOLDS for c in sampled)


def test_boost_polarization_fills_its_affine_plane(capsys):
    _, report = run_json(capsys, "examples", "galilei", "--all", "--samples", "100")

    checks = checks_by_name(report)
    sampled = checks["massless_boost.translations.pukanszky.sampled"]
    assert sampled["verdict"] == HOLDS
    assert sampled["residuals"]["max"] < 1e-9
    infinitesimal = checks["massless_boost.translations.pukanszky.infinitesimal"]
    assert infinitesimal["verdict"] == HOLDS
    reduced = checks["massless_boost.translations.reduction.pukanszky-agrees"]
    assert reduced["values"]["reduced"] == HOLDS
    assert reduced["values"]["reduced_affine_rank"] == 1
    assert reduced["values"]["reduced_e_annihilator_dim"] == 1
    assert reduced["residuals"]["reduced"] < 1e-9


@pytest.mark.parametrize("name", ["se3", "galilei", "bargmann"])
def test_no_samples_leaves_sampled_checks_unevaluated(capsys, name):
    _, report = run_json(capsys, "examples", name, "--all", "--samples", "0")

    sampled = [c for c in report["checks"] if "sampled-only" in c["caveats"]]
    assert sampled
    for check in sampled:
        assert check["verdict"] == NOT_EVALUATED, check["name"]


def test_examples_contragredient(capsys):
    code, report = run_json(capsys, "examples", "galilei", "--samples", "10")

    check = checks_by_name(report)["contragredient.closed-form"]
    assert check["verdict"] == HOLDS
    assert check["values"] == {"samples": 3, "agree": 3}
    assert code == Cli.EXIT_OK


def test_check_pukanszky(capsys):
    code, report = run_json(
        capsys, "check-pukanszky", "galilei", "--pol", "translations", "--samples", "12"
    )

    assert code == Cli.EXIT_OK
    assert report["values"]["point"] == "massless_boost"
    assert report["values"]["affine_rank"] == 4
    assert report["values"]["e_annihilator_dim"] == 4


def test_not_a_polarization_fails(capsys, tmp_path):
    source = open(fixture_path("se3")).read().replace(
        "a = span { w3 }", "a = span { w1, w2 }"
    )
    path = tmp_path / "flat.lie"
    path.write_text(source)

    code, report = run_json(capsys, "check-polarization", str(path), "--pol", "trivial")

    assert code == Cli.EXIT_FAILED
    assert report["holds"] is False


def test_parameters_change_the_digest(capsys):
    _, default = run_json(capsys, "analyze", "se3")
    _, scaled = run_json(capsys, "analyze", "se3", "--param", "s=2")

    assert default["input_digest"] != scaled["input_digest"]


def test_bad_parameter(capsys):
    code, _, err = run(capsys, "analyze", "se3", "--param", "q=1")

    assert code == Cli.EXIT_INPUT
    assert "error: Unknown parameter q" in err


def test_unknown_target(capsys):
    code, _, err = run(capsys, "analyze", "poincare")

    assert code == Cli.EXIT_INPUT
    assert "neither a file nor one of se3, galilei, bargmann" in err


def test_point_must_be_chosen(capsys):
    code, _, err = run(capsys, "analyze", "galilei")

    assert code == Cli.EXIT_INPUT
    assert "Choose a point: massless_boost, massless_spin" in err


def test_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "se3", "--samples", "2")

    assert code == Cli.EXIT_OK
    assert out.startswith("analyze se3")
    assert "holds  orbit.dimension-law" in out


@pytest.mark.parametrize(
    "values, expected",
    [
        ([], {}),
        (["s=3/2"], {"s": Fraction(3, 2)}),
        (["E = 5", "m=2"], {"energy": Fraction(5), "m": Fraction(2)}),
    ],
)
def test_parse_params(values, expected):
    assert Cli.parse_params(values) == expected


def test_parse_params_rejects_missing_value():
    with pytest.raises(ValueError):
        Cli.parse_params(["s"])


@pytest.mark.parametrize(
    "argv",
    [
        ("analyze", "bargmann", "--samples", "3"),
        ("check-pukanszky", "bargmann", "--pol", "plus", "--samples", "3"),
        ("induce", "se3", "--pol", "trivial", "--samples", "3"),
        ("validate", "bad_jacobi"),
    ],
)
def test_reports_match_schema(capsys, argv):
    jsonschema = pytest.importorskip("jsonschema")
    with open(SCHEMA) as fh:
        schema = json.load(fh)
    if argv[0] == "validate":
        argv = (argv[0], fixture_path(argv[1]))

    _, report = run_json(capsys, *argv)

    jsonschema.validate(report, schema)
