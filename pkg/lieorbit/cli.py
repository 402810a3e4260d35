#!/usr/bin/env python

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


"""Command line front end

Usage::

    lieorbit analyze fixtures/galilei.lie --point massless_spin --json
    lieorbit check-pukanszky se3 --pol trivial
    lieorbit examples bargmann --all
    lieorbit validate fixtures/bad_jacobi.lie

Targets are ``.lie`` files or the built-in fixtures ``se3``, ``galilei`` and
``bargmann``. The exit code is 0 when every verdict holds, 1 when some
verdict fails and 2 for input errors.

"""

import argparse
import hashlib
import io
import json
import logging
import os
import sys
from fractions import Fraction

import lieorbit
from lieorbit import getlogger, string_or_list
from lieorbit.base import (
    FAILS,
    NOT_EVALUATED,
    Check,
    CheckList,
    Settings,
    jsonable,
    verdict,
)
from lieorbit.catalog import NAMES, build, check_expected, contragredient_check
from lieorbit.errors import LieOrbitError, PreconditionFailed, SpecError, UnknownFixture
from lieorbit.exactla import span_sum
from lieorbit.induction import (
    ConnectionSpec,
    InductionSetup,
    beta_basic_check,
    connection_transfer,
    induced_orbit_theorem_check,
    symmetric_space_check,
    zero_level_set_check,
)
from lieorbit.orbit import OrbitPoint, analyze_point, characteristic_distribution
from lieorbit.polarization import (
    check_polarization,
    pukanszky_bundle_check,
    pukanszky_check,
    reduction_theorem_check,
)
from lieorbit.specdsl import elaborate, parse

logger = getlogger(__name__)

SCHEMA = "report.v1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

# Rational rotations and boosts for the closed-form dual action checks
CAYLEY_SAMPLES = (
    ((1, 0, 0), (0, 0, 0)),
    ((1, 2, -1), (1, Fraction(1, 2), -2)),
    ((Fraction(1, 3), -1, 2), (-1, 3, Fraction(2, 5))),
)


class Target(object):
    """Products, points and polarizations a subcommand works on

    Attributes:
        label (str): The fixture name or the file path
        digest (str): sha256 of the input file, or of the fixture name and
            its parameters
        points (dict): ``name -> (SemidirectProduct, CovectorPoint)``
        polarizations (dict): ``name -> (point name, ComplexSubspace)``
        fixture: The :class:`lieorbit.catalog.Fixture`, None for files

    """

    def __init__(self, label, digest, points, polarizations, fixture=None):
        self.label = label
        self.digest = digest
        self.points = points
        self.polarizations = polarizations
        self.fixture = fixture

    @staticmethod
    def _pick(kind, table, name):
        if name is None:
            if len(table) == 1:
                return list(table)[0]
            raise LieOrbitError(
                "Choose a {0}: {1}".format(
                    kind, ", ".join(sorted(table)) or "none declared"
                )
            )
        if name not in table:
            raise LieOrbitError(
                "Unknown {0} {1}, expected one of {2}".format(
                    kind, name, ", ".join(sorted(table))
                )
            )
        return name

    def point(self, name=None):
        """``(name, sd, n)``."""
        name = self._pick("point", self.points, name)
        sd, n = self.points[name]
        return name, sd, n

    def polarization(self, name=None):
        """``(name, point name, sd, n, h)``."""
        name = self._pick("polarization", self.polarizations, name)
        point_name, h = self.polarizations[name]
        sd, n = self.points[point_name]
        return name, point_name, sd, n, h

    def polarizations_at(self, point_name):
        return sorted(
            name for name, (at, _) in self.polarizations.items() if at == point_name
        )


def parse_params(values):
    """``["s=3/2", "m=2"]`` to ``{"s": Fraction(3, 2), "m": Fraction(2)}``."""
    params = {}
    for item in string_or_list(values):
        if "=" not in item:
            raise ValueError("Parameter {0!r} is not NAME=VALUE".format(item))
        key, value = item.split("=", 1)
        key = key.strip()
        if key == "E":
            key = "energy"
        if key not in ("s", "k", "m", "energy"):
            raise ValueError("Unknown parameter {0}".format(key))
        params[key] = Fraction(value.strip())
    return params


def load_target(spec, params=None):
    """Resolve a file path or a fixture name.

    Raises:
        UnknownFixture: Neither a file nor a fixture name.
        SpecError: The file does not parse or elaborate.

    """
    params = params or {}
    if os.path.isfile(spec):
        with io.open(spec, "rb") as fh:
            raw = fh.read()
        elaboration = elaborate(parse(raw.decode("utf-8"), filename=spec))
        points = dict(
            (name, elaboration.point(name)) for name in elaboration.points
        )
        return Target(
            spec,
            hashlib.sha256(raw).hexdigest(),
            points,
            dict(elaboration.polarizations),
        )
    if spec in NAMES:
        fixture = build(spec, **params)
        canonical = json.dumps(
            {"fixture": spec, "params": jsonable(fixture.params)}, sort_keys=True
        )
        points = dict((name, (fixture.sd, n)) for name, n in fixture.points.items())
        return Target(
            spec,
            hashlib.sha256(canonical.encode("utf-8")).hexdigest(),
            points,
            dict(fixture.polarizations),
            fixture=fixture,
        )
    raise UnknownFixture(
        "{0} is neither a file nor one of {1}".format(spec, ", ".join(NAMES))
    )


def _prefixed(prefix, checks):
    for check in checks:
        yield Check(
            "{0}.{1}".format(prefix, check.name),
            check.verdict,
            check.citations,
            check.residuals,
            check.caveats,
            check.values,
            check.detail,
        )


class Report(object):
    """Verdicts and values of one invocation, serialized as ``report.v1``"""

    def __init__(self, command, target, settings):
        self.command = command
        self.target = target
        self.settings = settings
        self.values = {}
        self.checks = CheckList()
        self.diagnostics = []

    @property
    def holds(self):
        return self.checks.holds and not self.diagnostics

    @property
    def exit_code(self):
        if self.diagnostics:
            return EXIT_INPUT
        return EXIT_OK if self.holds else EXIT_FAILED

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "tool_version": lieorbit.__version__,
            "command": self.command,
            "target": self.target.label if self.target else None,
            "input_digest": self.target.digest if self.target else None,
            "settings": self.settings.to_dict(),
            "values": jsonable(self.values),
            "checks": self.checks.to_list(),
            "diagnostics": [d.to_dict() for d in self.diagnostics],
            "holds": self.holds,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self):
        lines = []
        if self.target is not None:
            lines.append("{0} {1}".format(self.command, self.target.label))
        for key in sorted(self.values):
            lines.append("  {0}: {1}".format(key, jsonable(self.values[key])))
        for check in sorted(self.checks, key=lambda c: c.name):
            flags = " [{0}]".format(", ".join(check.caveats)) if check.caveats else ""
            lines.append("{0:>14}  {1}{2}".format(check.verdict, check.name, flags))
        for diagnostic in self.diagnostics:
            lines.append(str(diagnostic))
        return "\n".join(lines)


def cmd_analyze(args, target, settings):
    report = Report("analyze", target, settings)
    name, sd, n = target.point(args.point)
    orbit = analyze_point(sd, n, settings)
    report.values.update(orbit.values)
    report.values["point"] = name
    report.checks.extend(orbit.checks)
    try:
        report.values["characteristic_dim"] = characteristic_distribution(
            sd, n, settings=settings
        ).dim
    except PreconditionFailed as e:
        report.checks.add(
            Check(
                "orbit.characteristic-precondition",
                NOT_EVALUATED,
                ["characteristic distribution of L"],
                detail=e.message,
            )
        )
    return report


def _polarization_checks(report, sd, n, h, settings, with_pukanszky):
    result = check_polarization(sd, n, h, settings)
    report.values.update(result.to_dict())
    report.values["d_dim"] = result.candidate.d.dim
    report.values["e_dim"] = result.candidate.e.dim
    report.checks.extend(result.checks)
    if not with_pukanszky:
        return
    if not result.is_polarization:
        report.checks.add(
            Check(
                "pukanszky.precondition",
                FAILS,
                ["Pukanszky's condition needs a polarization"],
                values={"failed_axioms": result.failed_axioms()},
            )
        )
        return
    certificate = pukanszky_check(sd, n, h, settings, verdict_result=result)
    report.values["e_annihilator_dim"] = certificate.e_annihilator.dim
    report.values["affine_rank"] = certificate.affine_rank
    report.checks.extend(certificate.checks())
    if result.candidate.is_semidirect:
        report.checks.extend(reduction_theorem_check(sd, n, h, settings))
        if certificate.holds:
            report.checks.extend(pukanszky_bundle_check(sd, n, h, settings))


def cmd_check_polarization(args, target, settings):
    report = Report("check-polarization", target, settings)
    name, point_name, sd, n, h = target.polarization(args.pol)
    report.values.update({"polarization": name, "point": point_name})
    _polarization_checks(report, sd, n, h, settings, with_pukanszky=False)
    return report


def cmd_check_pukanszky(args, target, settings):
    report = Report("check-pukanszky", target, settings)
    name, point_name, sd, n, h = target.polarization(args.pol)
    report.values.update({"polarization": name, "point": point_name})
    _polarization_checks(report, sd, n, h, settings, with_pukanszky=True)
    return report


def _connection_checks(checks, sd, n, h, settings):
    result = check_polarization(sd, n, h, settings)
    p_alg = result.candidate.p_alg
    if p_alg is None:
        raise PreconditionFailed("Candidate is not of the form a + V")
    symmetric = symmetric_space_check(sd, n, p_alg)
    checks.add(symmetric.check())
    complement = span_sum(symmetric.m, symmetric.n_sub)
    spec = ConnectionSpec(sd, p_alg, complement)
    checks.extend(connection_transfer(spec, settings))
    checks.add(beta_basic_check(spec, n, settings))


def _induction_checks(checks, values, sd, n, settings):
    setup = InductionSetup(sd, n)
    values.update(
        {
            "h_dim": setup.h_dim,
            "m_dim": setup.m_dim,
            "quotient_dim": setup.quotient_dim,
            "orbit_dim": setup.point.orbit_dim,
        }
    )
    checks.extend(zero_level_set_check(setup, settings))
    checks.extend(induced_orbit_theorem_check(setup, settings))


def cmd_induce(args, target, settings):
    report = Report("induce", target, settings)
    name, sd, n = target.point(args.point)
    report.values["point"] = name
    _induction_checks(report.checks, report.values, sd, n, settings)
    if args.pol:
        pol_name, point_name, pol_sd, pol_n, h = target.polarization(args.pol)
        if point_name != name:
            raise LieOrbitError(
                "Polarization {0} is declared at {1}, not at {2}".format(
                    pol_name, point_name, name
                )
            )
        _connection_checks(report.checks, pol_sd, pol_n, h, settings)
    return report


def _point_values(sd, n):
    point = OrbitPoint(sd, n)
    return {
        "orbit_dim": point.orbit_dim,
        "isotropy_dim": point.isotropy.dim,
        "base_orbit_dim": point.base_orbit_dim,
        "little_orbit_dim": point.little_orbit_dim,
        "kp_in_kf": point.kp_in_kf,
    }


def cmd_examples(args, target, settings):
    if target.fixture is None:
        raise UnknownFixture("examples takes a fixture name, not a file")
    fixture = target.fixture
    report = Report("examples", target, settings)
    report.checks.extend(check_expected(fixture, settings))
    for point_name in sorted(fixture.points):
        report.values[point_name] = _point_values(
            fixture.sd, fixture.points[point_name]
        )
    if not args.all:
        return report

    sd = fixture.sd
    for point_name in sorted(fixture.points):
        n = fixture.points[point_name]
        orbit = analyze_point(sd, n, settings)
        report.checks.extend(_prefixed(point_name, orbit.checks))
        induction = CheckList()
        _induction_checks(induction, {}, sd, n, settings)
        report.checks.extend(_prefixed(point_name, induction))
        for pol_name in target.polarizations_at(point_name):
            _, h = fixture.polarizations[pol_name]
            sub = Report("examples", target, settings)
            _polarization_checks(sub, sd, n, h, settings, with_pukanszky=True)
            report.values[point_name][pol_name] = sub.values
            report.checks.extend(
                _prefixed("{0}.{1}".format(point_name, pol_name), sub.checks)
            )
    if fixture.name == "se3":
        _, h = fixture.polarizations["trivial"]
        connection = CheckList()
        _connection_checks(connection, sd, fixture.points["axial"], h, settings)
        report.checks.extend(_prefixed("axial.trivial", connection))
    else:
        point_name = sorted(fixture.points)[0]
        p = fixture.points[point_name].p.coords
        agree = [
            closed == generic
            for closed, generic in (
                contragredient_check(fixture, w, b, p) for w, b in CAYLEY_SAMPLES
            )
        ]
        report.checks.add(
            Check(
                "contragredient.closed-form",
                verdict(all(agree)),
                ["closed form of the dual action of SE(3)"],
                values={"samples": len(agree), "agree": sum(agree)},
            )
        )
    return report


def cmd_validate(args, target, settings):
    report = Report("validate", target, settings)
    report.values["points"] = sorted(target.points)
    report.values["polarizations"] = sorted(target.polarizations)
    products = {}
    for sd, _ in target.points.values():
        products[sd.name] = {"dim": sd.dim, "k_dim": sd.nk, "v_dim": sd.nv}
    report.values["products"] = products
    return report


COMMANDS = {
    "analyze": cmd_analyze,
    "check-polarization": cmd_check_polarization,
    "check-pukanszky": cmd_check_pukanszky,
    "induce": cmd_induce,
    "examples": cmd_examples,
    "validate": cmd_validate,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="Print a report.v1 JSON report"
    )
    common.add_argument("--seed", type=int, default=0, help="Master seed (default: 0)")
    common.add_argument(
        "--tol", type=float, default=1e-9, help="Tolerance (default: 1e-9)"
    )
    common.add_argument(
        "--samples", type=int, default=100, help="Samples per sampled check, 0 disables"
    )
    common.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="Fixture parameter s, k, m or E as a rational",
    )
    common.add_argument(
        "--strict",
        dest="strict",
        action="store_true",
        default=True,
        help="Refuse operations whose hypothesis fails (default)",
    )
    common.add_argument("--no-strict", dest="strict", action="store_false")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="More logging, repeatable"
    )

    parser = argparse.ArgumentParser(
        prog="lieorbit",
        description="Coadjoint orbits of semidirect products: verdict reports",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + lieorbit.__version__
    )
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("analyze", parents=[common], help="Orbit geometry at a point")
    p.add_argument("target", help=".lie file or fixture name")
    p.add_argument("--point")

    for command, text in (
        ("check-polarization", "Polarization axioms"),
        (
            "check-pukanszky",
            "Pukanszky's condition and the reduction to the little group",
        ),
    ):
        p = sub.add_parser(command, parents=[common], help=text)
        p.add_argument("target", help=".lie file or fixture name")
        p.add_argument("--pol")

    p = sub.add_parser(
        "induce", parents=[common], help="Symplectic induction at a point"
    )
    p.add_argument("target", help=".lie file or fixture name")
    p.add_argument("--point")
    p.add_argument("--pol", help="Also transfer the connection of this polarization")

    p = sub.add_parser("examples", parents=[common], help="Recompute a fixture")
    p.add_argument("target", choices=NAMES)
    p.add_argument("--all", action="store_true", help="Run every check on every point")

    p = sub.add_parser(
        "validate", parents=[common], help="Parse and elaborate a .lie file"
    )
    p.add_argument("target", help=".lie file")
    return parser


def configure_logging(verbosity):
    levels = [
        logging.WARNING,
        logging.INFO,
        logging.DEBUG,
        lieorbit.DEBUG1,
        lieorbit.DEBUG2,
        lieorbit.DEBUG3,
        lieorbit.DEBUG4,
    ]
    level = levels[min(verbosity, len(levels) - 1)]
    root = logging.getLogger("lieorbit")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)
    return handler


def _input_error(args, settings, diagnostics=None, message=None):
    report = Report(args.command, None, settings)
    report.diagnostics = list(diagnostics or [])
    if args.json:
        payload = report.to_dict()
        payload["error"] = message
        print(json.dumps(payload, sort_keys=True, indent=2))
    for diagnostic in report.diagnostics:
        print(str(diagnostic), file=sys.stderr)
    if message:
        print("error: {0}".format(message), file=sys.stderr)
    return EXIT_INPUT


def main(argv=None):
    """Run the command line; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = configure_logging(args.verbose)
    try:
        try:
            settings = Settings(
                seed=args.seed, tol=args.tol, samples=args.samples, strict=args.strict
            )
            params = parse_params(args.param)
        except ValueError as e:
            return _input_error(args, Settings(), message=str(e))
        try:
            if args.command == "validate" and not os.path.isfile(args.target):
                raise LieOrbitError("No such file: {0}".format(args.target))
            target = load_target(args.target, params)
            logger.info("running %s on %s", args.command, target.label)
            report = COMMANDS[args.command](args, target, settings)
        except SpecError as e:
            return _input_error(args, settings, diagnostics=e.diagnostics)
        except (LieOrbitError, ValueError, IOError) as e:
            return _input_error(args, settings, message="{0}".format(e))
        print(report.to_json() if args.json else report.to_text())
        return report.exit_code
    finally:
        logging.getLogger("lieorbit").removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
