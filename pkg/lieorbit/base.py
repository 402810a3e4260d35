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


"""Settings and verdict records shared by every check in lie-orbit-python"""

import zlib
from fractions import Fraction

import numpy as np

from lieorbit import getlogger
from lieorbit.exactla import DEFAULT_TOLERANCE, Gaussian, Subspace

logger = getlogger(__name__)

HOLDS = "holds"
FAILS = "fails"
NOT_EVALUATED = "not-evaluated"

CAVEAT_CONNECTED = "connected-components-assumed-trivial"
CAVEAT_SAMPLED = "sampled-only"
CAVEAT_TANGENT = "membership-tangent-level"


def verdict(flag):
    """Map a boolean onto the verdict vocabulary."""
    return HOLDS if flag else FAILS


class Settings(object):
    """Knobs for sampled and floating point checks

    Args:
        seed (int): Master seed, every check derives its own stream from it
        tol (float): Tolerance for numeric residuals and float rank decisions
        samples (int): Number of numeric samples per sampled check. Zero
            disables sampling and sampled verdicts read "not-evaluated".
        strict (bool): Raise when the hypothesis of an operation fails
            instead of computing the general answer
        fd_step (float): Step for finite differences

    """

    def __init__(
        self, seed=0, tol=DEFAULT_TOLERANCE, samples=100, strict=True, fd_step=1e-4
    ):
        if samples < 0:
            raise ValueError("samples must be non-negative, got {0}".format(samples))
        if tol <= 0:
            raise ValueError("tol must be positive, got {0}".format(tol))
        self.seed = int(seed)
        self.tol = float(tol)
        self.samples = int(samples)
        self.strict = bool(strict)
        self.fd_step = float(fd_step)

    @property
    def sampling(self):
        return self.samples > 0

    def rng(self, stream):
        """A generator seeded from the master seed and a stream name.

        Streams are independent of each other, so the order in which checks
        run never changes their samples.

        """
        return np.random.default_rng([self.seed, zlib.crc32(stream.encode("utf-8"))])

    def replace(self, **kwargs):
        values = self.to_dict()
        values.update(kwargs)
        return Settings(**values)

    def to_dict(self):
        return {
            "seed": self.seed,
            "tol": self.tol,
            "samples": self.samples,
            "strict": self.strict,
            "fd_step": self.fd_step,
        }

    def __repr__(self):
        return "Settings(seed={0}, tol={1}, samples={2}, strict={3})".format(
            self.seed, self.tol, self.samples, self.strict
        )


def jsonable(value):
    """Convert computed values into plain JSON types."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (Fraction, Gaussian)):
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        return str(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Subspace):
        return {
            "dim": value.dim,
            "basis": [[jsonable(x) for x in row] for row in value.basis],
        }
    if isinstance(value, dict):
        return dict((str(k), jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonable(x) for x in value]
    return value


class Check(object):
    """One verified statement

    Args:
        name (str): Stable identifier, reports are sorted by it
        verdict (str): One of "holds", "fails", "not-evaluated"
        citations (list): Where the statement comes from
        residuals (dict): Numeric residuals by name
        caveats (list): Caveat flags such as connectedness assumptions
        values (dict): Computed quantities backing the verdict
        detail (str): Human readable explanation

    """

    def __init__(
        self,
        name,
        verdict,
        citations=None,
        residuals=None,
        caveats=None,
        values=None,
        detail="",
    ):
        if verdict not in (HOLDS, FAILS, NOT_EVALUATED):
            raise ValueError("Unknown verdict: {0}".format(verdict))
        self.name = name
        self.verdict = verdict
        self.citations = list(citations or [])
        self.residuals = dict(residuals or {})
        self.caveats = sorted(set(caveats or []))
        self.values = dict(values or {})
        self.detail = detail

    @property
    def holds(self):
        return self.verdict == HOLDS

    @property
    def failed(self):
        return self.verdict == FAILS

    def to_dict(self):
        return {
            "name": self.name,
            "verdict": self.verdict,
            "citations": list(self.citations),
            "residuals": jsonable(self.residuals),
            "caveats": list(self.caveats),
            "values": jsonable(self.values),
            "detail": self.detail,
        }

    def __repr__(self):
        return "<Check {0}: {1}>".format(self.name, self.verdict)


class CheckList(object):
    """An ordered collection of :class:`Check` records"""

    def __init__(self, checks=None):
        self._checks = []
        for check in checks or []:
            self.add(check)

    def add(self, check):
        logger.debug("check %s: %s", check.name, check.verdict)
        self._checks.append(check)
        return check

    def extend(self, checks):
        for check in checks:
            self.add(check)

    def by_name(self, name):
        for check in self._checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def holds(self):
        """True unless some check failed; not-evaluated never fails."""
        return not any(check.failed for check in self._checks)

    def failures(self):
        return [check for check in self._checks if check.failed]

    def to_list(self):
        return [c.to_dict() for c in sorted(self._checks, key=lambda c: c.name)]

    def __iter__(self):
        return iter(self._checks)

    def __len__(self):
        return len(self._checks)


def sampled_verdict(settings, residuals, extra=True):
    """Verdict of a sampled check from its residuals.

    Args:
        settings (Settings): Supplies the tolerance and the sampling switch
        residuals (list): Nonnegative residuals, one per sample
        extra (bool): Additional condition that must hold as well

    Returns:
        str: "not-evaluated" when sampling is off, otherwise the verdict

    """
    if not settings.sampling:
        return NOT_EVALUATED
    worst = max(residuals) if residuals else 0.0
    return verdict(worst < settings.tol and extra)


def max_residual(residuals):
    return float(max(residuals)) if residuals else 0.0


def distance_to_subspace(values, subspace):
    """Euclidean distance of a float vector from a subspace.

    Complex vectors and :class:`lieorbit.exactla.ComplexSubspace` are
    accepted as well.

    """
    x = np.asarray(values)
    if subspace.dim == 0:
        return float(np.linalg.norm(x))
    basis = np.array([[complex(v) for v in row] for row in subspace.basis])
    if not np.iscomplexobj(x) and not np.any(basis.imag):
        basis = basis.real
    coefficients = np.linalg.lstsq(basis.T, x, rcond=None)[0]
    return float(np.linalg.norm(basis.T @ coefficients - x))
