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


"""Exception classes used by lie-orbit-python package"""


class LieOrbitError(Exception):
    """Base exception for errors raised by lie-orbit-python

    Operations that decide a mathematical property return a verdict
    instead of raising; this exception family is reserved for inputs the
    operation cannot be applied to.

    Attributes:
        message: The error message for the exception
        context: Optional object the error refers to (a matrix, a point,
            a declaration, ...)

    """

    def __init__(self, *args, **kwargs):
        self.context = kwargs.pop("context", None)
        super(LieOrbitError, self).__init__(*args, **kwargs)
        self.message = "{0}".format(self)


class DimensionMismatch(LieOrbitError):
    """A vector, covector or matrix has the wrong length or shape"""

    pass


class AmbientMismatch(DimensionMismatch):
    pass


class NotASubspace(LieOrbitError):
    pass


class NotASubalgebra(LieOrbitError):
    pass


class InconsistentSystem(LieOrbitError):
    pass


class SingularMatrix(LieOrbitError):
    pass


class ValidationFailed(LieOrbitError):
    """Structure constants or representation matrices are not valid

    Attributes:
        report: The :class:`lieorbit.lie_core.ValidationReport` listing
            every violation

    """

    def __init__(self, *args, **kwargs):
        self.report = kwargs.pop("report", None)
        super(ValidationFailed, self).__init__(*args, **kwargs)


class NotOnOrbit(LieOrbitError):
    pass


class PreconditionFailed(LieOrbitError):
    """The hypothesis of a statement does not hold at the given data

    Attributes:
        violations: List of the offending items, for example basis index
            pairs whose bracket pairing does not vanish

    """

    def __init__(self, *args, **kwargs):
        self.violations = kwargs.pop("violations", [])
        super(PreconditionFailed, self).__init__(*args, **kwargs)


class NotSemidirectForm(PreconditionFailed):
    pass


class UnknownFixture(LieOrbitError):
    pass


class SpecError(LieOrbitError):
    """A .lie document failed to parse or elaborate

    Attributes:
        diagnostics: List of :class:`lieorbit.specdsl.Diagnostic`, at least
            one, each carrying a source span

    """

    def __init__(self, *args, **kwargs):
        self.diagnostics = kwargs.pop("diagnostics", [])
        if not args and self.diagnostics:
            args = ("\n".join(str(x) for x in self.diagnostics),)
        super(SpecError, self).__init__(*args, **kwargs)
