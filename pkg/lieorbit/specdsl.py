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


"""Reader for ``.lie`` documents

A document declares, in order, Lie algebras, representations, semidirect
products, covector points and polarization candidates::

    algebra so3 {
        basis w1 w2 w3
        bracket [w1,w2] = w3
        bracket [w1,w3] = -w2
        bracket [w2,w3] = w1
    }
    rep vector on so3 dim 3 {
        basis x1 x2 x3
        w1 -> [0 0 0; 0 0 -1; 0 1 0]
    }
    product se3 = so3 x vector
    point axial in se3* { f = w3; p = x3 }
    polarization trivial at axial { a = span { w3 } }

Numbers are rationals ``INT`` or ``INT/INT``; a trailing ``i`` makes them
imaginary, which is only accepted inside polarization blocks. Brackets that
are not declared are zero, brackets are written with the left element
declared before the right one, and ``#`` starts a comment.

:func:`parse` builds a :class:`SpecDocument`, :func:`elaborate` turns it into
validated algebras, products, points and polarization candidates. Both raise
:class:`lieorbit.errors.SpecError` carrying located :class:`Diagnostic`
records.

"""

import io
import re
from fractions import Fraction

from lieorbit import getlogger
from lieorbit.errors import LieOrbitError, SpecError
from lieorbit.exactla import ComplexSubspace, Gaussian, Matrix
from lieorbit.lie_core import LieAlgebra, Representation, validate
from lieorbit.polarization import rebuild
from lieorbit.semidirect import SemidirectProduct

logger = getlogger(__name__)

ERROR = "error"
NOTE = "note"

KEYWORDS = frozenset(
    [
        "algebra",
        "basis",
        "bracket",
        "rep",
        "on",
        "dim",
        "product",
        "point",
        "in",
        "polarization",
        "at",
        "span",
    ]
)

TOKEN_KINDS = {
    "IDENTIFIER": "identifier",
    "KEYWORD": "keyword",
    "NUMBER": "number",
    "{": "'{'",
    "}": "'}'",
    "[": "'['",
    "]": "']'",
    ",": "','",
    ";": "';'",
    "=": "'='",
    "+": "'+'",
    "-": "'-'",
    "*": "'*'",
    "->": "'->'",
}

TOKEN_RE = re.compile(
    r"""
    (?P<SPACE>[ \t\r\f]+)
  | (?P<NEWLINE>\n)
  | (?P<COMMENT>\#[^\n]*)
  | (?P<NUMBER>[0-9]+(?:/[0-9]+)?i?)
  | (?P<IDENTIFIER>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<PUNCT>->|[{}\[\],;=+\-*])
""",
    re.VERBOSE,
)


class Location(object):
    """A span of source text, lines and columns start at 1"""

    def __init__(self, filename, line, col, end_line=None, end_col=None):
        self.filename = filename
        self.line = line
        self.col = col
        self.end_line = line if end_line is None else end_line
        self.end_col = col if end_col is None else end_col

    def span_to(self, other):
        return Location(
            self.filename, self.line, self.col, other.end_line, other.end_col
        )

    def to_dict(self):
        return {
            "file": self.filename,
            "line": self.line,
            "col": self.col,
            "end_line": self.end_line,
            "end_col": self.end_col,
        }

    def __str__(self):
        return "{0}:{1}:{2}".format(self.filename, self.line, self.col)

    def __repr__(self):
        return "<Location {0}-{1}:{2}>".format(self, self.end_line, self.end_col)


class Diagnostic(object):
    """A located message

    Args:
        severity (str): ``error`` or ``note``
        message (str): What went wrong
        location (Location): Where
        notes (list): Related :class:`Diagnostic` records of severity ``note``

    """

    def __init__(self, severity, message, location, notes=None):
        self.severity = severity
        self.message = message
        self.location = location
        self.notes = list(notes or [])

    def to_dict(self):
        return {
            "severity": self.severity,
            "message": self.message,
            "location": self.location.to_dict(),
            "notes": [n.to_dict() for n in self.notes],
        }

    def __str__(self):
        lines = ["{0}: {1}: {2}".format(self.location, self.severity, self.message)]
        lines.extend(str(n) for n in self.notes)
        return "\n".join(lines)

    def __repr__(self):
        return "<Diagnostic {0}>".format(self)


class Token(object):
    def __init__(self, kind, value, location):
        self.kind = kind
        self.value = value
        self.location = location

    def __repr__(self):
        return "<Token {0} {1!r} at {2}>".format(self.kind, self.value, self.location)


def _number(text):
    imaginary = text.endswith("i")
    if imaginary:
        text = text[:-1]
    value = Fraction(text)
    return Gaussian(0, value) if imaginary else value


def tokenize(text, filename="<string>"):
    """Split a document into tokens, comments are dropped.

    Raises:
        SpecError: Unexpected character or zero denominator.

    """
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if match is None:
            location = Location(filename, line, col)
            raise SpecError(
                diagnostics=[
                    Diagnostic(
                        ERROR, "unexpected character {0!r}".format(text[pos]), location
                    )
                ]
            )
        kind = match.lastgroup
        lexeme = match.group(kind)
        location = Location(filename, line, col, line, col + len(lexeme) - 1)
        pos = match.end()
        if kind == "NEWLINE":
            line += 1
            line_start = pos
            continue
        if kind in ("SPACE", "COMMENT"):
            continue
        if kind == "NUMBER":
            try:
                value = _number(lexeme)
            except ZeroDivisionError:
                raise SpecError(
                    diagnostics=[Diagnostic(ERROR, "zero denominator", location)]
                )
            tokens.append(Token("NUMBER", value, location))
        elif kind == "IDENTIFIER":
            tokens.append(
                Token(
                    "KEYWORD" if lexeme in KEYWORDS else "IDENTIFIER", lexeme, location
                )
            )
        else:
            tokens.append(Token(lexeme, lexeme, location))
    return tokens


def _normalize(value):
    if isinstance(value, Gaussian) and value.imag == 0:
        return value.real
    return value


class LinearCombination(object):
    """``sum c_i name_i`` with merged, nonzero coefficients in order of first use"""

    def __init__(self, terms, location=None):
        merged = []
        index = {}
        for name, coefficient in terms:
            if name in index:
                i = index[name]
                merged[i] = (name, merged[i][1] + coefficient)
            else:
                index[name] = len(merged)
                merged.append((name, coefficient))
        self.terms = tuple(
            (name, _normalize(c)) for name, c in merged if _normalize(c) != 0
        )
        self.location = location

    @property
    def is_real(self):
        return not any(isinstance(c, Gaussian) for _, c in self.terms)

    def coords(self, names):
        """Coordinates against an ordered list of basis names."""
        values = [Fraction(0)] * len(names)
        for name, coefficient in self.terms:
            i = names.index(name)
            values[i] = values[i] + coefficient
        return tuple(_normalize(v) for v in values)

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "<LinearCombination {0}>".format(format_lincomb(self))


class Declaration(object):
    """Base of the document declarations, equality ignores source spans"""

    KIND = None

    def __init__(self, name, location):
        self.name = name
        self.location = location

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self.name == other.name and self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.KIND, self.name))

    def __repr__(self):
        return "<{0} {1}>".format(self.KIND, self.name)


class BracketDecl(object):
    def __init__(self, left, right, value, location):
        self.left = left
        self.right = right
        self.value = value
        self.location = location

    def key(self):
        return (self.left, self.right, self.value)


class AlgebraDecl(Declaration):
    KIND = "algebra"

    def __init__(self, name, basis, brackets, location):
        super(AlgebraDecl, self).__init__(name, location)
        self.basis = tuple(basis)
        self.brackets = tuple(brackets)

    def _key(self):
        return (self.basis, tuple(b.key() for b in self.brackets))


class MatrixDecl(object):
    def __init__(self, element, rows, location):
        self.element = element
        self.rows = tuple(tuple(r) for r in rows)
        self.location = location

    def key(self):
        return (self.element, self.rows)


class RepDecl(Declaration):
    KIND = "rep"

    def __init__(self, name, algebra, dim, space_names, matrices, location):
        super(RepDecl, self).__init__(name, location)
        self.algebra = algebra
        self.dim = dim
        self.declared_names = tuple(space_names) if space_names else None
        self.matrices = tuple(matrices)

    @property
    def space_names(self):
        if self.declared_names:
            return self.declared_names
        return tuple("v{0}".format(i + 1) for i in range(self.dim))

    def _key(self):
        return (
            self.algebra,
            self.dim,
            self.declared_names,
            tuple(m.key() for m in self.matrices),
        )


class ProductDecl(Declaration):
    KIND = "product"

    def __init__(self, name, algebra, rep, location):
        super(ProductDecl, self).__init__(name, location)
        self.algebra = algebra
        self.rep = rep

    def _key(self):
        return (self.algebra, self.rep)


class PointDecl(Declaration):
    KIND = "point"

    def __init__(self, name, product, f, p, location):
        super(PointDecl, self).__init__(name, location)
        self.product = product
        self.f = f
        self.p = p

    def _key(self):
        return (self.product, self.f, self.p)


class PolarizationDecl(Declaration):
    KIND = "polarization"

    def __init__(self, name, point, span, location):
        super(PolarizationDecl, self).__init__(name, location)
        self.point = point
        self.span = tuple(span)

    def _key(self):
        return (self.point, self.span)


class SpecDocument(object):
    """The declarations of a ``.lie`` document, in source order"""

    def __init__(self, declarations=(), filename="<string>"):
        self.declarations = tuple(declarations)
        self.filename = filename
        self._by_name = dict((d.name, d) for d in self.declarations)

    def get(self, name, kind=None):
        decl = self._by_name.get(name)
        if decl is None or (kind is not None and decl.KIND != kind):
            return None
        return decl

    def of_kind(self, kind):
        return [d for d in self.declarations if d.KIND == kind]

    def __iter__(self):
        return iter(self.declarations)

    def __len__(self):
        return len(self.declarations)

    def __eq__(self, other):
        if not isinstance(other, SpecDocument):
            return NotImplemented
        return self.declarations == other.declarations

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.declarations)

    def __repr__(self):
        return "<SpecDocument {0} with {1} declarations>".format(
            self.filename, len(self)
        )


class Parser(object):
    """Recursive descent parser with one token of lookahead

    Args:
        text (str): The document
        filename (str): Used in locations

    """

    def __init__(self, text, filename="<string>"):
        self._logger = getlogger(__name__ + "." + self.__class__.__name__)
        self.filename = filename
        self._tokens = tokenize(text, filename)
        self._pos = 0
        self._declared = {}
        self.ct = None
        self.nt = None
        self.advance()

    def advance(self):
        self.ct = self.nt
        if self._pos < len(self._tokens):
            self.nt = self._tokens[self._pos]
            self._pos += 1
        else:
            self.nt = None

    def error(self, location, message, notes=None):
        raise SpecError(diagnostics=[Diagnostic(ERROR, message, location, notes)])

    def _here(self):
        if self.nt is not None:
            return self.nt.location
        if self.ct is not None:
            return self.ct.location
        return Location(self.filename, 1, 1)

    def _describe_next(self):
        if self.nt is None:
            return "end of file"
        if self.nt.kind in ("KEYWORD", "IDENTIFIER"):
            return "{0} '{1}'".format(TOKEN_KINDS[self.nt.kind], self.nt.value)
        return TOKEN_KINDS[self.nt.kind]

    def peek(self, kind):
        return self.nt is not None and self.nt.kind == kind

    def peek_kw(self, value):
        return self.peek("KEYWORD") and self.nt.value == value

    def match(self, kind):
        if not self.peek(kind):
            self.error(
                self._here(),
                "expected {0}, encountered {1} instead".format(
                    TOKEN_KINDS[kind], self._describe_next()
                ),
            )
        self.advance()
        return self.ct

    def match_kw(self, value):
        if not self.peek_kw(value):
            self.error(
                self._here(),
                "expected keyword {0}, encountered {1} instead".format(
                    value, self._describe_next()
                ),
            )
        self.advance()
        return self.ct

    def match_word(self, value):
        """An identifier with a fixed spelling, such as ``x`` or ``f``."""
        if not (self.peek("IDENTIFIER") and self.nt.value == value):
            self.error(
                self._here(),
                "expected '{0}', encountered {1} instead".format(
                    value, self._describe_next()
                ),
            )
        self.advance()
        return self.ct

    def _span(self, start):
        return start.location.span_to(self.ct.location)

    def _reference(self, kind):
        token = self.match("IDENTIFIER")
        decl = self._declared.get(token.value)
        if decl is None:
            self.error(token.location, "unknown {0} {1}".format(kind, token.value))
        if decl.KIND != kind:
            self.error(
                token.location,
                "{0} is a {1}, expected a {2}".format(token.value, decl.KIND, kind),
                [Diagnostic(NOTE, "declared here", decl.location)],
            )
        return decl

    def _declare(self, token):
        previous = self._declared.get(token.value)
        if previous is not None:
            self.error(
                token.location,
                "duplicate declaration of {0}".format(token.value),
                [Diagnostic(NOTE, "previous declaration", previous.location)],
            )

    def parse_document(self):
        declarations = []
        handlers = {
            "algebra": self.parse_algebra,
            "rep": self.parse_rep,
            "product": self.parse_product,
            "point": self.parse_point,
            "polarization": self.parse_polarization,
        }
        while self.nt is not None:
            if self.nt.kind != "KEYWORD" or self.nt.value not in handlers:
                self.error(
                    self._here(),
                    "expected a declaration, encountered {0} instead".format(
                        self._describe_next()
                    ),
                )
            decl = handlers[self.nt.value]()
            self._declared[decl.name] = decl
            declarations.append(decl)
            self._logger.debug2("parsed %r", decl)
        return SpecDocument(declarations, self.filename)

    def parse_number(self, complex_ok=False):
        negative = False
        if self.peek("-"):
            self.advance()
            negative = True
        token = self.match("NUMBER")
        if isinstance(token.value, Gaussian) and not complex_ok:
            self.error(
                token.location,
                "complex numbers are only allowed in polarization blocks",
            )
        return -token.value if negative else token.value

    def parse_lincomb(self, names, what, complex_ok=False):
        """``[sign] term ((+|-) term)*`` with ``term := [NUMBER [*]] NAME``.

        A lone ``0`` is the empty combination.

        """
        start = self.nt
        terms = []
        sign = 1
        if self.peek("-"):
            self.advance()
            sign = -1
        elif self.peek("+"):
            self.advance()
        while True:
            coefficient = Fraction(1)
            if self.peek("NUMBER"):
                token = self.match("NUMBER")
                coefficient = token.value
                if isinstance(coefficient, Gaussian) and not complex_ok:
                    self.error(
                        token.location,
                        "complex numbers are only allowed in polarization blocks",
                    )
                if self.peek("*"):
                    self.advance()
                elif coefficient == 0 and not terms and not self.peek("IDENTIFIER"):
                    break
            token = self.match("IDENTIFIER")
            if token.value not in names:
                self.error(
                    token.location,
                    "{0} is not a basis element of {1}".format(token.value, what),
                )
            terms.append((token.value, sign * coefficient))
            if self.peek("+"):
                sign = 1
            elif self.peek("-"):
                sign = -1
            else:
                break
            self.advance()
        location = self._span(start) if start is not None else self._here()
        return LinearCombination(terms, location)

    def parse_algebra(self):
        start = self.match_kw("algebra")
        name = self.match("IDENTIFIER")
        self._declare(name)
        self.match("{")
        self.match_kw("basis")
        basis = []
        while self.peek("IDENTIFIER"):
            token = self.match("IDENTIFIER")
            if token.value in basis:
                self.error(
                    token.location, "duplicate basis element {0}".format(token.value)
                )
            basis.append(token.value)
        if not basis:
            self.error(self._here(), "an algebra needs at least one basis element")
        brackets = []
        seen = {}
        while self.peek_kw("bracket"):
            keyword = self.match_kw("bracket")
            self.match("[")
            left = self.match("IDENTIFIER")
            self.match(",")
            right = self.match("IDENTIFIER")
            self.match("]")
            self.match("=")
            value = self.parse_lincomb(basis, name.value)
            span = self._span(keyword)
            for token in (left, right):
                if token.value not in basis:
                    self.error(
                        token.location,
                        "{0} is not a basis element of {1}".format(
                            token.value, name.value
                        ),
                    )
            if left.value == right.value:
                self.error(span, "bracket of a basis element with itself must be zero")
            if basis.index(left.value) > basis.index(right.value):
                self.error(
                    span,
                    "bracket [{0},{1}] must be written as [{1},{0}]".format(
                        left.value, right.value
                    ),
                )
            pair = (left.value, right.value)
            if pair in seen:
                self.error(
                    span,
                    "duplicate bracket [{0},{1}]".format(*pair),
                    [Diagnostic(NOTE, "previous definition", seen[pair].location)],
                )
            decl = BracketDecl(left.value, right.value, value, span)
            seen[pair] = decl
            brackets.append(decl)
        self.match("}")
        return AlgebraDecl(name.value, basis, brackets, self._span(start))

    def parse_matrix(self):
        start = self.match("[")
        rows = [[]]
        while not self.peek("]"):
            if self.peek(";"):
                self.advance()
                rows.append([])
                continue
            rows[-1].append(self.parse_number())
        self.match("]")
        return rows, self._span(start)

    def parse_rep(self):
        start = self.match_kw("rep")
        name = self.match("IDENTIFIER")
        self._declare(name)
        self.match_kw("on")
        algebra = self._reference("algebra")
        self.match_kw("dim")
        dim_token = self.match("NUMBER")
        dim = dim_token.value
        if not isinstance(dim, Fraction) or dim.denominator != 1 or dim < 0:
            self.error(dim_token.location, "dim must be a non-negative integer")
        dim = int(dim)
        self.match("{")
        space_names = None
        if self.peek_kw("basis"):
            keyword = self.match_kw("basis")
            space_names = []
            while self.peek("IDENTIFIER"):
                token = self.match("IDENTIFIER")
                if token.value in space_names:
                    self.error(
                        token.location,
                        "duplicate basis element {0}".format(token.value),
                    )
                space_names.append(token.value)
            if len(space_names) != dim:
                self.error(
                    self._span(keyword),
                    "{0} basis names given for dim {1}".format(len(space_names), dim),
                )
        matrices = []
        seen = {}
        while self.peek("IDENTIFIER"):
            element = self.match("IDENTIFIER")
            if element.value not in algebra.basis:
                self.error(
                    element.location,
                    "{0} is not a basis element of {1}".format(
                        element.value, algebra.name
                    ),
                )
            if element.value in seen:
                self.error(
                    element.location,
                    "duplicate matrix for {0}".format(element.value),
                    [Diagnostic(NOTE, "previous definition", seen[element.value])],
                )
            self.match("->")
            rows, location = self.parse_matrix()
            span = element.location.span_to(location)
            seen[element.value] = span
            matrices.append(MatrixDecl(element.value, rows, span))
        self.match("}")
        return RepDecl(
            name.value, algebra.name, dim, space_names, matrices, self._span(start)
        )

    def parse_product(self):
        start = self.match_kw("product")
        name = self.match("IDENTIFIER")
        self._declare(name)
        self.match("=")
        algebra = self._reference("algebra")
        self.match_word("x")
        rep_token = self.nt
        rep = self._reference("rep")
        if rep.algebra != algebra.name:
            self.error(
                rep_token.location,
                "representation {0} is not defined on {1}".format(
                    rep.name, algebra.name
                ),
                [Diagnostic(NOTE, "declared here", rep.location)],
            )
        return ProductDecl(name.value, algebra.name, rep.name, self._span(start))

    def _product_parts(self, product):
        algebra = self._declared[product.algebra]
        rep = self._declared[product.rep]
        return algebra, rep

    def parse_point(self):
        start = self.match_kw("point")
        name = self.match("IDENTIFIER")
        self._declare(name)
        self.match_kw("in")
        product = self._reference("product")
        self.match("*")
        algebra, rep = self._product_parts(product)
        self.match("{")
        self.match_word("f")
        self.match("=")
        f = self.parse_lincomb(algebra.basis, algebra.name)
        self.match(";")
        self.match_word("p")
        self.match("=")
        p = self.parse_lincomb(rep.space_names, rep.name)
        if self.peek(";"):
            self.advance()
        self.match("}")
        return PointDecl(name.value, product.name, f, p, self._span(start))

    def parse_polarization(self):
        start = self.match_kw("polarization")
        name = self.match("IDENTIFIER")
        self._declare(name)
        self.match_kw("at")
        point = self._reference("point")
        algebra, _ = self._product_parts(self._declared[point.product])
        self.match("{")
        self.match_word("a")
        self.match("=")
        self.match_kw("span")
        self.match("{")
        span = []
        while not self.peek("}"):
            if span:
                self.match(",")
            span.append(
                self.parse_lincomb(algebra.basis, algebra.name, complex_ok=True)
            )
        self.match("}")
        if self.peek(";"):
            self.advance()
        self.match("}")
        return PolarizationDecl(name.value, point.name, span, self._span(start))


def parse(text, filename="<string>"):
    """Parse a document.

    Raises:
        SpecError: Lexical, syntax and reference errors, with one located
            diagnostic.

    """
    return Parser(text, filename).parse_document()


def parse_file(path):
    with io.open(path, "r", encoding="utf-8", newline="") as fh:
        return parse(fh.read(), filename=str(path))


def format_lincomb(lincomb):
    """Canonical text of a combination; ``a + bi`` coefficients become two terms."""
    parts = []
    for name, coefficient in lincomb.terms:
        pieces = []
        if isinstance(coefficient, Gaussian):
            if coefficient.real != 0:
                pieces.append(coefficient.real)
            pieces.append(Gaussian(0, coefficient.imag))
        else:
            pieces.append(coefficient)
        for piece in pieces:
            magnitude = piece.imag if isinstance(piece, Gaussian) else piece
            sign = "-" if magnitude < 0 else "+"
            if isinstance(piece, Gaussian):
                body = "{0}i {1}".format(abs(magnitude), name)
            elif abs(magnitude) == 1:
                body = name
            else:
                body = "{0} {1}".format(abs(magnitude), name)
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append("{0} {1}".format(sign, body))
    return " ".join(parts) if parts else "0"


def _format_matrix(rows):
    return "[{0}]".format("; ".join(" ".join(str(x) for x in row) for row in rows))


def format_document(doc):
    """Pretty print a document; the output parses back to an equal document."""
    out = []
    for decl in doc:
        if isinstance(decl, AlgebraDecl):
            out.append("algebra {0} {{".format(decl.name))
            out.append("    basis {0}".format(" ".join(decl.basis)))
            for b in decl.brackets:
                out.append(
                    "    bracket [{0},{1}] = {2}".format(
                        b.left, b.right, format_lincomb(b.value)
                    )
                )
            out.append("}")
        elif isinstance(decl, RepDecl):
            out.append(
                "rep {0} on {1} dim {2} {{".format(decl.name, decl.algebra, decl.dim)
            )
            if decl.declared_names:
                out.append("    basis {0}".format(" ".join(decl.declared_names)))
            for m in decl.matrices:
                out.append("    {0} -> {1}".format(m.element, _format_matrix(m.rows)))
            out.append("}")
        elif isinstance(decl, ProductDecl):
            out.append(
                "product {0} = {1} x {2}".format(decl.name, decl.algebra, decl.rep)
            )
        elif isinstance(decl, PointDecl):
            out.append("point {0} in {1}* {{".format(decl.name, decl.product))
            out.append("    f = {0};".format(format_lincomb(decl.f)))
            out.append("    p = {0}".format(format_lincomb(decl.p)))
            out.append("}")
        elif isinstance(decl, PolarizationDecl):
            out.append("polarization {0} at {1} {{".format(decl.name, decl.point))
            body = ", ".join(format_lincomb(x) for x in decl.span)
            out.append("    a = span {{ {0} }}".format(body))
            out.append("}")
        out.append("")
    return "\n".join(out)


class Elaboration(object):
    """Validated objects built from a document

    Attributes:
        algebras (dict): :class:`LieAlgebra` by name
        representations (dict): :class:`Representation` by name
        products (dict): :class:`SemidirectProduct` by name
        points (dict): ``name -> (product name, CovectorPoint)``
        polarizations (dict): ``name -> (point name, ComplexSubspace)``, the
            candidate ``a + V`` in the complexified product

    """

    def __init__(self, document):
        self.document = document
        self.algebras = {}
        self.representations = {}
        self.products = {}
        self.points = {}
        self.polarizations = {}

    def point(self, name):
        """``(product, point)`` for a point name."""
        try:
            product, n = self.points[name]
        except KeyError:
            raise LieOrbitError("Document declares no point {0}".format(name))
        return self.products[product], n

    def polarization(self, name):
        """``(product, point, h)`` for a polarization name."""
        try:
            point, h = self.polarizations[name]
        except KeyError:
            raise LieOrbitError("Document declares no polarization {0}".format(name))
        sd, n = self.point(point)
        return sd, n, h

    def __repr__(self):
        return "<Elaboration {0}: {1} products, {2} points>".format(
            self.document.filename, len(self.products), len(self.points)
        )


def _bracket_sites(decl, names, triple):
    pairs = set()
    for a in triple:
        for b in triple:
            if a < b:
                pairs.add((names[a], names[b]))
    return [b for b in decl.brackets if (b.left, b.right) in pairs]


def _elaborate_algebra(decl, diagnostics):
    brackets = dict(
        ((b.left, b.right), b.value.coords(decl.basis)) for b in decl.brackets
    )
    algebra = LieAlgebra.from_brackets(decl.basis, brackets, name=decl.name)
    report = validate(algebra)
    for triple in report.jacobi:
        names = [decl.basis[i] for i in triple]
        sites = _bracket_sites(decl, decl.basis, triple)
        location = sites[0].location if sites else decl.location
        notes = [
            Diagnostic(
                NOTE,
                "bracket [{0},{1}] declared here".format(s.left, s.right),
                s.location,
            )
            for s in sites[1:]
        ]
        diagnostics.append(
            Diagnostic(
                ERROR,
                "Jacobi identity fails for basis triple ({0}, {1}, {2})".format(*names),
                location,
                notes,
            )
        )
    return None if report.jacobi else algebra


def _elaborate_rep(decl, algebra, diagnostics):
    by_element = dict((m.element, m) for m in decl.matrices)
    matrices = []
    ok = True
    for element in algebra.basis_names:
        m = by_element.get(element)
        if m is None:
            matrices.append(Matrix.zeros(decl.dim, decl.dim))
            continue
        shape = (len(m.rows), max([len(r) for r in m.rows] + [0]))
        ragged = any(len(r) != shape[1] for r in m.rows)
        if ragged or shape != (decl.dim, decl.dim):
            diagnostics.append(
                Diagnostic(
                    ERROR,
                    "matrix for {0} has shape {1}, expected {2}x{2}".format(
                        element,
                        "ragged" if ragged else "{0}x{1}".format(*shape),
                        decl.dim,
                    ),
                    m.location,
                )
            )
            ok = False
            continue
        matrices.append(Matrix(m.rows))
    if not ok:
        return None
    rep = Representation(
        algebra, matrices, name=decl.name, space_names=decl.space_names
    )
    report = validate(algebra, rep)
    for i, j in report.homomorphism:
        left, right = algebra.basis_names[i], algebra.basis_names[j]
        sites = [by_element[x] for x in (left, right) if x in by_element]
        location = sites[0].location if sites else decl.location
        diagnostics.append(
            Diagnostic(
                ERROR,
                "representation does not respect [{0},{1}]".format(left, right),
                location,
                [
                    Diagnostic(NOTE, "matrix declared here", s.location)
                    for s in sites[1:]
                ],
            )
        )
    return None if report.homomorphism else rep


def elaborate(doc):
    """Validate a document and build its objects.

    Returns:
        Elaboration: The algebras, representations, products, points and
        polarization candidates of the document

    Raises:
        SpecError: Jacobi, homomorphism or shape violations, each located at
            the declarations involved. Objects depending on an invalid
            declaration are skipped silently.

    """
    result = Elaboration(doc)
    diagnostics = []
    for decl in doc:
        if isinstance(decl, AlgebraDecl):
            algebra = _elaborate_algebra(decl, diagnostics)
            if algebra is not None:
                result.algebras[decl.name] = algebra
        elif isinstance(decl, RepDecl):
            algebra = result.algebras.get(decl.algebra)
            if algebra is not None:
                rep = _elaborate_rep(decl, algebra, diagnostics)
                if rep is not None:
                    result.representations[decl.name] = rep
        elif isinstance(decl, ProductDecl):
            rep = result.representations.get(decl.rep)
            if rep is not None:
                result.products[decl.name] = SemidirectProduct(
                    rep.algebra, rep, name=decl.name
                )
        elif isinstance(decl, PointDecl):
            sd = result.products.get(decl.product)
            if sd is not None:
                f = decl.f.coords(sd.k.basis_names)
                p = decl.p.coords(sd.rho.space_names)
                result.points[decl.name] = (decl.product, sd.point(f, p))
        elif isinstance(decl, PolarizationDecl):
            if decl.point in result.points:
                sd, _ = result.point(decl.point)
                a = ComplexSubspace(
                    sd.nk, [x.coords(sd.k.basis_names) for x in decl.span]
                )
                result.polarizations[decl.name] = (decl.point, rebuild(sd, a))
    if diagnostics:
        raise SpecError(diagnostics=diagnostics)
    logger.debug("elaborated %r", result)
    return result


def load(path):
    """Parse and elaborate a ``.lie`` file."""
    return elaborate(parse_file(path))
