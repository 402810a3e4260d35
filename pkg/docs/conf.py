#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Sphinx configuration for the lie-orbit-python documentation"""

import os
import sys

import sphinx_rtd_theme

on_rtd = os.environ.get("READTHEDOCS", None) == "True"

# The package is documented from the source tree, not an installed copy
docs_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(docs_dir))

import lieorbit  # noqa: E402

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.inheritance_diagram",
    "sphinx.ext.napoleon",
    "m2r",
]
suppress_warnings = ["image.nonlocal_uri"]
source_suffix = [".rst", ".md"]
master_doc = "index"

project = "lie-orbit-python"
copyright = "2026, The lie-orbit-python Authors"
version = lieorbit.__version__
release = lieorbit.__version__

exclude_patterns = ["_build"]
pygments_style = "sphinx"

if on_rtd:
    html_theme = "default"
else:
    html_theme = "sphinx_rtd_theme"
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = "lieorbitdoc"

man_pages = [
    (
        "index",
        "lieorbit",
        "lie-orbit-python Documentation",
        ["The lie-orbit-python Authors"],
        1,
    )
]

autodoc_default_flags = ["members"]

# Tables of the lexer and the command line, documented in the guides
autodoc_exclusions = (
    "KEYWORDS",
    "TOKEN_KINDS",
    "TOKEN_RE",
    "CAYLEY_SAMPLES",
    "COMMANDS",
)


def autodoc_skip_member(app, what, name, obj, skip, options):
    return skip or name in autodoc_exclusions


def setup(app):
    app.connect("autodoc-skip-member", autodoc_skip_member)
