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

"""Generate API reference page for each module"""

import os
import pkgutil

# Modules without classes worth a diagram
no_diagram = [
    "cli",
    "errors",
]


template_main = """Module: {0}
========{1}{2}

Class Reference
---------------

.. automodule:: lieorbit.{0}
"""


template_diagram = """

Inheritance diagram
-------------------

.. inheritance-diagram:: lieorbit.{0}
   :parts: 1"""


def create_module_references(directory=None):
    curdir = os.path.dirname(os.path.abspath(__file__))
    libpath = [os.path.join(curdir, os.pardir, "lieorbit")]

    output = {}
    for _, modname, ispkg in pkgutil.iter_modules(path=libpath):
        if ispkg:
            continue
        header_pad = "=" * len(modname)
        diagram = "" if modname in no_diagram else template_diagram.format(modname)
        output[modname] = template_main.format(modname, header_pad, diagram)

    path = ""
    if directory is not None:
        os.makedirs(directory, exist_ok=True)
        path = directory + "/"
    for module, lines in sorted(output.items()):
        with open("{0}module-{1}.rst".format(path, module), "w") as file:
            file.write(lines)


if __name__ == "__main__":
    create_module_references(os.path.dirname(os.path.abspath(__file__)))
