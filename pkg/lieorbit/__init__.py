# -*- coding: utf-8 -*-

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


"""Coadjoint orbits of semidirect products

The lie-orbit-python library verifies the geometry of coadjoint orbits of
semidirect products K x V: isotropy algebras, the symplectic structure of
the orbit, polarizations satisfying Pukanszky's condition and the
description of the orbit by symplectic induction from the little group.

All structural checks run in exact rational arithmetic; statements about
group elements are checked on seeded numeric samples.

"""

__author__ = "The lie-orbit-python Authors"
__email__ = "lie-orbit-python@users.noreply.github.com"
__version__ = "0.3.0"


import logging
import sys
import types

# Warn if running on end-of-life python
if sys.version_info < (3, 7):
    import warnings

    warnings.warn(
        "lie-orbit-python - Running on end-of-life Python version ({0}). "
        "This Python version is not supported and might cause problems. "
        "Please upgrade to Python 3.7 or higher.".format(sys.version.split(" ")[0]),
        RuntimeWarning,
    )


# Finer debug levels below logging.DEBUG, DEBUG4 is the most verbose
DEBUG1 = logging.DEBUG - 1
DEBUG2 = DEBUG1 - 1
DEBUG3 = DEBUG2 - 1
DEBUG4 = DEBUG3 - 1

DEBUG_LEVELS = (
    ("debug1", DEBUG1),
    ("debug2", DEBUG2),
    ("debug3", DEBUG3),
    ("debug4", DEBUG4),
)

for _method, _level in DEBUG_LEVELS:
    logging.addLevelName(_level, _method.upper())


def _log_at(level):
    def log(inst, msg, *args, **kwargs):
        inst.log(level, msg, *args, **kwargs)

    return log


def getlogger(name=__name__):
    """A module logger with ``debug1`` to ``debug4`` methods.

    Only a ``NullHandler`` is attached, output is configured by the
    application.

    """
    logger_instance = logging.getLogger(name)
    logger_instance.addHandler(logging.NullHandler())
    for method, level in DEBUG_LEVELS:
        setattr(
            logger_instance, method, types.MethodType(_log_at(level), logger_instance)
        )
    return logger_instance


def isstring(arg):
    return isinstance(arg, (str, bytes))


def string_or_list(value):
    """Normalize a name or a sequence of names into a list of names.

    Args:
        value: None, a single string, or an iterable of strings.

    Returns:
        list: The names, in order. None becomes an empty list.

    """
    if value is None:
        return []
    if isstring(value):
        return [value]
    return list(value)


logger = getlogger(__name__)
