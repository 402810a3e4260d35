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

import logging
import unittest

import lieorbit


class TestGetLogger(unittest.TestCase):
    def setUp(self):
        self.logger = lieorbit.getlogger("lieorbit.tests.getlogger")

    def test_null_handler_attached(self):
        ret_val = [type(x) for x in self.logger.handlers]

        self.assertIn(logging.NullHandler, ret_val)

    def test_debug_levels_are_registered(self):
        expected = ["DEBUG1", "DEBUG2", "DEBUG3", "DEBUG4"]

        ret_val = [
            logging.getLevelName(x)
            for x in (
                lieorbit.DEBUG1,
                lieorbit.DEBUG2,
                lieorbit.DEBUG3,
                lieorbit.DEBUG4,
            )
        ]

        self.assertEqual(expected, ret_val)

    def test_debug_levels_below_debug(self):
        self.assertTrue(
            logging.DEBUG
            > lieorbit.DEBUG1
            > lieorbit.DEBUG2
            > lieorbit.DEBUG3
            > lieorbit.DEBUG4
        )

    def test_debug4_logs_at_debug4_level(self):
        records = []

        class Collect(logging.Handler):
            def emit(self, record):
                records.append(record)

        handler = Collect()
        self.logger.addHandler(handler)
        self.logger.setLevel(lieorbit.DEBUG4)
        try:
            self.logger.debug4("kernel has dimension %d", 3)
        finally:
            self.logger.removeHandler(handler)

        self.assertEqual(1, len(records))
        self.assertEqual(lieorbit.DEBUG4, records[0].levelno)
        self.assertEqual("kernel has dimension 3", records[0].getMessage())


class TestStringOrList(unittest.TestCase):
    def test_none_is_empty(self):
        self.assertEqual([], lieorbit.string_or_list(None))

    def test_single_string_is_wrapped(self):
        self.assertEqual(["s=1"], lieorbit.string_or_list("s=1"))

    def test_list_passes_through(self):
        expected = ["s=1", "k=2"]

        ret_val = lieorbit.string_or_list(("s=1", "k=2"))

        self.assertEqual(expected, ret_val)

    def test_isstring(self):
        self.assertTrue(lieorbit.isstring("w1"))
        self.assertTrue(lieorbit.isstring(b"w1"))
        self.assertFalse(lieorbit.isstring(["w1"]))


if __name__ == "__main__":
    unittest.main()
