"""Run the docstring examples embedded in the library modules."""

from __future__ import annotations

import doctest

import orderword.analysis
import orderword.cli
import orderword.series
import orderword.verify
import orderword.words


def test_words_doctests():
    results = doctest.testmod(orderword.words)
    assert results.failed == 0
    assert results.attempted > 0


def test_remaining_module_doctests():
    for module in (
        orderword.series,
        orderword.analysis,
        orderword.verify,
        orderword.cli,
    ):
        results = doctest.testmod(module)
        assert results.failed == 0, module.__name__
