"""Run the docstring examples; they double as quick usage documentation."""

import doctest

import pytest

from garside import disks, oracle, tables, valuation, words


@pytest.mark.parametrize("module", [words, tables, oracle, valuation, disks])
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
