"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests internal utility functions. Requires "pytest" to run.
"""

from sqreflex import _utilities as utils


def test_derive_seed_deterministic():
    assert utils.derive_seed(1, 'kornblum', 'gf(3)') == utils.derive_seed(1, 'kornblum', 'gf(3)')


def test_derive_seed_distinct():
    s = utils.derive_seed(1, 'a', 'b')
    assert s != utils.derive_seed(2, 'a', 'b')
    assert s != utils.derive_seed(1, 'ab')
    assert s != utils.derive_seed(1, 'b', 'a')
    assert 0 <= s < 2 ** 64


def test_run_ordered_serial():
    assert utils.run_ordered(abs, [-3, 1, -2]) == [3, 1, 2]
    assert utils.run_ordered(abs, [], jobs=4) == []


def test_run_ordered_pool():
    assert utils.run_ordered(abs, [-3, 1, -2, 5], jobs=2) == [3, 1, 2, 5]
