"""
    Tests for the sqreflex package
    Released under The MIT License. See LICENSE file for details.

    Tests sqreflex.config module. Requires "pytest" to run.
"""

import pytest
from sqreflex import gf
from sqreflex import config
from sqreflex.config import RunConfig


@pytest.fixture
def f3():
    return gf.make_field(3)


def test_defaults(f3):
    cfg = RunConfig(f3)
    assert cfg.seed == config.DEFAULT_SEED
    assert cfg.jobs == 1
    assert cfg.output == 'text'
    assert cfg.kornblum_cap is None
    assert cfg.witness_cap is None
    assert cfg.vector_cap == config.VECTOR_CAP
    assert cfg.budget == config.ENUM_BUDGET


def test_jobs_lower_bound(f3):
    assert RunConfig(f3, jobs=0).jobs == 1


def test_output_mode(f3):
    cfg = RunConfig(f3, output='json')
    assert cfg.output == 'json'
    with pytest.raises(ValueError):
        cfg.output = 'xml'
    with pytest.raises(ValueError):
        RunConfig(f3, output='xml')


def test_field_type():
    with pytest.raises(TypeError):
        RunConfig("gf(3)")


def test_search_options(f3):
    assert RunConfig(f3, seed=5).search_options() == dict(seed=5)
    opts = RunConfig(f3, kornblum_cap=7, witness_cap=3).search_options()
    assert opts == dict(seed=1, degree_cap=7, witness_cap=3)


def test_to_dict(f3):
    data = RunConfig(f3, seed=9).to_dict()
    assert data['field'] == 'gf(3)'
    assert data['seed'] == 9
    assert data['budget'] == config.ENUM_BUDGET
