from __future__ import annotations

import functools

import pytest

from carnot.configuration import build_config
from carnot.generator import carnot_from_parameters, gen_carnot_config, gen_quad_config

# lines printed by the acceptance suite, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []

CIRCLE_PARAMETERS = (0, 1, 2, 3, -1, -2)


@functools.lru_cache(maxsize=None)
def carnot_config(seed: int):
    return gen_carnot_config(seed)


@functools.lru_cache(maxsize=None)
def quad_config(seed: int):
    return gen_quad_config(seed)


@pytest.fixture(scope="session")
def circle_config():
    tri, pts = carnot_from_parameters(CIRCLE_PARAMETERS)
    return build_config(tri, *pts)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
