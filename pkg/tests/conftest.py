import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ktcolor.model import Instance  # noqa: E402

# criterion -> (passed, detail); filled by test_acceptance and echoed at the end
ACCEPTANCE = {}


def coords(max_num=40, dens=(1, 2, 3, 4)):
    return st.builds(Fraction, st.integers(0, max_num), st.sampled_from(dens))


@st.composite
def unit_instances(draw, max_size=14):
    lefts = draw(st.lists(coords(), max_size=max_size))
    return Instance.from_lefts(lefts)


@st.composite
def general_instances(draw, max_size=14):
    pairs = []
    for left in draw(st.lists(coords(), max_size=max_size)):
        length = draw(st.builds(Fraction, st.integers(1, 12), st.sampled_from((1, 2, 3, 4))))
        pairs.append((left, left + length))
    return Instance.from_endpoints(pairs)


def instances(max_size=14):
    return st.one_of(unit_instances(max_size), general_instances(max_size))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")


@pytest.fixture
def x3():
    from ktcolor.generators import gen_theorem2
    return gen_theorem2(3)
