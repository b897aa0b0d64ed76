from fractions import Fraction as F

import pytest

from semicubic.shift import make_spec

TAIL = (F(111, 100), F(112, 100), F(113, 100))


def ex52(x):
    return make_spec([1, 1, F(106, 100), F(x)], *TAIL)


def ex53(x):
    return make_spec([1, 1, F(x), F(109, 100)], *TAIL)


def ex54(x, y):
    return make_spec([1, 1, F(x), F(y)], *TAIL)


@pytest.fixture
def tail_1_2_3():
    from semicubic.shift import make_tail

    return make_tail(1, 2, 3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
