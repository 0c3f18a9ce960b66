import pytest

from truncgb.fields import GF2
from truncgb.parsing import parse_system
from truncgb.scenarios import EX1

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def ex1():
    """The GF(2)[x, y, z] counterexample with its named polynomials."""
    sys_ = parse_system(EX1)
    R = sys_.ring
    P = R.parse

    class Ex1:
        system = sys_
        ring = R
        o1 = sys_.order1
        o2 = sys_.order2
        g1 = P("y^2 + x*z + x")
        g2 = P("z^2 + 1")
        g3 = P("y^2*z + y^2")
        g5 = P("x*z + x + y^2*z")
        h1 = P("x*z + x + y^2")
        h2 = P("z^2")
        h3 = P("y^2*z")
        h3_iter1 = P("x + y^2*z + y^2")
        h4 = P("x + y^2")
        y4 = P("y^4")

    assert sys_.field is GF2
    return Ex1


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {label}")
