"""Built-in polynomial systems on which the conversion fails."""

from dataclasses import dataclass

from .buchberger import PairStrategy, parse_strategy
from .parsing import SystemFile, parse_system

EX1 = """\
# g1 = y^2 + x z + x, g2 = z^2 + 1 over GF(2); reduced degrevlex basis
field gf2;
vars x y z;
order1 degrevlex;
order2 lex;
gens: y^2 + x*z + x, z^2 + 1;
"""

EX4 = """\
field {field};
vars x1 x2 x3 x4;
order1 degrevlex;
order2 lex;
gens: x1^3*x2^5*x3 + x1^3*x3,
      x1^7*x2 + x1^3 + x2*x3*x4,
      x1^7*x3 - x1^3*x2^4*x3 - x2^5*x3^2*x4,
      x2^6*x3 + x2*x3,
      x4^3 + x1;
"""


@dataclass(frozen=True)
class Scenario:
    id: str
    text: str
    strategy: str
    autocomplete_source: bool = False
    description: str = ""

    def system(self) -> SystemFile:
        return parse_system(self.text)

    def pair_strategy(self) -> PairStrategy:
        return parse_strategy(self.strategy)


SCENARIOS = {
    s.id: s
    for s in (
        Scenario("ex1", EX1, "minlcm",
                 description="GF(2)[x,y,z]: min-lcm conversion stops at {g1,g2,g3}, missing y^4"),
        Scenario("ex1-alt", EX1, "schedule:/1-3,1-2+minlcm",
                 description="as ex1, but S(h1,h3) before S(h1,h2) in round 2: correct result"),
        Scenario("ex4-f2", EX4.format(field="gf2"), "minlcm", autocomplete_source=True,
                 description="four-variable example over GF(2)"),
        Scenario("ex4-q", EX4.format(field="q"), "minlcm", autocomplete_source=True,
                 description="four-variable example over QQ"),
    )
}


def get_scenario(sid: str) -> Scenario:
    try:
        return SCENARIOS[sid]
    except KeyError:
        raise ValueError(f"unknown scenario {sid!r} (one of {', '.join(SCENARIOS)})") from None
