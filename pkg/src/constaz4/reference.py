"""Reference (1+2u)-constacyclic codes and their previously reported parameters.

The length-7 table lists eleven codes C = <g1, u*g2> in R[x]/<x^7 - (1+2u)>
together with the Z4 image parameters [14, 4^k1 2^k2, d] they were reported
with.  The `table7` command recomputes every row and flags mismatches; the
reported values are regression targets, not ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import RCode, code_from_generators
from .poly import QuotientCtx, parse_poly
from .ring import ONE_PLUS_2U, U


@dataclass(frozen=True)
class TableRow:
    g1: str
    g2: str
    k1: int
    k2: int
    d: int

    @property
    def expected_params(self) -> str:
        return f"[14, 4^{self.k1} 2^{self.k2}, {self.d}]"

    def code(self) -> RCode:
        ctx = QuotientCtx(7, ONE_PLUS_2U)
        return code_from_generators(
            ctx, [parse_poly(self.g1), parse_poly(self.g2).scaled(U)]
        )


TABLE7 = (
    TableRow("0", "3x^4+2x^3+x^2+3(1+2u)x+3", 3, 0, 12),
    TableRow("0", "x^4+(1+2u)x^3+3x^2+3", 3, 3, 8),
    TableRow("3x^4+2x^3+x^2+(3+2u)x+3", "x^4+(1+2u)x^3+3x^2+3", 6, 3, 6),
    TableRow("(3+2u)x^3+x^2+2x+1", "(1+2u)x^3+2x^2+(1+2u)x+1", 8, 3, 4),
    TableRow("(3+2u)x^3+x^2+2x+1", "(3+2u)x+1", 10, 0, 4),
    TableRow("(3+2u)x^3+x^2+2x+1", "(1+2u)x+1", 10, 1, 4),
    TableRow("(1+2u)x^3+2x^2+(1+2u)x+1", "(1+2u)x+1", 10, 4, 2),
    TableRow("(3+2u)x+1", "(3+2u)x+1", 12, 0, 2),
    TableRow("(3+2u)x+1", "(1+2u)x+1", 12, 1, 2),
    TableRow("(1+2u)x+1", "(1+2u)x+1", 12, 2, 2),
    TableRow("(3+2u)x+1", "3", 13, 0, 2),
)


@dataclass(frozen=True)
class ExampleCode:
    name: str
    n: int
    g1: str
    g2: str
    z4_length: int
    k1: int
    k2: int
    d: int

    @property
    def expected_params(self) -> str:
        return f"[{self.z4_length}, 4^{self.k1} 2^{self.k2}, {self.d}]"

    def code(self) -> RCode:
        ctx = QuotientCtx(self.n, ONE_PLUS_2U)
        return code_from_generators(
            ctx, [parse_poly(self.g1), parse_poly(self.g2).scaled(U)]
        )


EXAMPLE_N9 = ExampleCode(
    "n9",
    9,
    "0",
    "x^8+(1+2u)x^7+x^6+(1+2u)x^5+x^4+(1+2u)x^3+3x^2+(3+2u)x+3",
    18,
    1,
    6,
    8,
)

EXAMPLE_N15 = ExampleCode(
    "n15",
    15,
    "2x^10+2x^8+2x^5+2x^4+2x^2+2x",
    "(3+2u)x^13+x^12+3x^10+(1+2u)x^9+(3+2u)x^7+x^6+3x^4+(1+2u)x^3+(3+2u)x+1",
    30,
    2,
    10,
    8,
)

EXAMPLE_N23 = ExampleCode(
    "n23",
    23,
    "0",
    "x^22+(1+2u)x^21+x^20+(1+2u)x^19+x^18+(1+2u)x^17+x^16+(1+2u)x^15"
    "+x^14+(1+2u)x^13+x^12+(3+2u)x^11+3x^10+(1+2u)x^9+x^8+(1+2u)x^7"
    "+3x^6+(3+2u)x^5+3x^4+(1+2u)x^3+3x^2+(1+2u)x+3",
    46,
    1,
    11,
    28,
)

EXAMPLES = (EXAMPLE_N9, EXAMPLE_N15, EXAMPLE_N23)

# one-generator code of even length 6: <a(x) + u*b(x)>, reported Lee distance 8
EXAMPLE_N6 = {
    "n": 6,
    "a": "x^5+x^4+x^2+x",
    "b": "2x^5+2x^3+2x",
    "reported_distance": 8,
    "reported_gray_g1": "2x^11+2x^10+2x^9+2x^8+2x^5+2x^3+2x",
    "reported_gray_g2": "x^11+x^10+x^8+x^7+x^5+x^4+x^2+x",
}
