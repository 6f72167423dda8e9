import random

import pytest

from constaz4.errors import ParseError, TwistUndefinedError
from constaz4.poly import (
    QuotientCtx,
    RPoly,
    format_poly,
    parse_poly,
    parse_z4poly,
    z4p,
    z4p_divmod,
    z4p_mul,
)
from constaz4.ring import ONE, ONE_PLUS_2U, RElem, THREE_PLUS_2U, U, ZERO


def rp(*coeffs):
    return RPoly.from_z4(coeffs)


def test_addition():
    x_plus_1 = rp(1, 1)
    assert x_plus_1 + RPoly() == x_plus_1
    assert x_plus_1 + rp(3, 3) == RPoly()
    f = RPoly([U, ZERO, RElem(2, 0)])  # 2x^2 + u
    assert f + f == RPoly([RElem(0, 2)])


def test_mul_mod_folding():
    ctx = QuotientCtx(3, ONE_PLUS_2U)
    assert rp(0, 0, 1).mul_mod(rp(0, 1), ctx) == RPoly([ONE_PLUS_2U])
    ctx1 = QuotientCtx(3, ONE)
    assert rp(0, 0, 1).mul_mod(rp(0, 0, 1), ctx1) == rp(0, 1)
    # u * lam = u, so u-multiples fold without picking up 2u terms
    ctx7 = QuotientCtx(7, ONE_PLUS_2U)
    f = RPoly([U] * 7)
    assert f.mul_mod(rp(0, 1), ctx7) == f


def test_ring_axioms_in_quotient():
    rng = random.Random(11)
    ctx = QuotientCtx(5, ONE_PLUS_2U)
    polys = [
        RPoly(RElem(rng.randrange(4), rng.randrange(4)) for _ in range(5))
        for _ in range(12)
    ]
    for f, g, h in zip(polys[::3], polys[1::3], polys[2::3]):
        assert f.mul_mod(g, ctx) == g.mul_mod(f, ctx)
        assert f.mul_mod(g, ctx).mul_mod(h, ctx) == f.mul_mod(g.mul_mod(h, ctx), ctx)
        assert f.mul_mod(g + h, ctx) == f.mul_mod(g, ctx) + f.mul_mod(h, ctx)
        assert f.mul_mod(g, ctx).degree < ctx.n


def test_twist():
    x = rp(0, 1)
    assert x.twist(ONE_PLUS_2U) == RPoly([ZERO, ONE_PLUS_2U])
    assert rp(0, 3).twist(ONE_PLUS_2U) == RPoly([ZERO, THREE_PLUS_2U])
    with pytest.raises(TwistUndefinedError):
        x.twist(RElem(1, 1))


def test_twist_involution_random():
    rng = random.Random(5)
    for _ in range(100):
        f = RPoly(RElem(rng.randrange(4), rng.randrange(4)) for _ in range(9))
        assert f.twist(ONE_PLUS_2U).twist(ONE_PLUS_2U) == f
        assert f.twist(THREE_PLUS_2U).twist(THREE_PLUS_2U) == f


def test_twist_homomorphism_law():
    rng = random.Random(6)
    for n in (3, 5, 7):
        cyc, con = QuotientCtx(n, ONE), QuotientCtx(n, ONE_PLUS_2U)
        for _ in range(50):
            f = RPoly(RElem(rng.randrange(4), rng.randrange(4)) for _ in range(n))
            g = RPoly(RElem(rng.randrange(4), rng.randrange(4)) for _ in range(n))
            lhs = f.mul_mod(g, cyc).twist(ONE_PLUS_2U)
            rhs = f.twist(ONE_PLUS_2U).mul_mod(g.twist(ONE_PLUS_2U), con)
            assert lhs == rhs


def test_parse_known_strings():
    f = parse_poly("3x^4+2x^3+x^2+(3+2u)x+3")
    assert [(c.a, c.b) for c in f.coeffs] == [(3, 0), (3, 2), (1, 0), (2, 0), (3, 0)]
    # integer prefix times a parenthesized coefficient is the same thing
    assert parse_poly("3x^4+2x^3+x^2+3(1+2u)x+3") == f
    assert parse_poly("0") == RPoly()
    g = parse_poly("x^8+(1+2u)x^7+x^6+(1+2u)x^5+x^4+(1+2u)x^3+3x^2+(3+2u)x+3")
    assert g.degree == 8


def test_format_round_trip_random():
    rng = random.Random(7)
    for _ in range(200):
        f = RPoly(RElem(rng.randrange(4), rng.randrange(4)) for _ in range(rng.randrange(8)))
        assert parse_poly(format_poly(f)) == f


def test_canonical_format():
    f = parse_poly("(3+2u)x^3+x^2+2x+1")
    assert format_poly(f) == "(3+2u)x^3+x^2+2x+1"
    assert format_poly(RPoly([U, RElem(0, 2)])) == "2ux+u"


def test_parse_errors_and_minus():
    with pytest.raises(ParseError):
        parse_poly("x^")
    with pytest.raises(ParseError):
        parse_poly("(1+2u")
    with pytest.raises(ParseError):
        parse_poly("")
    assert parse_poly("x-1") == rp(3, 1)


def test_parse_z4poly_rejects_u():
    assert parse_z4poly("2x^10+2x^8") == z4p([0] * 8 + [2, 0, 2])
    with pytest.raises(ParseError):
        parse_z4poly("ux+1")


def test_z4_divmod():
    f = z4p([3, 0, 0, 0, 0, 0, 0, 1])  # x^7 - 1
    g = z4p([3, 1])  # x + 3
    q, r = z4p_divmod(f, g)
    assert r == ()
    assert z4p_mul(q, g) == f
