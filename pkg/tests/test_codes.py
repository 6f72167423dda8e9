import random

import pytest

from constaz4.codes import (
    RCode,
    Z4Code,
    build_constacyclic_code,
    build_cyclic_code,
    code_from_generators,
    gray_poly_generators,
    is_shift_invariant,
    low_weight_sweep,
    standard_form_z4,
    z4_cyclic_code,
)
from constaz4.errors import (
    BadPartitionError,
    BudgetExceededError,
    DegreeError,
    ZeroCodeError,
)
from constaz4.factorz4 import factor_xn_minus_1_z4
from constaz4.maps import phi_vec, sigma, tau
from constaz4.poly import QuotientCtx, RPoly, parse_poly, parse_z4poly, z4p
from constaz4.ring import ALL_ELEMS, ONE, ONE_PLUS_2U, RElem, U
from constaz4.verify import random_split


def test_standard_form_examples():
    assert (standard_form_z4([[2]]).k1, standard_form_z4([[2]]).k2) == (0, 1)
    sf = standard_form_z4([[1, 0], [0, 1]])
    assert (sf.k1, sf.k2) == (2, 0)
    sf = standard_form_z4([[1, 2], [0, 2]])
    assert (sf.k1, sf.k2) == (1, 1)
    # a leftmost 2 must not shadow the unit further right
    sf = standard_form_z4([[2, 1]])
    assert (sf.k1, sf.k2) == (1, 0)


def test_standard_form_cardinality_against_closure(oracle):
    rng = random.Random(10)
    for _ in range(40):
        length = rng.randrange(2, 6)
        rows = [
            [rng.randrange(4) for _ in range(length)]
            for _ in range(rng.randrange(1, 4))
        ]
        sf = standard_form_z4(rows, length)
        assert sf.size == len(oracle.closure(rows, length))
        for r in rows:
            assert sf.contains(tuple(r))


def test_membership():
    code = Z4Code(4, [(1, 1, 0, 0), (0, 0, 2, 2)])
    assert code.contains((1, 1, 2, 2))
    assert code.contains((0, 0, 0, 0))
    assert not code.contains((1, 0, 0, 0))


def test_min_lee_distance_small(oracle):
    code = Z4Code(2, [(1, 1)])
    assert code.min_lee_distance() == 2
    assert code.lee_weight_enumerator() == {0: 1, 2: 2, 4: 1}
    zero = Z4Code(3, [])
    with pytest.raises(ZeroCodeError):
        zero.min_lee_distance()


def test_min_lee_distance_budget():
    gens = [tuple(1 if i == j else 0 for i in range(14)) for j in range(14)]
    full = Z4Code(14, gens)  # whole space, found by the sweep
    assert full.min_lee_distance() == 1
    rows = [
        tuple(2 if i in (2 * j, 2 * j + 1) else 0 for i in range(16)) for j in range(8)
    ]
    code = Z4Code(16, rows)  # size 2^8, minimum weight 4: the sweep misses it
    assert low_weight_sweep(code.standard_form) is None
    with pytest.raises(BudgetExceededError):
        code.min_lee_distance(budget=100)
    assert code.min_lee_distance(budget=100, force=True) == 4


def test_enumerator_matches_closure(oracle):
    rng = random.Random(12)
    for _ in range(10):
        rows = [[rng.randrange(4) for _ in range(5)] for _ in range(2)]
        code = Z4Code(5, rows)
        span = oracle.closure(rows, 5)
        hist = {}
        for v in span:
            w = oracle.weight(v)
            hist[w] = hist.get(w, 0) + 1
        assert code.lee_weight_enumerator() == dict(sorted(hist.items()))


def test_build_cyclic_and_constacyclic():
    fact = factor_xn_minus_1_z4(7)
    split = ((0,), (1,), (2,))
    cyc = build_cyclic_code(7, split, split, fact)
    assert cyc.ctx.lam == ONE
    assert cyc.is_sigma_invariant()
    con = build_constacyclic_code(7, split, split, fact)
    assert con.ctx.lam == ONE_PLUS_2U
    assert con.is_tau_invariant()
    assert con.generators[0] == cyc.generators[0].twist(ONE_PLUS_2U)
    with pytest.raises(BadPartitionError):
        build_cyclic_code(7, ((0,), (0,), (1, 2)), split, fact)
    with pytest.raises(BadPartitionError):
        build_cyclic_code(7, ((0,), (1,)), split, fact)


def test_unit_generator_spans_everything():
    code = code_from_generators(QuotientCtx(3, ONE_PLUS_2U), [RPoly.from_z4([3])])
    assert code.cardinality == 16**3
    zero = code_from_generators(QuotientCtx(3, ONE_PLUS_2U), [RPoly()])
    assert zero.cardinality == 1
    with pytest.raises(DegreeError):
        code_from_generators(QuotientCtx(3, ONE), [RPoly.from_z4([0, 0, 0, 1])])


def test_gray_image_of_constructed_codes_is_cyclic():
    rng = random.Random(13)
    for n in (3, 7, 9):
        fact = factor_xn_minus_1_z4(n)
        for _ in range(5):
            code = build_constacyclic_code(
                n, random_split(rng, len(fact)), random_split(rng, len(fact)), fact
            )
            assert is_shift_invariant(code, "tau")
            assert is_shift_invariant(code.gray_image(), "sigma")


def test_tau_closure_of_random_vector_is_not_sigma_invariant():
    # single orbit without linear closure is generally not a code
    v = (RElem(1, 0), RElem(0, 1), RElem(2, 3))
    orbit = {v}
    w = v
    for _ in range(20):
        w = tau(w, ONE_PLUS_2U)
        orbit.add(w)
    sums = {tuple(a + b for a, b in zip(x, y)) for x in orbit for y in orbit}
    assert not sums <= orbit


def test_gray_image_against_closure(oracle):
    code = code_from_generators(
        QuotientCtx(3, ONE_PLUS_2U), [RPoly([U, RElem(1, 0)])]
    )
    image = code.gray_image()
    span = oracle.closure([phi_vec(v) for v in code.span_vectors()], 6)
    assert image.size == len(span)
    assert image.min_lee_distance() == oracle.min_weight(span)


def test_rcode_membership_and_cardinality():
    code = code_from_generators(QuotientCtx(2, ONE), [RPoly([RElem(2, 0)])])
    assert code.cardinality == 16  # <2> = {0,2,2u,2+2u} componentwise combos
    assert code.contains((RElem(2, 2), RElem(0, 2)))
    assert not code.contains((RElem(1, 0), RElem(0, 0)))
    image = code.gray_image()
    assert image.size < code.cardinality  # Gray kernel shows up here


def test_gray_poly_generators():
    a = parse_z4poly("x^5+x^4+x^2+x")
    b = parse_z4poly("2x^5+2x^3+2x")
    g1, g2 = gray_poly_generators(a, b, 6)
    assert g2 == parse_z4poly("x^11+x^10+x^8+x^7+x^5+x^4+x^2+x")
    assert g1 == parse_z4poly("2x^10+2x^9+2x^8+2x^5+2x^3+2x")
    assert gray_poly_generators((), (), 4) == ((), ())
    assert gray_poly_generators(z4p([1]), (), 1) == (z4p([0, 2]), z4p([1, 1]))
    with pytest.raises(DegreeError):
        gray_poly_generators(z4p([0, 1]), (), 1)


def test_one_generator_gray_image_matches_polynomial_form():
    rng = random.Random(14)
    for n in (3, 5):
        for _ in range(8):
            a = z4p(rng.randrange(4) for _ in range(n))
            b = z4p(rng.randrange(4) for _ in range(n))
            gen = RPoly(
                RElem(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                for i in range(n)
            )
            code = code_from_generators(QuotientCtx(n, ONE_PLUS_2U), [gen])
            image = code.gray_image()
            poly_image = z4_cyclic_code(2 * n, gray_poly_generators(a, b, n))
            assert image.same_code(poly_image)


def test_distance_transport_cyclic_vs_constacyclic():
    rng = random.Random(15)
    fact = factor_xn_minus_1_z4(7)
    for _ in range(5):
        s1, s2 = random_split(rng, len(fact)), random_split(rng, len(fact))
        cyc = build_cyclic_code(7, s1, s2, fact).gray_image()
        con = build_constacyclic_code(7, s1, s2, fact).gray_image()
        if cyc.size <= 1:
            continue
        assert cyc.min_lee_distance(force=True) == con.min_lee_distance(force=True)
