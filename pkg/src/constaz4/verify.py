"""Randomized and exhaustive property checks behind the `verify` command.

Each checker returns (checked_count, failure_message_or_None).  Random
checks draw from a seeded generator so failures are reproducible from the
reported seed.
"""

from __future__ import annotations

import itertools
import random

from .codes import (
    DEFAULT_BUDGET,
    build_constacyclic_code,
    build_cyclic_code,
    code_from_generators,
)
from .factorz4 import factor_xn_minus_1_z4
from .maps import format_vector, phi_vec, sigma, tau
from .poly import QuotientCtx, RPoly, format_poly, z4p_xn_minus_1
from .ring import ALL_ELEMS, ONE, ONE_PLUS_2U, RElem, TWO


def _random_relem(rng: random.Random) -> RElem:
    return rng.choice(ALL_ELEMS)


def random_rvector(rng: random.Random, n: int) -> tuple:
    return tuple(_random_relem(rng) for _ in range(n))


def random_rpoly(rng: random.Random, max_deg: int) -> RPoly:
    return RPoly(_random_relem(rng) for _ in range(max_deg + 1))


def random_split(rng: random.Random, num_factors: int) -> tuple:
    groups: tuple = ([], [], [])
    for i in range(num_factors):
        groups[rng.randrange(3)].append(i)
    return tuple(tuple(g) for g in groups)


def check_phi_tau_sigma(n: int, trials: int, seed: int) -> tuple[int, str | None]:
    """phi(tau(v)) = sigma(phi(v)); exhaustive when 16^n is small."""
    if 16**n <= 1 << 16:
        count = 0
        for v in itertools.product(ALL_ELEMS, repeat=n):
            if phi_vec(tau(v, ONE_PLUS_2U)) != sigma(phi_vec(v)):
                return count, f"v = {format_vector(v)}"
            count += 1
        return count, None
    rng = random.Random(seed)
    for i in range(trials):
        v = random_rvector(rng, n)
        if phi_vec(tau(v, ONE_PLUS_2U)) != sigma(phi_vec(v)):
            return i, f"v = {format_vector(v)} (seed {seed})"
    return trials, None


def check_mu_isomorphism(n: int, trials: int, seed: int) -> tuple[int, str | None]:
    """Twist is an involution and a ring homomorphism for odd n."""
    if n % 2 == 0:
        raise ValueError("twist homomorphism law requires odd n")
    rng = random.Random(seed)
    cyc = QuotientCtx(n, ONE)
    con = QuotientCtx(n, ONE_PLUS_2U)
    lam = ONE_PLUS_2U
    for i in range(trials):
        f = random_rpoly(rng, rng.randrange(n))
        g = random_rpoly(rng, rng.randrange(n))
        if f.twist(lam).twist(lam) != f:
            return i, f"involution fails for f = {format_poly(f)} (seed {seed})"
        lhs = f.mul_mod(g, cyc).twist(lam)
        rhs = f.twist(lam).mul_mod(g.twist(lam), con)
        if lhs != rhs:
            return i, f"homomorphism fails for f = {format_poly(f)}, g = {format_poly(g)} (seed {seed})"
    return trials, None


def check_gray_cyclic(n: int, trials: int, seed: int) -> tuple[int, str | None]:
    """Gray images of constructed constacyclic codes are sigma invariant."""
    rng = random.Random(seed)
    fact = factor_xn_minus_1_z4(n)
    for i in range(trials):
        s1 = random_split(rng, len(fact.factors))
        s2 = random_split(rng, len(fact.factors))
        code = build_constacyclic_code(n, s1, s2, fact)
        if not code.is_tau_invariant():
            return i, f"tau invariance fails for splits {s1} {s2} (seed {seed})"
        if not code.gray_image().is_sigma_invariant():
            return i, f"sigma invariance fails for splits {s1} {s2} (seed {seed})"
    return trials, None


def check_distance_transport(
    n: int, trials: int, seed: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, str | None]:
    """Matched cyclic/constacyclic pairs have Gray images of equal distance."""
    rng = random.Random(seed)
    fact = factor_xn_minus_1_z4(n)
    checked = 0
    for _ in range(trials):
        s1 = random_split(rng, len(fact.factors))
        s2 = random_split(rng, len(fact.factors))
        cyc = build_cyclic_code(n, s1, s2, fact)
        con = build_constacyclic_code(n, s1, s2, fact)
        ic, io = cyc.gray_image(), con.gray_image()
        if ic.size <= 1:
            continue
        dc = ic.min_lee_distance(budget=budget, force=True)
        do = io.min_lee_distance(budget=budget, force=True)
        if dc != do:
            return checked, f"distances {dc} != {do} for splits {s1} {s2} (seed {seed})"
        checked += 1
    return checked, None


def check_factor_product(ns) -> tuple[int, str | None]:
    """factor_xn_minus_1_z4 multiplies back to x^n - 1 (self-checked internally)."""
    count = 0
    for n in ns:
        fact = factor_xn_minus_1_z4(n)
        if fact.product() != z4p_xn_minus_1(n):
            return count, f"product mismatch at n = {n}"
        count += 1
    return count, None


def gray_kernel_report(n: int) -> dict:
    """Exhibit the Gray map kernel: (2, 0, ..., 0) maps to zero, and the
    code <2> has more codewords than its Gray image."""
    witness = (TWO,) + (RElem(0, 0),) * (n - 1)
    image = phi_vec(witness)
    code = code_from_generators(QuotientCtx(n, ONE_PLUS_2U), [RPoly([TWO])])
    gray = code.gray_image()
    return {
        "n": n,
        "witness": format_vector(witness),
        "witness_image": format_vector(image),
        "witness_image_is_zero": not any(image),
        "r_cardinality": code.cardinality,
        "gray_cardinality": gray.size,
        "kernel_detected": not any(image) and code.cardinality > gray.size,
    }
