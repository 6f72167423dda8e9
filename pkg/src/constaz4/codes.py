"""Codes over R and their Gray images over Z4.

An :class:`RCode` is the R[x]-module span of its generators inside
R[x]/<x^n - lam>, handled concretely as the Z4-row span of the vectors
x^i*g and u*x^i*g.  Its Gray image is a :class:`Z4Code` of length 2n whose
type 4^k1 2^k2 falls out of a Z4 standard form, and whose minimum Lee
distance is computed exactly: a low-weight membership sweep certifies tiny
distances on huge codes, full (vectorized) enumeration handles the rest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    BadPartitionError,
    BudgetExceededError,
    DegreeError,
    LengthMismatchError,
    TooLargeError,
    ZeroCodeError,
)
from .factorz4 import Z4Factorization, factor_xn_minus_1_z4
from .maps import phi_vec, sigma, tau
from .poly import QuotientCtx, RPoly, z4p, z4p_add, z4p_mul, z4p_reduce_xn, z4p_scale
from .ring import ONE, ONE_PLUS_2U, RElem, U, ZERO

DEFAULT_BUDGET = 1 << 28
SWEEP_THRESHOLD = 1 << 20
ENUMERATOR_THRESHOLD = 1 << 20

_LEE_NP = np.array([0, 1, 2, 1], dtype=np.int64)


# ---------------------------------------------------------------------------
# Z4 standard form
# ---------------------------------------------------------------------------


@dataclass
class Z4StandardForm:
    """Row-reduced generator matrix exposing unit pivots and 2-pivots.

    rows[i] has its pivot at pivots[i][0]; pivots[i][1] is 1 for a unit
    pivot (scaled to 1, column cleared everywhere) or 2 for a 2-pivot
    (column cleared in the other 2-rows, reduced mod 2 in unit rows).
    Unit-pivot rows come first.
    """

    length: int
    rows: list
    pivots: list

    @property
    def k1(self) -> int:
        return sum(1 for _, kind in self.pivots if kind == 1)

    @property
    def k2(self) -> int:
        return sum(1 for _, kind in self.pivots if kind == 2)

    @property
    def size(self) -> int:
        return 4**self.k1 * 2**self.k2

    @property
    def col_perm(self) -> list:
        pivot_cols = [c for c, _ in self.pivots]
        rest = [c for c in range(self.length) if c not in set(pivot_cols)]
        return pivot_cols + rest

    def reduce(self, v: tuple) -> tuple:
        """Residual of v after reduction; zero iff v is in the row span."""
        if len(v) != self.length:
            raise LengthMismatchError(f"vector length {len(v)} != code length {self.length}")
        w = [c % 4 for c in v]
        for (col, kind), row in zip(self.pivots, self.rows):
            c = w[col]
            if kind == 1:
                if c:
                    for j, rj in enumerate(row):
                        w[j] = (w[j] - c * rj) % 4
            elif c == 2:
                for j, rj in enumerate(row):
                    w[j] = (w[j] - rj) % 4
        return tuple(w)

    def contains(self, v: tuple) -> bool:
        return not any(self.reduce(v))


def standard_form_z4(rows, length: int | None = None) -> Z4StandardForm:
    """Deterministic two-phase elimination over Z4.

    Phase 1 hunts unit pivots anywhere in the remaining submatrix (leftmost
    column, then lowest row); only when none remain does phase 2 place
    2-pivots.  A purely column-local preference would mistype rows such as
    (2, 1), whose leftmost entry is a 2 but whose span has order 4.
    """
    rows = [list(c % 4 for c in r) for r in rows]
    rows = [r for r in rows if any(r)]
    if length is None:
        if not rows:
            raise ValueError("length required for an empty row set")
        length = len(rows[0])
    for r in rows:
        if len(r) != length:
            raise LengthMismatchError("ragged generator matrix")
    done_rows: list = []
    pivots: list = []
    used = set()
    remaining = rows

    def take_pivot(col, i, kind):
        row = remaining.pop(i)
        if kind == 1:
            inv = row[col]  # 1 and 3 are self-inverse mod 4
            row = [(inv * x) % 4 for x in row]
        for r in remaining:
            c = r[col] if kind == 1 else (1 if r[col] == 2 else 0)
            if c:
                for j, rj in enumerate(row):
                    r[j] = (r[j] - c * rj) % 4
        for dr in done_rows:
            if kind == 1:
                c = dr[col]
            else:
                c = 1 if dr[col] >= 2 else 0  # reduce mod 2 against an even row
            if c:
                for j, rj in enumerate(row):
                    dr[j] = (dr[j] - c * rj) % 4
        done_rows.append(row)
        pivots.append((col, kind))
        used.add(col)

    while True:  # phase 1: unit pivots
        found = None
        for col in range(length):
            if col in used:
                continue
            for i, r in enumerate(remaining):
                if r[col] % 2 == 1:
                    found = (col, i)
                    break
            if found:
                break
        if not found:
            break
        take_pivot(found[0], found[1], 1)
    while True:  # phase 2: all remaining entries are even
        found = None
        for col in range(length):
            if col in used:
                continue
            for i, r in enumerate(remaining):
                if r[col] == 2:
                    found = (col, i)
                    break
            if found:
                break
        if not found:
            break
        take_pivot(found[0], found[1], 2)
    order = sorted(range(len(pivots)), key=lambda i: (pivots[i][1], i))
    return Z4StandardForm(length, [done_rows[i] for i in order], [pivots[i] for i in order])


# ---------------------------------------------------------------------------
# minimum Lee distance machinery
# ---------------------------------------------------------------------------


def _low_weight_vectors(length: int, weight: int):
    """All Z4 vectors of the given exact Lee weight (value 2 weighs 2)."""
    for twos in range(weight // 2 + 1):
        ones = weight - 2 * twos
        if ones + twos > length:
            continue
        for support in itertools.combinations(range(length), ones + twos):
            for two_pos in itertools.combinations(support, twos):
                one_pos = [p for p in support if p not in two_pos]
                for vals in itertools.product((1, 3), repeat=len(one_pos)):
                    v = [0] * length
                    for p in two_pos:
                        v[p] = 2
                    for p, x in zip(one_pos, vals):
                        v[p] = x
                    yield tuple(v)


def low_weight_sweep(sf: Z4StandardForm, max_weight: int = 3) -> int | None:
    """Smallest Lee weight <= max_weight present in the code, else None."""
    for w in range(1, max_weight + 1):
        for v in _low_weight_vectors(sf.length, w):
            if sf.contains(v):
                return w
    return None


def _message_rows(sf: Z4StandardForm):
    """(row array, radix) pairs: unit rows admit Z4 multiples, 2-rows {0,1}."""
    out = []
    for (_, kind), row in zip(sf.pivots, sf.rows):
        out.append((np.array(row, dtype=np.int64), 4 if kind == 1 else 2))
    return out


def _enumerate_blocks(sf: Z4StandardForm, low_limit: int = 1 << 15):
    """Yield (weights, is_zero_block) per high-message block, vectorized low part."""
    rows = _message_rows(sf)
    length = sf.length
    low = np.zeros((1, length), dtype=np.int64)
    idx = 0
    cap = 1
    while idx < len(rows) and cap * rows[idx][1] <= low_limit:
        row, radix = rows[idx]
        mult = np.stack([(k * row) % 4 for k in range(radix)])
        low = (low[None, :, :] + mult[:, None, :]).reshape(-1, length) % 4
        cap *= radix
        idx += 1
    high = rows[idx:]
    for combo in itertools.product(*[range(r) for _, r in high]):
        h = np.zeros(length, dtype=np.int64)
        for k, (row, _) in zip(combo, high):
            if k:
                h = h + k * row
        block = (low + h) % 4
        yield _LEE_NP[block].sum(axis=1), not any(combo)


def min_lee_distance(
    sf: Z4StandardForm, budget: int = DEFAULT_BUDGET, force: bool = False
) -> int:
    """Exact minimum Lee weight of the nonzero codewords of the span."""
    size = sf.size
    if size <= 1:
        raise ZeroCodeError("minimum distance of the zero code is undefined")
    if size > SWEEP_THRESHOLD:
        found = low_weight_sweep(sf)
        if found is not None:
            return found
    if size > budget and not force:
        raise BudgetExceededError(
            f"{size} codewords exceed the enumeration budget {budget}; pass force to override"
        )
    best = None
    for weights, is_zero_block in _enumerate_blocks(sf):
        if is_zero_block:
            weights = weights.copy()
            weights[0] = np.iinfo(np.int64).max  # skip the zero codeword
        w = int(weights.min())
        if best is None or w < best:
            best = w
    return best


def lee_weight_enumerator(sf: Z4StandardForm, threshold: int = ENUMERATOR_THRESHOLD) -> dict:
    """Complete Lee weight histogram {weight: count} of the span."""
    if sf.size > threshold:
        raise TooLargeError(f"{sf.size} codewords exceed the enumeration threshold {threshold}")
    hist: dict[int, int] = {}
    for weights, _ in _enumerate_blocks(sf):
        counts = np.bincount(weights)
        for w, c in enumerate(counts):
            if c:
                hist[w] = hist.get(w, 0) + int(c)
    return dict(sorted(hist.items()))


# ---------------------------------------------------------------------------
# Z4 codes
# ---------------------------------------------------------------------------


class Z4Code:
    """Z4-linear code given by generator rows; type and distance are derived."""

    def __init__(self, length: int, rows):
        self.length = length
        self.rows = [tuple(c % 4 for c in r) for r in rows]
        for r in self.rows:
            if len(r) != length:
                raise LengthMismatchError("generator row length mismatch")
        self._min_lee: int | None = None

    @cached_property
    def standard_form(self) -> Z4StandardForm:
        return standard_form_z4(self.rows, self.length)

    @property
    def k1(self) -> int:
        return self.standard_form.k1

    @property
    def k2(self) -> int:
        return self.standard_form.k2

    @property
    def size(self) -> int:
        return self.standard_form.size

    def contains(self, v: tuple) -> bool:
        return self.standard_form.contains(v)

    def min_lee_distance(self, budget: int = DEFAULT_BUDGET, force: bool = False) -> int:
        if self._min_lee is None:
            self._min_lee = min_lee_distance(self.standard_form, budget, force)
        return self._min_lee

    def lee_weight_enumerator(self, threshold: int = ENUMERATOR_THRESHOLD) -> dict:
        return lee_weight_enumerator(self.standard_form, threshold)

    def is_sigma_invariant(self) -> bool:
        return all(self.contains(sigma(r)) for r in self.rows)

    def params(self, distance: int | None = None) -> str:
        d = distance if distance is not None else self._min_lee
        tail = f", {d}]" if d is not None else "]"
        return f"[{self.length}, 4^{self.k1} 2^{self.k2}{tail}"

    def same_code(self, other: "Z4Code") -> bool:
        return (
            self.length == other.length
            and all(self.contains(r) for r in other.rows)
            and all(other.contains(r) for r in self.rows)
        )


def z4_cyclic_code(length: int, gens) -> Z4Code:
    """Z4 code spanned by all cyclic shifts of the given Z4 polynomials."""
    rows = []
    for g in gens:
        g = z4p_reduce_xn(z4p(g), length)
        vec = tuple(g[i] if i < len(g) else 0 for i in range(length))
        for i in range(length):
            rows.append(vec)
            vec = sigma(vec)
    return Z4Code(length, rows)


# ---------------------------------------------------------------------------
# codes over R
# ---------------------------------------------------------------------------


def embed_r_vector(v: tuple) -> tuple:
    """Interleaved (a0, b0, a1, b1, ...) embedding of R^n into Z4^(2n).

    Deliberately not the Gray map, so the cardinality of an R code and of
    its Gray image are computed independently.
    """
    out = []
    for c in v:
        out.append(c.a)
        out.append(c.b)
    return tuple(out)


class RCode:
    """Code over R given by generator polynomials in R[x]/<x^n - lam>."""

    def __init__(self, ctx: QuotientCtx, generators):
        self.ctx = ctx
        gens = []
        for g in generators:
            if g.degree >= ctx.n:
                raise DegreeError(f"generator degree {g.degree} >= length {ctx.n}")
            gens.append(g)
        self.generators = tuple(gens)

    def span_vectors(self) -> list:
        """Z4-spanning set: coefficient vectors of x^i*g and u*x^i*g."""
        n = self.ctx.n
        out = []
        for g in self.generators:
            p = g
            for _ in range(n):
                vec = p.coeff_vector(n)
                out.append(vec)
                out.append(tuple(U * c for c in vec))
                p = p.shift_mod(self.ctx)
        return out

    @cached_property
    def _embedded_sf(self) -> Z4StandardForm:
        rows = [embed_r_vector(v) for v in self.span_vectors()]
        return standard_form_z4(rows, 2 * self.ctx.n)

    @property
    def cardinality(self) -> int:
        return self._embedded_sf.size

    def contains(self, v: tuple) -> bool:
        if len(v) != self.ctx.n:
            raise LengthMismatchError(f"vector length {len(v)} != code length {self.ctx.n}")
        return self._embedded_sf.contains(embed_r_vector(v))

    def is_tau_invariant(self) -> bool:
        return all(self.contains(tau(v, self.ctx.lam)) for v in self.span_vectors())

    def is_sigma_invariant(self) -> bool:
        return all(self.contains(sigma(v)) for v in self.span_vectors())

    def gray_image(self) -> Z4Code:
        return Z4Code(2 * self.ctx.n, [phi_vec(v) for v in self.span_vectors()])


def is_shift_invariant(code, shift: str = "sigma", lam: RElem | None = None) -> bool:
    """Dispatch: sigma on either kind of code, tau on R codes."""
    if shift == "sigma":
        return code.is_sigma_invariant()
    if shift == "tau":
        if not isinstance(code, RCode):
            raise TypeError("tau invariance applies to codes over R")
        if lam is not None and lam != code.ctx.lam:
            return RCode(QuotientCtx(code.ctx.n, lam), code.generators).is_tau_invariant()
        return code.is_tau_invariant()
    raise ValueError(f"unknown shift {shift!r}")


# ---------------------------------------------------------------------------
# constructions from factor partitions
# ---------------------------------------------------------------------------


def _split_products(fact: Z4Factorization, split) -> tuple:
    groups = [tuple(g) for g in split]
    if len(groups) != 3:
        raise BadPartitionError("a split must have exactly three groups")
    flat = [i for g in groups for i in g]
    if sorted(flat) != list(range(len(fact.factors))):
        raise BadPartitionError(
            f"groups {groups} do not partition factor indices 0..{len(fact.factors) - 1}"
        )
    prods = []
    for g in groups:
        p = z4p([1])
        for i in g:
            p = z4p_mul(p, fact.factors[i])
        prods.append(p)
    return tuple(prods)


def _two_generator_polys(n: int, split1, split2, fact: Z4Factorization | None):
    fact = fact if fact is not None else factor_xn_minus_1_z4(n)
    a1, b1, _ = _split_products(fact, split1)
    a2, b2, _ = _split_products(fact, split2)
    g1 = z4p_reduce_xn(z4p_mul(a1, z4p_add(b1, z4p([2]))), n)
    g2 = z4p_reduce_xn(z4p_mul(a2, z4p_add(b2, z4p([2]))), n)
    return RPoly.from_z4(g1), RPoly.from_z4(g2).scaled(U)


def build_cyclic_code(n: int, split1, split2, factorization=None) -> RCode:
    """Cyclic code <a1(b1+2), u*a2(b2+2)> in R[x]/<x^n - 1>, n odd."""
    _require_odd(n)
    g1, ug2 = _two_generator_polys(n, split1, split2, factorization)
    return RCode(QuotientCtx(n, ONE), [g1, ug2])


def build_constacyclic_code(n: int, split1, split2, factorization=None) -> RCode:
    """Constacyclic twin: the same generators with x replaced by (1+2u)x."""
    _require_odd(n)
    g1, ug2 = _two_generator_polys(n, split1, split2, factorization)
    return RCode(
        QuotientCtx(n, ONE_PLUS_2U),
        [g1.twist(ONE_PLUS_2U), ug2.twist(ONE_PLUS_2U)],
    )


def _require_odd(n: int):
    if n % 2 == 0:
        from .errors import EvenLengthError

        raise EvenLengthError(f"construction requires odd length, got n = {n}")


def code_from_generators(ctx: QuotientCtx, gens) -> RCode:
    """Wrap explicit generator polynomials verbatim."""
    return RCode(ctx, list(gens))


# ---------------------------------------------------------------------------
# one-generator Gray image (polynomial form)
# ---------------------------------------------------------------------------


def gray_poly_generators(a, b, n: int) -> tuple:
    """Z4 generators b + x^n(2a+b) and a + x^n*a of the Gray image of <a+ub>."""
    a, b = z4p(a), z4p(b)
    if len(a) > n or len(b) > n:
        raise DegreeError(f"deg a and deg b must be < n = {n}")
    shift = lambda f: tuple([0] * n + list(f))
    g1 = z4p_add(b, z4p(shift(z4p_add(z4p_scale(a, 2), b))))
    g2 = z4p_add(a, z4p(shift(a)))
    return g1, g2


# ---------------------------------------------------------------------------
# reporting
# ---------------------------------------------------------------------------


def code_report(
    rcode: RCode,
    with_distance: bool = True,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
) -> dict:
    """JSON-ready summary of an R code and its Gray image."""
    image = rcode.gray_image()
    report = {
        "n": rcode.ctx.n,
        "lambda": str(rcode.ctx.lam),
        "generators": [[[c.a, c.b] for c in g.coeffs] for g in rcode.generators],
        "z4_length": image.length,
        "k1": image.k1,
        "k2": image.k2,
        "r_cardinality": rcode.cardinality,
        "gray_cardinality": image.size,
        "sigma_invariant": image.is_sigma_invariant(),
    }
    if with_distance and image.size > 1:
        report["min_lee_distance"] = image.min_lee_distance(budget=budget, force=force)
    return report


def params_from_report(report: dict) -> str:
    d = report.get("min_lee_distance")
    tail = f", {d}]" if d is not None else "]"
    return f"[{report['z4_length']}, 4^{report['k1']} 2^{report['k2']}{tail}"
