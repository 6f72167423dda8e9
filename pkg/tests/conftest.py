"""Shared brute-force oracles, kept independent of the library internals."""

import pytest

Z4_LEE_TABLE = {0: 0, 1: 1, 2: 2, 3: 1}


def z4_weight(v):
    return sum(Z4_LEE_TABLE[c % 4] for c in v)


def span_closure(rows, length=None):
    """Full Z4-additive closure of a row set, as a set of tuples."""
    rows = [tuple(c % 4 for c in r) for r in rows]
    rows = [r for r in rows if any(r)]
    if length is None:
        length = len(rows[0])
    zero = (0,) * length
    span = {zero}
    frontier = [zero]
    while frontier:
        new = []
        for v in frontier:
            for r in rows:
                w = tuple((a + b) % 4 for a, b in zip(v, r))
                if w not in span:
                    span.add(w)
                    new.append(w)
        frontier = new
    return span


def min_weight_of_span(span):
    return min(z4_weight(v) for v in span if any(v))


@pytest.fixture
def oracle():
    class Oracle:
        closure = staticmethod(span_closure)
        weight = staticmethod(z4_weight)
        min_weight = staticmethod(min_weight_of_span)

    return Oracle
