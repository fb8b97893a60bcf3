"""Independent oracles and random generators backing the test suite.

Everything here deliberately avoids the library's own arithmetic paths:
the matrix model multiplies explicit 3x3 matrices, and the cofactor-search
oracle enumerates candidate solutions with numpy.  Expected values asserted
in the tests are computed by these routes, never by the code under test.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from zdring import (
    CyclicGroupSpec,
    FiniteTableSpec,
    FreeGroupSpec,
    FreeProductSpec,
    GroupElement,
    Nil2Spec,
    RingElement,
    enumerate_elements,
)


# ---------------------------------------------------------------------------
# unitriangular matrix model for the class-2 group


def mat_mul(m1, m2, n):
    """Explicit 3x3 matrix product over the integers mod n."""
    return tuple(
        tuple(sum(m1[i][t] * m2[t][j] for t in range(3)) % n for j in range(3))
        for i in range(3)
    )


def mat_identity():
    return ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def mat_power(m, e, n):
    result = mat_identity()
    for _ in range(e):
        result = mat_mul(result, m, n)
    return result


MAT_A = ((1, 1, 0), (0, 1, 0), (0, 0, 1))  # upper unitriangular E(1,2)
MAT_B = ((1, 0, 0), (0, 1, 1), (0, 0, 1))  # upper unitriangular E(2,3)


def mat_commutator(m1, m2, n):
    inv1 = mat_power(m1, _mat_order(m1, n) - 1, n)
    inv2 = mat_power(m2, _mat_order(m2, n) - 1, n)
    return mat_mul(mat_mul(m1, m2, n), mat_mul(inv1, inv2, n), n)


def _mat_order(m, n):
    power = m
    s = 1
    while power != mat_identity():
        power = mat_mul(power, m, n)
        s += 1
    return s


def nil2_to_matrix(g: GroupElement):
    """Map a normal-form element a^i b^j c^k to its matrix image."""
    n = g.spec.exponent
    i, j, k = g.key
    c = mat_commutator(MAT_A, MAT_B, n)
    out = mat_mul(mat_power(MAT_A, i, n), mat_power(MAT_B, j, n), n)
    return mat_mul(out, mat_power(c, k, n), n)


def mat_order(m, n):
    return _mat_order(m, n)


# ---------------------------------------------------------------------------
# random elements


def random_element(rng, spec, size=4) -> GroupElement:
    if isinstance(spec, FreeGroupSpec):
        g = spec.identity()
        for _ in range(rng.randrange(size + 1)):
            gen = spec.generator(rng.randrange(spec.rank) + 1)
            g = g * (gen if rng.random() < 0.5 else gen.inverse())
        return g
    if isinstance(spec, CyclicGroupSpec):
        return spec.generator() ** rng.randrange(spec.order)
    if isinstance(spec, FreeProductSpec):
        g = spec.identity()
        for _ in range(rng.randrange(size + 1)):
            factor = rng.randrange(2)
            order = spec.factor_order(factor)
            e = rng.randrange(1, order) if order else rng.choice([1, -1]) * rng.randrange(1, 3)
            g = g * spec.syllable(factor, e)
        return g
    if isinstance(spec, Nil2Spec):
        n = spec.exponent
        return spec.element((rng.randrange(n), rng.randrange(n), rng.randrange(n)))
    if isinstance(spec, FiniteTableSpec):
        return spec.element(rng.randrange(spec.group_order()))
    raise TypeError(f"no random generator for {spec!r}")


def random_ring_element(rng, spec, max_terms=3, coeff_bound=3, size=3) -> RingElement:
    terms = [
        (random_element(rng, spec, size), rng.randint(-coeff_bound, coeff_bound))
        for _ in range(rng.randrange(max_terms + 1))
    ]
    return RingElement.from_terms(spec, terms)


def random_boxed_element(rng, spec, box=2, max_terms=3) -> RingElement:
    """Random element with distinct support and coefficients within [-box, box]."""
    count = rng.randrange(max_terms + 1)
    pool = list(enumerate_elements(spec))
    support = rng.sample(pool, min(count, len(pool)))
    return RingElement.from_terms(
        spec, [(g, rng.randint(-box, box)) for g in support]
    )


# ---------------------------------------------------------------------------
# exhaustive cofactor search over a coefficient box


@lru_cache(maxsize=8)
def _box_vectors(n_vars: int, box: int):
    ranges = [np.arange(-box, box + 1)] * n_vars
    grid = np.meshgrid(*ranges, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def box_search_left(a: RingElement, c: RingElement, box: int = 2):
    """First X with coefficients in [-box, box] and X*C = A, else None.

    Enumerates every candidate with one numpy product over the finite group
    basis, entirely independent of the library's divisibility solvers.
    """
    basis = list(enumerate_elements(a.spec))
    index = {g: i for i, g in enumerate(basis)}
    size = len(basis)
    # (X*C)(w) = sum_u X(u) * C(u^-1 w)
    m = np.zeros((size, size), dtype=np.int64)
    for wi, w in enumerate(basis):
        for ui, u in enumerate(basis):
            m[wi, ui] = c.coefficient(u.inverse() * w)
    target = np.zeros(size, dtype=np.int64)
    for g, coeff in a.terms():
        target[index[g]] = coeff
    candidates = _box_vectors(size, box)
    hits = np.nonzero((candidates @ m.T == target).all(axis=1))[0]
    if hits.size == 0:
        return None
    vec = candidates[hits[0]]
    return RingElement.from_terms(a.spec, zip(basis, (int(v) for v in vec)))


def box_search_right(b: RingElement, c: RingElement, box: int = 2):
    """First Y with coefficients in [-box, box] and C*Y = B, else None."""
    basis = list(enumerate_elements(b.spec))
    index = {g: i for i, g in enumerate(basis)}
    size = len(basis)
    # (C*Y)(w) = sum_u C(w u^-1) * Y(u)
    m = np.zeros((size, size), dtype=np.int64)
    for wi, w in enumerate(basis):
        for ui, u in enumerate(basis):
            m[wi, ui] = c.coefficient(w * u.inverse())
    target = np.zeros(size, dtype=np.int64)
    for g, coeff in b.terms():
        target[index[g]] = coeff
    candidates = _box_vectors(size, box)
    hits = np.nonzero((candidates @ m.T == target).all(axis=1))[0]
    if hits.size == 0:
        return None
    vec = candidates[hits[0]]
    return RingElement.from_terms(b.spec, zip(basis, (int(v) for v in vec)))


# ---------------------------------------------------------------------------
# brute-force ring product (dictionary convolution written from scratch)


def brute_product(p: RingElement, q: RingElement) -> dict:
    """Convolution computed term by term, returned as a plain dict."""
    acc = {}
    for g1 in p.support():
        for g2 in q.support():
            g = g1 * g2
            acc[g] = acc.get(g, 0) + p.coefficient(g1) * q.coefficient(g2)
    return {g: c for g, c in acc.items() if c != 0}
