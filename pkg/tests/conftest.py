"""Shared brute-force oracles for the test suite.

Everything here is deliberately independent of the package's own algorithms:
matchings by direct recursion over all partners, non-crossing set partitions
by direct block insertion, measure moments by 2-D quadrature, and bivariate
series arithmetic by dict-of-exponents convolution.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from dtmoments.exact import CQ_ONE, CQ_ZERO, ComplexRational


def all_perfect_matchings(k: int):
    """Every perfect matching of {1..k} as a tuple of sorted pairs."""
    points = list(range(1, k + 1))

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        for idx in range(1, len(remaining)):
            partner = remaining[idx]
            rest = remaining[1:idx] + remaining[idx + 1 :]
            for tail in rec(rest):
                yield ((first, partner),) + tail

    yield from rec(points)


def has_crossing(pairs) -> bool:
    """The direct four-index definition of a crossing."""
    for (i1, j1), (i2, j2) in itertools.permutations(pairs, 2):
        if i1 < i2 < j1 < j2:
            return True
    return False


def noncrossing_partitions(n: int):
    """All non-crossing set partitions of {1..n} (blocks as sorted tuples).

    Built by inserting points left to right: each new point either starts a
    new block or joins an existing block, provided no crossing arises; the
    crossing test is the direct four-point one on block membership.
    """
    def crossing(blocks) -> bool:
        for b1, b2 in itertools.combinations(blocks, 2):
            for a, c in itertools.combinations(b1, 2):
                if any(a < x < c for x in b2) and any(x < a or x > c for x in b2):
                    return True
        return False

    partitions = []

    def rec(point, blocks):
        if point > n:
            if not crossing(blocks):
                partitions.append(tuple(tuple(b) for b in blocks))
            return
        rec(point + 1, blocks + [[point]])
        for i in range(len(blocks)):
            grown = [list(b) for b in blocks]
            grown[i].append(point)
            rec(point + 1, grown)

    rec(1, [])
    return partitions


def moments_from_cumulants_by_partitions(kappa, n: int) -> Fraction:
    """m_n as the sum over non-crossing partitions of products of cumulants."""
    total = Fraction(0)
    for part in noncrossing_partitions(n):
        prod = Fraction(1)
        for block in part:
            prod *= kappa[len(block)]
        total += prod
    return total


def quadrature_mixed_moment(region, r: int, s: int, bounds) -> complex:
    """Numeric M(r, s) = E[z^r conj(z)^s] over a uniform planar region.

    ``region(x, y)`` is the indicator, ``bounds = (xmin, xmax, ymin, ymax)``.
    """
    from scipy.integrate import dblquad

    xmin, xmax, ymin, ymax = bounds

    def integrate(f):
        val, _ = dblquad(
            lambda y, x: f(x, y) if region(x, y) else 0.0,
            xmin, xmax, ymin, ymax, epsabs=1e-10, epsrel=1e-10,
        )
        return val

    area = integrate(lambda x, y: 1.0)

    def re_part(x, y):
        return ((x + 1j * y) ** r * (x - 1j * y) ** s).real

    def im_part(x, y):
        return ((x + 1j * y) ** r * (x - 1j * y) ** s).imag

    return complex(integrate(re_part) / area, integrate(im_part) / area)


# -- bivariate exact series (dict keyed by (i, j) exponents) ------------------


def biv_mul(a: dict, b: dict, max_total: int) -> dict:
    out: dict[tuple[int, int], ComplexRational] = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            i, j = i1 + i2, j1 + j2
            if i + j > max_total:
                continue
            out[(i, j)] = out.get((i, j), CQ_ZERO) + v1 * v2
    return out


def biv_exp_minus_one(s: dict, max_total: int) -> dict:
    """exp(S) - 1 truncated by total degree, for S with no constant term."""
    out: dict[tuple[int, int], ComplexRational] = {}
    power = {(0, 0): CQ_ONE}
    fact = 1
    for t in range(1, max_total + 1):
        power = biv_mul(power, s, max_total)
        if not power:
            break
        fact *= t
        inv = Fraction(1, fact)
        for key, val in power.items():
            out[key] = out.get(key, CQ_ZERO) + val * inv
    return out
