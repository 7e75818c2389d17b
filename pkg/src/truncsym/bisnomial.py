"""Bisnomial triangles: counting, q- and (p,q)-specializations, conversions.

``bisnomial(n, k, s)`` counts multisets drawn from n slots with each slot
used at most s times, i.e. the coefficient of t^k in (1 + t + ... + t^s)^n.
The q- and (p,q)-variants evaluate the truncated elementary family on the
geometric grids q^(i-1) and p^(n-i) q^(i-1); all three satisfy the same
one-variable-peeling recurrence, which is the production path here (the
polynomial constructors stay the reference oracle in the test suite).

``check_conversion`` verifies the closed-form conversion identities that
tie the s-truncated triangles to ordinary binomials and Gaussian
binomials.
"""

from __future__ import annotations

import time
from functools import lru_cache
from math import comb

from .exactalg import BiPoly, UniPoly
from .identities import IdentityReport


def _validate(n: int, k: int, s: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")


@lru_cache(maxsize=None)
def bisnomial(n: int, k: int, s: int) -> int:
    """Coefficient of t^k in (1 + t + ... + t^s)^n."""
    _validate(n, k, s)
    if k < 0 or k > s * n:
        return 0
    if n == 0:
        return 1
    return sum(bisnomial(n - 1, k - j, s) for j in range(min(s, k) + 1))


def bisnomial_row(n: int, s: int) -> list[int]:
    """Row n of the triangle: k = 0 .. s*n."""
    _validate(n, 0, s)
    return [bisnomial(n, k, s) for k in range(s * n + 1)]


@lru_cache(maxsize=None)
def gaussian(n: int, k: int) -> UniPoly:
    """Gaussian binomial coefficient as a polynomial in q."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return UniPoly()
    if k == 0 or k == n:
        return UniPoly(1)
    return gaussian(n - 1, k - 1) + UniPoly.term(1, k) * gaussian(n - 1, k)


@lru_cache(maxsize=None)
def pq_gaussian(n: int, k: int) -> BiPoly:
    """Homogeneous two-parameter Gaussian binomial in p and q."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return BiPoly()
    if k == 0 or k == n:
        return BiPoly(1)
    return BiPoly.term(1, n - k, 0) * pq_gaussian(n - 1, k - 1) + BiPoly.term(
        1, 0, k
    ) * pq_gaussian(n - 1, k)


@lru_cache(maxsize=None)
def q_bisnomial(n: int, k: int, s: int) -> UniPoly:
    """The truncated elementary family evaluated at x_i = q^(i-1).

    Satisfies Q(n, k) = sum_j q^(j*(n-1)) Q(n-1, k-j) over j = 0..s.  At
    s = 1 it equals q^binom(k,2) times the Gaussian binomial.
    """
    _validate(n, k, s)
    if k < 0 or k > s * n:
        return UniPoly()
    if n == 0:
        return UniPoly(1)
    total = UniPoly()
    for j in range(min(s, k) + 1):
        lower = q_bisnomial(n - 1, k - j, s)
        if lower:
            total = total + UniPoly.term(1, j * (n - 1)) * lower
    return total


@lru_cache(maxsize=None)
def pq_bisnomial(n: int, k: int, s: int) -> BiPoly:
    """The truncated elementary family evaluated at x_i = p^(n-i) q^(i-1).

    Peeling x_n = q^(n-1) leaves the (n-1)-slot grid scaled by p, so
    PQ(n, k) = sum_j q^(j*(n-1)) p^(k-j) PQ(n-1, k-j).
    """
    _validate(n, k, s)
    if k < 0 or k > s * n:
        return BiPoly()
    if n == 0:
        return BiPoly(1)
    total = BiPoly()
    for j in range(min(s, k) + 1):
        lower = pq_bisnomial(n - 1, k - j, s)
        if lower:
            total = total + BiPoly.term(1, k - j, j * (n - 1)) * lower
    return total


_CONVERSION_KINDS = ("plain", "q", "pq", "binom_recovery", "qs_recovery")


def check_conversion(kind: str, n: int, k: int, s: int) -> IdentityReport:
    """Check one conversion identity between triangles at (n, k, s).

    s is the step parameter of the identity (s >= 2); the truncated
    triangle involved is the one at truncation depth s-1.
    """
    if kind not in _CONVERSION_KINDS:
        raise ValueError(f"kind must be one of {_CONVERSION_KINDS}, got {kind!r}")
    if n < 1 or k < 0 or s < 2:
        raise ValueError(f"need n >= 1, k >= 0, s >= 2; got n={n}, k={k}, s={s}")
    start = time.perf_counter()
    if kind == "plain":
        lhs = bisnomial(n, k, s - 1)
        rhs = sum(
            (-1) ** j * comb(n, j) * comb(n + k - s * j - 1, k - s * j)
            for j in range(k // s + 1)
        )
    elif kind == "q":
        lhs = q_bisnomial(n, k, s - 1)
        rhs = UniPoly()
        for j in range(k // s + 1):
            term = (
                UniPoly.term((-1) ** j, s * comb(j, 2))
                * gaussian(n, j).scale_exponents(s)
                * gaussian(n + k - s * j - 1, k - s * j)
            )
            rhs = rhs + term
    elif kind == "pq":
        lhs = pq_bisnomial(n, k, s - 1)
        rhs = BiPoly()
        for j in range(k // s + 1):
            e = s * comb(j, 2)
            term = (
                BiPoly.term((-1) ** j, e, e)
                * pq_gaussian(n, j).scale_exponents(s)
                * pq_gaussian(n + k - s * j - 1, k - s * j)
            )
            rhs = rhs + term
    elif kind == "binom_recovery":
        lhs = comb(n, k)
        rhs = sum(
            (-1) ** (k + j) * comb(n, j) * bisnomial(n, k * s - j, s - 1)
            for j in range(k * s + 1)
        )
    else:  # qs_recovery, multiplied through to stay in Z[q]
        lhs = UniPoly.term(1, s * comb(k, 2)) * gaussian(n, k).scale_exponents(s)
        rhs = UniPoly()
        for j in range(k * s + 1):
            term = (
                UniPoly.term((-1) ** (k + j), comb(j, 2))
                * gaussian(n, j)
                * q_bisnomial(n, k * s - j, s - 1)
            )
            rhs = rhs + term
    elapsed = time.perf_counter() - start
    return IdentityReport(
        identity_id=f"conversion:{kind}",
        params={"n": n, "k": k, "s": s},
        holds=lhs == rhs,
        lhs=str(lhs),
        rhs=str(rhs),
        elapsed=elapsed,
    )
