"""Symmetric function constructors over exact coefficient rings.

The two families at the center of the package generalize the elementary
and complete homogeneous symmetric functions by truncating each factor of
their generating products at degree s:

* ``E(k, s, n)``: coefficient of t^k in prod_i (1 + x_i t + ... + (x_i t)^s),
* ``H(k, s, n)``: coefficient of t^k in prod_i (1 - x_i t + ... + (-x_i t)^s)^(-1).

At s = 1 they reduce to e_k and h_k; at s >= k, E reduces to the full
monomial sum h_k restricted to exponents <= s (equal to h_k when s = k).

Every value is computed along two independent code paths and the results
are compared before being cached:

* E: the variable-peeling recurrence against the truncated-series product,
* H: the series inverse against peeling the last variable (which must
  reproduce the (n-1)-variable value).

A disagreement raises ``ArithmeticError`` rather than returning anything.
"""

from __future__ import annotations

from functools import reduce
from typing import Optional, Sequence

from .exactalg import CycInt
from .multipoly import MPoly, TSeries, accumulate_product, collect, tseries_mul
from .partitions import (
    Partition,
    conjugate,
    distinct_orbit,
    is_partition,
)

_M_CACHE: dict = {}
_CLASSICAL_CACHE: dict = {}
_E_CACHE: dict = {}
_E_SERIES_CACHE: dict = {}
_H_CACHE: dict = {}
_H_SERIES_CACHE: dict = {}


def _validate_sn(s: int, n: int) -> None:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def _validate_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def m_lambda(lam: Sequence[int], n: int) -> MPoly:
    """Monomial symmetric polynomial: sum of the distinct permutations of lam.

    Zero when lam has more than n parts; 1 for the empty partition.
    """
    lam = _validate_partition(lam)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    key = (lam, n)
    cached = _M_CACHE.get(key)
    if cached is None:
        cached = MPoly(n, {exps: 1 for exps in distinct_orbit(lam, n)})
        _M_CACHE[key] = cached
    return cached


def classical(kind: str, k: int, n: int) -> MPoly:
    """e_k, h_k or p_k in n variables (kind 'e', 'h' or 'p').

    k < 0 gives zero; p requires k >= 1.
    """
    if kind not in ("e", "h", "p"):
        raise ValueError(f"kind must be 'e', 'h' or 'p', got {kind!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if kind == "p" and k < 1:
        raise ValueError("power sums are defined for k >= 1 only")
    if k < 0:
        return MPoly.zero(n)
    key = (kind, k, n)
    cached = _CLASSICAL_CACHE.get(key)
    if cached is not None:
        return cached
    if kind == "p":
        val = MPoly(n, {tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)})
    elif k == 0:
        val = MPoly.one(n)
    elif n == 0 or (kind == "e" and k > n):
        val = MPoly.zero(n)
    else:
        xn = MPoly.variable(n, n)
        if kind == "e":
            val = classical("e", k, n - 1).pad(n) + xn * classical("e", k - 1, n - 1).pad(n)
        else:
            val = classical("h", k, n - 1).pad(n) + xn * classical("h", k - 1, n)
    _CLASSICAL_CACHE[key] = val
    return val


def _e_series(s: int, n: int) -> list[MPoly]:
    """Full coefficient list of prod_i (1 + x_i t + ... + (x_i t)^s)."""
    key = (s, n)
    cached = _E_SERIES_CACHE.get(key)
    if cached is None:
        T = s * n
        factors = []
        for i in range(1, n + 1):
            coeffs = []
            for j in range(T + 1):
                if j <= s:
                    exps_j = tuple(j if col == i - 1 else 0 for col in range(n))
                    coeffs.append(MPoly.monomial(n, exps_j))
                else:
                    coeffs.append(MPoly.zero(n))
            factors.append(TSeries(n, T, coeffs))
        product = reduce(tseries_mul, factors, TSeries.one(n, T))
        cached = list(product.coeffs)
        _E_SERIES_CACHE[key] = cached
    return cached


def _h_series(s: int, n: int, upto: int) -> list[MPoly]:
    """Coefficients of prod_i (sum_j (-x_i t)^j for j <= s)^(-1) through t^upto."""
    key = (s, n)
    cached = _H_SERIES_CACHE.get(key)
    if cached is None:
        T = s * n
        factors = []
        for i in range(1, n + 1):
            coeffs = []
            for j in range(T + 1):
                if j <= s:
                    exps_j = tuple(j if col == i - 1 else 0 for col in range(n))
                    coeffs.append(MPoly.monomial(n, exps_j, -1 if j % 2 else 1))
                else:
                    coeffs.append(MPoly.zero(n))
            factors.append(TSeries(n, T, coeffs))
        u = reduce(tseries_mul, factors, TSeries.one(n, T))
        cached = (list(u.coeffs), [MPoly.one(n)])
        _H_SERIES_CACHE[key] = cached
    u, v = cached
    while len(v) <= upto:
        m = len(v)
        acc: dict = {}
        for j in range(1, min(m, len(u) - 1) + 1):
            if u[j]:
                accumulate_product(acc, u[j], v[m - j], -1)
        v.append(collect(n, acc))
    return v


def E(k: int, s: int, n: int) -> MPoly:
    """Degree-s truncated elementary family; zero outside 0 <= k <= s*n."""
    _validate_sn(s, n)
    if k < 0 or k > s * n:
        return MPoly.zero(n)
    key = (k, s, n)
    cached = _E_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 0:
        val = MPoly.one(0)
    else:
        xn = MPoly.variable(n, n)
        val = MPoly.zero(n)
        power = MPoly.one(n)
        for j in range(min(s, k) + 1):
            lower = E(k - j, s, n - 1)
            if lower:
                val = val + power * lower.pad(n)
            power = power * xn
        series_val = _e_series(s, n)[k]
        if val != series_val:
            raise ArithmeticError(f"E({k},{s},{n}): recurrence and series disagree")
    _E_CACHE[key] = val
    return val


def H(k: int, s: int, n: int) -> MPoly:
    """Degree-s truncated complete family; zero for k < 0."""
    _validate_sn(s, n)
    if k < 0:
        return MPoly.zero(n)
    if n == 0:
        return MPoly.one(0) if k == 0 else MPoly.zero(0)
    key = (k, s, n)
    cached = _H_CACHE.get(key)
    if cached is not None:
        return cached
    v = _h_series(s, n, k)
    val = v[k]
    xn = MPoly.variable(n, n)
    peeled = MPoly.zero(n)
    power = MPoly.one(n)
    for j in range(min(s, k) + 1):
        term = power * v[k - j]
        peeled = peeled + (term if j % 2 == 0 else -term)
        power = power * xn
    if peeled != H(k, s, n - 1).pad(n):
        raise ArithmeticError(f"H({k},{s},{n}): series fails the variable-peeling check")
    _H_CACHE[key] = val
    return val


def P(k: int, s: int, n: int) -> MPoly:
    """Signed power-sum companion of E and H.

    Equals c * p_k with c = s*(-1)^k when (s+1) | k and (-1)^(k-1)
    otherwise; undefined at k = 0.
    """
    _validate_sn(s, n)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k % (s + 1) == 0:
        c = s if k % 2 == 0 else -s
    else:
        c = -1 if k % 2 == 0 else 1
    return c * classical("p", k, n)


def product_over_partition(
    kind: str, lam: Sequence[int], s: Optional[int], n: int
) -> MPoly:
    """Product over the parts of lam: e/h/p_lam or their truncated E/H/P forms.

    ``s`` is ignored for the classical kinds and required for 'E', 'H', 'P'.
    """
    lam = _validate_partition(lam)
    out = MPoly.one(n)
    if kind in ("e", "h", "p"):
        for part in lam:
            out = out * classical(kind, part, n)
        return out
    if kind in ("E", "H", "P"):
        if s is None:
            raise ValueError(f"kind {kind!r} needs s")
        ctor = {"E": E, "H": H, "P": P}[kind]
        for part in lam:
            out = out * ctor(part, s, n)
        return out
    raise ValueError(f"unknown kind: {kind!r}")


def m_lambda_at_roots(lam: Sequence[int], s: int) -> CycInt:
    """m_lambda evaluated at the s nontrivial (s+1)-th roots of unity.

    The orbit runs over distinct arrangements of lam in s slots; empty
    (value 0) when lam has more than s parts.  The result is always fixed
    by the Galois action, hence a rational integer in disguise.
    """
    lam = _validate_partition(lam)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    order = s + 1
    total = CycInt(order, 0)
    for exps in distinct_orbit(lam, s):
        total = total + CycInt.root(order, sum(j * e for j, e in enumerate(exps, 1)))
    return total


def _det(mat: list[list[MPoly]]) -> MPoly:
    m = len(mat)
    if m == 1:
        return mat[0][0]
    n_vars = mat[0][0].n
    total = MPoly.zero(n_vars)
    rest = mat[1:]
    for j in range(m):
        pivot = mat[0][j]
        if not pivot:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rest]
        term = pivot * _det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def schur_det(lam: Sequence[int], s: int, n: int, basis: str = "h") -> MPoly:
    """n x n determinant det(F_(mu_i - i + j)) with mu = lam zero-padded.

    ``basis='h'`` uses F = H and mu = lam (needs len(lam) <= n);
    ``basis='e'`` uses F = E and mu = the conjugate of lam (needs
    lam_1 <= n).  Negative indices contribute zero entries.
    """
    _validate_sn(s, n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lam = _validate_partition(lam)
    if basis == "h":
        mu = lam
        if len(mu) > n:
            raise ValueError(f"partition has {len(mu)} parts, more than n={n}")
        ctor = H
    elif basis == "e":
        mu = conjugate(lam)
        if len(mu) > n:
            raise ValueError(f"conjugate has {len(mu)} parts, more than n={n}")
        ctor = E
    else:
        raise ValueError(f"basis must be 'h' or 'e', got {basis!r}")
    mu = mu + (0,) * (n - len(mu))
    mat = [[ctor(mu[i] - i + j, s, n) for j in range(n)] for i in range(n)]
    return _det(mat)


def clear_caches() -> None:
    """Drop all memoized values (mainly for isolating benchmarks)."""
    _M_CACHE.clear()
    _CLASSICAL_CACHE.clear()
    _E_CACHE.clear()
    _E_SERIES_CACHE.clear()
    _H_CACHE.clear()
    _H_SERIES_CACHE.clear()
