"""Sparse multivariate polynomials and truncated power series.

``MPoly`` is a sparse polynomial in variables x1..xn over any of the exact
coefficient domains from :mod:`truncsym.exactalg` (or plain ``int`` /
``fractions.Fraction``).  Exponent vectors are plain tuples of length n.

``TSeries`` is a power series in one extra formal variable t with ``MPoly``
coefficients, truncated at a fixed order; it exists so that generating
function definitions can be evaluated literally (product of factors, then
coefficient extraction, with series inversion for the denominators).

Canonical term order for serialization and iteration is graded
lexicographic: total degree first, then exponent tuple.  Rendering via
``str`` groups terms the way expansions are conventionally written (blocks
of monomials sharing an exponent multiset, largest block first), which is
cosmetic only.
"""

from __future__ import annotations

from fractions import Fraction
from operator import add as _add
from typing import Callable, Iterable, Optional, Union

from .exactalg import BiPoly, CycInt, UniPoly

Coeff = Union[int, Fraction, CycInt, UniPoly, BiPoly]
Monomial = tuple[int, ...]

_SCALAR_TYPES = (int, Fraction, CycInt, UniPoly, BiPoly)


def _canon_key(exps: Monomial) -> tuple:
    return (sum(exps), exps)


def _display_key(exps: Monomial) -> tuple:
    shape = tuple(-e for e in sorted(exps, reverse=True))
    return (sum(exps), shape, tuple(-e for e in exps))


class MPoly:
    """Sparse polynomial in x1..xn with exact coefficients."""

    __slots__ = ("n", "terms")
    __hash__ = None

    def __init__(self, n: int, terms: Optional[dict] = None):
        if n < 0:
            raise ValueError(f"variable count must be >= 0, got {n}")
        clean: dict = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent tuple {exps} has length != {n}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if c:
                    clean[tuple(exps)] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MPoly is immutable")

    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "MPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def constant(cls, n: int, c: Coeff) -> "MPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "MPoly":
        """x_i, with i in 1..n."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, n: int, exps: Iterable[int], c: Coeff = 1) -> "MPoly":
        return cls(n, {tuple(exps): c})

    # -- arithmetic --------------------------------------------------------

    def _check_same_vars(self, other: "MPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: object) -> "MPoly":
        if isinstance(other, MPoly):
            self._check_same_vars(other)
            out = dict(self.terms)
            for exps, c in other.terms.items():
                if exps in out:
                    out[exps] = out[exps] + c
                else:
                    out[exps] = c
            return MPoly(self.n, out)
        if isinstance(other, _SCALAR_TYPES):
            return self + MPoly.constant(self.n, other)
        return NotImplemented

    def __radd__(self, other: object) -> "MPoly":
        return self.__add__(other)

    def __neg__(self) -> "MPoly":
        return MPoly(self.n, {exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other: object) -> "MPoly":
        if isinstance(other, MPoly):
            return self + (-other)
        if isinstance(other, _SCALAR_TYPES):
            return self + MPoly.constant(self.n, -other)
        return NotImplemented

    def __rsub__(self, other: object) -> "MPoly":
        return (-self).__add__(other)

    def __mul__(self, other: object) -> "MPoly":
        if isinstance(other, MPoly):
            self._check_same_vars(other)
            a, b = self.terms, other.terms
            if len(a) < len(b):
                a, b = b, a
            out: dict = {}
            b_items = list(b.items())
            for e1, c1 in a.items():
                for e2, c2 in b_items:
                    key = tuple(map(_add, e1, e2))
                    c = c1 * c2
                    if key in out:
                        out[key] = out[key] + c
                    else:
                        out[key] = c
            return MPoly(self.n, out)
        if isinstance(other, _SCALAR_TYPES):
            if not other:
                return MPoly(self.n)
            return MPoly(self.n, {exps: c * other for exps, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other: object) -> "MPoly":
        if isinstance(other, _SCALAR_TYPES):
            if not other:
                return MPoly(self.n)
            return MPoly(self.n, {exps: other * c for exps, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        result = MPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, _SCALAR_TYPES):
            return self.terms == MPoly.constant(self.n, other).terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def is_homogeneous(self, k: Optional[int] = None) -> bool:
        degrees = {sum(exps) for exps in self.terms}
        if k is not None:
            return degrees <= {k}
        return len(degrees) <= 1

    def pad(self, n: int) -> "MPoly":
        """Reinterpret in n >= self.n variables, new variables unused."""
        if n < self.n:
            raise ValueError(f"cannot shrink from {self.n} to {n} variables")
        if n == self.n:
            return self
        extra = (0,) * (n - self.n)
        return MPoly(n, {exps + extra: c for exps, c in self.terms.items()})

    def map_coeffs(self, f: Callable[[Coeff], Coeff]) -> "MPoly":
        return MPoly(self.n, {exps: f(c) for exps, c in self.terms.items()})

    def coeff(self, exps: Iterable[int]) -> Coeff:
        return self.terms.get(tuple(exps), 0)

    def canonical_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms sorted graded-lexicographically (ascending)."""
        return [(exps, self.terms[exps]) for exps in sorted(self.terms, key=_canon_key)]

    # -- rendering -----------------------------------------------------------

    @staticmethod
    def _render_monomial(exps: Monomial) -> str:
        factors = []
        for i, e in enumerate(exps, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        return "*".join(factors)

    @staticmethod
    def _render_coeff(c: Coeff) -> str:
        if isinstance(c, (int, Fraction)):
            return str(c)
        return f"({c})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_display_key):
            c = self.terms[exps]
            mono = self._render_monomial(exps)
            if not mono:
                parts.append(self._render_coeff(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{self._render_coeff(c)}*{mono}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self) -> str:
        return f"MPoly(n={self.n}, terms={dict(self.canonical_terms())})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"exps": list(exps), "coeff": _coeff_to_json(c)}
                for exps, c in self.canonical_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MPoly":
        terms = {
            tuple(t["exps"]): _coeff_from_json(t["coeff"]) for t in obj["terms"]
        }
        return cls(obj["n"], terms)


def _coeff_to_json(c: Coeff) -> object:
    if isinstance(c, int):
        return str(c)
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, CycInt):
        return c.to_json()
    if isinstance(c, UniPoly):
        return {"q": c.to_json()}
    if isinstance(c, BiPoly):
        return {"pq": c.to_json()}
    raise TypeError(f"cannot serialize coefficient of type {type(c).__name__}")


def _coeff_from_json(obj: object) -> Coeff:
    if isinstance(obj, str):
        if "/" in obj:
            return Fraction(obj)
        return int(obj)
    if isinstance(obj, dict):
        if "order" in obj:
            return CycInt(obj["order"], [int(c) for c in obj["coeffs"]])
        if "q" in obj:
            return UniPoly([int(c) for c in obj["q"]])
        if "pq" in obj:
            return BiPoly({(i, j): int(c) for i, j, c in obj["pq"]})
    raise ValueError(f"unrecognized coefficient payload: {obj!r}")


def mpoly_mul(a: MPoly, b: MPoly) -> MPoly:
    """Product of two polynomials over the same variable set."""
    if not isinstance(a, MPoly) or not isinstance(b, MPoly):
        raise TypeError("mpoly_mul expects two MPoly arguments")
    return a * b


def accumulate_product(acc: dict, a: MPoly, b: MPoly, scalar: Coeff = 1) -> None:
    """acc += scalar * a * b, in place on a raw term dict.

    Shared by the identity checks that sum many pairwise products; avoids
    building every intermediate polynomial.
    """
    if not scalar:
        return
    b_items = list(b.terms.items())
    for e1, c1 in a.terms.items():
        c1s = c1 * scalar
        for e2, c2 in b_items:
            key = tuple(map(_add, e1, e2))
            c = c1s * c2
            if key in acc:
                acc[key] = acc[key] + c
            else:
                acc[key] = c


def collect(n: int, acc: dict) -> MPoly:
    """Finish an accumulate_product run, dropping zero entries."""
    return MPoly(n, acc)


def substitute_power(p: MPoly, s: int) -> MPoly:
    """p(x1^s, ..., xn^s): every exponent multiplied by s."""
    if s < 1:
        raise ValueError(f"power must be >= 1, got {s}")
    return MPoly(p.n, {tuple(e * s for e in exps): c for exps, c in p.terms.items()})


def specialize(p: MPoly, kind: str) -> Union[int, UniPoly, BiPoly]:
    """Evaluate at a standard point: counts, q-analogues or (p,q)-analogues.

    * ``all-ones``: x_i = 1, giving an integer.
    * ``geometric-q``: x_i = q^(i-1), giving a UniPoly.
    * ``pq-grid``: x_i = p^(n-i) q^(i-1), giving a BiPoly.

    Coefficients must be plain integers.
    """
    for c in p.terms.values():
        if not isinstance(c, int):
            raise TypeError("specialize requires integer coefficients")
    if kind == "all-ones":
        return sum(p.terms.values())
    if kind == "geometric-q":
        out = UniPoly()
        for exps, c in p.terms.items():
            out = out + UniPoly.term(c, sum((i - 1) * e for i, e in enumerate(exps, 1)))
        return out
    if kind == "pq-grid":
        out = BiPoly()
        for exps, c in p.terms.items():
            dp = sum((p.n - i) * e for i, e in enumerate(exps, 1))
            dq = sum((i - 1) * e for i, e in enumerate(exps, 1))
            out = out + BiPoly.term(c, dp, dq)
        return out
    raise ValueError(f"unknown specialization kind: {kind!r}")


def is_symmetric(p: MPoly) -> bool:
    """True when p is invariant under every permutation of its variables.

    Invariance under the adjacent transpositions (i, i+1) generates the
    full symmetric group, so only n-1 swaps are checked.
    """
    for i in range(p.n - 1):
        swapped = {}
        for exps, c in p.terms.items():
            e = list(exps)
            e[i], e[i + 1] = e[i + 1], e[i]
            swapped[tuple(e)] = c
        if swapped != p.terms:
            return False
    return True


class TSeries:
    """Power series in t with MPoly coefficients, truncated after t^T."""

    __slots__ = ("n", "T", "coeffs")

    def __init__(self, n: int, T: int, coeffs: Optional[list[MPoly]] = None):
        if T < 0:
            raise ValueError(f"truncation order must be >= 0, got {T}")
        if coeffs is None:
            coeffs = [MPoly.zero(n) for _ in range(T + 1)]
        if len(coeffs) != T + 1:
            raise ValueError(f"expected {T + 1} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.n != n:
                raise ValueError("coefficient variable count mismatch")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "coeffs", list(coeffs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TSeries is immutable")

    @classmethod
    def one(cls, n: int, T: int) -> "TSeries":
        coeffs = [MPoly.one(n)] + [MPoly.zero(n) for _ in range(T)]
        return cls(n, T, coeffs)

    @classmethod
    def from_polys(cls, n: int, T: int, polys: Iterable[MPoly]) -> "TSeries":
        coeffs = list(polys)[: T + 1]
        coeffs += [MPoly.zero(n) for _ in range(T + 1 - len(coeffs))]
        return cls(n, T, coeffs)

    def coeff(self, k: int) -> MPoly:
        if not 0 <= k <= self.T:
            raise IndexError(f"order {k} outside truncation 0..{self.T}")
        return self.coeffs[k]

    def truncate(self, T: int) -> "TSeries":
        if T > self.T:
            raise ValueError(f"cannot extend truncation {self.T} to {T}")
        return TSeries(self.n, T, self.coeffs[: T + 1])

    def __mul__(self, other: "TSeries") -> "TSeries":
        if not isinstance(other, TSeries):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        T = min(self.T, other.T)
        out = []
        for m in range(T + 1):
            acc: dict = {}
            for j in range(m + 1):
                accumulate_product(acc, self.coeffs[j], other.coeffs[m - j])
            out.append(collect(self.n, acc))
        return TSeries(self.n, T, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.n == other.n and self.T == other.T and self.coeffs == other.coeffs

    __hash__ = None

    def inverse(self) -> "TSeries":
        """Multiplicative inverse, requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("series inverse requires constant term 1")
        inv = [MPoly.one(self.n)]
        for m in range(1, self.T + 1):
            acc: dict = {}
            for j in range(1, m + 1):
                uj = self.coeffs[j]
                if uj:
                    accumulate_product(acc, uj, inv[m - j], -1)
            inv.append(collect(self.n, acc))
        return TSeries(self.n, self.T, inv)

    def __repr__(self) -> str:
        return f"TSeries(n={self.n}, T={self.T})"


def tseries_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product truncated at min(a.T, b.T)."""
    return a * b


def tseries_inverse(u: TSeries) -> TSeries:
    """Inverse series v with u*v = 1 + O(t^(T+1)); u must start at 1."""
    return u.inverse()
