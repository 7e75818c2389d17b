"""Exact scalar arithmetic: cyclotomic integers and small polynomial rings.

Coefficient domains used throughout the package:

* plain Python ``int`` (arbitrary precision),
* ``fractions.Fraction`` for the few identities that divide,
* ``CycInt`` for values living in the ring of integers of a cyclotomic field,
* ``UniPoly`` / ``BiPoly`` for q- and (p,q)-analogues.

``CycInt`` models Z[x]/Phi_m(x) where Phi_m is the m-th cyclotomic
polynomial, so x is a primitive m-th root of unity.  Working modulo Phi_m
(rather than modulo 1 + x + ... + x^(m-1)) guarantees that any value fixed
by the Galois action, e.g. a power sum over all m-th roots other than 1,
reduces to a literal integer for every order, composite orders included.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Union


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Quotient of integer polynomials (ascending coeffs), remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        out[i - dd] = c
        for j, d in enumerate(den):
            num[i - dd + j] -= c * d
    if any(num):
        raise ArithmeticError("division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m(x), ascending degree.

    Phi_1 = x - 1 and Phi_m = (x^m - 1) / prod of Phi_d over proper divisors
    d of m; the division is exact over the integers.
    """
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, cyclotomic_coeffs(d))
    return tuple(num)


def _reduce_mod_cyclotomic(order: int, coeffs: list[int]) -> tuple[int, ...]:
    phi = cyclotomic_coeffs(order)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        coeffs[i] = 0
        for j in range(deg):
            coeffs[i - deg + j] -= c * phi[j]
    coeffs = coeffs[:deg]
    coeffs.extend([0] * (deg - len(coeffs)))
    return tuple(coeffs)


class CycInt:
    """Element of Z[x]/Phi_order(x), stored on the basis 1, x, ..., x^(phi(order)-1).

    Mixed arithmetic with ``int`` is supported; two ``CycInt`` operands must
    share the same order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Union[int, list[int], tuple[int, ...]] = 0):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce_mod_cyclotomic(order, list(coeffs)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycInt is immutable")

    @classmethod
    def root(cls, order: int, exponent: int = 1) -> "CycInt":
        """x^exponent as an element of the order-``order`` ring."""
        e = exponent % order
        return cls(order, [0] * e + [1])

    def _coerce(self, other: object) -> Optional["CycInt"]:
        if isinstance(other, CycInt):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, int):
            return CycInt(self.order, other)
        return None

    def __add__(self, other: object) -> "CycInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, [-a for a in self.coeffs])

    def __sub__(self, other: object) -> "CycInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other: object) -> "CycInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "CycInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [0] * (2 * len(self.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        return CycInt(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycInt":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = CycInt(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycInt):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _reduce_mod_cyclotomic(self.order, [other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def as_integer(self) -> Optional[int]:
        """The value as a rational integer, or None if it is not one."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"CycInt(order={self.order}, coeffs={list(self.coeffs)})"

    def __str__(self) -> str:
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                var = "x" if e == 1 else f"x^{e}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def cyc_root_power(s: int, j: int, e: int) -> CycInt:
    """(j-th primitive-basis root of order s+1) raised to the e-th power.

    The root is x^j for the class of x in Z[x]/Phi_{s+1}, 1 <= j <= s.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if not 1 <= j <= s:
        raise ValueError(f"j must lie in 1..{s}, got {j}")
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    return CycInt.root(s + 1, j * e)


def cyc_power_sum(s: int, k: int) -> CycInt:
    """Sum of k-th powers of all order-(s+1) roots of unity except 1.

    Always collapses to an integer: s when (s+1) | k, otherwise -1.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    total = CycInt(s + 1, 0)
    for j in range(1, s + 1):
        total = total + cyc_root_power(s, j, k)
    return total


def cyc_as_integer(v: CycInt) -> Optional[int]:
    """Integer content of v, or None when v has a nonzero non-rational part."""
    return v.as_integer()


class UniPoly:
    """Integer polynomial in one variable q, dense ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[int, list[int], tuple[int, ...]] = ()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        coeffs = tuple(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def term(cls, coeff: int, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def _coerce(self, other: object) -> Optional["UniPoly"]:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly(other)
        return None

    def __add__(self, other: object) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: object) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = UniPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UniPoly(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def scale_exponents(self, s: int) -> "UniPoly":
        """Substitute q -> q^s."""
        if s < 1:
            raise ValueError("scale factor must be >= 1")
        if not self.coeffs:
            return self
        out = [0] * (s * self.degree + 1)
        for e, c in enumerate(self.coeffs):
            out[s * e] = c
        return UniPoly(out)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


class BiPoly:
    """Integer polynomial in p and q, sparse {(i, j): coeff} for p^i * q^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[int, dict] = 0):
        if isinstance(terms, int):
            terms = {(0, 0): terms} if terms else {}
        clean = {}
        for (i, j), c in terms.items():
            if c:
                if i < 0 or j < 0:
                    raise ValueError("exponents must be >= 0")
                clean[(i, j)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def term(cls, coeff: int, p_exp: int, q_exp: int) -> "BiPoly":
        return cls({(p_exp, q_exp): coeff})

    def _coerce(self, other: object) -> Optional["BiPoly"]:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly(other)
        return None

    def __add__(self, other: object) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in o.terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: object) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = BiPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == BiPoly(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __call__(self, p: int, q: int) -> int:
        return sum(c * p**i * q**j for (i, j), c in self.terms.items())

    def at_p1(self) -> UniPoly:
        """Substitute p = 1, leaving a polynomial in q."""
        out: dict = {}
        for (_, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c
        if not out:
            return UniPoly()
        coeffs = [0] * (max(out) + 1)
        for j, c in out.items():
            coeffs[j] = c
        return UniPoly(coeffs)

    def scale_exponents(self, s: int) -> "BiPoly":
        """Substitute p -> p^s and q -> q^s."""
        if s < 1:
            raise ValueError("scale factor must be >= 1")
        return BiPoly({(s * i, s * j): c for (i, j), c in self.terms.items()})

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        def mono(i: int, j: int) -> str:
            factors = []
            if i:
                factors.append("p" if i == 1 else f"p^{i}")
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            return "*".join(factors)

        keys = sorted(self.terms, key=lambda ij: (ij[0] + ij[1], ij))
        parts = []
        for key in keys:
            c = self.terms[key]
            m = mono(*key)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{c}*{m}")
        if not parts:
            return "0"
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def to_json(self) -> list[list]:
        return [[i, j, str(c)] for (i, j), c in sorted(self.terms.items())]
