"""
Polynomial Ring Module

Dense univariate polynomials over Q(zeta_N), construction of monic products of
linear factors (x - mu) for mu in Gamma_N^0 = {0} U Gamma_N, and root peeling:
the exact decision whether a polynomial splits completely over Gamma_N^0.

Points of Gamma_N^0 are addressed by integer keys: ORIGIN (-1) for 0 and the
residue r in [0, N) for zeta_N^r. Sorting keys gives the fixed order
origin, root:0, ..., root:N-1.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from cyclotomic import CycNum, OrderMismatch, Scalar, root_of_unity

ORIGIN = -1


class PolyError(Exception):
    """Base exception for polynomial errors."""
    pass


class NotUnitalRoots(PolyError):
    """Raised when a polynomial has a root outside Gamma_N^0."""
    pass


class ZeroPolynomial(PolyError, ValueError):
    """Raised when an operation needs a nonzero polynomial."""
    pass


def key_name(key: int) -> str:
    """Render a Gamma_N^0 key as used in JSON and text output."""
    return "origin" if key == ORIGIN else f"root:{key}"


def parse_key_name(name: str, n: int) -> int:
    if name == "origin":
        return ORIGIN
    if name.startswith("root:"):
        r = int(name[5:])
        if 0 <= r < n:
            return r
    raise ValueError(f"Invalid root key {name!r} for order {n}")


def all_keys(n: int) -> List[int]:
    """Gamma_N^0 in peel order: origin first, then residues 0..N-1."""
    return [ORIGIN] + list(range(n))


@lru_cache(maxsize=None)
def point(n: int, key: int) -> CycNum:
    """The element of Q(zeta_n) a key stands for."""
    if key == ORIGIN:
        return CycNum.zero(n)
    return root_of_unity(n, key)


@dataclass(frozen=True)
class RootSpec:
    """
    A finite map from Gamma_N^0 keys to positive exponents.

    Stored as a tuple of (key, exponent) pairs sorted by key so that specs are
    hashable and compare structurally.
    """
    order: int
    exps: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        keys = [k for k, _ in self.exps]
        if keys != sorted(set(keys)):
            raise ValueError(f"RootSpec keys must be distinct and sorted: {keys}")
        for k, e in self.exps:
            if e < 1:
                raise ValueError(f"RootSpec exponent for {key_name(k)} must be positive, got {e}")
            if not (k == ORIGIN or 0 <= k < self.order):
                raise ValueError(f"Key {k} is not in Gamma_{self.order}^0")

    @classmethod
    def from_dict(cls, n: int, mapping: Mapping[int, int]) -> "RootSpec":
        return cls(n, tuple(sorted((k, e) for k, e in mapping.items() if e)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.exps)

    @property
    def keys(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def is_empty(self) -> bool:
        return not self.exps

    def merge(self, other: "RootSpec") -> "RootSpec":
        """Union of two key-disjoint specs."""
        if other.order != self.order:
            raise OrderMismatch(f"Cannot merge orders {self.order} and {other.order}")
        if set(self.keys) & set(other.keys):
            raise ValueError("Merged RootSpecs must be key-disjoint")
        return RootSpec(self.order, tuple(sorted(self.exps + other.exps)))

    def to_json(self) -> Dict[str, int]:
        return {key_name(k): e for k, e in self.exps}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{key_name(k)}:{e}" for k, e in self.exps) + "}"


def _trim(coeffs: List[CycNum]) -> Tuple[CycNum, ...]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """
    A dense polynomial over Q(zeta_N), lowest degree first.

    The highest stored coefficient is nonzero; the zero polynomial has no
    coefficients and degree -1 (standing in for -infinity).
    """
    order: int
    coeffs: Tuple[CycNum, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1].is_zero():
            raise ValueError("Poly coefficients must not have trailing zeros")
        for c in self.coeffs:
            if c.order != self.order:
                raise OrderMismatch(f"Coefficient of order {c.order} in a Poly of order {self.order}")

    @classmethod
    def make(cls, n: int, coeffs: Iterable[Union[CycNum, Scalar]]) -> "Poly":
        """Build from any coefficient sequence, coercing scalars and trimming zeros."""
        items = [c if isinstance(c, CycNum) else CycNum.from_rational(n, c) for c in coeffs]
        return cls(n, _trim(items))

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n, ())

    @classmethod
    def constant(cls, n: int, value: Union[CycNum, Scalar]) -> "Poly":
        return cls.make(n, [value])

    @classmethod
    def x(cls, n: int) -> "Poly":
        return cls.make(n, [0, 1])

    @classmethod
    def linear(cls, n: int, key: int) -> "Poly":
        """The monic factor x - mu for the Gamma_N^0 point with this key."""
        return cls(n, (-point(n, key), CycNum.one(n)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> CycNum:
        if not self.coeffs:
            raise ZeroPolynomial("Zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> CycNum:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return CycNum.zero(self.order)

    def _check(self, other: "Poly") -> None:
        if other.order != self.order:
            raise OrderMismatch(f"Cannot combine polynomials of orders {self.order} and {other.order}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.order, _trim([self.coeff(k) + other.coeff(k) for k in range(size)]))

    def __neg__(self) -> "Poly":
        return Poly(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.order, _trim([self.coeff(k) - other.coeff(k) for k in range(size)]))

    def __mul__(self, other: Union["Poly", CycNum, Scalar]) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.order)
        out = [CycNum.zero(self.order)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(self.order, _trim(out))

    def __rmul__(self, other: Union[CycNum, Scalar]) -> "Poly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("Polynomial powers must be non-negative")
        result = Poly.constant(self.order, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, c: Union[CycNum, Scalar]) -> "Poly":
        if isinstance(c, CycNum) and c.order != self.order:
            raise OrderMismatch(f"Cannot scale order {self.order} by order {c.order}")
        return Poly(self.order, _trim([a * c for a in self.coeffs]))

    def evaluate(self, value: CycNum) -> CycNum:
        """Horner evaluation at a field element of the same order."""
        if value.order != self.order:
            raise OrderMismatch(f"Cannot evaluate order {self.order} at order {value.order}")
        acc = CycNum.zero(self.order)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divide_linear(self, key: int) -> Tuple["Poly", CycNum]:
        """Synthetic division by (x - mu); returns (quotient, remainder)."""
        if not self.coeffs:
            raise ZeroPolynomial("Cannot divide the zero polynomial")
        if key == ORIGIN:
            return Poly(self.order, self.coeffs[1:]), self.coeffs[0]
        mu = point(self.order, key)
        carry = CycNum.zero(self.order)
        quotient: List[CycNum] = []
        for c in reversed(self.coeffs):
            carry = carry * mu + c
            quotient.append(carry)
        remainder = quotient.pop()
        quotient.reverse()
        return Poly(self.order, _trim(quotient)), remainder

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not power:
                terms.append(f"({c})")
            elif c.is_one():
                terms.append(power)
            else:
                terms.append(f"({c})*{power}")
        return " + ".join(terms)


@lru_cache(maxsize=None)
def from_factored(spec: RootSpec) -> Poly:
    """
    Expand prod (x - mu)^e over the spec into a monic polynomial.

    The empty spec gives the constant 1.
    """
    n = spec.order
    result = Poly.constant(n, 1)
    for key, e in spec.exps:
        factor = Poly.linear(n, key)
        for _ in range(e):
            result = result * factor
    return result


def peel_roots(p: Poly) -> Tuple[RootSpec, CycNum]:
    """
    Split p completely over Gamma_N^0 by repeated synthetic division.

    Peels the origin first, then roots 0..N-1, each until the remainder is
    nonzero.

    Args:
        p: Nonzero polynomial

    Returns:
        (exponent map, constant) with p = constant * from_factored(map)

    Raises:
        ZeroPolynomial: If p is zero
        NotUnitalRoots: If a factor of positive degree survives the peel
    """
    if p.is_zero():
        raise ZeroPolynomial("Cannot peel the zero polynomial")
    n = p.order
    exps: Dict[int, int] = {}
    for key in all_keys(n):
        while p.degree >= 1:
            quotient, remainder = p.divide_linear(key)
            if not remainder.is_zero():
                break
            exps[key] = exps.get(key, 0) + 1
            p = quotient
        if p.degree < 1:
            break
    if p.degree >= 1:
        raise NotUnitalRoots(f"Degree {p.degree} factor has roots outside Gamma_{n}^0: {p}")
    return RootSpec.from_dict(n, exps), p.coeffs[0]
