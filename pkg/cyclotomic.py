"""
Cyclotomic Field Arithmetic Module

This module provides exact arithmetic in the cyclotomic field Q(zeta_N):
elements are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced modulo
the N-th cyclotomic polynomial, with arbitrary-precision rational coefficients.
Galois action, embeddings between orders, absolute norms and the norm-based
p-adic valuation are provided on top of the field operations.

Note on roots of unity: Gamma_N is the set exp(2*pi*i*r/N) for r = 0..N-1
(the standard N-th roots of unity), not exp(2*pi*i/j) for j = 1..N.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

# Exact rational scalar. Fraction is always reduced with a positive denominator.
Rat = Fraction

Scalar = Union[int, Fraction]


class CyclotomicError(Exception):
    """Base exception for cyclotomic field errors."""
    pass


class DivisionByZero(CyclotomicError, ZeroDivisionError):
    """Raised when inverting or dividing by zero."""
    pass


class OrderMismatch(CyclotomicError, ValueError):
    """Raised when combining elements of different cyclotomic fields."""
    pass


class NotCoprime(CyclotomicError, ValueError):
    """Raised when a Galois exponent shares a factor with the order."""
    pass


class NotDivisible(CyclotomicError, ValueError):
    """Raised when embedding into an order that is not a multiple."""
    pass


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler totient of n."""
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _int_poly_divexact(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Divide a by the monic integer polynomial b; the division must be exact."""
    rem = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + db]
        quot[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
    if any(rem[:db]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclo_poly(n: int) -> Tuple[int, ...]:
    """
    Return the n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.

    Args:
        n: Positive order

    Returns:
        Integer coefficients, lowest degree first; monic of degree phi(n)

    Raises:
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _int_poly_divexact(poly, cyclo_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _zeta_powers(n: int) -> Tuple[Tuple[int, ...], ...]:
    # Power-basis vectors of z^k for k = 0 .. 2n-1 (covers products and all residues).
    phi = euler_phi(n)
    cp = cyclo_poly(n)
    table = []
    vec = [0] * phi
    vec[0] = 1
    for _ in range(2 * n):
        table.append(tuple(vec))
        # multiply by z: shift up, fold the overflow through z^phi = -sum cp[i] z^i
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i in range(phi):
                vec[i] -= top * cp[i]
    return tuple(table)


def _frac_poly_trim(a: List[Fraction]) -> List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _frac_poly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) <= db:
        return [], _frac_poly_trim(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + db] / lead
        quot[k] = c
        if c:
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
    return _frac_poly_trim(quot), _frac_poly_trim(rem[:db])


def _frac_poly_sub_mul(a: List[Fraction], q: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    # a - q*b
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _frac_poly_trim(out)


@dataclass(frozen=True)
class CycNum:
    """
    An element of Q(zeta_N) in the power basis modulo Phi_N.

    The coefficient tuple always has length phi(order); index r holds the
    coefficient of z^r. Two elements of the same order are equal iff their
    coefficient tuples are equal.
    """
    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.order):
            raise ValueError(
                f"Order {self.order} needs {euler_phi(self.order)} coefficients, got {len(self.coeffs)}"
            )

    # Construction

    @classmethod
    def from_rational(cls, n: int, value: Scalar) -> "CycNum":
        phi = euler_phi(n)
        return cls(n, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, n: int) -> "CycNum":
        return cls.from_rational(n, 0)

    @classmethod
    def one(cls, n: int) -> "CycNum":
        return cls.from_rational(n, 1)

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence[Scalar]) -> "CycNum":
        """Build from an arbitrary-length coefficient list of powers of z, reducing mod Phi_n."""
        table = _zeta_powers(n)
        phi = euler_phi(n)
        out = [Fraction(0)] * phi
        for k, c in enumerate(coeffs):
            if c:
                vec = table[k % n]
                for i in range(phi):
                    if vec[i]:
                        out[i] += c * vec[i]
        return cls(n, tuple(out))

    # Predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # Field operations

    def _coerce(self, other: Any) -> "CycNum":
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise OrderMismatch(f"Cannot combine orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(self.order, other)
        return NotImplemented

    def __add__(self, other: Any) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Any) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: Any) -> "CycNum":
        return -self + other

    def __mul__(self, other: Any) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            return CycNum(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        phi = len(self.coeffs)
        if phi == 1:
            return CycNum(self.order, (self.coeffs[0] * other.coeffs[0],))
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = list(conv[:phi])
        table = _zeta_powers(self.order)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                vec = table[k]
                for i in range(phi):
                    if vec[i]:
                        out[i] += c * vec[i]
        return CycNum(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """
        Multiplicative inverse via the extended Euclidean algorithm against Phi_N.

        Raises:
            DivisionByZero: If self is zero
        """
        if self.is_zero():
            raise DivisionByZero("Cannot invert zero")
        if self.is_rational():
            return CycNum.from_rational(self.order, 1 / self.coeffs[0])
        modulus = [Fraction(c) for c in cyclo_poly(self.order)]
        # invariant: s_i * a == r_i (mod Phi)
        r0, r1 = modulus, _frac_poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_poly_sub_mul(s0, q, s1)
        # r1 is a nonzero constant because Phi is irreducible
        scale = 1 / r1[0]
        return CycNum.from_coeffs(self.order, [c * scale for c in s1])

    def __truediv__(self, other: Any) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "CycNum":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "CycNum":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Galois theory

    def galois(self, k: int) -> "CycNum":
        """Apply the automorphism sigma_k: z -> z^k."""
        return galois(self, k)

    def embed(self, n: int) -> "CycNum":
        return embed(self, n)

    def norm(self) -> Fraction:
        return norm(self)

    # Serialization and display

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CycNum":
        n = int(data["n"])
        coeffs = tuple(Fraction(int(num), int(den)) for num, den in data["coeffs"])
        return cls(n, coeffs)

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.coeffs

    def __str__(self) -> str:
        terms = []
        for r, c in enumerate(self.coeffs):
            if not c:
                continue
            if r == 0:
                body = str(c)
            else:
                power = "z" if r == 1 else f"z^{r}"
                if c == 1:
                    body = power
                elif c == -1:
                    body = f"-{power}"
                else:
                    body = f"{c}*{power}"
            terms.append(body)
        if not terms:
            return "0"
        text = terms[0]
        for t in terms[1:]:
            text += t if t.startswith("-") else f"+{t}"
        return text


def root_of_unity(n: int, r: int) -> CycNum:
    """
    Return zeta_n^(r mod n) in the power basis of order n.

    Raises:
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {n}")
    vec = _zeta_powers(n)[r % n]
    return CycNum(n, tuple(Fraction(c) for c in vec))


def galois(a: CycNum, k: int) -> CycNum:
    """
    Apply sigma_k (z -> z^k) to a.

    Raises:
        NotCoprime: If gcd(k, order) != 1
    """
    n = a.order
    if gcd(k, n) != 1:
        raise NotCoprime(f"Galois exponent {k} is not coprime to {n}")
    k %= n
    if k == 1 or n <= 2:
        return a
    table = _zeta_powers(n)
    phi = len(a.coeffs)
    out = [Fraction(0)] * phi
    for r, c in enumerate(a.coeffs):
        if c:
            vec = table[(k * r) % n]
            for i in range(phi):
                if vec[i]:
                    out[i] += c * vec[i]
    return CycNum(n, tuple(out))


def galois_exponents(n: int) -> List[int]:
    """Residues k in [1, n] coprime to n, i.e. the Galois group of Q(zeta_n)."""
    return [k for k in range(1, n + 1) if gcd(k, n) == 1] if n > 1 else [1]


def embed(a: CycNum, n: int) -> CycNum:
    """
    Embed a from Q(zeta_M) into Q(zeta_n) via zeta_M -> zeta_n^(n/M).

    Raises:
        NotDivisible: If M does not divide n
    """
    m = a.order
    if n % m != 0:
        raise NotDivisible(f"Order {m} does not divide {n}")
    if m == n:
        return a
    step = n // m
    return CycNum.from_coeffs(n, _spread(a.coeffs, step))


def _spread(coeffs: Sequence[Fraction], step: int) -> List[Fraction]:
    out = [Fraction(0)] * ((len(coeffs) - 1) * step + 1)
    for r, c in enumerate(coeffs):
        out[r * step] = c
    return out


def norm(a: CycNum) -> Fraction:
    """Absolute norm: the product of all Galois conjugates of a, a rational number."""
    if a.is_zero():
        return Fraction(0)
    result = CycNum.one(a.order)
    for k in galois_exponents(a.order):
        result = result * galois(a, k)
    return result.as_rational()


@dataclass(frozen=True)
class HalfIntVal:
    """A valuation value: an exact rational, or +infinity (value None) for the zero element."""
    value: Optional[Fraction]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __add__(self, other: "HalfIntVal") -> "HalfIntVal":
        if self.is_infinite or other.is_infinite:
            return INFINITE_VALUATION
        return HalfIntVal(self.value + other.value)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.value)


INFINITE_VALUATION = HalfIntVal(None)


def _int_valuation(m: int, p: int) -> int:
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def ord_p(a: CycNum, p: int) -> HalfIntVal:
    """
    Norm-based p-adic valuation v_p(Norm(a)) / phi(N).

    For N = 4 and p = 2 this is the ord_2 of Q(i) defined through |a| = 2^v * unit,
    since |a|^2 = Norm(a). This is not a place-by-place valuation.

    Args:
        a: Field element
        p: A prime

    Returns:
        HalfIntVal, infinite for a = 0
    """
    if p < 2 or any(p % d == 0 for d in range(2, isqrt(p) + 1)):
        raise ValueError(f"{p} is not prime")
    if a.is_zero():
        return INFINITE_VALUATION
    value = norm(a)
    v = _int_valuation(abs(value.numerator), p) - _int_valuation(value.denominator, p)
    return HalfIntVal(Fraction(v, euler_phi(a.order)))
