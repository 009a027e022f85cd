"""
Unital Functions Module

A UnitalFn is a rational function D * prod (x - mu)^e_mu over mu in Gamma_N^0
with every factor monic and every unit absorbed into the constant D. This
module implements the membership test (1 - f must split over Gamma_N^0 as
well), the S3 sextet, the symmetries x -> zeta^r x and zeta -> zeta^k, the
Moebius substitutions permuting Gamma_N^0 and infinity, value at 0 on the
projective line, and the canonical key / text / JSON forms.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Any, Dict, List, Mapping, Optional, Tuple

from cyclotomic import CycNum, NotCoprime, NotDivisible, OrderMismatch, embed, galois, root_of_unity
from polyring import (
    ORIGIN,
    NotUnitalRoots,
    Poly,
    RootSpec,
    all_keys,
    from_factored,
    key_name,
    parse_key_name,
    peel_roots,
    point,
)


class UnitalError(Exception):
    """Base exception for unital function errors."""
    pass


class NotUnital(UnitalError):
    """Raised when 1 - f has a zero outside Gamma_N^0."""
    pass


class DegenerateConstant(UnitalError):
    """Raised when 1 - f vanishes identically."""
    pass


class ConstantFunction(UnitalError, ValueError):
    """Raised when constructing a UnitalFn with no zeros or poles."""
    pass


@dataclass(frozen=True)
class UnitalFn:
    """
    constant * prod_{key} (x - mu_key)^exponent, exponents nonzero.

    Positive exponents are zeros, negative exponents are poles. The exponent
    pairs are stored sorted by key (origin first).
    """
    order: int
    constant: CycNum
    exps: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.constant.order != self.order:
            raise ValueError(f"Constant of order {self.constant.order} in a function of order {self.order}")
        if self.constant.is_zero():
            raise ValueError("UnitalFn constant must be nonzero")
        if not self.exps:
            raise ConstantFunction(f"Function {self.constant} has no zeros or poles")
        keys = [k for k, _ in self.exps]
        if keys != sorted(set(keys)):
            raise ValueError(f"Exponent keys must be distinct and sorted: {keys}")
        for k, e in self.exps:
            if e == 0:
                raise ValueError(f"Stored exponent for {key_name(k)} is zero")
            if not (k == ORIGIN or 0 <= k < self.order):
                raise ValueError(f"Key {k} is not in Gamma_{self.order}^0")

    @classmethod
    def from_parts(cls, n: int, constant: CycNum, mapping: Mapping[int, int]) -> "UnitalFn":
        return cls(n, constant, tuple(sorted((k, e) for k, e in mapping.items() if e)))

    def exponent(self, key: int) -> int:
        for k, e in self.exps:
            if k == key:
                return e
        return 0

    def zeros(self) -> RootSpec:
        return RootSpec(self.order, tuple((k, e) for k, e in self.exps if e > 0))

    def poles(self) -> RootSpec:
        return RootSpec(self.order, tuple((k, -e) for k, e in self.exps if e < 0))

    @property
    def numerator_degree(self) -> int:
        return sum(e for _, e in self.exps if e > 0)

    @property
    def denominator_degree(self) -> int:
        return -sum(e for _, e in self.exps if e < 0)

    def __str__(self) -> str:
        return render_text(self)


@dataclass(frozen=True)
class P1Value:
    """A point of P^1(Q(zeta_N)): a field element, or infinity when value is None."""
    order: int
    value: Optional[CycNum] = None

    @classmethod
    def finite(cls, value: CycNum) -> "P1Value":
        return cls(value.order, value)

    @classmethod
    def infinity(cls, n: int) -> "P1Value":
        return cls(n, None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def sort_key(self) -> Tuple[int, Tuple]:
        return (1, ()) if self.value is None else (0, self.value.coeffs)

    def to_json(self) -> Any:
        return "infinity" if self.value is None else self.value.to_json()

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


def as_fraction(f: UnitalFn) -> Tuple[Poly, Poly]:
    """
    Numerator and denominator polynomials of f.

    The numerator carries the constant; the denominator is monic. They are
    coprime because zeros and poles occupy disjoint keys.
    """
    numerator = from_factored(f.zeros()).scale(f.constant)
    denominator = from_factored(f.poles())
    return numerator, denominator


def complement(f: UnitalFn) -> UnitalFn:
    """
    Compute 1 - f, which is itself unital exactly when f is.

    Args:
        f: Any UnitalFn

    Returns:
        The UnitalFn for 1 - f

    Raises:
        NotUnital: If the numerator den - num has a root outside Gamma_N^0
        DegenerateConstant: If den - num is zero (cannot happen for non-constant f)
    """
    return _complement_cached(f)


@lru_cache(maxsize=65536)
def _complement_cached(f: UnitalFn) -> UnitalFn:
    numerator, denominator = as_fraction(f)
    difference = denominator - numerator
    if difference.is_zero():
        raise DegenerateConstant(f"1 - ({f}) is identically zero")
    try:
        spec, constant = peel_roots(difference)
    except NotUnitalRoots as e:
        raise NotUnital(f"1 - ({render_text(f)}) is not unital: {e}")
    exps: Dict[int, int] = {k: -e for k, e in f.poles().exps}
    for k, e in spec.exps:
        exps[k] = e
    return UnitalFn.from_parts(f.order, constant, exps)


def reciprocal(f: UnitalFn) -> UnitalFn:
    """1/f: negate every exponent and invert the constant."""
    return UnitalFn(f.order, f.constant.inverse(), tuple((k, -e) for k, e in f.exps))


def sextet(f: UnitalFn) -> Tuple[UnitalFn, ...]:
    """
    The S3 orbit of f, in the order f, 1-f, 1/f, f/(f-1), (f-1)/f, 1/(1-f).

    Raises:
        NotUnital: If f is not N-unital
    """
    g = complement(f)
    rf = reciprocal(f)
    crf = complement(rf)
    return (f, g, rf, reciprocal(crf), crf, reciprocal(g))


def scale_sub(f: UnitalFn, r: int) -> UnitalFn:
    """
    Substitute x -> zeta^r * x and renormalise to monic factors.

    zeta^r x - zeta^s = zeta^r (x - zeta^(s-r)), so root keys shift by -r and
    the constant picks up zeta^(r * total exponent).
    """
    n = f.order
    r %= n
    if r == 0:
        return f
    total = sum(e for _, e in f.exps)
    constant = f.constant * root_of_unity(n, r * total)
    exps = {(k if k == ORIGIN else (k - r) % n): e for k, e in f.exps}
    return UnitalFn.from_parts(n, constant, exps)


def galois_map(f: UnitalFn, k: int) -> UnitalFn:
    """
    Apply sigma_k to the coefficients of f: constant -> sigma_k(constant), root key s -> k*s.

    Raises:
        NotCoprime: If gcd(k, N) != 1
    """
    n = f.order
    if gcd(k, n) != 1:
        raise NotCoprime(f"Galois exponent {k} is not coprime to {n}")
    k %= n
    if k == 1 or n == 1:
        return f
    exps = {(s if s == ORIGIN else (k * s) % n): e for s, e in f.exps}
    return UnitalFn.from_parts(n, galois(f.constant, k), exps)


@dataclass(frozen=True)
class PlaceMap:
    """
    A Moebius substitution x -> (a*x + b) / (c*x + d) that permutes the places
    Gamma_N^0 and infinity.

    images[i] is the image of the i-th place in the order origin, root:0, ...,
    root:N-1, infinity; INFINITY_PLACE marks infinity.
    """
    order: int
    a: CycNum
    b: CycNum
    c: CycNum
    d: CycNum
    images: Tuple[int, ...]


INFINITY_PLACE = -2


def _places(n: int) -> List[int]:
    return all_keys(n) + [INFINITY_PLACE]


@lru_cache(maxsize=None)
def _place_lookup(n: int) -> Dict[CycNum, int]:
    return {point(n, k): k for k in all_keys(n)}


def _homogeneous(n: int, place: int) -> Tuple[CycNum, CycNum]:
    if place == INFINITY_PLACE:
        return CycNum.one(n), CycNum.zero(n)
    return point(n, place), CycNum.one(n)


def _apply(n: int, m: Tuple[CycNum, ...], place: int) -> Optional[int]:
    a, b, c, d = m
    z0, z1 = _homogeneous(n, place)
    w0, w1 = a * z0 + b * z1, c * z0 + d * z1
    if w1.is_zero():
        return INFINITY_PLACE
    return _place_lookup(n).get(w0 / w1)


@lru_cache(maxsize=None)
def place_maps(n: int) -> Tuple[PlaceMap, ...]:
    """
    Every Moebius substitution permuting Gamma_N^0 and infinity, sorted by images.

    A Moebius map is fixed by the images of 0, infinity and 1, so each ordered
    triple of distinct places gives one candidate matrix; the candidates that
    send every place to a place form the group. It always contains the
    dihedral maps x -> zeta^r * x^(+-1); for N = 4 it is octahedral.
    """
    places = _places(n)
    found: Dict[Tuple[int, ...], PlaceMap] = {}
    for q0, q_inf, q1 in itertools.permutations(places, 3):
        u0, u1 = _homogeneous(n, q0)
        v0, v1 = _homogeneous(n, q_inf)
        w0, w1 = _homogeneous(n, q1)
        det = v0 * u1 - u0 * v1
        lam = (w0 * u1 - u0 * w1) / det
        mu = (v0 * w1 - w0 * v1) / det
        m = (lam * v0, mu * u0, lam * v1, mu * u1)
        images = tuple(_apply(n, m, p) for p in places)
        if None in images or len(set(images)) != len(places):
            continue
        found.setdefault(images, PlaceMap(n, *m, images=images))
    return tuple(found[k] for k in sorted(found))


def substitute(f: UnitalFn, m: PlaceMap) -> UnitalFn:
    """
    f(M(x)) for a place-permuting Moebius map M, in canonical form.

    M(x) - mu = ((a - mu*c)*x + (b - mu*d)) / (c*x + d); each numerator is a
    unit times (x - M^-1(mu)), or a constant when M^-1(mu) is infinity, and the
    common denominator contributes (x - M^-1(infinity)) to the power -sum(e).
    """
    n = f.order
    if m.order != n:
        raise OrderMismatch(f"Substitution of order {m.order} applied to order {n}")
    constant = f.constant
    exps: Dict[int, int] = {}

    def absorb(lead: CycNum, tail: CycNum, e: int) -> None:
        nonlocal constant
        if lead.is_zero():
            constant = constant * tail ** e
            return
        constant = constant * lead ** e
        root = -tail / lead
        exps[_place_lookup(n)[root]] = exps.get(_place_lookup(n)[root], 0) + e

    total = 0
    for k, e in f.exps:
        mu = point(n, k)
        absorb(m.a - mu * m.c, m.b - mu * m.d, e)
        total += e
    if total:
        absorb(m.c, m.d, -total)
    return UnitalFn.from_parts(n, constant, exps)


def embed_function(f: UnitalFn, n: int) -> UnitalFn:
    """
    View an order-M function as an order-n function for M | n.

    Raises:
        NotDivisible: If M does not divide n
    """
    m = f.order
    if n % m != 0:
        raise NotDivisible(f"Order {m} does not divide {n}")
    step = n // m
    exps = {(k if k == ORIGIN else k * step): e for k, e in f.exps}
    return UnitalFn.from_parts(n, embed(f.constant, n), exps)


def value_at_zero(f: UnitalFn) -> P1Value:
    """f(0) on the projective line."""
    n = f.order
    origin = f.exponent(ORIGIN)
    if origin > 0:
        return P1Value.finite(CycNum.zero(n))
    if origin < 0:
        return P1Value.infinity(n)
    value = f.constant
    for k, e in f.exps:
        value = value * (-point(n, k)) ** e
    return P1Value.finite(value)


def canonical_key(f: UnitalFn) -> str:
    """
    Injective text key: order, then every exponent in fixed key order, then the constant.
    """
    parts = [f"n={f.order}"]
    exps = dict(f.exps)
    for k in all_keys(f.order):
        parts.append(f"{key_name(k)}={exps.get(k, 0)}")
    parts.append("c=" + ",".join(f"{c.numerator}/{c.denominator}" for c in f.constant.coeffs))
    return ";".join(parts)


def render_text(f: UnitalFn) -> str:
    """Human rendering such as (2)*x^1*(x-root:1)^-1, constant in powers of z = zeta_N."""
    pieces = [f"({f.constant})"]
    for k, e in f.exps:
        base = "x" if k == ORIGIN else f"(x-{key_name(k)})"
        pieces.append(f"{base}^{e}")
    return "*".join(pieces)


def to_json(f: UnitalFn) -> Dict[str, Any]:
    return {
        "n": f.order,
        "constant": f.constant.to_json(),
        "exponents": {key_name(k): e for k, e in f.exps},
    }


def from_json(data: Mapping[str, Any]) -> UnitalFn:
    """
    Rebuild a UnitalFn from its JSON form.

    Raises:
        ValueError: On an inconsistent order, bad key or zero constant
        KeyError: On a missing field
    """
    n = int(data["n"])
    constant = CycNum.from_json(data["constant"])
    if constant.order != n:
        raise ValueError(f"Constant order {constant.order} does not match n={n}")
    exps = {parse_key_name(name, n): int(e) for name, e in data["exponents"].items()}
    return UnitalFn.from_parts(n, constant, exps)


def is_unital(f: UnitalFn) -> bool:
    try:
        complement(f)
    except NotUnital:
        return False
    return True


def definitional_oracle(f: UnitalFn) -> bool:
    """
    Check membership from first principles.

    Both numerators must split over Gamma_N^0, 1 - f must share the denominator
    of f, and num_f + num_(1-f) = den must hold as an exact polynomial identity.
    """
    numerator, denominator = as_fraction(f)
    try:
        spec, _ = peel_roots(numerator)
        if spec != f.zeros():
            return False
        raw_difference = denominator - numerator
        if raw_difference.is_zero():
            return False
        peel_roots(raw_difference)
        g = complement(f)
    except (NotUnitalRoots, UnitalError):
        return False
    g_numerator, g_denominator = as_fraction(g)
    return g_denominator == denominator and numerator + g_numerator == denominator
